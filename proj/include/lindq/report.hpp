#pragma once

#include <json.hpp>

#include "lindq/bounds.hpp"
#include "lindq/digraph.hpp"
#include "lindq/gf.hpp"
#include "lindq/hkq.hpp"
#include "lindq/hom.hpp"
#include "lindq/lind.hpp"

namespace lindq {

using json = nlohmann::json;

json to_json(const gf::Vector& v);
json to_json(const gf::Matrix& m);
json to_json(const Coloring& c);
json to_json(const BoundReport& r);
json to_json(const WitnessReport& r);
json to_json(const ComparisonReport& r);
json to_json(const LinearIndexCode& c);

}  // namespace lindq

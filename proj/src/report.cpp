#include "lindq/report.hpp"

namespace lindq {

json to_json(const gf::Vector& v)
{
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        a.push_back(static_cast<int>(v(i)));
    return a;
}

json to_json(const gf::Matrix& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(static_cast<int>(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Coloring& c)
{
    return {{"num_colors", c.num_colors}, {"assignment", c.assignment}};
}

json to_json(const BoundReport& r)
{
    json bounds = json::array();
    for (const auto& b : r.bounds) {
        json entry = {{"name", b.name}, {"inputs", b.inputs}, {"source", b.source}};
        entry["value"] = b.value ? json(*b.value) : json(nullptr);
        entry["applicable"] = b.value.has_value();
        bounds.push_back(entry);
    }
    json out = {
        {"graph", r.graph_id},
        {"q", r.q},
        {"n", r.n},
        {"bounds", bounds},
        {"lower_bound", r.lower_bound},
        {"witness", {{"complement_coloring", to_json(r.complement_coloring)}, {"clique", r.clique}}},
    };
    out["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    out["exact_method"] = r.exact_method ? json(*r.exact_method) : json(nullptr);
    out["consistent"] = r.consistent ? json(*r.consistent) : json(nullptr);
    return out;
}

json to_json(const WitnessReport& r)
{
    json arcs = json::array();
    for (auto [a, b] : r.gadget_arcs)
        arcs.push_back({a, b});
    json missing = json::array();
    for (auto [a, b] : r.missing_arcs)
        missing.push_back({a, b});
    return {
        {"min_in_degree", r.min_in_degree},
        {"min_out_degree", r.min_out_degree},
        {"degrees_ok", r.degrees_ok},
        {"gadget_vertices", r.gadget_vertices},
        {"gadget_arcs", arcs},
        {"missing_arcs", missing},
        {"gadget_present", r.gadget_present},
        {"gadget_induced", r.gadget_induced},
        {"cycle_lengths_checked", r.cycle_lengths_checked},
        {"cycle_lengths_with_hom", r.cycle_lengths_with_hom},
        {"no_cycle_hom", r.no_cycle_hom},
        {"passed", r.passed()},
    };
}

json to_json(const ComparisonReport& r)
{
    return {
        {"graph_ratio", {r.graph_ratio.num, r.graph_ratio.den}},
        {"hkq_ratio", {r.hkq_ratio.num, r.hkq_ratio.den}},
        {"graph_N", r.graph_n},
        {"hkq_N", r.hkq_n},
        {"premise", r.premise},
        {"implied_lower_bound", r.implied_lower_bound},
    };
}

json to_json(const LinearIndexCode& c)
{
    return {{"q", c.field.q()}, {"encoding", to_json(c.encoding)}};
}

}  // namespace lindq

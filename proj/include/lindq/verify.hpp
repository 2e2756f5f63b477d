#pragma once

#include <string>
#include <vector>

#include "lindq/caps.hpp"
#include "lindq/report.hpp"

namespace lindq {

struct VerifyRequest {
    std::string suite;  // transitivity | coloring | clique | lcolor | icd | npwitness
    int q = 2;
    int k = 2;
    int n = 3;  // icd: vertex count of the exhaustive family
    int l = 2;  // lcolor
};

/// Names accepted by run_verification.
const std::vector<std::string>& verification_suites();

/// Runs one suite and returns its JSON report; report["passed"] is the
/// overall verdict. Throws Error for an unknown suite.
json run_verification(const VerifyRequest& request, const Caps& caps = default_caps());

}  // namespace lindq

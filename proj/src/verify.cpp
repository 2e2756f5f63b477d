#include "lindq/verify.hpp"

#include <algorithm>

#include "lindq/errors.hpp"

namespace lindq {

namespace {

json verify_transitivity(const VerifyRequest& req, const Caps& caps)
{
    const auto f = gf::make_field(req.q, caps);
    const HkqGraph h = construct_hkq(f, req.k, caps);
    const Digraph comp = complement(h.graph());
    const int base = *h.find_vertex(gf::unit(req.k, 0), gf::unit(req.k, 0));

    std::vector<VertexPermutation> maps;
    int failures = 0;
    json failed = json::array();
    for (int s = 0; s < h.size(); ++s) {
        VertexPermutation phi = transitivity_automorphism(h, s);
        const bool ok = phi[s] == base && is_automorphism(h.graph(), phi) && is_automorphism(comp, phi);
        if (!ok) {
            ++failures;
            failed.push_back(s);
        }
        maps.push_back(std::move(phi));
    }

    // phi_v^-1 ∘ phi_u carries u to v for every ordered pair.
    std::vector<VertexPermutation> inverses;
    for (const auto& m : maps)
        inverses.push_back(inverse_permutation(m));
    long long pairs = 0;
    int pair_failures = 0;
    for (int u = 0; u < h.size(); ++u)
        for (int v = 0; v < h.size(); ++v) {
            ++pairs;
            if (inverses[v][maps[u][u]] != v)
                ++pair_failures;
        }

    return {{"suite", "transitivity"},  {"q", req.q},           {"k", req.k},
            {"vertices", h.size()},     {"failed_sources", failed}, {"pairs_checked", pairs},
            {"pair_failures", pair_failures}, {"passed", failures == 0 && pair_failures == 0}};
}

json verify_coloring(const VerifyRequest& req, const Caps& caps)
{
    const auto f = gf::make_field(req.q, caps);
    const HkqGraph h = construct_hkq(f, req.k, caps);
    const Digraph comp = complement(h.graph());
    const Coloring c = hkq_complement_coloring(h);

    std::vector<char> used(c.num_colors, 0);
    for (int x : c.assignment)
        used[x] = 1;
    const int used_count = static_cast<int>(std::count(used.begin(), used.end(), 1));
    const long long limit = static_cast<long long>(h.normals().size());

    const bool proper = is_proper_coloring(comp, c);
    json out = {{"suite", "coloring"},  {"q", req.q},          {"k", req.k},
                {"vertices", h.size()}, {"colors_used", used_count}, {"color_limit", limit},
                {"proper", proper}};
    bool passed = proper && used_count <= limit;
    if (h.size() <= 12) {
        const int chi = chromatic_number(comp, caps).chromatic_number;
        out["exact_chromatic_number"] = chi;
        passed = passed && chi <= limit;
    }
    out["passed"] = passed;
    return out;
}

json verify_clique(const VerifyRequest& req, const Caps& caps)
{
    const auto f = gf::make_field(req.q, caps);
    const HkqGraph h = construct_hkq(f, req.k, caps);
    const long long bound4 = independent_set_bound_times4(req.q, req.k);
    json out = {{"suite", "clique"}, {"q", req.q}, {"k", req.k}, {"vertices", h.size()},
                {"bound_times_4", bound4}};
    if (req.q % 2 == 1) {
        const auto block = hkq_complement_independent_set(h);
        const Digraph comp = complement(h.graph());
        const bool independent = is_independent_set(comp, block.vertices);
        out["method"] = "construction";
        out["size"] = block.vertices.size();
        out["independent"] = independent;
        out["passed"] = independent && 4 * static_cast<long long>(block.vertices.size()) >= bound4;
    } else {
        // No product construction for even q; fall back to exact search.
        const int alpha = independence_number(complement(h.graph()), caps);
        out["method"] = "exact";
        out["size"] = alpha;
        out["passed"] = 4LL * alpha >= bound4;
    }
    return out;
}

json verify_lcolor(const VerifyRequest& req, const Caps& caps)
{
    const auto f = gf::make_field(req.q, caps);
    const HkqGraph h = construct_hkq(f, req.k, caps);
    const auto set = hkq_complement_l_colorable_set(h, req.l);
    const Digraph comp = complement(h.graph());
    const bool proper = is_proper_coloring(comp, set.coloring, set.vertices);
    const long long bound4 = l_colorable_bound_times4(req.q, req.k, req.l);
    return {{"suite", "lcolor"},
            {"q", req.q},
            {"k", req.k},
            {"l", req.l},
            {"vertices", h.size()},
            {"size", set.vertices.size()},
            {"bound_times_4", bound4},
            {"proper", proper},
            {"passed", proper && 4 * static_cast<long long>(set.vertices.size()) >= bound4}};
}

json verify_icd(const VerifyRequest& req, const Caps& caps)
{
    const auto f = gf::make_field(req.q, caps);
    HkqFamily family(f, caps);
    const int n = req.n;
    if (n < 0 || n > 5)
        throw SizeLimitExceeded("exhaustive family vertex count", n, 5);
    const unsigned long long total = 1ULL << (n * (n - 1));
    long long mismatches = 0;
    long long bad_codes = 0;
    json first = nullptr;
    std::vector<long long> histogram(n + 1, 0);
    for (unsigned long long code = 0; code < total; ++code) {
        const Digraph g = digraph_from_code(n, code);
        const int by_matrix = minrank(f, g, caps).rank;
        const auto by_hom = lind_via_hom(g, family);
        ++histogram[by_matrix];
        if (by_matrix != by_hom.lind) {
            ++mismatches;
            if (first.is_null())
                first = {{"code", code}, {"matrix", by_matrix}, {"hom", by_hom.lind}};
        }
        if (by_hom.lind > 0) {
            try {
                code_from_hom_witness(g, family.graph(by_hom.lind), by_hom.witness);
            } catch (const TranslationFailed&) {
                ++bad_codes;
            }
        }
    }
    return {{"suite", "icd"},
            {"q", req.q},
            {"n", n},
            {"graphs", total},
            {"mismatches", mismatches},
            {"invalid_codes", bad_codes},
            {"first_mismatch", first},
            {"lind_histogram", histogram},
            {"passed", mismatches == 0 && bad_codes == 0}};
}

json verify_npwitness(const VerifyRequest& req, const Caps& caps)
{
    const auto f = gf::make_field(req.q, caps);
    const HkqGraph h = construct_hkq(f, req.k, caps);
    json out = to_json(np_witness_check(h, caps));
    out["suite"] = "npwitness";
    out["q"] = req.q;
    out["k"] = req.k;
    return out;
}

}  // namespace

const std::vector<std::string>& verification_suites()
{
    static const std::vector<std::string> names = {"transitivity", "coloring", "clique",
                                                   "lcolor",       "icd",      "npwitness"};
    return names;
}

json run_verification(const VerifyRequest& req, const Caps& caps)
{
    if (req.suite == "transitivity")
        return verify_transitivity(req, caps);
    if (req.suite == "coloring")
        return verify_coloring(req, caps);
    if (req.suite == "clique")
        return verify_clique(req, caps);
    if (req.suite == "lcolor")
        return verify_lcolor(req, caps);
    if (req.suite == "icd")
        return verify_icd(req, caps);
    if (req.suite == "npwitness")
        return verify_npwitness(req, caps);
    throw Error("unknown suite: " + req.suite);
}

}  // namespace lindq

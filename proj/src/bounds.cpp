#include "lindq/bounds.hpp"

#include <algorithm>
#include <climits>

#include "lindq/errors.hpp"
#include "lindq/lind.hpp"

namespace lindq {

namespace {

using i128 = __int128;

i128 ipow(long long base, int e)
{
    i128 r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

// Exponents stay small for any graph the exact routines accept.
constexpr int max_exponent = 60;

}  // namespace

int chromatic_bound_from(int q, long long chi)
{
    if (chi <= 0)
        return 0;
    const i128 target = static_cast<i128>(q - 1) * chi + 1;
    int k = 1;
    while (ipow(q, k) < target)
        ++k;
    return k;
}

int chromatic_bound(const Digraph& g, const gf::FiniteField& f, const Caps& caps)
{
    return chromatic_bound_from(f.q(), chromatic_number(complement(g), caps).chromatic_number);
}

int clique_ratio_bound_from(int q, long long n, long long omega)
{
    if (n == 0)
        return 0;
    if (n == omega)
        return 1;
    const i128 rhs = static_cast<i128>(q) * q - 1;
    for (int k = 2; k <= max_exponent; ++k)
        if (4 * static_cast<i128>(q) * omega * (ipow(q, k) - 1) >= rhs * (q - 1) * n)
            return k;
    throw Error("clique ratio threshold out of range");
}

int clique_ratio_bound(const Digraph& g, const gf::FiniteField& f, const Caps& caps)
{
    return clique_ratio_bound_from(f.q(), g.size(), clique_number(g, caps));
}

std::optional<int> l_colorable_bound_from(int q, long long n, long long n_colorable, int l)
{
    if (l < 1)
        throw DimensionMismatch("l must be positive");
    if (l == 1)
        return clique_ratio_bound_from(q, n, n_colorable);
    if (n == 0)
        return 0;
    const i128 ql = ipow(q, l);
    const i128 rhs = (static_cast<i128>(q) * q - 1) * (ql - 1) * n;
    int k_star = 1;
    while (4 * ql * n_colorable * (ipow(q, k_star) - 1) < rhs) {
        if (++k_star > max_exponent)
            throw Error("l-colourable threshold out of range");
    }
    if (k_star >= l + 3)
        return k_star;
    return std::nullopt;
}

std::optional<int> l_colorable_bound(const Digraph& g, const gf::FiniteField& f, int l, const Caps& caps)
{
    if (l == 1)
        return clique_ratio_bound(g, f, caps);
    const auto nk = largest_induced_hom_subgraph(complement(g), complete_digraph(l), caps);
    return l_colorable_bound_from(f.q(), g.size(), nk.size, l);
}

int generic_bound(const Digraph& g, const std::function<Rational(const Digraph&)>& h,
                  const std::function<Rational(int)>& r, int max_k)
{
    const Rational value = h(g);
    for (int k = 1; k <= max_k; ++k)
        if (value <= r(k))
            return k;
    throw Error("generic bound found no k up to " + std::to_string(max_k));
}

Rational chromatic_upper(int q, int k)
{
    return {static_cast<long long>((ipow(q, k) - 1) / (q - 1)), 1};
}

Rational clique_ratio_upper(int q, int k)
{
    if (k == 1)
        return {1, 1};
    return {static_cast<long long>(4 * q * (ipow(q, k) - 1)),
            static_cast<long long>((q - 1) * (static_cast<long long>(q) * q - 1))};
}

ComparisonReport ratio_inequality_check(const Digraph& g, const HkqGraph& h, const Digraph& k,
                                        const Caps& caps)
{
    const int ng = largest_induced_hom_subgraph(complement(g), k, caps).size;
    const int nh = largest_induced_hom_subgraph(complement(h.graph()), k, caps).size;
    ComparisonReport r;
    r.graph_n = ng;
    r.hkq_n = nh;
    r.graph_ratio = {g.size(), std::max(ng, 1)};
    r.hkq_ratio = {h.size(), std::max(nh, 1)};
    r.premise = ng > 0 && nh > 0 && r.graph_ratio > r.hkq_ratio;
    r.implied_lower_bound = r.premise ? h.k() + 1 : 0;
    return r;
}

BoundReport bound_report(const Digraph& g, const gf::FiniteField& f, const std::vector<int>& ls,
                         bool exact, const Caps& caps, std::string graph_id)
{
    BoundReport rep;
    rep.graph_id = std::move(graph_id);
    rep.q = f.q();
    rep.n = g.size();

    const auto chi = chromatic_number(complement(g), caps);
    rep.complement_coloring = chi.coloring;
    rep.clique = maximum_clique(g, caps);
    const long long omega = static_cast<long long>(rep.clique.size());

    rep.bounds.push_back({"chromatic",
                          chromatic_bound_from(f.q(), chi.chromatic_number),
                          {{"chi_complement", chi.chromatic_number}},
                          "q^k >= (q-1) chi(complement) + 1"});
    rep.bounds.push_back({"clique_ratio",
                          clique_ratio_bound_from(f.q(), g.size(), omega),
                          {{"n", g.size()}, {"omega", omega}},
                          "closed-form independent set size in complement(H_k^q)"});
    for (int l : ls) {
        if (l < 2)
            continue;
        const auto nk = largest_induced_hom_subgraph(complement(g), complete_digraph(l), caps);
        rep.bounds.push_back({"l_colorable_" + std::to_string(l),
                              l_colorable_bound_from(f.q(), g.size(), nk.size, l),
                              {{"n", g.size()}, {"l", l}, {"N_complement_K_l", nk.size}},
                              "closed-form l-colourable set size in complement(H_k^q)"});
    }
    std::sort(rep.bounds.begin(), rep.bounds.end(),
              [](const BoundEntry& a, const BoundEntry& b) { return a.name < b.name; });
    for (const auto& b : rep.bounds)
        if (b.value)
            rep.lower_bound = std::max(rep.lower_bound, *b.value);

    if (exact) {
        if (g.size() <= minrank_cap(f.q(), caps)) {
            rep.exact = minrank(f, g, caps).rank;
            rep.exact_method = "matrix";
        } else {
            rep.exact = lind_via_hom(g, f, caps).lind;
            rep.exact_method = "hom";
        }
        rep.consistent = rep.lower_bound <= *rep.exact;
    }
    return rep;
}

}  // namespace lindq

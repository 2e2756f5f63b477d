#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lindq/caps.hpp"
#include "lindq/digraph.hpp"
#include "lindq/gf.hpp"
#include "lindq/hkq.hpp"

namespace lindq {

/// Nonnegative rational with exact comparison. den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    friend bool operator<(const Rational& a, const Rational& b)
    {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator==(const Rational& a, const Rational& b)
    {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
};

// Every bound below is a lower bound on lind_q(G) as an integer, found by an
// exact threshold search over k. The empty graph gets 0 from each.

/// Smallest k with q^k >= (q-1) chi + 1.
int chromatic_bound_from(int q, long long chi_of_complement);
int chromatic_bound(const Digraph& g, const gf::FiniteField& f, const Caps& caps = default_caps());

/// 1 when n = omega (complete digraph); otherwise the smallest k >= 2 with
/// 4 q omega (q^k - 1) >= (q^2 - 1)(q - 1) n.
int clique_ratio_bound_from(int q, long long n, long long omega);
int clique_ratio_bound(const Digraph& g, const gf::FiniteField& f, const Caps& caps = default_caps());

/// Let k* be the smallest k with 4 q^l N (q^k - 1) >= (q^2 - 1)(q^l - 1) n,
/// N = N(complement(G), K_l). The bound is k* when k* >= l + 3, so that the
/// excluded value k* - 1 satisfies l < k - 1; nullopt otherwise. l = 1
/// delegates to the clique ratio bound.
std::optional<int> l_colorable_bound_from(int q, long long n, long long n_colorable, int l);
std::optional<int> l_colorable_bound(const Digraph& g, const gf::FiniteField& f, int l,
                                     const Caps& caps = default_caps());

/// Smallest k >= 1 with h(g) <= r(k), where h is increasing under ⪯ and r(k)
/// bounds h(H_k^q) from above. Throws Error if no k <= max_k qualifies.
int generic_bound(const Digraph& g, const std::function<Rational(const Digraph&)>& h,
                  const std::function<Rational(int)>& r, int max_k = 64);

/// Upper bounds on h(H_k^q) used to instantiate generic_bound.
Rational chromatic_upper(int q, int k);       // (q^k - 1)/(q - 1)
Rational clique_ratio_upper(int q, int k);    // 1 at k = 1, else 4q(q^k-1)/((q-1)(q^2-1))

struct ComparisonReport {
    Rational graph_ratio;  // |G| / N(complement(G), K)
    Rational hkq_ratio;    // |H| / N(complement(H), K)
    long long graph_n = 0;
    long long hkq_n = 0;
    bool premise = false;  // graph_ratio > hkq_ratio
    int implied_lower_bound = 0;  // k + 1 when premise holds
};

/// Exact comparison of |G|/N(Ḡ, K) and |H|/N(H̄, K) for small H.
ComparisonReport ratio_inequality_check(const Digraph& g, const HkqGraph& h, const Digraph& k,
                                        const Caps& caps = default_caps());

struct BoundEntry {
    std::string name;
    std::optional<int> value;  // nullopt: not applicable
    std::map<std::string, long long> inputs;
    std::string source;
};

struct BoundReport {
    std::string graph_id;
    int q = 0;
    int n = 0;
    std::vector<BoundEntry> bounds;  // sorted by name
    int lower_bound = 0;             // maximum applicable value
    Coloring complement_coloring;    // witness for chi(complement(G))
    std::vector<int> clique;         // witness for omega(G)
    std::optional<int> exact;
    std::optional<std::string> exact_method;
    std::optional<bool> consistent;  // every bound <= exact
};

/// Evaluates every bound for g. `ls` selects the l >= 2 colourable bounds.
/// With `exact`, lind_q is computed by minrank (or the homomorphism route
/// above the minrank cap) and `consistent` is set.
BoundReport bound_report(const Digraph& g, const gf::FiniteField& f, const std::vector<int>& ls,
                         bool exact, const Caps& caps = default_caps(), std::string graph_id = "");

}  // namespace lindq

// Brute-force reference implementations used to cross-check the library.
// They share no code with it beyond the Digraph container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "lindq/digraph.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>;

// Polynomial arithmetic on base-p coefficient indices, constant term lowest.
struct Field {
    int p = 2;
    int d = 1;
    int q = 2;
    std::vector<int> modulus;  // monic, low order first, size d + 1

    std::vector<int> digits(int a) const
    {
        std::vector<int> c(d);
        for (int i = 0; i < d; ++i, a /= p)
            c[i] = a % p;
        return c;
    }
    int index(const std::vector<int>& c) const
    {
        int a = 0;
        for (int i = d - 1; i >= 0; --i)
            a = a * p + c[i];
        return a;
    }
    int add(int a, int b) const
    {
        auto x = digits(a);
        const auto y = digits(b);
        for (int i = 0; i < d; ++i)
            x[i] = (x[i] + y[i]) % p;
        return index(x);
    }
    // Shift-and-add multiplication, reducing x^d after each shift.
    int mul(int a, int b) const
    {
        std::vector<int> acc(d, 0);
        std::vector<int> cur = digits(a);
        const auto y = digits(b);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j)
                acc[j] = (acc[j] + y[i] * cur[j]) % p;
            const int top = cur[d - 1];
            for (int j = d - 1; j > 0; --j)
                cur[j] = cur[j - 1];
            cur[0] = 0;
            for (int j = 0; j < d; ++j)
                cur[j] = ((cur[j] - top * modulus[j]) % p + p) % p;
        }
        return index(acc);
    }
};

inline Field field(int q)
{
    switch (q) {
    case 2: return {2, 1, 2, {0, 1}};
    case 3: return {3, 1, 3, {0, 1}};
    case 5: return {5, 1, 5, {0, 1}};
    case 7: return {7, 1, 7, {0, 1}};
    case 11: return {11, 1, 11, {0, 1}};
    case 13: return {13, 1, 13, {0, 1}};
    case 4: return {2, 2, 4, {1, 1, 1}};
    case 8: return {2, 3, 8, {1, 1, 0, 1}};
    case 9: return {3, 2, 9, {1, 0, 1}};
    case 16: return {2, 4, 16, {1, 1, 0, 0, 1}};
    default: return {};
    }
}

// Rank over a prime field by maximal nonzero minor (Laplace expansion).
inline int det_mod(const IntMatrix& a, int p)
{
    const int n = static_cast<int>(a.size());
    if (n == 0)
        return 1;
    if (n == 1)
        return ((a[0][0] % p) + p) % p;
    int total = 0;
    for (int c = 0; c < n; ++c) {
        IntMatrix minor;
        for (int r = 1; r < n; ++r) {
            std::vector<int> row;
            for (int j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(a[r][j]);
            minor.push_back(row);
        }
        const int sign = c % 2 ? p - 1 : 1;
        total = (total + sign * a[0][c] % p * det_mod(minor, p)) % p;
    }
    return total;
}

inline void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> s(size);
    std::iota(s.begin(), s.end(), 0);
    if (size > n)
        return;
    while (true) {
        f(s);
        int i = size - 1;
        while (i >= 0 && s[i] == n - size + i)
            --i;
        if (i < 0)
            return;
        ++s[i];
        for (int j = i + 1; j < size; ++j)
            s[j] = s[j - 1] + 1;
    }
}

inline int rank_mod(const IntMatrix& a, int p)
{
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int r = std::min(rows, cols); r > 0; --r) {
        bool found = false;
        for_each_subset(rows, r, [&](const std::vector<int>& rs) {
            if (found)
                return;
            for_each_subset(cols, r, [&](const std::vector<int>& cs) {
                if (found)
                    return;
                IntMatrix m(r, std::vector<int>(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        m[i][j] = a[rs[i]][cs[j]];
                if (det_mod(m, p) != 0)
                    found = true;
            });
        });
        if (found)
            return r;
    }
    return 0;
}

// minrank over a prime field by enumerating all p^(m^2) matrices.
inline int naive_minrank(const lindq::Digraph& g, int p)
{
    const int m = g.size();
    if (m == 0)
        return 0;
    const int cells = m * m;
    long long total = 1;
    for (int i = 0; i < cells; ++i)
        total *= p;
    int best = m;
    IntMatrix a(m, std::vector<int>(m));
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m; ++j) {
                a[i][j] = static_cast<int>(c % p);
                c /= p;
                if (i == j && a[i][j] == 0)
                    ok = false;
                if (i != j && a[i][j] != 0 && !g.has_arc(i, j))
                    ok = false;
            }
        if (ok)
            best = std::min(best, rank_mod(a, p));
    }
    return best;
}

inline bool is_hom(const lindq::Digraph& g, const lindq::Digraph& h, const std::vector<int>& f)
{
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            if (g.has_arc(u, v) && !h.has_arc(f[u], f[v]))
                return false;
    return true;
}

// Enumerates all |H|^|G| maps.
inline bool naive_hom_exists(const lindq::Digraph& g, const lindq::Digraph& h)
{
    const int n = g.size();
    const int t = h.size();
    if (n == 0)
        return true;
    if (t == 0)
        return false;
    std::vector<int> f(n, 0);
    while (true) {
        if (is_hom(g, h, f))
            return true;
        int i = 0;
        while (i < n && ++f[i] == t)
            f[i++] = 0;
        if (i == n)
            return false;
    }
}

inline std::size_t naive_hom_count(const lindq::Digraph& g, const lindq::Digraph& h)
{
    const int n = g.size();
    const int t = h.size();
    if (n == 0)
        return 1;
    if (t == 0)
        return 0;
    std::size_t count = 0;
    std::vector<int> f(n, 0);
    while (true) {
        if (is_hom(g, h, f))
            ++count;
        int i = 0;
        while (i < n && ++f[i] == t)
            f[i++] = 0;
        if (i == n)
            return count;
    }
}

inline std::vector<int> bits_to_vertices(int n, std::uint32_t mask)
{
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1)
            v.push_back(i);
    return v;
}

inline bool subset_is_clique(const lindq::Digraph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_arc(s[i], s[j]) || !g.has_arc(s[j], s[i]))
                return false;
    return true;
}

inline bool subset_is_independent(const lindq::Digraph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_arc(s[i], s[j]) || g.has_arc(s[j], s[i]))
                return false;
    return true;
}

// Largest vertex subset satisfying pred, by exhaustive enumeration.
inline int best_subset(int n, const std::function<bool(const std::vector<int>&)>& pred)
{
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto s = bits_to_vertices(n, mask);
        if (static_cast<int>(s.size()) > best && pred(s))
            best = static_cast<int>(s.size());
    }
    return best;
}

inline int clique_number(const lindq::Digraph& g)
{
    return best_subset(g.size(), [&](const auto& s) { return subset_is_clique(g, s); });
}

inline int independence_number(const lindq::Digraph& g)
{
    return best_subset(g.size(), [&](const auto& s) { return subset_is_independent(g, s); });
}

// Smallest c admitting a proper colouring, by enumerating all c^n maps.
inline int chromatic_number(const lindq::Digraph& g)
{
    const int n = g.size();
    if (n == 0)
        return 0;
    for (int c = 1; c <= n; ++c) {
        std::vector<int> col(n, 0);
        while (true) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = 0; v < n && ok; ++v)
                    if (u != v && g.adjacent(u, v) && col[u] == col[v])
                        ok = false;
            if (ok)
                return c;
            int i = 0;
            while (i < n && ++col[i] == c)
                col[i++] = 0;
            if (i == n)
                break;
        }
    }
    return n;
}

// N(G, K) by exhaustive subsets and exhaustive homomorphism search.
inline int largest_induced_hom(const lindq::Digraph& g, const lindq::Digraph& k)
{
    return best_subset(g.size(), [&](const auto& s) {
        return naive_hom_exists(lindq::induced_subgraph(g, s), k);
    });
}

// Normal vectors over a prime field in lexicographic order.
inline std::vector<std::vector<int>> normal_vectors(int p, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> v(k, 0);
    while (true) {
        int i = k - 1;
        while (i >= 0 && ++v[i] == p)
            v[i--] = 0;
        if (i < 0)
            break;
        int lead = 0;
        while (v[lead] == 0)
            ++lead;
        if (v[lead] == 1)
            out.push_back(v);
    }
    return out;
}

inline int dot(const std::vector<int>& a, const std::vector<int>& b, int p)
{
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = (s + a[i] * b[i]) % p;
    return s;
}

// H_k^p from the definition, vertices in lexicographic order of (v, w).
inline lindq::Digraph hkq(int p, int k)
{
    const auto normals = normal_vectors(p, k);
    std::vector<std::pair<int, int>> verts;
    for (int a = 0; a < static_cast<int>(normals.size()); ++a)
        for (int b = 0; b < static_cast<int>(normals.size()); ++b)
            if (dot(normals[a], normals[b], p) != 0)
                verts.emplace_back(a, b);
    lindq::Digraph g(static_cast<int>(verts.size()));
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
            if (x != y && dot(normals[verts[x].first], normals[verts[y].second], p) != 0)
                g.add_arc(x, y);
    return g;
}

// Smallest k with (q^k - 1)/(q - 1) >= chi, k >= 0.
inline int chromatic_bound(int q, long long chi)
{
    int k = 0;
    long long count = 0;
    long long power = 1;
    while (count < chi) {
        count += power;
        power *= q;
        ++k;
    }
    return k;
}

}  // namespace oracle

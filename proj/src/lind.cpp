#include "lindq/lind.hpp"

#include <algorithm>

#include "lindq/errors.hpp"

namespace lindq {

Digraph from_side_information(const std::vector<std::vector<int>>& side_info)
{
    Digraph g(static_cast<int>(side_info.size()));
    for (std::size_t i = 0; i < side_info.size(); ++i)
        for (int j : side_info[i])
            g.add_arc(static_cast<int>(i), j);
    return g;
}

std::vector<int> side_information(const Digraph& problem, int receiver)
{
    return problem.out_row(receiver).to_vector();
}

bool is_valid_linear_code(const Digraph& problem, const LinearIndexCode& code)
{
    const int m = problem.size();
    if (code.encoding.cols() != m)
        throw DimensionMismatch("encoding has " + std::to_string(code.encoding.cols()) +
                                " columns for " + std::to_string(m) + " receivers");
    const auto& f = code.field;
    const int k = code.length();
    for (int i = 0; i < m; ++i) {
        const auto known = side_information(problem, i);
        const int rows = k + static_cast<int>(known.size());
        gf::Matrix span(rows + 1, m);
        span.setZero();
        span.topRows(k) = code.encoding;
        for (std::size_t t = 0; t < known.size(); ++t)
            span(k + static_cast<Eigen::Index>(t), known[t]) = 1;
        span(rows, i) = 1;
        if (gf::rank(f, span.topRows(rows)) != gf::rank(f, span))
            return false;
    }
    return true;
}

bool is_fitting_matrix(const gf::FiniteField&, const Digraph& problem, const gf::Matrix& a)
{
    const int m = problem.size();
    if (a.rows() != m || a.cols() != m)
        return false;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j && a(i, j) == 0)
                return false;
            if (i != j && !problem.has_arc(i, j) && a(i, j) != 0)
                return false;
        }
    return true;
}

// --- subspaces -------------------------------------------------------------

long long gaussian_binomial(int q, int m, int k)
{
    if (k < 0 || k > m)
        return 0;
    long long num = 1;
    long long den = 1;
    long long qm = 1;
    for (int i = 0; i < m - k + 1; ++i)
        qm *= q;  // q^(m-k+1)
    long long qi = 1;
    for (int i = 1; i <= k; ++i) {
        num *= qm - 1;
        qm *= q;
        qi *= q;
        den *= qi - 1;
    }
    return num / den;
}

namespace {

class SubspaceEnumerator {
public:
    SubspaceEnumerator(const gf::FiniteField& f, int m, int k,
                       const std::function<bool(const gf::Matrix&)>& visit)
        : f_(f), m_(m), k_(k), visit_(visit)
    {
    }

    bool run()
    {
        std::vector<int> pivots;
        return choose_pivots(0, pivots);
    }

private:
    bool choose_pivots(int next, std::vector<int>& pivots)
    {
        if (static_cast<int>(pivots.size()) == k_)
            return fill(pivots);
        for (int c = next; c <= m_ - (k_ - static_cast<int>(pivots.size())); ++c) {
            pivots.push_back(c);
            if (choose_pivots(c + 1, pivots))
                return true;
            pivots.pop_back();
        }
        return false;
    }

    bool fill(const std::vector<int>& pivots)
    {
        gf::Matrix basis = gf::Matrix::Zero(k_, m_);
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < k_; ++r) {
            basis(r, pivots[r]) = 1;
            for (int c = pivots[r] + 1; c < m_; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free.emplace_back(r, c);
        }
        // Odometer over the free entries, last entry fastest.
        while (true) {
            if (visit_(basis))
                return true;
            int i = static_cast<int>(free.size()) - 1;
            while (i >= 0 && basis(free[i].first, free[i].second) == f_.q() - 1)
                basis(free[i].first, free[i].second) = 0, --i;
            if (i < 0)
                return false;
            ++basis(free[i].first, free[i].second);
        }
    }

    const gf::FiniteField& f_;
    int m_;
    int k_;
    const std::function<bool(const gf::Matrix&)>& visit_;
};

}  // namespace

bool for_each_subspace(const gf::FiniteField& f, int m, int k,
                       const std::function<bool(const gf::Matrix&)>& visit)
{
    if (k < 0 || k > m)
        return false;
    return SubspaceEnumerator(f, m, k, visit).run();
}

// --- minrank ---------------------------------------------------------------

MinrankResult minrank(const gf::FiniteField& f, const Digraph& problem, const Caps& caps)
{
    const int m = problem.size();
    const int cap = minrank_cap(f.q(), caps);
    if (m > cap)
        throw SizeLimitExceeded("minrank receiver count", m, cap);
    if (m == 0)
        return {};

    // allowed[i][j]: row i of a fitting matrix may be nonzero at column j.
    std::vector<std::vector<char>> allowed(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            allowed[i][j] = i == j || problem.has_arc(i, j);

    for (int k = 1; k <= m; ++k) {
        const auto coefficients = gf::enumerate_vectors(f, k);
        MinrankResult result;
        const bool found = for_each_subspace(f, m, k, [&](const gf::Matrix& basis) {
            std::vector<std::optional<gf::Vector>> rows(m);
            for (const auto& c : coefficients) {
                gf::Vector r = gf::Vector::Zero(m);
                for (int t = 0; t < k; ++t)
                    if (c(t) != 0)
                        for (int j = 0; j < m; ++j)
                            r(j) = f.add(r(j), f.mul(c(t), basis(t, j)));
                for (int i = 0; i < m; ++i) {
                    if (r(i) == 0)
                        continue;
                    bool ok = true;
                    for (int j = 0; j < m && ok; ++j)
                        ok = allowed[i][j] || r(j) == 0;
                    if (ok && (!rows[i] || gf::lex_less(r, *rows[i])))
                        rows[i] = r;
                }
            }
            if (!std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.has_value(); }))
                return false;
            result.fitting.resize(m, m);
            for (int i = 0; i < m; ++i)
                result.fitting.row(i) = rows[i]->transpose();
            result.subspace = basis;
            return true;
        });
        if (found) {
            result.rank = gf::rank(f, result.fitting);
            if (result.rank != k || !is_fitting_matrix(f, problem, result.fitting))
                throw VerificationFailed("minrank witness failed re-verification");
            return result;
        }
    }
    throw VerificationFailed("no fitting matrix found; identity should always fit");
}

// --- homomorphism route ----------------------------------------------------

HkqFamily::HkqFamily(gf::FiniteField field, const Caps& caps) : field_(field), caps_(caps) {}

const HkqGraph& HkqFamily::graph(int k)
{
    auto it = graphs_.find(k);
    if (it == graphs_.end())
        it = graphs_.emplace(k, construct_hkq(field_, k, caps_)).first;
    return it->second;
}

const Digraph& HkqFamily::complement_graph(int k)
{
    auto it = complements_.find(k);
    if (it == complements_.end())
        it = complements_.emplace(k, complement(graph(k).graph())).first;
    return it->second;
}

LindHomResult lind_via_hom(const Digraph& problem, HkqFamily& family)
{
    const int m = problem.size();
    if (m == 0)
        return {};
    const Digraph source = complement(problem);
    HomOptions options;
    options.target_vertex_transitive = true;
    for (int k = 1; k <= m; ++k) {
        const Digraph& target = family.complement_graph(k);
        if (auto w = hom_exists(source, target, options))
            return {k, std::move(*w)};
    }
    throw VerificationFailed("no homomorphism into complement(H_m^q); the identity code should give one");
}

LindHomResult lind_via_hom(const Digraph& problem, const gf::FiniteField& f, const Caps& caps)
{
    HkqFamily family(f, caps);
    return lind_via_hom(problem, family);
}

LinearIndexCode code_from_hom_witness(const Digraph& problem, const HkqGraph& h,
                                      const HomWitness& witness)
{
    const int m = problem.size();
    if (static_cast<int>(witness.map.size()) != m)
        throw TranslationFailed("witness size does not match the problem");
    LinearIndexCode code{h.field(), gf::Matrix(h.k(), m)};
    for (int i = 0; i < m; ++i) {
        const int x = witness.map[i];
        if (x < 0 || x >= h.size())
            throw TranslationFailed("witness maps outside H_k^q");
        code.encoding.col(i) = h.second(x);
    }
    if (!is_valid_linear_code(problem, code))
        throw TranslationFailed("translated code is not valid");
    return code;
}

std::vector<gf::Vector> decoders_from_hom_witness(const HkqGraph& h, const HomWitness& witness)
{
    std::vector<gf::Vector> out;
    for (int x : witness.map)
        out.push_back(h.first(x));
    return out;
}

}  // namespace lindq

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lindq/caps.hpp"
#include "lindq/digraph.hpp"
#include "lindq/gf.hpp"
#include "lindq/hkq.hpp"
#include "lindq/hom.hpp"

namespace lindq {

// An index coding instance is its side information digraph: vertex i is
// receiver i (demanding x_i), and (i, j) is an arc iff receiver i knows x_j.

/// Side information digraph from 0-based sets A_i. Throws InvalidVertex if
/// i ∈ A_i or an index is out of range.
Digraph from_side_information(const std::vector<std::vector<int>>& side_info);

/// A_i, ascending.
std::vector<int> side_information(const Digraph& problem, int receiver);

/// Scalar linear code: the server broadcasts encoding * x, one row per
/// transmitted symbol.
struct LinearIndexCode {
    gf::FiniteField field;
    gf::Matrix encoding;  // k x m

    int length() const { return static_cast<int>(encoding.rows()); }
};

/// True iff for every receiver i, e_i lies in rowspace(encoding) +
/// span{e_j : j ∈ A_i}. Throws DimensionMismatch when the column count is
/// not the number of receivers.
bool is_valid_linear_code(const Digraph& problem, const LinearIndexCode& code);

/// Nonzero diagonal, zero at (i, j) whenever i != j and (i, j) is not an arc.
bool is_fitting_matrix(const gf::FiniteField& f, const Digraph& problem, const gf::Matrix& a);

/// Calls visit(basis) for every k-dimensional subspace of F_q^m exactly once,
/// with basis its reduced row echelon form (k x m). Pivot sets ascend
/// lexicographically, then free entries in row-major lexicographic order.
/// Stops early when visit returns true; returns whether it did.
bool for_each_subspace(const gf::FiniteField& f, int m, int k,
                       const std::function<bool(const gf::Matrix&)>& visit);

/// Gaussian binomial [m choose k]_q.
long long gaussian_binomial(int q, int m, int k);

struct MinrankResult {
    int rank = 0;
    gf::Matrix fitting;   // m x m witness of the reported rank
    gf::Matrix subspace;  // row space basis (rank x m) in reduced echelon form
};

/// minrank_q of the problem by subspace search: the least k such that some
/// k-dimensional subspace R contains, for every i, a vector r with r_i != 0
/// and support inside A_i ∪ {i}. Row i of the witness is the
/// lexicographically smallest such r. m = 0 gives 0. Throws
/// SizeLimitExceeded above minrank_cap(q).
MinrankResult minrank(const gf::FiniteField& f, const Digraph& problem,
                      const Caps& caps = default_caps());

/// Lazily built H_k^q and complements for one field.
class HkqFamily {
public:
    explicit HkqFamily(gf::FiniteField field, const Caps& caps = default_caps());

    const gf::FiniteField& field() const { return field_; }
    const HkqGraph& graph(int k);
    const Digraph& complement_graph(int k);

private:
    gf::FiniteField field_;
    Caps caps_;
    std::map<int, HkqGraph> graphs_;
    std::map<int, Digraph> complements_;
};

struct LindHomResult {
    int lind = 0;
    HomWitness witness;  // complement(problem) -> complement(H_lind^q)
};

/// Smallest k >= 1 with complement(problem) -> complement(H_k^q), searching
/// k upward. m = 0 gives 0.
LindHomResult lind_via_hom(const Digraph& problem, HkqFamily& family);
LindHomResult lind_via_hom(const Digraph& problem, const gf::FiniteField& f,
                           const Caps& caps = default_caps());

/// Encoding matrix whose column i is the second label vector w of the image
/// (v, w) of receiver i; receiver i decodes with v. Throws TranslationFailed
/// if the result does not validate.
LinearIndexCode code_from_hom_witness(const Digraph& problem, const HkqGraph& h,
                                      const HomWitness& witness);

/// Decoding vector of each receiver for a code built by code_from_hom_witness.
std::vector<gf::Vector> decoders_from_hom_witness(const HkqGraph& h, const HomWitness& witness);

}  // namespace lindq

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lindq/caps.hpp"
#include "lindq/digraph.hpp"
#include "lindq/gf.hpp"

namespace lindq {

/// The digraph H_k^q: vertices are ordered pairs (v, w) of normal vectors of
/// F_q^k with <v, w> != 0, and ((v, w), (v', w')) is an arc iff
/// <v, w'> != 0 for distinct vertices. Vertices are numbered in
/// lexicographic order of (v, w).
class HkqGraph {
public:
    HkqGraph(gf::FiniteField field, int k, Digraph graph, std::vector<gf::Vector> normals,
             std::vector<std::pair<int, int>> labels);

    const gf::FiniteField& field() const { return field_; }
    int q() const { return field_.q(); }
    int k() const { return k_; }
    const Digraph& graph() const { return graph_; }
    int size() const { return graph_.size(); }

    /// Normal vectors of F_q^k in enumeration order.
    const std::vector<gf::Vector>& normals() const { return normals_; }
    /// (index of v, index of w) into normals() for each vertex.
    const std::pair<int, int>& label(int vertex) const { return labels_[vertex]; }
    const gf::Vector& first(int vertex) const { return normals_[labels_[vertex].first]; }
    const gf::Vector& second(int vertex) const { return normals_[labels_[vertex].second]; }

    /// Vertex labelled (v, w) by normal-vector indices, if it exists.
    std::optional<int> find_vertex(int v_index, int w_index) const;
    /// Vertex labelled (normalize(v), normalize(w)), if it exists.
    std::optional<int> find_vertex(const gf::Vector& v, const gf::Vector& w) const;

    /// "(v1,...,vk)|(w1,...,wk)"
    std::string label_string(int vertex) const;

private:
    gf::FiniteField field_;
    int k_;
    Digraph graph_;
    std::vector<gf::Vector> normals_;
    std::vector<std::pair<int, int>> labels_;
    std::vector<int> index_;  // v_index * |normals| + w_index -> vertex or -1
};

/// (q^k - 1)/(q - 1) * q^(k-1), saturating at LLONG_MAX.
long long hkq_vertex_count(int q, int k);
/// q^(2(k-1)) - 1.
long long hkq_degree(int q, int k);

/// Throws SizeLimitExceeded above Caps::hkq_max_vertices.
HkqGraph construct_hkq(const gf::FiniteField& field, int k, const Caps& caps = default_caps());

/// Permutation of vertex indices.
using VertexPermutation = std::vector<int>;

/// Bijection of V(g) mapping arcs to arcs and non-arcs to non-arcs.
bool is_automorphism(const Digraph& g, const VertexPermutation& p);

VertexPermutation inverse_permutation(const VertexPermutation& p);
/// (a ∘ b)(x) = a[b[x]]
VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b);

/// Automorphism of H sending `source` = (d, e) to (e1, e1).
///
/// With X = [e ξ1 ... ξ(k-1)], where ξ is the null-space basis of d^T from
/// gf::nullspace, maps (u, v) to (normalize(X^T u), normalize(X^-1 v)).
/// Throws InvalidVertex for an out-of-range source.
VertexPermutation transitivity_automorphism(const HkqGraph& h, int source);

/// Colours vertex (d, e) by the index of d. Proper on complement(H).
Coloring hkq_complement_coloring(const HkqGraph& h);

/// Product set A x B of vertices built on coordinates (j-1, j) (1-based j).
struct ProductBlock {
    std::vector<gf::Vector> a;
    std::vector<gf::Vector> b;
    std::vector<int> vertices;
};

/// Independent set of complement(H) of size >= (q^2 - 1) q^(k-2) / 4.
///
/// A = {e1 + g^i e2 : 0 <= i <= (q-3)/2} ∪ {e1}, B = {e1 + a e2 + tail}
/// with a outside {-g^-i : 0 <= i <= (q-3)/2}, g the primitive element.
/// Membership in V and independence are checked before returning. Requires
/// odd q and k >= 2, else ConstructionUnavailable.
ProductBlock hkq_complement_independent_set(const HkqGraph& h);

struct LColorableSet {
    std::vector<ProductBlock> blocks;
    std::vector<int> vertices;  // ascending
    Coloring coloring;          // over all of V(H); -1 outside `vertices`
};

/// Union of l disjoint product blocks, the j-th built on coordinates
/// (j-1, j), each an independent set of complement(H); size
/// >= (q+1)(q^l - 1) q^(k-l-1) / 4. Requires odd q and 1 <= l < k-1 (l = 1
/// is the single block of hkq_complement_independent_set).
LColorableSet hkq_complement_l_colorable_set(const HkqGraph& h, int l);

/// 4 * the guaranteed independent set size: (q^2 - 1) q^(k-2).
long long independent_set_bound_times4(int q, int k);
/// 4 * the guaranteed l-colourable set size: (q+1)(q^l - 1) q^(k-l-1).
long long l_colorable_bound_times4(int q, int k, int l);

/// Structural premises for hardness of H̄ -> colouring: degree bounds and
/// the four-vertex gadget D with a 3-cycle and a 2-cycle sharing a vertex.
struct WitnessReport {
    int min_in_degree = 0;
    int min_out_degree = 0;
    bool degrees_ok = false;  // every in/out degree of complement(H) >= 2

    // (e2, e1-e2), (e1+e2, e2), (e1, e1), (e2, e2); -1 when absent
    std::vector<int> gadget_vertices;
    std::vector<std::pair<int, int>> gadget_arcs;  // required arcs, gadget-local indices
    std::vector<std::pair<int, int>> missing_arcs;
    bool gadget_present = false;
    bool gadget_induced = false;

    std::vector<int> cycle_lengths_checked;
    std::vector<int> cycle_lengths_with_hom;
    bool no_cycle_hom = false;

    bool passed() const { return degrees_ok && gadget_present && no_cycle_hom; }
};

/// Requires k >= 2 (throws ConstructionUnavailable otherwise).
WitnessReport np_witness_check(const HkqGraph& h, const Caps& caps = default_caps());

}  // namespace lindq

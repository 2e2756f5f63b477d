#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lindq/bitset.hpp"
#include "lindq/caps.hpp"

namespace lindq {

/// Loopless directed graph on vertices 0..n-1 with bitset adjacency in both
/// directions. Optional per-vertex labels are carried along by
/// induced_subgraph() and ignored by equality.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    /// Throws InvalidVertex on out-of-range endpoints or loops.
    Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

    /// Builds from out-neighbourhood rows; in-rows are the transpose. Throws
    /// InvalidVertex if a row contains its own vertex.
    static Digraph from_rows(std::vector<Bitset> out_rows);
    /// Caller guarantees in_rows is the transpose of out_rows.
    static Digraph from_rows(std::vector<Bitset> out_rows, std::vector<Bitset> in_rows);

    int size() const { return n_; }

    bool has_arc(int u, int v) const { return out_[u].test(v); }
    /// Arc in at least one direction.
    bool adjacent(int u, int v) const { return out_[u].test(v) || in_[u].test(v); }
    /// Arcs in both directions.
    bool bidirected(int u, int v) const { return out_[u].test(v) && in_[u].test(v); }

    void add_arc(int u, int v);
    void remove_arc(int u, int v);

    const Bitset& out_row(int u) const { return out_[u]; }
    const Bitset& in_row(int u) const { return in_[u]; }
    Bitset symmetric_row(int u) const { return out_[u] | in_[u]; }

    int out_degree(int u) const { return out_[u].count(); }
    int in_degree(int u) const { return in_[u].count(); }
    long long arc_count() const;

    /// Arcs sorted lexicographically.
    std::vector<std::pair<int, int>> arcs() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Digraph& a, const Digraph& b)
    {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    friend Digraph complement(const Digraph& g);

    int n_ = 0;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
    std::vector<std::string> labels_;
};

/// Vertex colouring; colours are 0..num_colors-1.
struct Coloring {
    std::vector<int> assignment;
    int num_colors = 0;
};

// --- constructors ----------------------------------------------------------

Digraph edgeless(int n);
/// Arcs in both directions between every pair; K_l in the undirected sense.
Digraph complete_digraph(int n);
/// 0 -> 1 -> ... -> n-1 -> 0.
Digraph directed_cycle(int n);
/// Digraph on `n` vertices whose arc set is the bit pattern `code` over the
/// n(n-1) ordered pairs (u, v), u != v, in row-major order.
Digraph digraph_from_code(int n, unsigned long long code);

// --- structure -------------------------------------------------------------

/// Directional complement: (u, v) is an arc iff u != v and (u, v) is not.
Digraph complement(const Digraph& g);

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices);

/// Proper in the symmetric sense: no arc in either direction joins two
/// vertices of the same colour.
bool is_proper_coloring(const Digraph& g, const Coloring& c);
bool is_proper_coloring(const Digraph& g, const Coloring& c, const std::vector<int>& vertices);

/// No arc (in either direction) inside `vertices`.
bool is_independent_set(const Digraph& g, const std::vector<int>& vertices);

// --- exact parameters ------------------------------------------------------

/// Largest vertex set pairwise joined by arcs in both directions.
int clique_number(const Digraph& g, const Caps& caps = default_caps());
std::vector<int> maximum_clique(const Digraph& g, const Caps& caps = default_caps());

/// Largest set with no arc in either direction; equals clique_number of the
/// complement.
int independence_number(const Digraph& g, const Caps& caps = default_caps());
std::vector<int> maximum_independent_set(const Digraph& g, const Caps& caps = default_caps());

struct ChromaticResult {
    int chromatic_number = 0;
    Coloring coloring;
};

/// Chromatic number of the underlying undirected graph, with a witness.
/// DSATUR branch and bound seeded with a clique lower bound and a greedy
/// upper bound.
ChromaticResult chromatic_number(const Digraph& g, const Caps& caps = default_caps());

/// N(G, K): the largest induced subgraph of `g` admitting a homomorphism to
/// `k`, with the vertex set achieving it.
struct InducedHomResult {
    int size = 0;
    std::vector<int> vertices;
};
InducedHomResult largest_induced_hom_subgraph(const Digraph& g, const Digraph& k,
                                              const Caps& caps = default_caps());

/// Vertices of a core of `g`, as an induced subgraph: repeatedly drops a
/// vertex v while g -> g - v.
std::vector<int> core_vertices(const Digraph& g, const Caps& caps = default_caps());
Digraph core(const Digraph& g, const Caps& caps = default_caps());

/// True iff g is a single directed cycle on n >= 2 vertices (n = 2 is a
/// bidirected edge).
bool is_directed_cycle(const Digraph& g);

/// Exhaustive isomorphism test, n <= Caps::iso_max_n.
bool are_isomorphic(const Digraph& a, const Digraph& b, const Caps& caps = default_caps());

}  // namespace lindq

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lindq/caps.hpp"
#include "lindq/digraph.hpp"

namespace lindq {

/// A map from source vertices to target vertices.
struct HomWitness {
    std::vector<int> map;
};

struct HomOptions {
    /// The target is known to be vertex-transitive, so the first source vertex
    /// in search order may be pinned to target vertex 0. Existence only.
    bool target_vertex_transitive = false;
};

/// True iff every arc (u, v) of g has (map[u], map[v]) as an arc of h.
bool is_homomorphism(const Digraph& g, const Digraph& h, const HomWitness& w);

/// Decides g -> h by backtracking over source vertices in max-degree-first
/// order (ties by index), trying target vertices in index order, with forward
/// checking of candidate sets along source arcs. Returns the first witness in
/// that order, verified.
std::optional<HomWitness> hom_exists(const Digraph& g, const Digraph& h, HomOptions options = {},
                                     const Caps& caps = default_caps());

/// G ⪯ H: complement(G) -> complement(H).
bool preorder_leq(const Digraph& g, const Digraph& h, const Caps& caps = default_caps());

/// Number of homomorphisms g -> h, stopping at `limit`.
std::size_t hom_count(const Digraph& g, const Digraph& h, std::size_t limit,
                      const Caps& caps = default_caps());

}  // namespace lindq

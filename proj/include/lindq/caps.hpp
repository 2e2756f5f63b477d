#pragma once

#include <optional>

namespace lindq {

/// Size caps for the exact searches. Every operation refuses inputs above its
/// cap with SizeLimitExceeded instead of degrading to a heuristic.
struct Caps {
    int field_max_q = 16;
    int clique_max_n = 64;         // clique, independence and chromatic number
    int subset_max_n = 20;         // N(G, K)
    int core_max_n = 12;
    int iso_max_n = 8;
    int hom_max_source = 64;
    int hom_max_target = 10000;
    long long hkq_max_vertices = 10000;
    std::optional<int> minrank_max_m;  // unset: per-field default, see minrank_cap()
};

/// Process-wide defaults. Overridable from LINDQ_CAP_* environment variables
/// through caps_from_env().
const Caps& default_caps();

/// Applies LINDQ_CAP_<NAME>=<int> variables on top of `base`.
Caps caps_from_env(Caps base = {});

/// Largest message count minrank() accepts for a field of size q.
int minrank_cap(int q, const Caps& caps = default_caps());

}  // namespace lindq

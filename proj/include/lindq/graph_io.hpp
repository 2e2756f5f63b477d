#pragma once

#include <iosfwd>
#include <string>

#include "lindq/digraph.hpp"
#include "lindq/hkq.hpp"

namespace lindq {

// Text graph format. First non-comment line is a header:
//
//   digraph <n>     followed by arcs "u v", 0-based, one per line
//   matrix <n>      followed by n rows of n 0/1 entries
//
// '#' starts a comment. Duplicate arcs are accepted; loops are not.

/// Throws ParseError with the offending line number.
Digraph read_graph(std::istream& in);
Digraph read_graph_file(const std::string& path);

/// Canonical form: "digraph <n>" then arcs sorted lexicographically.
void write_graph(std::ostream& out, const Digraph& g);
std::string graph_to_string(const Digraph& g);

/// Label sidecar for H_k^q: a comment header, then one line per vertex
/// "<index> : (v1,...,vk)|(w1,...,wk)".
void write_hkq_labels(std::ostream& out, const HkqGraph& h);

}  // namespace lindq

#pragma once

#include <cstdint>

#include "lagrangian/hypergraph.hpp"

namespace lagrangian {

/// C_{i<-j}(e): replaces j by i when j is in e and i is not; otherwise e.
/// Requires i < j.
Edge compress_edge(std::span<const Vertex> edge, Vertex i, Vertex j);

/// Applies C_{i<-j} to every edge, except that an edge stays put when its
/// image is already an edge. Per-level edge counts are preserved.
Hypergraph compress_hypergraph(const Hypergraph& h, Vertex i, Vertex j);

/// True iff no C_{i<-j} with i < j changes H.
bool is_left_compressed(const Hypergraph& h);

/// Sum over edges of the sum of their vertex labels. Every non-identity
/// compression lowers it, which bounds the fixpoint loop.
std::uint64_t compression_potential(const Hypergraph& h);

struct FixpointResult {
  Hypergraph graph;
  int steps = 0;
};

/// Sweeps (i, j) lexicographically and restarts after every change until H
/// is left-compressed.
FixpointResult left_compress(const Hypergraph& h);

inline Hypergraph left_compress_fixpoint(const Hypergraph& h) { return left_compress(h).graph; }

}  // namespace lagrangian

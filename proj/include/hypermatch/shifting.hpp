#pragma once

#include <cstdint>
#include <vector>

#include "hypermatch/hg_io.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// S_ij(e): replace j by i when j is in e, i is not, and the result is not
// already an edge of h. Requires 1 <= i < j <= n and e in h.
Edge shift_edge(const Hypergraph& h, Vertex i, Vertex j, const Edge& e);

// Simultaneous image {S_ij(e) : e in h}.
Hypergraph shift_graph(const Hypergraph& h, Vertex i, Vertex j);

// Sum over edges of the sum of their vertices. Every moving shift lowers it.
std::uint64_t potential(const Hypergraph& h);

struct ShiftStep {
  Vertex i = 0;
  Vertex j = 0;
  std::size_t moved = 0;
  std::uint64_t potential_after = 0;
};

struct ShiftTrace {
  std::vector<ShiftStep> steps;
  int rounds = 0;  // full sweeps, including the final all-zero one
};

struct Stabilized {
  Hypergraph graph;
  ShiftTrace trace;
};

// Sweeps all (i, j) in lexicographic order until a sweep moves nothing.
Stabilized stabilize(const Hypergraph& h);

bool is_stable(const Hypergraph& h);

// Down-set under componentwise domination of sorted edges, checked through the
// elementary moves v_p -> v_p - 1.
bool downset_check(const Hypergraph& h);

Json trace_to_json(const ShiftTrace& trace);

}  // namespace hypermatch

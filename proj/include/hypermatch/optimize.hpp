#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct Matching {
  EdgeSet edges;
  std::size_t size() const { return edges.size(); }
};

struct VertexCover {
  VertexSet vertices;
  std::size_t size() const { return vertices.size(); }
};

// Pairwise disjoint and every member an edge of h.
bool is_matching(const Hypergraph& h, const Matching& m);
bool is_vertex_cover(const Hypergraph& h, std::span<const Vertex> cover);
bool is_independent(const Hypergraph& h, std::span<const Vertex> set);

enum class SolveStatus {
  optimal,          // value is exact
  limit_reached,    // value = limit (the true value is at least limit)
  budget_exceeded,  // search aborted; value is the best bound found
};

const char* to_string(SolveStatus s);

struct SolveBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  std::chrono::milliseconds time{0};  // 0 = unlimited
};

struct ExactOptions {
  // nu: stop once a matching of this size exists. tau: only covers smaller
  // than the limit are searched for, so the result is min(tau, limit).
  std::optional<int> limit;
  SolveBudget budget;
  // Plain enumeration without bounding; the ground truth the branch-and-bound
  // solvers are checked against.
  bool exhaustive = false;
};

template <class Witness>
struct ExactResult {
  int value = 0;
  Witness witness;
  SolveStatus status = SolveStatus::optimal;
  std::uint64_t nodes = 0;
};

// The exact solvers work on vertex bitmasks and need n <= 64.
ExactResult<Matching> nu_exact(const Hypergraph& h, const ExactOptions& options = {});
ExactResult<VertexCover> tau_exact(const Hypergraph& h, const ExactOptions& options = {});
// alpha = n - tau: the complement of an independent set is a vertex cover.
ExactResult<VertexSet> alpha_exact(const Hypergraph& h, const ExactOptions& options = {});

namespace kernels {

// Mask-level entry points shared by the exhaustive enumerators. `edges` are
// vertex bitmasks over [n]. Return min(value, limit).
int max_matching(std::span<const std::uint64_t> edges, int limit);
int min_cover(std::span<const std::uint64_t> edges, int limit);

}  // namespace kernels

enum class LpMode { floating, rational };

struct FractionalAssignment {
  enum class Kind { matching, cover };

  Kind kind = Kind::matching;
  LpMode mode = LpMode::floating;
  // Indexed by edge index (matching) or by v - 1 (cover).
  std::vector<double> weights;
  // Exact weights, rational mode only.
  std::vector<mpq_class> exact_weights;
  double value = 0;
  mpq_class exact_value;
};

class LpFailure : public Error {
 public:
  using Error::Error;
};

FractionalAssignment nu_frac(const Hypergraph& h, LpMode mode = LpMode::floating);
FractionalAssignment tau_frac(const Hypergraph& h, LpMode mode = LpMode::floating);

// Fractional matching with every vertex constraint tight, or nullopt when
// none exists. `costs` (per edge, minimized) selects among feasible ones.
std::optional<FractionalAssignment> fractional_perfect_matching(
    const Hypergraph& h, LpMode mode = LpMode::floating, std::span<const double> costs = {});

inline constexpr double kFloatTolerance = 1e-9;

bool is_fractional_matching(const Hypergraph& h, const FractionalAssignment& f,
                            double tol = kFloatTolerance);
bool is_fractional_cover(const Hypergraph& h, const FractionalAssignment& w,
                         double tol = kFloatTolerance);

struct DualityReport {
  LpMode mode = LpMode::floating;
  double nu_star = 0;
  double tau_star = 0;
  double gap = 0;
  std::optional<mpq_class> exact_nu_star;
  std::optional<mpq_class> exact_tau_star;
};

class DualityViolation : public Error {
 public:
  using Error::Error;
};

// Solves both LPs independently; throws DualityViolation when they disagree
// (exactly in rational mode, beyond `tol` in float mode).
DualityReport check_duality(const Hypergraph& h, LpMode mode = LpMode::floating,
                            double tol = kFloatTolerance);

// Matching whose edges each meet S in exactly one vertex. exact = false walks S
// in ascending order and takes the lexicographically first usable edge;
// exact = true returns a maximum such matching.
Matching greedy_rainbow_matching(const Hypergraph& h, std::span<const Vertex> s, bool exact);

struct ThresholdCoverGraph {
  // All k-sets whose cover weight is at least 1, on the weight-sorted labels.
  Hypergraph graph;
  // The input graph under the same relabeling (a subgraph of `graph`).
  Hypergraph source;
  // original[i] is the input label of new vertex i + 1.
  std::vector<Vertex> original;
  // The cover weights carried over to the new labels.
  FractionalAssignment weights;
};

// Relabels vertices by nonincreasing weight (ties by ascending id) and builds
// the threshold graph. Throws if `omega` is not a fractional cover of h.
ThresholdCoverGraph threshold_cover_graph(const Hypergraph& h, const FractionalAssignment& omega);

}  // namespace hypermatch

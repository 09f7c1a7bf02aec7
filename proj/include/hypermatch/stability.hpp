#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// |E(target) \ E(h)|. Both graphs must share n and k.
std::uint64_t distance_to(const Hypergraph& h, const Hypergraph& target);

enum class CloseTarget { cover, clique };
enum class SearchMode { heuristic, exhaustive };

const char* to_string(CloseTarget t);
const char* to_string(SearchMode m);

struct ClosenessReport {
  CloseTarget target = CloseTarget::cover;
  SearchMode search = SearchMode::heuristic;
  int s = 0;
  VertexSet part;  // W for the cover target, U for the clique target
  std::uint64_t missing_edges = 0;
  double epsilon_effective = 0;  // missing_edges / n^k
  bool exhaustive = false;
};

inline constexpr int kExhaustiveClosenessLimit = 16;

// Heuristic: the top-degree vertices (ties by ascending id). Exhaustive: the
// minimizing choice over all candidate sets, first in colex order on ties.
ClosenessReport closeness_to_cover(const Hypergraph& h, int s, SearchMode mode,
                                   Execution exec = Execution::parallel);
ClosenessReport closeness_to_clique(const Hypergraph& h, int s, SearchMode mode,
                                    Execution exec = Execution::parallel);

struct GoodnessReport {
  double theta = 0;
  double threshold = 0;  // theta * n^(k-1)
  VertexSet good;
  VertexSet bad;
  std::vector<std::uint64_t> deficiency;  // index v - 1: |N_target(v) \ N_h(v)|
};

GoodnessReport theta_classify(const Hypergraph& h, const Hypergraph& target, double theta);

// f(x) = (1 - (1-x)^3)/6 - 9x^3/2 on [0, 1/3], and its derivative.
double crossover_f(double x);
double crossover_fprime(double x);
double crossover_root_bisection(double tol = 1e-12);
double crossover_root_closed_form();

struct BoundRow {
  int s = 0;
  mpz_class cover;
  mpz_class clique;
  mpz_class hm;
  std::string winner;  // larger of hm and clique, or "tie"
  double f_value = 0;  // f(s/n)
};

struct BoundTable {
  int n = 0;
  std::vector<BoundRow> rows;
  std::optional<int> clique_overtakes_at;  // first s with clique > hm
};

// k = 3 rows for s_lo <= s <= s_hi; needs 1 <= s_lo and 3 s_hi + 2 <= n.
BoundTable bound_table(int n, int s_lo, int s_hi);

}  // namespace hypermatch

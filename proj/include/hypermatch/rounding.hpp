#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/hg_io.hpp"
#include "hypermatch/optimize.hpp"

namespace hypermatch {

// Accumulated weight on each vertex pair across a family of fractional
// matchings: load(x, y) = sum_i sum_{e contains x, y} f_i(e).
class PairLoad {
 public:
  PairLoad() = default;
  explicit PairLoad(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0.0) {}

  int n() const { return n_; }
  double get(Vertex x, Vertex y) const { return values_[index(x, y)]; }
  void add(Vertex x, Vertex y, double w) { values_[index(x, y)] += w; }
  double max() const;

  // Adds the load of a fractional matching f on h.
  void add_matching(const Hypergraph& h, std::span<const double> f);

 private:
  std::size_t index(Vertex x, Vertex y) const {
    if (x > y) std::swap(x, y);
    return static_cast<std::size_t>(x - 1) * n_ + (y - 1);
  }

  int n_ = 0;
  std::vector<double> values_;
};

enum class FpmSelection { spread, block, vertex };

const char* to_string(FpmSelection s);

struct ExtractOptions {
  double cap = 2;
  LpMode mode = LpMode::floating;
  // Float mode: pick members that keep pair loads even (Frank-Wolfe on the
  // sum of squared loads) while no pair would reach cap/2; otherwise, and
  // always in rational mode, try a block matching (disjoint edges plus
  // complete (k+1)-vertex blocks at weight 1/k), then an LP vertex leaning on
  // already loaded pairs. With `combinatorial`, a run that stalls is repeated
  // without block matchings and the longer family is kept.
  bool spread = true;
  int spread_iterations = 40;
  bool combinatorial = true;
  std::uint64_t combinatorial_node_budget = 200000;
};

struct RoundDiagnostics {
  int round = 0;                     // 1-based
  std::size_t available_edges = 0;   // edges left before this round's LP
  FpmSelection selection = FpmSelection::vertex;
  std::size_t heavy_pairs = 0;       // |S_t|: pairs with load >= cap/2
  std::size_t removed_edges = 0;     // |E_t|: edges through a heavy pair
  std::size_t max_heavy_per_vertex = 0;
  double max_pair_load = 0;
};

struct FpmFamily {
  int n = 0;
  int target = 0;  // requested number of members
  double cap = 2;
  LpMode mode = LpMode::floating;
  // Each member is indexed by the edges of the source graph; removed edges
  // carry weight 0.
  std::vector<FractionalAssignment> members;
  PairLoad pair_load;
  std::vector<RoundDiagnostics> rounds;
  std::vector<char> removed;  // per source edge, after the last round
  std::optional<int> infeasible_round;

  bool complete() const { return static_cast<int>(members.size()) == target; }
  std::string status() const;
};

// Iterates: fractional perfect matching on the current graph, update pair
// loads, drop every edge through a pair whose load reached cap/2. Stops after
// t members or at the first infeasible round (partial family kept).
FpmFamily extract_fpm_family(const Hypergraph& h, int t, const ExtractOptions& options = {});

// True when every member is a perfect fractional matching of h that is zero on
// the removed edges and every pair load is below the cap.
bool check_fpm_family(const Hypergraph& h, const FpmFamily& family, double tol = kFloatTolerance);

// f = (1/2) sum_i f_i.
FractionalAssignment mix_and_halve(const FpmFamily& family);

struct SampleOptions {
  // Degree window: |d(v) - E d(v)| < lambda with lambda = 3 sqrt(3 E ln 2).
  double window_scale = 3;
  // Pair degrees at or above this count as large deviations.
  std::size_t pair_threshold = 7;
};

struct SampleReport {
  Hypergraph sampled{2, 2};
  std::uint64_t seed = 0;
  double expected_degree = 0;  // mean over vertices of sum_{e ∋ v} f(e)
  std::vector<double> expected;
  std::vector<std::size_t> degrees;
  std::vector<double> deviations;  // degree - expected
  double window = 0;               // lambda
  double alpha = 0;                // lambda / expected_degree, capped at 3/2
  double chernoff_bound = 0;       // 2 exp(-alpha^2 E / 3), capped at 1
  std::size_t degree_violations = 0;
  double violation_rate = 0;
  std::size_t max_pair_degree = 0;
  std::size_t pair_threshold = 0;
  std::size_t pair_violations = 0;
  bool degree_pass = false;
  bool pair_pass = false;
};

// Keeps each edge independently with probability f(e).
SampleReport sample_binomial_subgraph(const Hypergraph& h, const FractionalAssignment& f,
                                      std::uint64_t seed, const SampleOptions& options = {});

enum class MatchStrategy { greedy, nibble };

const char* to_string(MatchStrategy s);
MatchStrategy match_strategy_from_string(const std::string& name);

struct NearPerfectOptions {
  MatchStrategy strategy = MatchStrategy::greedy;
  std::uint64_t seed = 0;
  double leave_fraction = 0.2;
  double bite = 0.1;
  int rounds = 0;  // 0: ceil(10 ln n)
};

struct NearPerfectResult {
  Matching matching;
  std::size_t covered = 0;
  bool within_target = false;  // covered >= (1 - leave_fraction) n
};

// greedy: repeatedly take the edge meeting the fewest other remaining edges
// (lexicographic ties). nibble: random bite rounds, then a greedy cleanup.
NearPerfectResult near_perfect_matching(const Hypergraph& h, const NearPerfectOptions& options = {});

struct PipelineOptions {
  double eta = 0.15;
  ExtractOptions extract;
  SampleOptions sample;
  MatchStrategy strategy = MatchStrategy::greedy;
  double leave_fraction = 0.2;
  // Grow the sampled matching greedily inside H_r before dropping Q.
  bool extend_in_augmented = true;
};

struct PipelineResult {
  int s = 0;
  int t = 0;
  int r = 0;
  std::uint64_t seed = 0;
  std::string stage = "done";  // stage reached; "done" when all stages ran
  std::string failure;         // empty on a clean run
  std::optional<FpmFamily> family;
  std::optional<SampleReport> sample;
  std::size_t sampled_matching = 0;
  std::size_t extended_by = 0;
  std::size_t dropped_meeting_q = 0;
  Matching matching;  // in H
  bool success = false;  // matching.size() > s
};

int default_t(int n);

// r with n + r divisible by 3 and n - 3s - 2 eta n <= 2r <= n - 3s - eta n when
// the interval allows one, else the smallest r >= 0 with n + r divisible by 3
// and 2r >= n - 3s - 2 eta n.
int choose_r(int n, int s, double eta);

PipelineResult pipeline(const Hypergraph& h, int s, int t, std::uint64_t seed,
                        const PipelineOptions& options = {});

struct SweepSeed {
  std::uint64_t seed = 0;
  double violation_rate = 0;
  std::size_t matching_size = 0;
  double covered_fraction = 0;
};

struct SweepSummary {
  std::vector<SweepSeed> seeds;
  double chernoff_bound = 0;
  double mean_violation_rate = 0;
  double coverage_threshold = 0.8;
  double fraction_meeting_coverage = 0;
};

// Samples from f once per seed (seeds derived from base_seed) and matches each
// sample. Seeds are independent, so the parallel path is a plain loop split.
SweepSummary monte_carlo_sweep(const Hypergraph& h, const FractionalAssignment& f, int seeds,
                               std::uint64_t base_seed, const NearPerfectOptions& matching,
                               Execution exec = Execution::parallel,
                               const SampleOptions& sample = {});

Json to_json(const FpmFamily& family);
Json to_json(const SampleReport& report);
Json to_json(const PipelineResult& result);

}  // namespace hypermatch

#include "hypermatch/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "hypermatch/constructions.hpp"
#include "hypermatch/lp.hpp"

namespace hypermatch {

double PairLoad::max() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

void PairLoad::add_matching(const Hypergraph& h, std::span<const double> f) {
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (f[i] == 0) continue;
    const Edge& e = h.edge(i);
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) add(e[a], e[b], f[i]);
    }
  }
}

const char* to_string(FpmSelection s) {
  switch (s) {
    case FpmSelection::spread: return "spread";
    case FpmSelection::block: return "block";
    case FpmSelection::vertex: return "vertex";
  }
  return "unknown";
}

std::string FpmFamily::status() const {
  if (infeasible_round) return "infeasible at round " + std::to_string(*infeasible_round);
  return complete() ? "complete" : "incomplete";
}

namespace {

constexpr double kHeavyTol = 1e-9;

template <class Fn>
void for_each_pair(const Edge& e, Fn&& fn) {
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) fn(e[a], e[b]);
  }
}

std::size_t pair_index(int n, Vertex x, Vertex y) {
  return static_cast<std::size_t>(x - 1) * n + (y - 1);
}

bool covers_all_vertices(const Hypergraph& h) {
  std::vector<char> seen(h.n() + 1, 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) seen[v] = 1;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](char c) { return c != 0; });
}

// Frank-Wolfe on sum_p (L_p + inc_p(x))^2 over the fractional perfect matching
// polytope of g. Each linear step re-optimizes the same simplex.
std::optional<std::vector<double>> spread_fpm(const Hypergraph& g, const std::vector<double>& load,
                                              int iterations) {
  const int n = g.n();
  const std::size_t m = g.edge_count();
  lp::Problem<double> p;
  p.num_vars = static_cast<int>(m);
  p.rows.resize(n);
  for (auto& row : p.rows) {
    row.sense = lp::Sense::eq;
    row.rhs = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v : g.edge(i)) p.rows[v - 1].terms.emplace_back(static_cast<int>(i), 1.0);
  }

  std::vector<double> grad(m, 0.0);
  const auto gradient = [&](const std::vector<double>& pair_total) {
    for (std::size_t i = 0; i < m; ++i) {
      double sum = 0;
      for_each_pair(g.edge(i), [&](Vertex a, Vertex b) { sum += pair_total[pair_index(n, a, b)]; });
      grad[i] = -2 * sum;  // the simplex maximizes
    }
  };
  gradient(load);
  p.objective = grad;
  lp::Simplex<double> simplex(p);
  if (simplex.solve() != lp::Status::optimal) return std::nullopt;
  std::vector<double> x = simplex.primal();

  std::vector<double> total(load.size()), dir_inc(load.size());
  for (int it = 0; it < iterations; ++it) {
    total = load;
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      for_each_pair(g.edge(i), [&](Vertex a, Vertex b) { total[pair_index(n, a, b)] += x[i]; });
    }
    gradient(total);
    if (simplex.reoptimize(grad) != lp::Status::optimal) break;
    const std::vector<double> v = simplex.primal();
    double gap = 0;
    std::fill(dir_inc.begin(), dir_inc.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const double d = v[i] - x[i];
      gap += grad[i] * d;
      if (d == 0) continue;
      for_each_pair(g.edge(i), [&](Vertex a, Vertex b) { dir_inc[pair_index(n, a, b)] += d; });
    }
    if (gap <= 1e-12) break;
    double ab = 0, bb = 0;
    for (std::size_t q = 0; q < total.size(); ++q) {
      ab += total[q] * dir_inc[q];
      bb += dir_inc[q] * dir_inc[q];
    }
    if (bb <= 0) break;
    const double gamma = std::clamp(-ab / bb, 0.0, 1.0);
    if (gamma == 0) break;
    for (std::size_t i = 0; i < m; ++i) x[i] += gamma * (v[i] - x[i]);
  }
  for (double& w : x) w = std::clamp(w, 0.0, 1.0);
  return x;
}

// Disjoint edges (weight 1) and blocks of k+1 vertices whose k-subsets are all
// edges (weight 1/k each), covering [n]. Uses n mod k blocks.
class BlockSearch {
 public:
  BlockSearch(const Hypergraph& g, std::uint64_t budget) : g_(g), k_(g.k()), budget_(budget) {
    for (std::uint64_t e : g.masks()) edges_.insert(e);
    const std::uint64_t n = static_cast<std::uint64_t>(g.n());
    all_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  std::optional<std::vector<mpq_class>> run() {
    const int blocks = g_.n() % k_;
    if (g_.n() < blocks * (k_ + 1)) return std::nullopt;
    if (!dfs(0, blocks)) return std::nullopt;
    std::vector<mpq_class> w(g_.edge_count(), 0);
    const auto masks = g_.masks();
    for (std::uint64_t e : chosen_edges_) {
      w[std::find(masks.begin(), masks.end(), e) - masks.begin()] = 1;
    }
    for (std::uint64_t b : chosen_blocks_) {
      for (std::uint64_t rest = b; rest != 0; rest &= rest - 1) {
        const std::uint64_t e = b & ~(rest & (~rest + 1));
        w[std::find(masks.begin(), masks.end(), e) - masks.begin()] = mpq_class(1, k_);
      }
    }
    return w;
  }

 private:
  bool is_block(std::uint64_t b) const {
    for (std::uint64_t rest = b; rest != 0; rest &= rest - 1) {
      if (!edges_.count(b & ~(rest & (~rest + 1)))) return false;
    }
    return true;
  }

  bool dfs(std::uint64_t covered, int blocks_left) {
    if (budget_ != 0 && ++nodes_ > budget_) return false;
    if (covered == all_) return blocks_left == 0;
    const std::uint64_t free = all_ & ~covered;
    const std::uint64_t low = free & (~free + 1);
    const int remaining = std::popcount(free);
    if (remaining < blocks_left * (k_ + 1)) return false;
    if (remaining > blocks_left * (k_ + 1) || blocks_left == 0) {
      for (std::uint64_t e : g_.masks()) {
        if (!(e & low) || (e & covered)) continue;
        chosen_edges_.push_back(e);
        if (dfs(covered | e, blocks_left)) return true;
        chosen_edges_.pop_back();
        if (budget_ != 0 && nodes_ > budget_) return false;
      }
    }
    if (blocks_left > 0) {
      for (std::uint64_t e : g_.masks()) {
        if (!(e & low) || (e & covered)) continue;
        // Each block shows up once: extend e by a free vertex above its top.
        const int top = 63 - std::countl_zero(e);
        for (std::uint64_t rest = free & ~e & ~((std::uint64_t{2} << top) - 1); rest != 0;
             rest &= rest - 1) {
          const std::uint64_t b = e | (rest & (~rest + 1));
          if (!is_block(b)) continue;
          chosen_blocks_.push_back(b);
          if (dfs(covered | b, blocks_left - 1)) return true;
          chosen_blocks_.pop_back();
          if (budget_ != 0 && nodes_ > budget_) return false;
        }
      }
    }
    return false;
  }

  const Hypergraph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t all_ = 0;
  std::unordered_set<std::uint64_t> edges_;
  std::vector<std::uint64_t> chosen_edges_;
  std::vector<std::uint64_t> chosen_blocks_;
};

std::optional<std::vector<mpq_class>> block_perfect_matching(const Hypergraph& g,
                                                             std::uint64_t budget) {
  if (!g.has_masks()) return std::nullopt;
  return BlockSearch(g, budget).run();
}

FpmFamily extract_run(const Hypergraph& h, int t, const ExtractOptions& options,
                      bool combinatorial, int spread_limit) {
  const int n = h.n();
  const std::size_t m = h.edge_count();
  const bool rational = options.mode == LpMode::rational;
  const double threshold = options.cap / 2;

  FpmFamily fam;
  fam.n = n;
  fam.target = t;
  fam.cap = options.cap;
  fam.mode = options.mode;
  fam.pair_load = PairLoad(n);
  fam.removed.assign(m, 0);

  std::vector<double> load(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<mpq_class> exact_load;
  const mpq_class exact_threshold(options.cap / 2);
  if (rational) exact_load.assign(load.size(), 0);
  std::vector<char> heavy(load.size(), 0);

  for (int round = 1; round <= t; ++round) {
    std::vector<std::size_t> available;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      if (!fam.removed[i]) {
        available.push_back(i);
        edges.push_back(h.edge(i));
      }
    }
    const Hypergraph g = Hypergraph::build(n, h.k(), std::move(edges));
    RoundDiagnostics diag;
    diag.round = round;
    diag.available_edges = available.size();
    if (g.empty() || !covers_all_vertices(g)) {
      fam.infeasible_round = round;
      break;
    }

    FractionalAssignment local;
    bool found = false;
    if (!rational && options.spread && (round <= spread_limit || round == t)) {
      if (auto x = spread_fpm(g, load, options.spread_iterations)) {
        bool crosses = false;
        std::vector<double> after = load;
        for (std::size_t i = 0; i < x->size(); ++i) {
          for_each_pair(g.edge(i), [&](Vertex a, Vertex b) { after[pair_index(n, a, b)] += (*x)[i]; });
        }
        for (std::size_t q = 0; q < after.size() && !crosses; ++q) {
          crosses = !heavy[q] && after[q] >= threshold - kHeavyTol;
        }
        if (!crosses || round == t) {
          local.weights = std::move(*x);
          diag.selection = FpmSelection::spread;
          found = true;
        }
      }
    }
    if (!found && combinatorial) {
      if (auto w = block_perfect_matching(g, options.combinatorial_node_budget)) {
        local.weights.resize(w->size());
        for (std::size_t j = 0; j < w->size(); ++j) local.weights[j] = (*w)[j].get_d();
        if (rational) local.exact_weights = std::move(*w);
        diag.selection = FpmSelection::block;
        found = true;
      }
    }
    if (!found) {
      // Lean on pairs that already carry load so fresh pairs survive longer.
      std::vector<double> costs(g.edge_count(), 0.0);
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        for_each_pair(g.edge(i), [&](Vertex a, Vertex b) { costs[i] -= load[pair_index(n, a, b)]; });
      }
      auto fpm = fractional_perfect_matching(g, options.mode, costs);
      if (!fpm) {
        fam.infeasible_round = round;
        break;
      }
      local = std::move(*fpm);
      diag.selection = FpmSelection::vertex;
    }

    FractionalAssignment member;
    member.kind = FractionalAssignment::Kind::matching;
    member.mode = options.mode;
    member.weights.assign(m, 0.0);
    if (rational) member.exact_weights.assign(m, 0);
    for (std::size_t j = 0; j < available.size(); ++j) {
      member.weights[available[j]] = local.weights[j];
      if (rational) member.exact_weights[available[j]] = local.exact_weights[j];
    }
    member.value = std::accumulate(member.weights.begin(), member.weights.end(), 0.0);
    if (rational) {
      member.exact_value = 0;
      for (const auto& w : member.exact_weights) member.exact_value += w;
    }

    for (std::size_t i = 0; i < m; ++i) {
      if (member.weights[i] == 0 && (!rational || sgn(member.exact_weights[i]) == 0)) continue;
      for_each_pair(h.edge(i), [&](Vertex a, Vertex b) {
        load[pair_index(n, a, b)] += member.weights[i];
        if (rational) exact_load[pair_index(n, a, b)] += member.exact_weights[i];
      });
    }
    fam.pair_load.add_matching(h, member.weights);
    fam.members.push_back(std::move(member));

    std::vector<std::size_t> heavy_per_vertex(n + 1, 0);
    for (Vertex x = 1; x <= n; ++x) {
      for (Vertex y = x + 1; y <= n; ++y) {
        const std::size_t q = pair_index(n, x, y);
        const bool is_heavy =
            rational ? exact_load[q] >= exact_threshold : load[q] >= threshold - kHeavyTol;
        heavy[q] = is_heavy;
        if (is_heavy) {
          ++diag.heavy_pairs;
          ++heavy_per_vertex[x];
          ++heavy_per_vertex[y];
        }
        diag.max_pair_load = std::max(diag.max_pair_load, load[q]);
      }
    }
    diag.max_heavy_per_vertex = *std::max_element(heavy_per_vertex.begin(), heavy_per_vertex.end());
    for (std::size_t i = 0; i < m; ++i) {
      bool through_heavy = false;
      for_each_pair(h.edge(i), [&](Vertex a, Vertex b) {
        through_heavy = through_heavy || heavy[pair_index(n, a, b)];
      });
      fam.removed[i] = through_heavy;
      diag.removed_edges += through_heavy;
    }
    fam.rounds.push_back(diag);
  }
  return fam;
}

}  // namespace

FpmFamily extract_fpm_family(const Hypergraph& h, int t, const ExtractOptions& options) {
  if (t < 1) throw Error("extract_fpm_family needs t >= 1");
  if (!(options.cap > 0)) throw Error("pair load cap must be positive");
  constexpr int kNoLimit = std::numeric_limits<int>::max();
  if (!options.combinatorial || !h.has_masks()) return extract_run(h, t, options, false, kNoLimit);
  FpmFamily best = extract_run(h, t, options, true, kNoLimit);
  if (best.complete()) return best;
  // Fewer even rounds leave more fresh pairs for block rounds; try each
  // earlier switch point, then the plain LP fallback.
  const auto spread_rounds = std::count_if(best.rounds.begin(), best.rounds.end(), [](const auto& r) {
    return r.selection == FpmSelection::spread;
  });
  for (int limit = static_cast<int>(spread_rounds) - 1; limit >= 0; --limit) {
    FpmFamily next = extract_run(h, t, options, true, limit);
    if (next.members.size() > best.members.size()) best = std::move(next);
    if (best.complete()) return best;
  }
  FpmFamily plain = extract_run(h, t, options, false, kNoLimit);
  return plain.members.size() > best.members.size() ? plain : best;
}

bool check_fpm_family(const Hypergraph& h, const FpmFamily& family, double tol) {
  const int n = h.n();
  const bool rational = family.mode == LpMode::rational;
  const double threshold = family.cap / 2;
  std::vector<double> load(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& f : family.members) {
    if (f.weights.size() != h.edge_count()) return false;
    if (rational && f.exact_weights.size() != h.edge_count()) return false;
    std::vector<double> vsum(n + 1, 0.0);
    std::vector<mpq_class> exact_vsum;
    if (rational) exact_vsum.assign(n + 1, 0);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      const double w = f.weights[i];
      if (w < -tol || w > 1 + tol) return false;
      bool through_heavy = false;
      for_each_pair(h.edge(i), [&](Vertex a, Vertex b) {
        through_heavy = through_heavy || load[pair_index(n, a, b)] >= threshold - kHeavyTol;
      });
      if (through_heavy && std::fabs(w) > tol) return false;
      for (Vertex v : h.edge(i)) {
        vsum[v] += w;
        if (rational) exact_vsum[v] += f.exact_weights[i];
      }
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (std::fabs(vsum[v] - 1) > tol) return false;
      if (rational && exact_vsum[v] != 1) return false;
    }
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      for_each_pair(h.edge(i), [&](Vertex a, Vertex b) { load[pair_index(n, a, b)] += f.weights[i]; });
    }
  }
  return std::all_of(load.begin(), load.end(), [&](double l) { return l < family.cap; });
}

FractionalAssignment mix_and_halve(const FpmFamily& family) {
  if (family.members.empty()) throw Error("mix_and_halve needs a nonempty family");
  const std::size_t m = family.members.front().weights.size();
  const bool rational = family.mode == LpMode::rational;
  FractionalAssignment f;
  f.kind = FractionalAssignment::Kind::matching;
  f.mode = family.mode;
  f.weights.assign(m, 0.0);
  if (rational) f.exact_weights.assign(m, 0);
  for (const auto& member : family.members) {
    for (std::size_t i = 0; i < m; ++i) {
      f.weights[i] += member.weights[i] / 2;
      if (rational) f.exact_weights[i] += member.exact_weights[i] / 2;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (f.weights[i] < -kFloatTolerance || f.weights[i] > 1 + kFloatTolerance) {
      throw Error("mixed weight outside [0, 1]");
    }
    f.weights[i] = std::clamp(f.weights[i], 0.0, 1.0);
  }
  f.value = std::accumulate(f.weights.begin(), f.weights.end(), 0.0);
  if (rational) {
    f.exact_value = 0;
    for (const auto& w : f.exact_weights) f.exact_value += w;
  }
  return f;
}

SampleReport sample_binomial_subgraph(const Hypergraph& h, const FractionalAssignment& f,
                                      std::uint64_t seed, const SampleOptions& options) {
  if (f.weights.size() != h.edge_count()) throw Error("one weight per edge required");
  for (double w : f.weights) {
    if (!(w >= 0 && w <= 1)) throw Error("sampling weights must lie in [0, 1]");
  }
  const int n = h.n();
  Rng rng(seed);
  std::vector<Edge> kept;
  SampleReport r;
  r.seed = seed;
  r.expected.assign(n, 0.0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    for (Vertex v : h.edge(i)) r.expected[v - 1] += f.weights[i];
    if (uniform01(rng) < f.weights[i]) kept.push_back(h.edge(i));
  }
  r.sampled = Hypergraph::build(n, h.k(), std::move(kept));

  r.expected_degree = std::accumulate(r.expected.begin(), r.expected.end(), 0.0) / n;
  r.degrees.assign(n, 0);
  for (const Edge& e : r.sampled.edges()) {
    for (Vertex v : e) ++r.degrees[v - 1];
  }
  const double mean = r.expected_degree;
  r.window = options.window_scale * std::sqrt(3 * mean * std::log(2.0));
  r.alpha = mean > 0 ? std::min(r.window / mean, 1.5) : 1.5;
  r.chernoff_bound = std::min(1.0, 2 * std::exp(-r.alpha * r.alpha * mean / 3));
  for (Vertex v = 1; v <= n; ++v) {
    const double dev = static_cast<double>(r.degrees[v - 1]) - r.expected[v - 1];
    r.deviations.push_back(dev);
    if (std::fabs(dev) >= r.window) ++r.degree_violations;
  }
  r.violation_rate = static_cast<double>(r.degree_violations) / n;
  r.degree_pass = r.violation_rate <= r.chernoff_bound;

  std::vector<std::size_t> codeg(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : r.sampled.edges()) {
    for_each_pair(e, [&](Vertex a, Vertex b) { ++codeg[pair_index(n, a, b)]; });
  }
  r.pair_threshold = options.pair_threshold;
  for (std::size_t c : codeg) {
    r.max_pair_degree = std::max(r.max_pair_degree, c);
    if (c >= options.pair_threshold) ++r.pair_violations;
  }
  const double pairs = static_cast<double>(n) * (n - 1) / 2;
  r.pair_pass = pairs == 0 ||
                static_cast<double>(r.pair_violations) / pairs <=
                    std::exp(-static_cast<double>(options.pair_threshold));
  return r;
}

const char* to_string(MatchStrategy s) { return s == MatchStrategy::greedy ? "greedy" : "nibble"; }

MatchStrategy match_strategy_from_string(const std::string& name) {
  if (name == "greedy") return MatchStrategy::greedy;
  if (name == "nibble") return MatchStrategy::nibble;
  throw Error("unknown matching strategy: " + name);
}

namespace {

// Min-kill greedy on the edges of h not touching `used`.
void greedy_fill(const Hypergraph& h, std::vector<char>& used, Matching& m) {
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; })) alive.push_back(i);
  }
  std::vector<std::size_t> deg(h.n() + 1, 0);
  while (!alive.empty()) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t i : alive) {
      for (Vertex v : h.edge(i)) ++deg[v];
    }
    std::size_t best = alive.front();
    std::size_t best_kill = SIZE_MAX;
    for (std::size_t i : alive) {
      // Edges meeting e, by inclusion-exclusion over its pairs and itself.
      const Edge& e = h.edge(i);
      std::size_t kill = 0;
      for (Vertex v : e) kill += deg[v];
      std::size_t overlap = 0;
      for (std::size_t j : alive) {
        const Edge& f = h.edge(j);
        std::size_t common = 0;
        for (Vertex v : f) common += std::binary_search(e.begin(), e.end(), v);
        if (common > 1) overlap += common - 1;
      }
      kill -= overlap;
      if (kill < best_kill) {
        best_kill = kill;
        best = i;
      }
    }
    const Edge& chosen = h.edge(best);
    m.edges.push_back(chosen);
    for (Vertex v : chosen) used[v] = 1;
    std::erase_if(alive, [&](std::size_t i) {
      const Edge& e = h.edge(i);
      return std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; });
    });
  }
}

void nibble(const Hypergraph& h, const NearPerfectOptions& options, std::vector<char>& used,
            Matching& m) {
  Rng rng(options.seed);
  const int rounds = options.rounds > 0
                         ? options.rounds
                         : static_cast<int>(std::ceil(10 * std::log(std::max(h.n(), 2))));
  std::vector<std::size_t> alive(h.edge_count());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<std::size_t> deg(h.n() + 1, 0);
  for (int round = 0; round < rounds && !alive.empty(); ++round) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t i : alive) {
      for (Vertex v : h.edge(i)) ++deg[v];
    }
    const double max_deg = static_cast<double>(*std::max_element(deg.begin(), deg.end()));
    const double p = std::min(1.0, options.bite / max_deg);
    std::vector<std::size_t> bite;
    for (std::size_t i : alive) {
      if (uniform01(rng) < p) bite.push_back(i);
    }
    std::shuffle(bite.begin(), bite.end(), rng);
    for (std::size_t i : bite) {
      const Edge& e = h.edge(i);
      if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; })) continue;
      m.edges.push_back(e);
      for (Vertex v : e) used[v] = 1;
    }
    std::erase_if(alive, [&](std::size_t i) {
      const Edge& e = h.edge(i);
      return std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; });
    });
  }
}

}  // namespace

NearPerfectResult near_perfect_matching(const Hypergraph& h, const NearPerfectOptions& options) {
  NearPerfectResult out;
  std::vector<char> used(h.n() + 1, 0);
  if (options.strategy == MatchStrategy::nibble) nibble(h, options, used, out.matching);
  greedy_fill(h, used, out.matching);
  std::sort(out.matching.edges.begin(), out.matching.edges.end());
  out.covered = out.matching.size() * static_cast<std::size_t>(h.k());
  out.within_target =
      static_cast<double>(out.covered) >= (1 - options.leave_fraction) * h.n() - 1e-12;
  return out;
}

int default_t(int n) {
  return std::max(2, static_cast<int>(std::lround(std::pow(static_cast<double>(n), 0.2))));
}

int choose_r(int n, int s, double eta) {
  const double lo = n - 3.0 * s - 2 * eta * n;
  const double hi = n - 3.0 * s - eta * n;
  for (int r = 0; 2.0 * r <= hi; ++r) {
    if (2.0 * r >= lo && (n + r) % 3 == 0) return r;
  }
  int r = std::max(0, static_cast<int>(std::ceil(lo / 2)));
  while ((n + r) % 3 != 0) ++r;
  return r;
}

PipelineResult pipeline(const Hypergraph& h, int s, int t, std::uint64_t seed,
                        const PipelineOptions& options) {
  if (h.k() != 3) throw Error("pipeline is defined for 3-graphs");
  if (t < 1) throw Error("pipeline needs t >= 1");
  PipelineResult out;
  out.s = s;
  out.t = t;
  out.seed = seed;
  out.r = choose_r(h.n(), s, options.eta);
  const Hypergraph hr = augment_universal(h, out.r);

  out.stage = "extract";
  out.family = extract_fpm_family(hr, t, options.extract);
  if (!out.family->complete()) {
    out.failure = "extract: " + out.family->status();
    return out;
  }

  out.stage = "mix";
  const FractionalAssignment f = mix_and_halve(*out.family);

  out.stage = "sample";
  out.sample = sample_binomial_subgraph(hr, f, derive_seed(seed, 1), options.sample);

  out.stage = "match";
  NearPerfectOptions match;
  match.strategy = options.strategy;
  match.seed = derive_seed(seed, 2);
  match.leave_fraction = options.leave_fraction;
  Matching m = near_perfect_matching(out.sample->sampled, match).matching;
  out.sampled_matching = m.size();

  if (options.extend_in_augmented) {
    std::vector<char> used(hr.n() + 1, 0);
    for (const Edge& e : m.edges) {
      for (Vertex v : e) used[v] = 1;
    }
    for (const Edge& e : hr.edges()) {
      if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; })) continue;
      m.edges.push_back(e);
      for (Vertex v : e) used[v] = 1;
      ++out.extended_by;
    }
  }

  out.stage = "done";
  for (const Edge& e : m.edges) {
    if (e.back() > h.n()) {
      ++out.dropped_meeting_q;
    } else {
      out.matching.edges.push_back(e);
    }
  }
  std::sort(out.matching.edges.begin(), out.matching.edges.end());
  out.success = static_cast<int>(out.matching.size()) > s;
  return out;
}

SweepSummary monte_carlo_sweep(const Hypergraph& h, const FractionalAssignment& f, int seeds,
                               std::uint64_t base_seed, const NearPerfectOptions& matching,
                               Execution exec, const SampleOptions& sample) {
  if (seeds < 1) throw Error("sweep needs at least one seed");
  SweepSummary out;
  out.seeds.resize(seeds);
  out.coverage_threshold = 1 - matching.leave_fraction;
  std::vector<double> bounds(seeds, 0.0);
  const auto run = [&](int i) {
    const std::uint64_t seed = derive_seed(base_seed, static_cast<std::uint64_t>(i));
    const SampleReport report = sample_binomial_subgraph(h, f, seed, sample);
    NearPerfectOptions opts = matching;
    opts.seed = derive_seed(seed, 2);
    const auto np = near_perfect_matching(report.sampled, opts);
    out.seeds[i] = {seed, report.violation_rate, np.matching.size(),
                    static_cast<double>(np.covered) / h.n()};
    bounds[i] = report.chernoff_bound;
  };
  if (exec == Execution::serial) {
    for (int i = 0; i < seeds; ++i) run(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < seeds; ++i) run(i);
  }
  out.chernoff_bound = bounds.front();
  double rate = 0;
  int meeting = 0;
  for (const auto& s : out.seeds) {
    rate += s.violation_rate;
    meeting += s.covered_fraction >= out.coverage_threshold - 1e-12;
  }
  out.mean_violation_rate = rate / seeds;
  out.fraction_meeting_coverage = static_cast<double>(meeting) / seeds;
  return out;
}

Json to_json(const FpmFamily& family) {
  Json rounds = Json::array();
  for (const auto& r : family.rounds) {
    rounds.push_back({{"round", r.round},
                      {"available_edges", r.available_edges},
                      {"selection", to_string(r.selection)},
                      {"heavy_pairs", r.heavy_pairs},
                      {"removed_edges", r.removed_edges},
                      {"max_heavy_per_vertex", r.max_heavy_per_vertex},
                      {"max_pair_load", r.max_pair_load}});
  }
  return Json{{"n", family.n},
              {"t", family.target},
              {"cap", family.cap},
              {"members", family.members.size()},
              {"status", family.status()},
              {"max_pair_load", family.pair_load.max()},
              {"rounds", std::move(rounds)}};
}

Json to_json(const SampleReport& r) {
  return Json{{"seed", r.seed},
              {"edges", r.sampled.edge_count()},
              {"expected_degree", r.expected_degree},
              {"window", r.window},
              {"alpha", r.alpha},
              {"chernoff_bound", r.chernoff_bound},
              {"degree_violations", r.degree_violations},
              {"violation_rate", r.violation_rate},
              {"degree_pass", r.degree_pass},
              {"deviations", r.deviations},
              {"max_pair_degree", r.max_pair_degree},
              {"pair_threshold", r.pair_threshold},
              {"pair_violations", r.pair_violations},
              {"pair_pass", r.pair_pass}};
}

Json to_json(const PipelineResult& r) {
  Json j{{"s", r.s}, {"t", r.t}, {"r", r.r}, {"seed", r.seed}, {"stage", r.stage}};
  j["failure"] = r.failure;
  j["family"] = r.family ? to_json(*r.family) : Json(nullptr);
  j["sample"] = r.sample ? to_json(*r.sample) : Json(nullptr);
  j["sampled_matching"] = r.sampled_matching;
  j["extended_by"] = r.extended_by;
  j["dropped_meeting_q"] = r.dropped_meeting_q;
  j["matching"] = r.matching.edges;
  j["matching_size"] = r.matching.size();
  j["success"] = r.success;
  return j;
}

}  // namespace hypermatch

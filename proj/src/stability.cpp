#include "hypermatch/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hypermatch/constructions.hpp"

namespace hypermatch {

std::uint64_t distance_to(const Hypergraph& h, const Hypergraph& target) {
  if (h.n() != target.n() || h.k() != target.k()) throw Error("distance_to needs matching n and k");
  std::uint64_t missing = 0;
  for (const Edge& e : target.edges()) {
    if (!h.contains(e)) ++missing;
  }
  return missing;
}

const char* to_string(CloseTarget t) { return t == CloseTarget::cover ? "cover" : "clique"; }
const char* to_string(SearchMode m) {
  return m == SearchMode::heuristic ? "heuristic" : "exhaustive";
}

namespace {

// Edges of h the target built on `part` already has.
std::uint64_t present(const Hypergraph& h, CloseTarget target, std::uint64_t part) {
  std::uint64_t count = 0;
  if (h.has_masks()) {
    for (std::uint64_t e : h.masks()) {
      count += target == CloseTarget::cover ? (e & part) != 0 : (e & ~part) == 0;
    }
    return count;
  }
  for (const Edge& e : h.edges()) {
    const bool hit = std::any_of(e.begin(), e.end(), [&](Vertex v) { return (part >> (v - 1)) & 1; });
    const bool inside = std::all_of(e.begin(), e.end(), [&](Vertex v) { return (part >> (v - 1)) & 1; });
    count += target == CloseTarget::cover ? hit : inside;
  }
  return count;
}

std::uint64_t target_size(const Hypergraph& h, CloseTarget target, int size) {
  return target == CloseTarget::cover ? binomial_u64(h.n(), h.k()) - binomial_u64(h.n() - size, h.k())
                                      : binomial_u64(size, h.k());
}

VertexSet top_degree(const Hypergraph& h, int size) {
  std::vector<std::size_t> deg(h.n() + 1, 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) ++deg[v];
  }
  std::vector<Vertex> order(h.n());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  VertexSet out(order.begin(), order.begin() + size);
  std::sort(out.begin(), out.end());
  return out;
}

struct Best {
  std::uint64_t present = 0;
  std::size_t index = std::numeric_limits<std::size_t>::max();
};

Best better(const Best& a, const Best& b) {
  if (a.index == std::numeric_limits<std::size_t>::max()) return b;
  if (b.index == std::numeric_limits<std::size_t>::max()) return a;
  if (a.present != b.present) return a.present > b.present ? a : b;
  return a.index < b.index ? a : b;
}

std::uint64_t exhaustive_part(const Hypergraph& h, CloseTarget target, int size, Execution exec) {
  std::vector<std::uint64_t> candidates;
  if (size == 0) {
    candidates.push_back(0);
  } else {
    for (std::uint64_t set = (std::uint64_t{1} << size) - 1; set != 0;
         set = next_same_popcount(set, h.n())) {
      candidates.push_back(set);
    }
  }
  const std::size_t count = candidates.size();
  Best best;
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) best = better(best, {present(h, target, candidates[i]), i});
  } else {
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(static) nowait
      for (std::size_t i = 0; i < count; ++i) {
        local = better(local, {present(h, target, candidates[i]), i});
      }
#pragma omp critical
      best = better(best, local);
    }
  }
  return candidates[best.index];
}

ClosenessReport closeness(const Hypergraph& h, CloseTarget target, int s, int size,
                          SearchMode mode, Execution exec) {
  if (mode == SearchMode::exhaustive && h.n() > kExhaustiveClosenessLimit) {
    throw Error("exhaustive closeness search is limited to n <= 16");
  }
  ClosenessReport r;
  r.target = target;
  r.search = mode;
  r.s = s;
  r.exhaustive = mode == SearchMode::exhaustive;
  std::uint64_t part = 0;
  if (mode == SearchMode::exhaustive) {
    part = exhaustive_part(h, target, size, exec);
    r.part = from_mask(part);
  } else {
    r.part = top_degree(h, size);
    if (h.n() > 64) throw Error("closeness supports n <= 64");
    part = to_mask(r.part);
  }
  r.missing_edges = target_size(h, target, size) - present(h, target, part);
  r.epsilon_effective =
      static_cast<double>(r.missing_edges) / std::pow(static_cast<double>(h.n()), h.k());
  return r;
}

}  // namespace

ClosenessReport closeness_to_cover(const Hypergraph& h, int s, SearchMode mode, Execution exec) {
  if (s < 1 || s > h.n()) throw Error("closeness to cover needs 1 <= s <= n");
  return closeness(h, CloseTarget::cover, s, s, mode, exec);
}

ClosenessReport closeness_to_clique(const Hypergraph& h, int s, SearchMode mode, Execution exec) {
  const int size = h.k() * (s + 1) - 1;
  if (s < 0 || size > h.n()) throw Error("closeness to clique needs k(s+1) - 1 <= n");
  return closeness(h, CloseTarget::clique, s, size, mode, exec);
}

GoodnessReport theta_classify(const Hypergraph& h, const Hypergraph& target, double theta) {
  if (h.n() != target.n() || h.k() != target.k()) throw Error("theta_classify needs matching n and k");
  if (theta < 0) throw Error("theta must be nonnegative");
  GoodnessReport r;
  r.theta = theta;
  r.threshold = theta * std::pow(static_cast<double>(h.n()), h.k() - 1);
  r.deficiency.assign(h.n(), 0);
  for (const Edge& e : target.edges()) {
    if (h.contains(e)) continue;
    for (Vertex v : e) ++r.deficiency[v - 1];
  }
  for (Vertex v = 1; v <= h.n(); ++v) {
    (static_cast<double>(r.deficiency[v - 1]) <= r.threshold ? r.good : r.bad).push_back(v);
  }
  return r;
}

double crossover_f(double x) {
  if (!(x >= 0 && x <= 1.0 / 3)) throw Error("crossover_f is defined on [0, 1/3]");
  const double y = 1 - x;
  return (1 - y * y * y) / 6 - 4.5 * x * x * x;
}

double crossover_fprime(double x) {
  if (!(x >= 0 && x <= 1.0 / 3)) throw Error("crossover_fprime is defined on [0, 1/3]");
  return (1 - 2 * x - 26 * x * x) / 2;
}

double crossover_root_bisection(double tol) {
  // f > 0 at 1/10 and f < 0 at 1/3; f' changes sign once in between.
  double lo = 0.1, hi = 1.0 / 3;
  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2;
    (crossover_f(mid) > 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double crossover_root_closed_form() { return (-3 + std::sqrt(321.0)) / 52; }

BoundTable bound_table(int n, int s_lo, int s_hi) {
  if (s_lo < 1 || s_lo > s_hi || 3 * s_hi + 2 > n) {
    throw Error("bound table needs 1 <= s_lo <= s_hi and 3 s_hi + 2 <= n");
  }
  BoundTable t;
  t.n = n;
  for (int s = s_lo; s <= s_hi; ++s) {
    const BoundReport b = bound_report(n, 3, s);
    BoundRow row;
    row.s = s;
    row.cover = b.cover_bound;
    row.clique = b.clique_bound;
    row.hm = b.hm_bound;
    row.winner = b.hm_bound > b.clique_bound ? "hm" : b.hm_bound < b.clique_bound ? "clique" : "tie";
    row.f_value = crossover_f(static_cast<double>(s) / n);
    if (!t.clique_overtakes_at && b.clique_bound > b.hm_bound) t.clique_overtakes_at = s;
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace hypermatch

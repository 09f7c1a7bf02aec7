#include <algorithm>
#include <bit>
#include <climits>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/optimize.hpp"

namespace hypermatch {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::limit_reached: return "limit_reached";
    case SolveStatus::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

bool is_matching(const Hypergraph& h, const Matching& m) {
  std::vector<char> used(h.n() + 1, 0);
  for (const Edge& e : m.edges) {
    if (!h.contains(e)) return false;
    for (Vertex v : e) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

bool is_vertex_cover(const Hypergraph& h, std::span<const Vertex> cover) {
  std::vector<char> in(h.n() + 1, 0);
  for (Vertex v : cover) {
    if (v < 1 || v > h.n()) return false;
    in[v] = 1;
  }
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    return std::any_of(e.begin(), e.end(), [&](Vertex v) { return in[v] != 0; });
  });
}

bool is_independent(const Hypergraph& h, std::span<const Vertex> set) {
  std::vector<char> in(h.n() + 1, 0);
  for (Vertex v : set) {
    if (v < 1 || v > h.n()) return false;
    in[v] = 1;
  }
  return std::none_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    return std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v] != 0; });
  });
}

namespace {

using Masks = std::vector<std::uint64_t>;

class SearchControl {
 public:
  explicit SearchControl(const SolveBudget& budget) : max_nodes_(budget.max_nodes) {
    if (budget.time.count() > 0) {
      timed_ = true;
      deadline_ = std::chrono::steady_clock::now() + budget.time;
    }
  }

  bool tick() {
    ++nodes_;
    if (max_nodes_ != 0 && nodes_ > max_nodes_) aborted_ = true;
    if (timed_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      aborted_ = true;
    }
    return !aborted_;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool timed_ = false;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

void require_masks(const Hypergraph& h) {
  if (!h.has_masks()) throw Error("exact solvers support n <= 64");
}

// Branch on the lowest vertex still usable: either some edge through it joins
// the matching or the vertex stays unmatched.
class MatchingSearch {
 public:
  MatchingSearch(int k, int limit, SearchControl& control)
      : k_(k), limit_(limit), control_(control) {}

  void run(const Masks& edges) { search(edges); }

  int best() const { return best_; }
  const Masks& best_set() const { return best_set_; }

 private:
  void search(const Masks& avail) {
    if (!control_.tick() || best_ >= limit_) return;
    const int cur = static_cast<int>(current_.size());
    if (cur > best_) {
      best_ = cur;
      best_set_ = current_;
      if (best_ >= limit_) return;
    }
    if (avail.empty()) return;
    std::uint64_t all = 0;
    for (std::uint64_t e : avail) all |= e;
    const int bound =
        std::min(std::popcount(all) / k_, static_cast<int>(avail.size()));
    if (cur + bound <= best_) return;

    const std::uint64_t low = all & (~all + 1);
    Masks next;
    for (std::uint64_t e : avail) {
      if (!(e & low)) continue;
      next.clear();
      for (std::uint64_t f : avail) {
        if (!(f & e)) next.push_back(f);
      }
      current_.push_back(e);
      search(next);
      current_.pop_back();
      if (best_ >= limit_ || control_.aborted()) return;
    }
    next.clear();
    for (std::uint64_t f : avail) {
      if (!(f & low)) next.push_back(f);
    }
    search(next);
  }

  int k_;
  int limit_;
  SearchControl& control_;
  int best_ = 0;
  Masks current_;
  Masks best_set_;
};

class ExhaustiveMatching {
 public:
  ExhaustiveMatching(const Masks& edges, int limit, SearchControl& control)
      : edges_(edges), limit_(limit), control_(control) {}

  void run() { dfs(0, 0); }
  int best() const { return best_; }
  const Masks& best_set() const { return best_set_; }

 private:
  void dfs(std::size_t i, std::uint64_t used) {
    if (!control_.tick() || best_ >= limit_) return;
    if (static_cast<int>(current_.size()) > best_) {
      best_ = static_cast<int>(current_.size());
      best_set_ = current_;
    }
    if (i == edges_.size()) return;
    if (!(edges_[i] & used)) {
      current_.push_back(edges_[i]);
      dfs(i + 1, used | edges_[i]);
      current_.pop_back();
    }
    dfs(i + 1, used);
  }

  const Masks& edges_;
  int limit_;
  SearchControl& control_;
  int best_ = 0;
  Masks current_;
  Masks best_set_;
};

int disjoint_packing(const Masks& edges) {
  std::uint64_t used = 0;
  int count = 0;
  for (std::uint64_t e : edges) {
    if (!(e & used)) {
      used |= e;
      ++count;
    }
  }
  return count;
}

std::uint64_t greedy_cover(const Masks& edges, int n) {
  Masks left = edges;
  std::uint64_t cover = 0;
  while (!left.empty()) {
    int best_v = 0, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      int deg = 0;
      for (std::uint64_t e : left) deg += (e & bit) != 0;
      if (deg > best_deg) {
        best_deg = deg;
        best_v = v;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << best_v;
    cover |= bit;
    std::erase_if(left, [&](std::uint64_t e) { return (e & bit) != 0; });
  }
  return cover;
}

// Hitting-set branch and bound. Each branch takes one vertex of the tightest
// remaining edge and forbids the vertices tried before it; a greedy packing of
// disjoint remaining edges is the lower bound.
class CoverSearch {
 public:
  CoverSearch(int initial_best, SearchControl& control)
      : best_(initial_best), control_(control) {}

  void seed_witness(std::uint64_t cover) {
    best_mask_ = cover;
    have_witness_ = true;
  }

  void run(const Masks& edges) { search(edges, 0, 0); }

  int best() const { return best_; }
  bool have_witness() const { return have_witness_; }
  std::uint64_t best_mask() const { return best_mask_; }

 private:
  void search(const Masks& edges, std::uint64_t chosen, int count) {
    if (!control_.tick()) return;
    if (edges.empty()) {
      if (count < best_) {
        best_ = count;
        best_mask_ = chosen;
        have_witness_ = true;
      }
      return;
    }
    if (count + disjoint_packing(edges) >= best_) return;

    std::uint64_t pick = edges.front();
    for (std::uint64_t e : edges) {
      if (std::popcount(e) < std::popcount(pick)) pick = e;
    }
    std::uint64_t excluded = 0;
    Masks next;
    for (std::uint64_t rest = pick; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      next.clear();
      bool feasible = true;
      for (std::uint64_t e : edges) {
        if (e & bit) continue;
        const std::uint64_t reduced = e & ~excluded;
        if (reduced == 0) {
          feasible = false;
          break;
        }
        next.push_back(reduced);
      }
      if (feasible) search(next, chosen | bit, count + 1);
      if (control_.aborted()) return;
      excluded |= bit;
    }
  }

  int best_;
  SearchControl& control_;
  std::uint64_t best_mask_ = 0;
  bool have_witness_ = false;
};

EdgeSet to_edges(const Masks& masks) {
  EdgeSet out;
  for (std::uint64_t m : masks) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

ExactResult<VertexCover> exhaustive_cover(const Hypergraph& h, int limit,
                                          SearchControl& control) {
  const auto masks = h.masks();
  const auto covers = [&](std::uint64_t set) {
    return std::all_of(masks.begin(), masks.end(),
                       [&](std::uint64_t e) { return (e & set) != 0; });
  };
  ExactResult<VertexCover> out;
  for (int size = 0; size <= h.n(); ++size) {
    if (size >= limit) {
      out.value = limit;
      out.status = SolveStatus::limit_reached;
      return out;
    }
    if (size == 0) {
      if (covers(0)) return out;
      continue;
    }
    for (std::uint64_t set = (size == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
         set != 0; set = next_same_popcount(set, h.n())) {
      if (!control.tick()) {
        out.value = size;  // every smaller size was ruled out
        out.status = SolveStatus::budget_exceeded;
        return out;
      }
      if (covers(set)) {
        out.value = size;
        out.witness.vertices = from_mask(set);
        return out;
      }
      if (size == 64) break;
    }
  }
  return out;
}

}  // namespace

ExactResult<Matching> nu_exact(const Hypergraph& h, const ExactOptions& options) {
  require_masks(h);
  SearchControl control(options.budget);
  const int limit = options.limit.value_or(INT_MAX);
  const Masks edges(h.masks().begin(), h.masks().end());
  ExactResult<Matching> out;
  if (options.exhaustive) {
    ExhaustiveMatching search(edges, limit, control);
    search.run();
    out.value = search.best();
    out.witness.edges = to_edges(search.best_set());
  } else {
    MatchingSearch search(h.k(), limit, control);
    search.run(edges);
    out.value = search.best();
    out.witness.edges = to_edges(search.best_set());
  }
  out.nodes = control.nodes();
  if (control.aborted()) {
    out.status = SolveStatus::budget_exceeded;
  } else if (out.value >= limit) {
    out.status = SolveStatus::limit_reached;
  }
  return out;
}

ExactResult<VertexCover> tau_exact(const Hypergraph& h, const ExactOptions& options) {
  require_masks(h);
  SearchControl control(options.budget);
  const int limit = options.limit.value_or(INT_MAX);
  if (options.exhaustive) {
    auto out = exhaustive_cover(h, limit, control);
    out.nodes = control.nodes();
    return out;
  }
  const Masks edges(h.masks().begin(), h.masks().end());
  const std::uint64_t greedy = greedy_cover(edges, h.n());
  const int greedy_size = std::popcount(greedy);
  CoverSearch search(std::min(greedy_size, limit), control);
  if (greedy_size < limit) search.seed_witness(greedy);
  search.run(edges);

  ExactResult<VertexCover> out;
  out.nodes = control.nodes();
  if (search.have_witness()) {
    out.value = search.best();
    out.witness.vertices = from_mask(search.best_mask());
  } else {
    out.value = limit;
    out.status = SolveStatus::limit_reached;
  }
  if (control.aborted()) out.status = SolveStatus::budget_exceeded;
  return out;
}

ExactResult<VertexSet> alpha_exact(const Hypergraph& h, const ExactOptions& options) {
  require_masks(h);
  ExactResult<VertexSet> out;
  const std::uint64_t everything =
      h.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.n()) - 1;
  if (options.exhaustive) {
    SearchControl control(options.budget);
    const auto masks = h.masks();
    const auto independent = [&](std::uint64_t set) {
      return std::none_of(masks.begin(), masks.end(),
                          [&](std::uint64_t e) { return (e & set) == e; });
    };
    for (int size = h.n(); size >= 0; --size) {
      if (size == 0) break;  // the empty set is always independent
      for (std::uint64_t set = (size == 64) ? everything : ((std::uint64_t{1} << size) - 1);
           set != 0; set = next_same_popcount(set, h.n())) {
        if (!control.tick()) {
          out.value = size;  // every larger size was ruled out
          out.status = SolveStatus::budget_exceeded;
          out.nodes = control.nodes();
          return out;
        }
        if (independent(set)) {
          out.value = size;
          out.witness = from_mask(set);
          out.nodes = control.nodes();
          return out;
        }
        if (size == 64) break;
      }
    }
    out.nodes = control.nodes();
    return out;
  }
  ExactOptions cover_options = options;
  cover_options.limit.reset();
  const auto cover = tau_exact(h, cover_options);
  out.value = h.n() - cover.value;
  out.witness = from_mask(everything & ~to_mask(cover.witness.vertices));
  out.status = cover.status;
  out.nodes = cover.nodes;
  return out;
}

namespace kernels {

int max_matching(std::span<const std::uint64_t> edges, int limit) {
  if (edges.empty() || limit <= 0) return 0;
  SearchControl control(SolveBudget{});
  MatchingSearch search(std::popcount(edges.front()), limit, control);
  search.run(Masks(edges.begin(), edges.end()));
  return std::min(search.best(), limit);
}

int min_cover(std::span<const std::uint64_t> edges, int limit) {
  if (edges.empty()) return 0;
  std::uint64_t all = 0;
  for (std::uint64_t e : edges) all |= e;
  const Masks masks(edges.begin(), edges.end());
  const std::uint64_t greedy = greedy_cover(masks, 64 - std::countl_zero(all));
  const int greedy_size = std::popcount(greedy);
  SearchControl control(SolveBudget{});
  CoverSearch search(std::min(greedy_size, limit), control);
  if (greedy_size < limit) search.seed_witness(greedy);
  search.run(masks);
  return search.have_witness() ? search.best() : limit;
}

}  // namespace kernels

}  // namespace hypermatch

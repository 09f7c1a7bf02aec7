#include <algorithm>
#include <numeric>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/optimize.hpp"

namespace hypermatch {

Matching greedy_rainbow_matching(const Hypergraph& h, std::span<const Vertex> s, bool exact) {
  std::vector<char> in_s(h.n() + 1, 0);
  for (Vertex v : s) {
    if (v < 1 || v > h.n()) throw Error("rainbow set member out of range");
    in_s[v] = 1;
  }
  const auto meets_once = [&](const Edge& e) {
    return std::count_if(e.begin(), e.end(), [&](Vertex v) { return in_s[v] != 0; }) == 1;
  };

  if (exact) {
    std::vector<Edge> eligible;
    for (const Edge& e : h.edges()) {
      if (meets_once(e)) eligible.push_back(e);
    }
    const auto sub = Hypergraph::build(h.n(), h.k(), std::move(eligible));
    return nu_exact(sub).witness;
  }

  std::vector<Vertex> order(s.begin(), s.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<char> used(h.n() + 1, 0);
  Matching m;
  for (Vertex x : order) {
    if (used[x]) continue;
    for (const Edge& e : h.edges()) {
      if (!std::binary_search(e.begin(), e.end(), x) || !meets_once(e)) continue;
      if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; })) continue;
      for (Vertex v : e) used[v] = 1;
      m.edges.push_back(e);
      break;
    }
  }
  return m;
}

ThresholdCoverGraph threshold_cover_graph(const Hypergraph& h, const FractionalAssignment& omega) {
  if (!is_fractional_cover(h, omega)) throw Error("omega is not a fractional cover of H");
  const bool exact = !omega.exact_weights.empty();
  const int n = h.n();

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (exact) return omega.exact_weights[a - 1] > omega.exact_weights[b - 1];
    return omega.weights[a - 1] > omega.weights[b - 1];
  });
  std::vector<Vertex> new_label(n);
  for (int i = 0; i < n; ++i) new_label[order[i] - 1] = i + 1;

  FractionalAssignment w;
  w.kind = FractionalAssignment::Kind::cover;
  w.mode = omega.mode;
  w.weights.resize(n);
  if (exact) w.exact_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    w.weights[i] = omega.weights[order[i] - 1];
    if (exact) w.exact_weights[i] = omega.exact_weights[order[i] - 1];
  }
  w.value = omega.value;
  w.exact_value = omega.exact_value;

  std::vector<Edge> edges;
  for_each_k_subset(n, h.k(), [&](const Edge& e) {
    if (exact) {
      mpq_class sum = 0;
      for (Vertex v : e) sum += w.exact_weights[v - 1];
      if (sum >= 1) edges.push_back(e);
    } else {
      double sum = 0;
      for (Vertex v : e) sum += w.weights[v - 1];
      if (sum >= 1 - kFloatTolerance) edges.push_back(e);
    }
  });

  return ThresholdCoverGraph{Hypergraph::build(n, h.k(), std::move(edges)), relabel(h, new_label),
                             std::move(order), std::move(w)};
}

}  // namespace hypermatch

#include "hypermatch/constructions.hpp"

#include <algorithm>
#include <string>

#include "hypermatch/combinatorics.hpp"

namespace hypermatch {

namespace {

template <class Pred>
Hypergraph filter_k_sets(int n, int k, Pred&& keep) {
  std::vector<Edge> edges;
  for_each_k_subset(n, k, [&](const Edge& e) {
    if (keep(e)) edges.push_back(e);
  });
  return Hypergraph::build(n, k, std::move(edges));
}

Hypergraph apply_relabel(Hypergraph h, std::span<const Vertex> new_label) {
  if (new_label.empty()) return h;
  return relabel(h, new_label);
}

std::vector<char> indicator(int n, const VertexSet& set) {
  std::vector<char> in(n + 1, 0);
  for (Vertex v : set) {
    if (v < 1 || v > n) throw Error("vertex set member out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

Hypergraph cover_family(int n, int k, int s, const VertexSet& w) {
  if (static_cast<int>(w.size()) != s) throw Error("cover family needs |W| = s");
  const auto in_w = indicator(n, w);
  return filter_k_sets(n, k, [&](const Edge& e) {
    return std::any_of(e.begin(), e.end(), [&](Vertex v) { return in_w[v] != 0; });
  });
}

Hypergraph clique_family(int n, int k, int s, const VertexSet& u) {
  if (static_cast<int>(u.size()) != k * (s + 1) - 1) {
    throw Error("clique family needs |U| = k(s+1) - 1");
  }
  if (static_cast<int>(u.size()) > n) throw Error("clique family needs k(s+1) - 1 <= n");
  const auto in_u = indicator(n, u);
  return filter_k_sets(n, k, [&](const Edge& e) {
    return std::all_of(e.begin(), e.end(), [&](Vertex v) { return in_u[v] != 0; });
  });
}

Hypergraph hm_family(int n, int k, int s, std::span<const Vertex> relabel) {
  if (s < 1) throw Error("HM family needs s >= 1");
  if (n < s + k) throw Error("HM family needs n >= s + k");
  const auto in_special = [&](Vertex v) { return v > s && v <= s + k; };
  Hypergraph h = filter_k_sets(n, k, [&](const Edge& e) {
    if (e.front() <= s - 1) return true;  // meets [s-1]
    const bool is_special =
        std::all_of(e.begin(), e.end(), in_special);  // e == S since |e| = |S|
    if (is_special) return true;
    const bool has_s = std::binary_search(e.begin(), e.end(), s);
    return has_s && std::any_of(e.begin(), e.end(), in_special);
  });
  return apply_relabel(std::move(h), relabel);
}

Hypergraph a_family(int n, int k, int s, int i, std::span<const Vertex> relabel) {
  if (i < 2 || i > k) throw Error("A family needs 2 <= i <= k");
  if (s < 0) throw Error("A family needs s >= 0");
  const int core = (s + 1) * i - 1;
  if (core > n) throw Error("A family needs (s+1)i - 1 <= n");
  Hypergraph h = filter_k_sets(n, k, [&](const Edge& e) {
    return std::count_if(e.begin(), e.end(), [&](Vertex v) { return v <= core; }) >= i;
  });
  return apply_relabel(std::move(h), relabel);
}

Hypergraph augment_universal(const Hypergraph& h, int r) {
  if (r < 0) throw Error("augmentation needs r >= 0");
  const int n = h.n();
  std::vector<Edge> edges = h.edges();
  for_each_k_subset(n + r, h.k(), [&](const Edge& e) {
    if (e.back() > n) edges.push_back(e);
  });
  return Hypergraph::build(n + r, h.k(), std::move(edges));
}

mpz_class cover_count(int n, int k, int s) { return binomial(n, k) - binomial(n - s, k); }

mpz_class clique_count(int k, int s) { return binomial(k * s + k - 1, k); }

mpz_class hm_count(int n, int k, int s) {
  return binomial(n, k) - binomial(n - s, k) - binomial(n - s - k, k - 1) + 1;
}

mpz_class a_count(int n, int k, int s, int i) {
  const int core = (s + 1) * i - 1;
  mpz_class total = 0;
  for (int j = i; j <= k; ++j) total += binomial(core, j) * binomial(n - core, k - j);
  return total;
}

BoundReport bound_report(int n, int k, int s) {
  if (k < 2) throw Error("bound report needs k >= 2");
  if (s < 1) throw Error("bound report needs s >= 1");
  if (n < k * s + k - 1) {
    throw Error("bound report needs n >= ks + k - 1 (n=" + std::to_string(n) + ")");
  }
  BoundReport r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.cover_bound = cover_count(n, k, s);
  r.clique_bound = clique_count(k, s);
  r.hm_bound = hm_count(n, k, s);
  r.max_nontrivial = std::max(r.hm_bound, r.clique_bound);
  for (int i = 2; i <= k - 1; ++i) {
    r.a_bounds.push_back(a_count(n, k, s, i));
    r.max_nontrivial = std::max(r.max_nontrivial, r.a_bounds.back());
  }
  return r;
}

}  // namespace hypermatch

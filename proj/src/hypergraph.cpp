#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "hypermatch/combinatorics.hpp"

namespace hypermatch {

std::uint64_t to_mask(std::span<const Vertex> vertices) {
  std::uint64_t mask = 0;
  for (Vertex v : vertices) mask |= vertex_bit(v);
  return mask;
}

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

VertexSet make_vertex_set(std::vector<Vertex> members, int n) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && (members.front() < 1 || members.back() > n)) {
    throw Error("vertex out of range [1, " + std::to_string(n) + "]");
  }
  return members;
}

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) {
  if (k < 2) throw Error("uniformity k must be at least 2");
  if (k > n) throw Error("uniformity k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
}

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges, bool)
    : Hypergraph(n, k) {
  edges_ = std::move(edges);
  if (has_masks()) {
    masks_.reserve(edges_.size());
    for (const Edge& e : edges_) masks_.push_back(to_mask(e));
  }
}

Hypergraph Hypergraph::build(int n, int k, std::vector<Edge> edges) {
  Hypergraph shape(n, k);  // validates n, k
  for (Edge& e : edges) {
    if (static_cast<int>(e.size()) != k) {
      throw Error("edge has " + std::to_string(e.size()) + " vertices, expected " +
                  std::to_string(k));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error("edge repeats a vertex");
    }
    if (e.front() < 1 || e.back() > n) {
      throw Error("edge vertex out of range [1, " + std::to_string(n) + "]");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph(n, k, std::move(edges), true);
}

std::ptrdiff_t Hypergraph::find(std::span<const Vertex> e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(),
                                                                   b.begin(), b.end());
                             });
  if (it == edges_.end() || !std::equal(it->begin(), it->end(), e.begin(), e.end())) {
    return -1;
  }
  return it - edges_.begin();
}

namespace {

void check_vertex(const Hypergraph& h, Vertex v) {
  if (v < 1 || v > h.n()) {
    throw Error("vertex " + std::to_string(v) + " out of range [1, " + std::to_string(h.n()) + "]");
  }
}

std::vector<char> membership(const Hypergraph& h, std::span<const Vertex> s) {
  std::vector<char> in(h.n() + 1, 0);
  for (Vertex v : s) {
    check_vertex(h, v);
    in[v] = 1;
  }
  return in;
}

Relabeled keep_vertices(const Hypergraph& h, const std::vector<char>& keep) {
  std::vector<Vertex> new_label(h.n() + 1, 0);
  std::vector<Vertex> original;
  for (Vertex v = 1; v <= h.n(); ++v) {
    if (keep[v]) {
      original.push_back(v);
      new_label[v] = static_cast<Vertex>(original.size());
    }
  }
  const int n = static_cast<int>(original.size());
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return keep[v] != 0; })) {
      Edge mapped;
      mapped.reserve(e.size());
      for (Vertex v : e) mapped.push_back(new_label[v]);
      edges.push_back(std::move(mapped));
    }
  }
  if (n < h.k()) throw Error("fewer than k vertices remain after relabeling");
  return {Hypergraph::build(n, h.k(), std::move(edges)), std::move(original)};
}

}  // namespace

std::size_t degree(const Hypergraph& h, Vertex v) {
  check_vertex(h, v);
  std::size_t count = 0;
  for (const Edge& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) ++count;
  }
  return count;
}

std::size_t set_degree(const Hypergraph& h, std::span<const Vertex> t) {
  if (static_cast<int>(t.size()) > h.k()) throw Error("set larger than k has no degree");
  for (Vertex v : t) check_vertex(h, v);
  std::size_t count = 0;
  for (const Edge& e : h.edges()) {
    if (std::all_of(t.begin(), t.end(),
                    [&](Vertex v) { return std::binary_search(e.begin(), e.end(), v); })) {
      ++count;
    }
  }
  return count;
}

std::size_t max_l_degree(const Hypergraph& h, int l) {
  if (l < 1 || l > h.k()) throw Error("l must lie in [1, k]");
  std::map<Edge, std::size_t> counts;
  std::size_t best = 0;
  for (const Edge& e : h.edges()) {
    for_each_k_subset(h.k(), l, [&](const Edge& positions) {
      Edge t;
      t.reserve(l);
      for (int p : positions) t.push_back(e[p - 1]);
      best = std::max(best, ++counts[t]);
    });
  }
  return best;
}

Relabeled induced(const Hypergraph& h, std::span<const Vertex> s) {
  return keep_vertices(h, membership(h, s));
}

Relabeled delete_vertices(const Hypergraph& h, std::span<const Vertex> s) {
  std::vector<char> keep = membership(h, s);
  for (Vertex v = 1; v <= h.n(); ++v) keep[v] = !keep[v];
  return keep_vertices(h, keep);
}

EdgeDeletion delete_edges(const Hypergraph& h, std::span<const Edge> edges) {
  std::vector<char> drop(h.edge_count(), 0);
  std::size_t ignored = 0;
  for (Edge e : edges) {
    std::sort(e.begin(), e.end());
    const std::ptrdiff_t index = h.find(e);
    if (index < 0) {
      ++ignored;
    } else {
      drop[index] = 1;
    }
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (!drop[i]) kept.push_back(h.edge(i));
  }
  return {Hypergraph::build(h.n(), h.k(), std::move(kept)), ignored};
}

Hypergraph complete_hypergraph(int n, int k) {
  return Hypergraph::build(n, k, all_k_subsets(n, k));
}

Hypergraph random_hypergraph(int n, int k, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for_each_k_subset(n, k, [&](const Edge& e) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) edges.push_back(e);
  });
  return Hypergraph::build(n, k, std::move(edges));
}

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_label) {
  if (static_cast<int>(new_label.size()) != h.n()) throw Error("relabeling must cover [n]");
  std::vector<char> seen(h.n() + 1, 0);
  for (Vertex v : new_label) {
    if (v < 1 || v > h.n() || seen[v]) throw Error("relabeling is not a permutation of [n]");
    seen[v] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(new_label[v - 1]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::build(h.n(), h.k(), std::move(edges));
}

bool is_subgraph(const Hypergraph& sub, const Hypergraph& super) {
  if (sub.n() != super.n() || sub.k() != super.k()) return false;
  return std::includes(super.edges().begin(), super.edges().end(), sub.edges().begin(),
                       sub.edges().end());
}

}  // namespace hypermatch

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypermatch {

// Vertices are 1-based, matching [n] = {1, ..., n}.
using Vertex = int;

// A k-set of vertices in strictly ascending order.
using Edge = std::vector<Vertex>;

// Ascending, duplicate-free subset of [n].
using VertexSet = std::vector<Vertex>;

using EdgeSet = std::vector<Edge>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Largest n for which the word-per-edge bitmask representation is kept.
inline constexpr int kMaskVertexLimit = 64;

inline std::uint64_t vertex_bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

std::uint64_t to_mask(std::span<const Vertex> vertices);
VertexSet from_mask(std::uint64_t mask);

// Sorts, dedups and range-checks a vertex list against [n].
VertexSet make_vertex_set(std::vector<Vertex> members, int n);

// Immutable k-uniform hypergraph on [n]. Edges are kept in lexicographic
// order of their ascending tuples, so iteration and output are deterministic.
class Hypergraph {
 public:
  Hypergraph(int n, int k);

  // Validates every edge (k distinct vertices in [n]); duplicates are dropped
  // and vertex order inside an edge does not matter.
  static Hypergraph build(int n, int k, std::vector<Edge> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  // Index of `e` in edges(), or -1. `e` must be ascending.
  std::ptrdiff_t find(std::span<const Vertex> e) const;
  bool contains(std::span<const Vertex> e) const { return find(e) >= 0; }

  bool has_masks() const { return n_ <= kMaskVertexLimit; }
  // One vertex bitmask per edge, parallel to edges(). Empty when n > 64.
  std::span<const std::uint64_t> masks() const { return masks_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  Hypergraph(int n, int k, std::vector<Edge> sorted_unique_edges, bool);

  int n_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> masks_;
};

// Result of an operation that relabels the surviving vertices to [n'] in
// ascending order. original[i] is the old label of new vertex i + 1.
struct Relabeled {
  Hypergraph graph;
  std::vector<Vertex> original;
};

std::size_t degree(const Hypergraph& h, Vertex v);

// Number of edges containing every vertex of `t`; t = {} gives e(H).
std::size_t set_degree(const Hypergraph& h, std::span<const Vertex> t);

// Maximum set_degree over all l-subsets of [n].
std::size_t max_l_degree(const Hypergraph& h, int l);

// H[S], relabeled to [|S|].
Relabeled induced(const Hypergraph& h, std::span<const Vertex> s);

// H - S: drop S and every edge meeting it, relabel the rest to [n - |S|].
Relabeled delete_vertices(const Hypergraph& h, std::span<const Vertex> s);

struct EdgeDeletion {
  Hypergraph graph;
  std::size_t ignored = 0;  // listed edges that were not in H
};

EdgeDeletion delete_edges(const Hypergraph& h, std::span<const Edge> edges);

Hypergraph complete_hypergraph(int n, int k);

// Every k-set independently with probability p; deterministic in `seed`.
Hypergraph random_hypergraph(int n, int k, double p, std::uint64_t seed);

// Relabels vertex v to new_label[v - 1]; new_label must be a permutation of [n].
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_label);

bool is_subgraph(const Hypergraph& sub, const Hypergraph& super);

}  // namespace hypermatch

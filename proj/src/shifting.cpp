#include "hypermatch/shifting.hpp"

#include <algorithm>

namespace hypermatch {

namespace {

void check_pair(const Hypergraph& h, Vertex i, Vertex j) {
  if (!(1 <= i && i < j && j <= h.n())) throw Error("shift needs 1 <= i < j <= n");
}

// e with j replaced by i, kept ascending. Assumes j in e and i not in e.
Edge replaced(const Edge& e, Vertex i, Vertex j) {
  Edge out;
  out.reserve(e.size());
  for (Vertex v : e) {
    if (v != j) out.push_back(v);
  }
  out.insert(std::upper_bound(out.begin(), out.end(), i), i);
  return out;
}

bool movable(const Edge& e, Vertex i, Vertex j) {
  return std::binary_search(e.begin(), e.end(), j) && !std::binary_search(e.begin(), e.end(), i);
}

}  // namespace

Edge shift_edge(const Hypergraph& h, Vertex i, Vertex j, const Edge& e) {
  check_pair(h, i, j);
  if (!h.contains(e)) throw Error("shift_edge: edge not in H");
  if (!movable(e, i, j)) return e;
  Edge image = replaced(e, i, j);
  return h.contains(image) ? e : image;
}

Hypergraph shift_graph(const Hypergraph& h, Vertex i, Vertex j) {
  check_pair(h, i, j);
  std::vector<Edge> images;
  images.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    if (!movable(e, i, j)) {
      images.push_back(e);
      continue;
    }
    Edge image = replaced(e, i, j);
    images.push_back(h.contains(image) ? e : std::move(image));
  }
  return Hypergraph::build(h.n(), h.k(), std::move(images));
}

std::uint64_t potential(const Hypergraph& h) {
  std::uint64_t total = 0;
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) total += static_cast<std::uint64_t>(v);
  }
  return total;
}

Stabilized stabilize(const Hypergraph& h) {
  Stabilized out{h, {}};
  std::uint64_t phi = potential(h);
  while (true) {
    ++out.trace.rounds;
    std::size_t sweep_moved = 0;
    for (Vertex i = 1; i <= h.n(); ++i) {
      for (Vertex j = i + 1; j <= h.n(); ++j) {
        Hypergraph next = shift_graph(out.graph, i, j);
        std::size_t moved = 0;
        for (const Edge& e : out.graph.edges()) {
          if (!next.contains(e)) ++moved;
        }
        if (moved > 0) {
          phi = potential(next);
          out.graph = std::move(next);
        }
        out.trace.steps.push_back({i, j, moved, phi});
        sweep_moved += moved;
      }
    }
    if (sweep_moved == 0) break;
  }
  return out;
}

bool is_stable(const Hypergraph& h) {
  for (const Edge& e : h.edges()) {
    for (Vertex j : e) {
      for (Vertex i = 1; i < j; ++i) {
        if (!movable(e, i, j)) continue;
        if (!h.contains(replaced(e, i, j))) return false;
      }
    }
  }
  return true;
}

bool downset_check(const Hypergraph& h) {
  Edge lower;
  for (const Edge& e : h.edges()) {
    for (std::size_t p = 0; p < e.size(); ++p) {
      const Vertex floor = p == 0 ? 0 : e[p - 1];
      if (e[p] - 1 <= floor) continue;
      lower = e;
      --lower[p];
      if (!h.contains(lower)) return false;
    }
  }
  return true;
}

Json trace_to_json(const ShiftTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"i", s.i}, {"j", s.j}, {"moved", s.moved}, {"potential", s.potential_after}});
  }
  return Json{{"rounds", trace.rounds}, {"steps", std::move(steps)}};
}

}  // namespace hypermatch

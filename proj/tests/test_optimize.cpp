#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/lp.hpp"
#include "hypermatch/optimize.hpp"
#include "hypermatch/shifting.hpp"

using namespace hypermatch;

namespace {

// Brute force: largest set of pairwise disjoint edges drawn from `edges`.
int brute_matching(const std::vector<std::uint64_t>& edges, std::size_t from, std::uint64_t used) {
  int best = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    if (edges[i] & used) continue;
    best = std::max(best, 1 + brute_matching(edges, i + 1, used | edges[i]));
  }
  return best;
}

int brute_nu(const Hypergraph& h) {
  std::vector<std::uint64_t> masks(h.masks().begin(), h.masks().end());
  return brute_matching(masks, 0, 0);
}

int brute_tau(const Hypergraph& h) {
  const int n = h.n();
  int best = n;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    const int size = __builtin_popcountll(c);
    if (size >= best) continue;
    bool ok = true;
    for (std::uint64_t m : h.masks()) ok &= (m & c) != 0;
    if (ok) best = size;
  }
  return h.empty() ? 0 : best;
}

}  // namespace

TEST_CASE("nu_exact examples") {
  CHECK(nu_exact(complete_hypergraph(8, 3)).value == 2);
  CHECK(nu_exact(hm_family(10, 3, 2)).value == 2);
  const auto cover = cover_family(9, 3, 2, {1, 2});
  const auto r = nu_exact(cover);
  CHECK(r.value == 2);
  CHECK(r.status == SolveStatus::optimal);
  CHECK(is_matching(cover, r.witness));
  CHECK(nu_exact(Hypergraph(6, 3)).value == 0);
}

TEST_CASE("nu_exact limit and budget") {
  const auto k = complete_hypergraph(12, 3);
  ExactOptions o;
  o.limit = 2;
  const auto r = nu_exact(k, o);
  CHECK(r.value == 2);
  CHECK(r.status == SolveStatus::limit_reached);
  CHECK(r.witness.size() == 2);
  o.limit = 9;
  CHECK(nu_exact(k, o).value == 4);
  CHECK(nu_exact(k, o).status == SolveStatus::optimal);

  ExactOptions tiny;
  tiny.budget.max_nodes = 3;
  const auto b = nu_exact(random_hypergraph(14, 3, 0.2, 1), tiny);
  CHECK(b.status == SolveStatus::budget_exceeded);
}

TEST_CASE("tau_exact and alpha_exact examples") {
  CHECK(tau_exact(hm_family(10, 3, 2)).value == 3);
  CHECK(tau_exact(Hypergraph(5, 3)).value == 0);
  const auto a = a_family(10, 3, 2, 2);
  CHECK(tau_exact(a).value == 4);
  CHECK(brute_tau(a) == 4);
  const auto t = tau_exact(hm_family(10, 3, 2));
  CHECK(is_vertex_cover(hm_family(10, 3, 2), t.witness.vertices));

  CHECK(alpha_exact(complete_hypergraph(5, 3)).value == 2);
  const auto cover = cover_family(9, 3, 2, {1, 2});
  const auto ind = alpha_exact(cover);
  CHECK(ind.value == 7);
  CHECK(is_independent(cover, ind.witness));
  CHECK(alpha_exact(Hypergraph(7, 3)).value == 7);
}

TEST_CASE("branch and bound agrees with brute force and the exhaustive path") {
  ExactOptions exh;
  exh.exhaustive = true;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 6 + static_cast<int>(seed % 5);
    const auto h = random_hypergraph(n, 3, 0.25, seed);
    const int nu = nu_exact(h).value;
    const int tau = tau_exact(h).value;
    CHECK(nu == brute_nu(h));
    CHECK(tau == brute_tau(h));
    CHECK(nu_exact(h, exh).value == nu);
    CHECK(tau_exact(h, exh).value == tau);
    CHECK(alpha_exact(h).value == n - tau);
    CHECK(alpha_exact(h, exh).value == n - tau);
    CHECK(is_matching(h, nu_exact(h).witness));
    CHECK(is_vertex_cover(h, tau_exact(h).witness.vertices));

    ExactOptions lim;
    lim.limit = 2;
    CHECK(tau_exact(h, lim).value == std::min(tau, 2));
  }
}

TEST_CASE("maximal witness leaves no disjoint edge") {
  const auto h = random_hypergraph(11, 3, 0.1, 17);
  const auto m = nu_exact(h).witness;
  std::uint64_t used = 0;
  for (const Edge& e : m.edges) used |= to_mask(e);
  for (std::uint64_t e : h.masks()) CHECK((e & used) != 0);
}

TEST_CASE("lp solver basics") {
  // max x + y  s.t. x + 2y <= 4, 3x + y <= 6.
  lp::Problem<mpq_class> p;
  p.num_vars = 2;
  p.objective = {1, 1};
  p.rows.push_back({{{0, 1}, {1, 2}}, lp::Sense::le, 4});
  p.rows.push_back({{{0, 3}, {1, 1}}, lp::Sense::le, 6});
  const auto s = lp::solve(p);
  CHECK(s.status == lp::Status::optimal);
  CHECK(s.objective == mpq_class(14, 5));

  p.rows.push_back({{{0, 1}}, lp::Sense::ge, 5});
  CHECK(lp::solve(p).status == lp::Status::infeasible);

  lp::Problem<double> u;
  u.num_vars = 1;
  u.objective = {1};
  u.rows.push_back({{{0, 1}}, lp::Sense::ge, 1});
  CHECK(lp::solve(u).status == lp::Status::unbounded);
}

TEST_CASE("nu_frac and tau_frac examples") {
  const auto k4 = complete_hypergraph(4, 3);
  const auto nf = nu_frac(k4, LpMode::rational);
  CHECK(nf.exact_value == mpq_class(4, 3));
  for (const auto& w : nf.exact_weights) CHECK(w == mpq_class(1, 3));
  const auto tf = tau_frac(k4, LpMode::rational);
  CHECK(tf.exact_value == mpq_class(4, 3));
  for (const auto& w : tf.exact_weights) CHECK(w == mpq_class(1, 3));

  const auto one = Hypergraph::build(5, 3, {{1, 2, 3}});
  CHECK(nu_frac(one).value == doctest::Approx(1));
  CHECK(tau_frac(one).value == doctest::Approx(1));
  CHECK(nu_frac(Hypergraph(5, 3)).value == 0);
  CHECK(tau_frac(Hypergraph(5, 3)).value == 0);
}

TEST_CASE("check_duality") {
  const auto r = check_duality(random_hypergraph(10, 3, 0.3, 4));
  CHECK(r.gap <= 1e-9);
  const auto e = check_duality(Hypergraph(6, 3), LpMode::rational);
  CHECK(*e.exact_nu_star == 0);
  CHECK(*e.exact_tau_star == 0);
  const auto k = check_duality(complete_hypergraph(4, 3), LpMode::rational);
  CHECK(*k.exact_nu_star == mpq_class(4, 3));
}

TEST_CASE("sandwich nu <= nu* = tau* <= tau <= k nu") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto h = random_hypergraph(9, 3, 0.2, seed);
    const int nu = nu_exact(h).value;
    const int tau = tau_exact(h).value;
    const auto d = check_duality(h, LpMode::rational);
    CHECK(mpq_class(nu) <= *d.exact_nu_star);
    CHECK(*d.exact_tau_star <= mpq_class(tau));
    CHECK(tau <= 3 * nu);
  }
}

TEST_CASE("fractional perfect matching") {
  const auto k6 = complete_hypergraph(6, 3);
  const auto f = fractional_perfect_matching(k6, LpMode::rational);
  REQUIRE(f.has_value());
  std::vector<mpq_class> load(7, 0);
  for (std::size_t i = 0; i < k6.edge_count(); ++i) {
    for (Vertex v : k6.edge(i)) load[v] += f->exact_weights[i];
  }
  for (int v = 1; v <= 6; ++v) CHECK(load[v] == 1);

  // Vertex 6 lies in no edge.
  const auto isolated = Hypergraph::build(6, 3, {{1, 2, 3}, {3, 4, 5}});
  CHECK_FALSE(fractional_perfect_matching(isolated).has_value());
  CHECK_FALSE(fractional_perfect_matching(Hypergraph(6, 3)).has_value());
}

TEST_CASE("greedy_rainbow_matching") {
  const auto cover = cover_family(9, 3, 2, {1, 2});
  CHECK(greedy_rainbow_matching(cover, VertexSet{}, false).size() == 0);
  CHECK(greedy_rainbow_matching(cover, VertexSet{}, true).size() == 0);
  CHECK(greedy_rainbow_matching(cover, VertexSet{1, 2}, true).size() == 2);
  const auto one = Hypergraph::build(5, 3, {{1, 2, 3}});
  CHECK(greedy_rainbow_matching(one, VertexSet{1, 2}, false).size() == 0);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = random_hypergraph(9, 3, 0.3, seed);
    const VertexSet s{1, 4, 7};
    const auto g = greedy_rainbow_matching(h, s, false);
    const auto x = greedy_rainbow_matching(h, s, true);
    CHECK(x.size() >= g.size());
    CHECK(is_matching(h, g));
    // Brute-force maximum over edges meeting S exactly once.
    std::vector<std::uint64_t> eligible;
    const std::uint64_t sm = to_mask(s);
    for (std::uint64_t m : h.masks()) {
      if (__builtin_popcountll(m & sm) == 1) eligible.push_back(m);
    }
    CHECK(static_cast<int>(x.size()) == brute_matching(eligible, 0, 0));
  }
}

TEST_CASE("threshold_cover_graph") {
  const auto k4 = complete_hypergraph(4, 3);
  const auto tau = tau_frac(k4, LpMode::rational);
  const auto t = threshold_cover_graph(k4, tau);
  CHECK(t.graph == k4);
  CHECK(nu_frac(t.graph, LpMode::rational).exact_value == mpq_class(4, 3));

  FractionalAssignment ones;
  ones.kind = FractionalAssignment::Kind::cover;
  ones.weights.assign(6, 1.0);
  const auto h = random_hypergraph(6, 3, 0.3, 2);
  CHECK(threshold_cover_graph(h, ones).graph.edge_count() == 20);

  FractionalAssignment zeros;
  zeros.kind = FractionalAssignment::Kind::cover;
  zeros.weights.assign(6, 0.0);
  CHECK(threshold_cover_graph(Hypergraph(6, 3), zeros).graph.empty());
  CHECK_THROWS_AS(threshold_cover_graph(h.empty() ? k4 : h, zeros), Error);

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = random_hypergraph(8, 3, 0.3, seed);
    const auto w = tau_frac(g, LpMode::rational);
    const auto tc = threshold_cover_graph(g, w);
    CHECK(is_subgraph(tc.source, tc.graph));
    CHECK(is_fractional_cover(tc.graph, tc.weights));
    CHECK(nu_frac(tc.graph, LpMode::rational).exact_value == w.exact_value);
    CHECK(is_stable(tc.graph));
  }
}

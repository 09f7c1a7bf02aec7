#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/stability.hpp"

using namespace hypermatch;

namespace {

VertexSet range1(int count) {
  VertexSet v(count);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

// Minimum over every s-subset W of |cover(W) \ H|, by direct enumeration.
std::uint64_t cover_oracle(const Hypergraph& h, int s) {
  std::uint64_t best = UINT64_MAX;
  for_each_k_subset(h.n(), s, [&](const Edge& w) {
    best = std::min(best, distance_to(h, cover_family(h.n(), h.k(), s, w)));
  });
  return best;
}

}  // namespace

TEST_CASE("distance_to") {
  const auto h = random_hypergraph(8, 3, 0.4, 1);
  CHECK(distance_to(h, h) == 0);
  CHECK(distance_to(Hypergraph(8, 3), h) == h.edge_count());
  // Cover edges through vertex 2 that avoid vertex 1 and S = {3,4,5}: C(5,2).
  CHECK(distance_to(hm_family(10, 3, 2), cover_family(10, 3, 2, {1, 2})) == 10);
  CHECK_THROWS_AS(distance_to(Hypergraph(8, 3), Hypergraph(9, 3)), Error);

  // Monotone in both arguments.
  const auto bigger = Hypergraph::build(8, 3, [&] {
    auto e = h.edges();
    e.push_back({1, 2, 8});
    e.push_back({3, 5, 7});
    return e;
  }());
  const auto target = random_hypergraph(8, 3, 0.5, 2);
  CHECK(distance_to(bigger, target) <= distance_to(h, target));
  CHECK(distance_to(h, bigger) >= distance_to(h, h));
}

TEST_CASE("closeness_to_cover") {
  const auto c = cover_family(10, 3, 2, {4, 7});
  const auto r = closeness_to_cover(c, 2, SearchMode::heuristic);
  CHECK(r.missing_edges == 0);
  CHECK(r.part == VertexSet{4, 7});

  const auto hm = hm_family(10, 3, 2);
  const auto heur = closeness_to_cover(hm, 2, SearchMode::heuristic);
  const auto exh = closeness_to_cover(hm, 2, SearchMode::exhaustive);
  CHECK(exh.missing_edges == cover_oracle(hm, 2));
  CHECK(exh.missing_edges == 10);
  CHECK(heur.missing_edges >= exh.missing_edges);
  CHECK(exh.epsilon_effective == doctest::Approx(10.0 / 1000));

  const auto d = clique_family(8, 3, 1, range1(5));
  const auto dh = closeness_to_cover(d, 2, SearchMode::heuristic);
  const auto dx = closeness_to_cover(d, 2, SearchMode::exhaustive);
  CHECK(dx.missing_edges == cover_oracle(d, 2));
  CHECK(dh.missing_edges >= dx.missing_edges);
  CHECK(dx.missing_edges > 20);

  CHECK_THROWS_AS(closeness_to_cover(Hypergraph(17, 3), 2, SearchMode::exhaustive), Error);
  CHECK_THROWS_AS(closeness_to_cover(hm, 0, SearchMode::heuristic), Error);
}

TEST_CASE("closeness_to_clique") {
  const auto d = clique_family(11, 3, 2, {1, 2, 3, 5, 6, 8, 9, 11});
  CHECK(closeness_to_clique(d, 2, SearchMode::heuristic).missing_edges == 0);
  CHECK(closeness_to_clique(d, 2, SearchMode::exhaustive).missing_edges == 0);
  CHECK(closeness_to_clique(Hypergraph(9, 3), 2, SearchMode::heuristic).missing_edges == 56);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = random_hypergraph(8, 3, 0.5, seed);
    const auto heur = closeness_to_clique(h, 1, SearchMode::heuristic);
    const auto par = closeness_to_clique(h, 1, SearchMode::exhaustive, Execution::parallel);
    const auto ser = closeness_to_clique(h, 1, SearchMode::exhaustive, Execution::serial);
    CHECK(heur.missing_edges >= par.missing_edges);
    CHECK(par.missing_edges == ser.missing_edges);
    CHECK(par.part == ser.part);
  }
  CHECK_THROWS_AS(closeness_to_clique(Hypergraph(7, 3), 2, SearchMode::heuristic), Error);
}

TEST_CASE("theta_classify") {
  const auto h = random_hypergraph(9, 3, 0.4, 5);
  const auto same = theta_classify(h, h, 0);
  CHECK(same.good.size() == 9);
  CHECK(same.bad.empty());

  const auto all_bad = theta_classify(Hypergraph(9, 3), complete_hypergraph(9, 3), 0);
  CHECK(all_bad.bad.size() == 9);
  CHECK(all_bad.deficiency[0] == 28);

  // Sub-graph pairs: the deficiency sum is k times the distance, and the bad
  // set obeys the counting bound.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto target = random_hypergraph(9, 3, 0.6, seed);
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < target.edge_count(); ++i) {
      if ((i * 7 + seed) % 3 != 0) kept.push_back(target.edge(i));
    }
    const auto sub = Hypergraph::build(9, 3, kept);
    const double theta = 0.05;
    const auto g = theta_classify(sub, target, theta);
    std::uint64_t sum = 0;
    for (auto d : g.deficiency) sum += d;
    const auto dist = distance_to(sub, target);
    CHECK(sum == 3 * dist);
    CHECK(static_cast<double>(g.bad.size()) <= 3.0 * dist / (theta * 81) + 1e-12);
    CHECK(g.good.size() + g.bad.size() == 9);
  }
}

TEST_CASE("crossover function") {
  CHECK(crossover_f(5.0 / 18) == doctest::Approx(0.00743).epsilon(1e-3));
  CHECK(crossover_f(5.0 / 18) > 0.007);
  CHECK(crossover_f(0) == 0);
  for (double x = 0.05; x <= 0.3001; x += 0.05) {
    const double h = 1e-5;
    const double fd = (crossover_f(x + h) - crossover_f(x - h)) / (2 * h);
    CHECK(std::fabs(fd - crossover_fprime(x)) < 1e-8);
  }
  CHECK_THROWS_AS(crossover_f(0.5), Error);
  CHECK_THROWS_AS(crossover_fprime(-0.1), Error);

  const double root = crossover_root_bisection();
  CHECK(std::fabs(root - 0.2868552) < 1e-7);
  CHECK(std::fabs(root - crossover_root_closed_form()) < 1e-10);
  CHECK(root > 5.0 / 18);
  CHECK(root < 13.0 / 45);
  CHECK(crossover_fprime(root) < 0);
}

TEST_CASE("bound_table") {
  const auto t = bound_table(100, 1, 32);
  REQUIRE(t.clique_overtakes_at.has_value());
  // Integer scan oracle.
  int first = -1;
  for (int s = 1; s <= 32; ++s) {
    const auto b = bound_report(100, 3, s);
    if (b.clique_bound > b.hm_bound) {
      first = s;
      break;
    }
  }
  CHECK(*t.clique_overtakes_at == first);
  const auto full = bound_table(98, 32, 32);
  const auto& last = full.rows.back();
  CHECK(last.clique == binomial(98, 3));
  CHECK(last.clique >= last.hm);
  CHECK(last.clique >= last.cover);

  const auto t6 = bound_table(6, 1, 1);
  CHECK(t6.rows[0].hm == 10);
  CHECK(t6.rows[0].clique == 10);
  CHECK(t6.rows[0].winner == "tie");
  CHECK_THROWS_AS(bound_table(10, 1, 3), Error);
}

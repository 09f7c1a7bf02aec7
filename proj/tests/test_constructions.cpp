#include <doctest.h>

#include <numeric>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/optimize.hpp"

using namespace hypermatch;

namespace {

VertexSet range1(int count) {
  VertexSet v(count);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

// Independent oracle: count k-sets directly against the defining predicate.
template <class Pred>
std::size_t count_k_sets(int n, int k, Pred&& pred) {
  std::size_t c = 0;
  for_each_k_subset(n, k, [&](const Edge& e) { c += pred(e) ? 1 : 0; });
  return c;
}

int meet(const Edge& e, int upto) {
  int c = 0;
  for (Vertex v : e) c += v <= upto;
  return c;
}

}  // namespace

TEST_CASE("cover family") {
  CHECK(cover_family(9, 3, 2, {1, 2}).edge_count() == 49);
  CHECK(cover_family(9, 3, 0, {}).empty());
  CHECK(cover_family(6, 3, 6, range1(6)).edge_count() == 20);
  CHECK_THROWS_AS(cover_family(9, 3, 2, {1}), Error);
  CHECK(cover_count(9, 3, 2) == 49);
}

TEST_CASE("clique family") {
  const auto d = clique_family(10, 3, 2, range1(8));
  CHECK(d.edge_count() == 56);
  CHECK(clique_family(7, 3, 0, {2, 4}).empty());
  CHECK(clique_family(7, 3, 1, {1, 3, 4, 6, 7}).edge_count() == 10);
  CHECK(nu_exact(d).value == 2);
  CHECK_THROWS_AS(clique_family(10, 3, 2, range1(7)), Error);
  CHECK(clique_count(3, 2) == 56);
}

TEST_CASE("hm family") {
  const auto hm = hm_family(10, 3, 2);
  CHECK(hm.edge_count() == 55);
  CHECK(hm_count(10, 3, 2) == 55);
  CHECK(nu_exact(hm).value == 2);
  CHECK(tau_exact(hm).value == 3);
  // s = 1, n = 7, k = 3 by enumeration of the definition.
  const auto hm1 = hm_family(7, 3, 1);
  const std::size_t oracle = count_k_sets(7, 3, [](const Edge& e) {
    const bool is_s = e == Edge{2, 3, 4};
    const bool star = std::binary_search(e.begin(), e.end(), 1) && (meet(e, 4) - 1) >= 1;
    return is_s || star;
  });
  CHECK(hm1.edge_count() == oracle);
  CHECK(hm1.edge_count() == 13);
  CHECK_THROWS_AS(hm_family(4, 3, 2), Error);
}

TEST_CASE("hm family sits inside the cover family") {
  for (int n = 8; n <= 12; ++n) {
    for (int s = 1; 3 * s + 2 <= n; ++s) {
      const auto hm = hm_family(n, 3, s);
      const auto cover = cover_family(n, 3, s, range1(s));
      std::size_t outside = 0;
      for (const Edge& e : hm.edges()) outside += cover.contains(e) ? 0 : 1;
      CHECK(outside == 1);  // the edge S
      CHECK(cover.edge_count() + 1 - hm.edge_count() ==
            binomial_u64(n - s - 3, 2));  // removed star minus S, plus S
    }
  }
}

TEST_CASE("a family") {
  const auto a = a_family(10, 3, 2, 2);
  CHECK(a.edge_count() == 60);
  CHECK(a_count(10, 3, 2, 2) == 60);
  CHECK(nu_exact(a).value == 2);
  // Every edge holds a pair of the core [5], so a cover needs 4 core vertices.
  CHECK(tau_exact(a).value == 4);
  CHECK(tau_exact(a).value >= 3);
  CHECK(a_family(10, 3, 2, 3) == clique_family(10, 3, 2, range1(8)));
  CHECK_THROWS_AS(a_family(10, 3, 2, 1), Error);
  CHECK_THROWS_AS(a_family(6, 3, 2, 3), Error);
}

TEST_CASE("augment_universal") {
  const auto h = random_hypergraph(7, 3, 0.3, 8);
  CHECK(augment_universal(h, 0) == h);
  const auto a = augment_universal(Hypergraph(3, 3), 1);
  CHECK(a.n() == 4);
  CHECK(a.edge_count() == 3);
  const auto h2 = augment_universal(h, 2);
  CHECK(h2.edge_count() == h.edge_count() + 84 - 35);
  CHECK(is_subgraph(Hypergraph::build(9, 3, h.edges()), h2));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_hypergraph(9, 3, 0.08, seed);
    const int nu = nu_exact(g).value;
    for (int r = 1; r <= 3; ++r) {
      const int nu_r = nu_exact(augment_universal(g, r)).value;
      CHECK(nu_r <= nu + r);
    }
  }
}

TEST_CASE("bound_report") {
  const auto r = bound_report(10, 3, 2);
  CHECK(r.cover_bound == 64);
  CHECK(r.clique_bound == 56);
  CHECK(r.hm_bound == 55);
  CHECK(r.a_bounds.size() == 1);
  CHECK(r.a_bounds[0] == 60);
  CHECK(r.max_nontrivial == 60);

  const auto r6 = bound_report(6, 3, 1);
  CHECK(r6.hm_bound == 10);
  CHECK(r6.clique_bound == 10);

  const auto r2 = bound_report(9, 2, 3);
  CHECK(r2.cover_bound == binomial(9, 2) - binomial(6, 2));
  CHECK(r2.clique_bound == binomial(7, 2));
  CHECK(r2.a_bounds.empty());

  CHECK_THROWS_AS(bound_report(7, 3, 2), Error);
  CHECK_THROWS_AS(bound_report(10, 3, 0), Error);
}

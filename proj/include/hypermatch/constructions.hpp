#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// All k-sets meeting W, |W| = s.
Hypergraph cover_family(int n, int k, int s, const VertexSet& w);

// Complete k-graph on U, |U| = k(s+1) - 1, embedded in [n].
Hypergraph clique_family(int n, int k, int s, const VertexSet& u);

// Hilton-Milner type family with nu = s and tau = s + 1:
//   {e : e meets [s-1]} + {S} + {e : s in e, e meets S},  S = {s+1, ..., s+k}.
// `relabel`, when given, maps canonical vertex v to relabel[v - 1].
Hypergraph hm_family(int n, int k, int s, std::span<const Vertex> relabel = {});

// {e : |e & [(s+1)i - 1]| >= i}, 2 <= i <= k.
Hypergraph a_family(int n, int k, int s, int i, std::span<const Vertex> relabel = {});

// Adds r new vertices n+1..n+r and every k-set meeting them.
Hypergraph augment_universal(const Hypergraph& h, int r);

mpz_class cover_count(int n, int k, int s);
mpz_class clique_count(int k, int s);
mpz_class hm_count(int n, int k, int s);
mpz_class a_count(int n, int k, int s, int i);

struct BoundReport {
  int n = 0;
  int k = 0;
  int s = 0;
  mpz_class cover_bound;   // C(n,k) - C(n-s,k)
  mpz_class clique_bound;  // C(ks+k-1, k)
  mpz_class hm_bound;      // C(n,k) - C(n-s,k) - C(n-s-k,k-1) + 1
  std::vector<mpz_class> a_bounds;  // |A^k_i(n,s)| for 2 <= i <= k-1
  mpz_class max_nontrivial;         // max of hm, clique and a_bounds

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport bound_report(int n, int k, int s);

}  // namespace hypermatch

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// Exact binomial coefficient; zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

// Same, for callers that know the value fits (throws otherwise).
std::uint64_t binomial_u64(long n, long k);

// Calls fn(const Edge&) for every k-subset of [n] in lexicographic order.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  Edge subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i + 1;
  while (true) {
    fn(static_cast<const Edge&>(subset));
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

std::vector<Edge> all_k_subsets(int n, int k);

// Next integer with the same popcount (Gosper's hack); 0 once exhausted
// within `bits` bits.
inline std::uint64_t next_same_popcount(std::uint64_t x, int bits) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return 0;
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  if (bits < 64 && (next >> bits) != 0) return 0;
  return next;
}

// SplitMix64 step; used to derive independent child seeds from one seed.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Kernels with an OpenMP path keep a serial reference for testing.
enum class Execution { serial, parallel };

}  // namespace hypermatch

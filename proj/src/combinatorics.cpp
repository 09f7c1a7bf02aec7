#include "hypermatch/combinatorics.hpp"

namespace hypermatch {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::uint64_t binomial_u64(long n, long k) {
  const mpz_class b = binomial(n, k);
  if (!b.fits_ulong_p()) throw Error("binomial coefficient does not fit 64 bits");
  return b.get_ui();
}

std::vector<Edge> all_k_subsets(int n, int k) {
  std::vector<Edge> out;
  for_each_k_subset(n, k, [&](const Edge& e) { out.push_back(e); });
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
  splitmix64(state);
  return splitmix64(state);
}

}  // namespace hypermatch

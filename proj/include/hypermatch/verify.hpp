#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

enum class Constraint { nu_le_s, nu_le_s_and_tau_gt_s };

const char* to_string(Constraint c);
Constraint constraint_from_string(const std::string& name);

inline constexpr int kUnprunedEdgeLimit = 24;

struct VerifyOptions {
  // Branch and bound over edge inclusion instead of the full 2^C(n,k) sweep.
  bool pruned = false;
  Execution exec = Execution::parallel;
  std::size_t witness_cap = 8;
  std::chrono::milliseconds budget{0};  // 0 = unlimited
  std::uint64_t max_nodes = 0;          // pruned path only; 0 = unlimited
};

struct VerifyResult {
  int n = 0;
  int k = 0;
  int s = 0;
  Constraint constraint = Constraint::nu_le_s;
  std::string method;  // "unpruned" or "pruned"
  bool complete = false;
  std::uint64_t searched = 0;  // graphs (unpruned) or search nodes (pruned)
  std::uint64_t max_edges_found = 0;
  std::vector<Hypergraph> extremal_witnesses;  // up to the cap, in subset order
  mpz_class expected;
  bool matches_bound = false;
};

// The bound the search is compared against: for nu <= s the larger of the
// cover and clique counts (C(n,k) when n < k(s+1)); with tau > s added, the
// largest of the HM, clique and A_i counts.
mpz_class expected_bound(int n, int k, int s, Constraint c);

VerifyResult verify_extremal(int n, int k, int s, Constraint c, const VerifyOptions& options = {});

}  // namespace hypermatch

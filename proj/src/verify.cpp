#include "hypermatch/verify.hpp"

#include <algorithm>
#include <bit>

#include "hypermatch/constructions.hpp"
#include "hypermatch/optimize.hpp"

namespace hypermatch {

const char* to_string(Constraint c) {
  return c == Constraint::nu_le_s ? "nu_le_s" : "nu_le_s_and_tau_gt_s";
}

Constraint constraint_from_string(const std::string& name) {
  if (name == "nu_le_s") return Constraint::nu_le_s;
  if (name == "nu_le_s_and_tau_gt_s") return Constraint::nu_le_s_and_tau_gt_s;
  throw Error("unknown constraint: " + name);
}

mpz_class expected_bound(int n, int k, int s, Constraint c) {
  if (c == Constraint::nu_le_s) {
    if (n < k * (s + 1)) return binomial(n, k);
    return std::max(cover_count(n, k, s), clique_count(k, s));
  }
  return bound_report(n, k, s).max_nontrivial;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Partial {
  std::uint64_t best = 0;
  std::vector<std::uint64_t> witnesses;  // subsets of the k-set list
  std::uint64_t searched = 0;
  bool aborted = false;
};

void offer(Partial& p, std::uint64_t subset, std::uint64_t size, std::size_t cap) {
  if (size < p.best) return;
  if (size > p.best) {
    p.best = size;
    p.witnesses.clear();
  }
  if (p.witnesses.size() < cap) p.witnesses.push_back(subset);
}

void merge(Partial& into, Partial&& from, std::size_t cap) {
  into.searched += from.searched;
  into.aborted = into.aborted || from.aborted;
  if (from.best < into.best) return;
  if (from.best > into.best) {
    into.best = from.best;
    into.witnesses.clear();
  }
  into.witnesses.insert(into.witnesses.end(), from.witnesses.begin(), from.witnesses.end());
  std::sort(into.witnesses.begin(), into.witnesses.end());
  if (into.witnesses.size() > cap) into.witnesses.resize(cap);
}

class Checker {
 public:
  Checker(int s, Constraint c) : s_(s), c_(c) {}

  bool nu_ok(std::span<const std::uint64_t> edges) const {
    return kernels::max_matching(edges, s_ + 1) <= s_;
  }

  bool accepts(std::span<const std::uint64_t> edges) const {
    if (!nu_ok(edges)) return false;
    return c_ == Constraint::nu_le_s || kernels::min_cover(edges, s_ + 1) > s_;
  }

 private:
  int s_;
  Constraint c_;
};

Partial sweep_block(const std::vector<std::uint64_t>& ksets, const Checker& check,
                    std::uint64_t prefix, int low_bits, std::size_t cap,
                    const std::optional<Clock::time_point>& deadline) {
  Partial p;
  std::vector<std::uint64_t> edges;
  const std::uint64_t count = std::uint64_t{1} << low_bits;
  for (std::uint64_t low = 0; low < count; ++low) {
    if (deadline && (low & 4095) == 0 && Clock::now() > *deadline) {
      p.aborted = true;
      return p;
    }
    const std::uint64_t subset = (prefix << low_bits) | low;
    edges.clear();
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
      edges.push_back(ksets[std::countr_zero(rest)]);
    }
    ++p.searched;
    if (check.accepts(edges)) offer(p, subset, edges.size(), cap);
  }
  return p;
}

// Include an edge only while nu <= s still holds (nu never drops as edges are
// added), and stop when even taking every remaining edge cannot reach the best.
class PrunedSearch {
 public:
  PrunedSearch(const std::vector<std::uint64_t>& ksets, const Checker& check, std::size_t cap,
               std::uint64_t max_nodes, std::optional<Clock::time_point> deadline)
      : ksets_(ksets), check_(check), cap_(cap), max_nodes_(max_nodes), deadline_(deadline) {}

  Partial run() {
    dfs(0, 0);
    return std::move(result_);
  }

 private:
  bool out_of_budget() {
    if (max_nodes_ != 0 && result_.searched > max_nodes_) result_.aborted = true;
    if (deadline_ && (result_.searched & 1023) == 0 && Clock::now() > *deadline_) {
      result_.aborted = true;
    }
    return result_.aborted;
  }

  void dfs(std::size_t i, std::uint64_t subset) {
    if (result_.aborted) return;
    ++result_.searched;
    if (out_of_budget()) return;
    const std::uint64_t size = current_.size();
    if (size + (ksets_.size() - i) < result_.best) return;
    if (i == ksets_.size()) {
      if (check_.accepts(current_)) offer(result_, subset, size, cap_);
      return;
    }
    current_.push_back(ksets_[i]);
    if (check_.nu_ok(current_)) dfs(i + 1, subset | (std::uint64_t{1} << i));
    current_.pop_back();
    dfs(i + 1, subset);
  }

  const std::vector<std::uint64_t>& ksets_;
  const Checker& check_;
  std::size_t cap_;
  std::uint64_t max_nodes_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::uint64_t> current_;
  Partial result_;
};

}  // namespace

VerifyResult verify_extremal(int n, int k, int s, Constraint c, const VerifyOptions& options) {
  if (k < 2 || k > n) throw Error("verify needs 2 <= k <= n");
  if (s < 1) throw Error("verify needs s >= 1");
  if (n > 64) throw Error("verify needs n <= 64");
  std::vector<std::uint64_t> ksets;
  for_each_k_subset(n, k, [&](const Edge& e) { ksets.push_back(to_mask(e)); });
  const int m = static_cast<int>(ksets.size());
  if (m > 63) throw Error("verify needs C(n,k) <= 63");
  if (!options.pruned && m > kUnprunedEdgeLimit) {
    throw Error("unpruned enumeration needs C(n,k) <= 24; use the pruned search");
  }

  std::optional<Clock::time_point> deadline;
  if (options.budget.count() > 0) deadline = Clock::now() + options.budget;
  const Checker check(s, c);
  Partial total;

  if (options.pruned) {
    total = PrunedSearch(ksets, check, options.witness_cap, options.max_nodes, deadline).run();
    std::sort(total.witnesses.begin(), total.witnesses.end());
  } else {
    const int prefix_bits = std::min(m, 8);
    const int low_bits = m - prefix_bits;
    const auto blocks = static_cast<std::int64_t>(1) << prefix_bits;
    if (options.exec == Execution::serial) {
      for (std::int64_t b = 0; b < blocks && !total.aborted; ++b) {
        merge(total, sweep_block(ksets, check, b, low_bits, options.witness_cap, deadline),
              options.witness_cap);
      }
    } else {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t b = 0; b < blocks; ++b) {
        Partial p = sweep_block(ksets, check, b, low_bits, options.witness_cap, deadline);
#pragma omp critical
        merge(total, std::move(p), options.witness_cap);
      }
    }
  }

  VerifyResult r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.constraint = c;
  r.method = options.pruned ? "pruned" : "unpruned";
  r.complete = !total.aborted;
  r.searched = total.searched;
  r.max_edges_found = total.best;
  for (std::uint64_t subset : total.witnesses) {
    std::vector<Edge> edges;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
      edges.push_back(from_mask(ksets[std::countr_zero(rest)]));
    }
    r.extremal_witnesses.push_back(Hypergraph::build(n, k, std::move(edges)));
  }
  r.expected = expected_bound(n, k, s, c);
  r.matches_bound = r.complete && mpz_class(static_cast<unsigned long>(r.max_edges_found)) == r.expected;
  return r;
}

}  // namespace hypermatch

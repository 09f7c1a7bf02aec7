#include <cmath>
#include <string>

#include "hypermatch/lp.hpp"
#include "hypermatch/optimize.hpp"

namespace hypermatch {

namespace {

template <class T>
lp::Problem<T> matching_problem(const Hypergraph& h, lp::Sense sense) {
  lp::Problem<T> p;
  p.num_vars = static_cast<int>(h.edge_count());
  p.rows.resize(h.n());
  for (auto& row : p.rows) {
    row.sense = sense;
    row.rhs = 1;
  }
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    for (Vertex v : h.edge(i)) p.rows[v - 1].terms.emplace_back(static_cast<int>(i), T(1));
  }
  return p;
}

template <class T>
lp::Problem<T> cover_problem(const Hypergraph& h) {
  lp::Problem<T> p;
  p.num_vars = h.n();
  p.objective.assign(h.n(), T(-1));
  for (const Edge& e : h.edges()) {
    lp::Row<T> row;
    row.sense = lp::Sense::ge;
    row.rhs = 1;
    for (Vertex v : e) row.terms.emplace_back(v - 1, T(1));
    p.rows.push_back(std::move(row));
  }
  return p;
}

void fill(FractionalAssignment& out, const std::vector<double>& x) {
  out.weights = x;
  out.value = 0;
  for (double w : x) out.value += w;
}

void fill(FractionalAssignment& out, const std::vector<mpq_class>& x) {
  out.exact_weights = x;
  out.exact_value = 0;
  out.weights.clear();
  for (const mpq_class& w : x) {
    out.exact_value += w;
    out.weights.push_back(w.get_d());
  }
  out.value = out.exact_value.get_d();
}

template <class T>
std::vector<T> solve_or_throw(const lp::Problem<T>& p, const char* what) {
  if (p.num_vars == 0) return {};
  auto sol = lp::solve(p);
  if (sol.status != lp::Status::optimal) {
    throw LpFailure(std::string(what) + ": " + lp::to_string(sol.status));
  }
  return sol.x;
}

template <class T>
FractionalAssignment nu_frac_impl(const Hypergraph& h, LpMode mode) {
  auto p = matching_problem<T>(h, lp::Sense::le);
  p.objective.assign(h.edge_count(), T(1));
  FractionalAssignment out;
  out.kind = FractionalAssignment::Kind::matching;
  out.mode = mode;
  fill(out, solve_or_throw(p, "fractional matching LP"));
  return out;
}

template <class T>
FractionalAssignment tau_frac_impl(const Hypergraph& h, LpMode mode) {
  FractionalAssignment out;
  out.kind = FractionalAssignment::Kind::cover;
  out.mode = mode;
  if (h.empty()) {
    fill(out, std::vector<T>(h.n(), T(0)));
    return out;
  }
  fill(out, solve_or_throw(cover_problem<T>(h), "fractional cover LP"));
  return out;
}

template <class T>
std::optional<FractionalAssignment> fpm_impl(const Hypergraph& h, LpMode mode,
                                             std::span<const double> costs) {
  if (h.empty()) return std::nullopt;
  auto p = matching_problem<T>(h, lp::Sense::eq);
  p.objective.assign(h.edge_count(), T(0));
  if (!costs.empty()) {
    if (costs.size() != h.edge_count()) throw Error("one cost per edge required");
    for (std::size_t i = 0; i < costs.size(); ++i) p.objective[i] = T(-costs[i]);
  }
  auto sol = lp::solve(p);
  if (sol.status == lp::Status::infeasible) return std::nullopt;
  if (sol.status != lp::Status::optimal) {
    throw LpFailure(std::string("fractional perfect matching LP: ") + lp::to_string(sol.status));
  }
  FractionalAssignment out;
  out.kind = FractionalAssignment::Kind::matching;
  out.mode = mode;
  fill(out, sol.x);
  return out;
}

}  // namespace

FractionalAssignment nu_frac(const Hypergraph& h, LpMode mode) {
  return mode == LpMode::rational ? nu_frac_impl<mpq_class>(h, mode)
                                  : nu_frac_impl<double>(h, mode);
}

FractionalAssignment tau_frac(const Hypergraph& h, LpMode mode) {
  return mode == LpMode::rational ? tau_frac_impl<mpq_class>(h, mode)
                                  : tau_frac_impl<double>(h, mode);
}

std::optional<FractionalAssignment> fractional_perfect_matching(const Hypergraph& h, LpMode mode,
                                                                std::span<const double> costs) {
  return mode == LpMode::rational ? fpm_impl<mpq_class>(h, mode, costs)
                                  : fpm_impl<double>(h, mode, costs);
}

bool is_fractional_matching(const Hypergraph& h, const FractionalAssignment& f, double tol) {
  if (f.kind != FractionalAssignment::Kind::matching) return false;
  if (f.weights.size() != h.edge_count()) return false;
  if (!f.exact_weights.empty()) {
    if (f.exact_weights.size() != h.edge_count()) return false;
    std::vector<mpq_class> load(h.n() + 1, 0);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      const mpq_class& w = f.exact_weights[i];
      if (sgn(w) < 0 || w > 1) return false;
      for (Vertex v : h.edge(i)) load[v] += w;
    }
    for (int v = 1; v <= h.n(); ++v) {
      if (load[v] > 1) return false;
    }
    return true;
  }
  std::vector<double> load(h.n() + 1, 0.0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const double w = f.weights[i];
    if (!(w >= -tol && w <= 1 + tol)) return false;
    for (Vertex v : h.edge(i)) load[v] += w;
  }
  for (int v = 1; v <= h.n(); ++v) {
    if (load[v] > 1 + tol) return false;
  }
  return true;
}

bool is_fractional_cover(const Hypergraph& h, const FractionalAssignment& w, double tol) {
  if (w.kind != FractionalAssignment::Kind::cover) return false;
  if (w.weights.size() != static_cast<std::size_t>(h.n())) return false;
  if (!w.exact_weights.empty()) {
    if (w.exact_weights.size() != static_cast<std::size_t>(h.n())) return false;
    for (const mpq_class& x : w.exact_weights) {
      if (sgn(x) < 0 || x > 1) return false;
    }
    for (const Edge& e : h.edges()) {
      mpq_class sum = 0;
      for (Vertex v : e) sum += w.exact_weights[v - 1];
      if (sum < 1) return false;
    }
    return true;
  }
  for (double x : w.weights) {
    if (!(x >= -tol && x <= 1 + tol)) return false;
  }
  for (const Edge& e : h.edges()) {
    double sum = 0;
    for (Vertex v : e) sum += w.weights[v - 1];
    if (sum < 1 - tol) return false;
  }
  return true;
}

DualityReport check_duality(const Hypergraph& h, LpMode mode, double tol) {
  const auto nu = nu_frac(h, mode);
  const auto tau = tau_frac(h, mode);
  DualityReport r;
  r.mode = mode;
  r.nu_star = nu.value;
  r.tau_star = tau.value;
  r.gap = std::fabs(nu.value - tau.value);
  if (mode == LpMode::rational) {
    r.exact_nu_star = nu.exact_value;
    r.exact_tau_star = tau.exact_value;
    if (nu.exact_value != tau.exact_value) {
      throw DualityViolation("nu* = " + nu.exact_value.get_str() +
                             " but tau* = " + tau.exact_value.get_str());
    }
    r.gap = 0;
  } else if (r.gap > tol) {
    throw DualityViolation("nu* and tau* differ by " + std::to_string(r.gap));
  }
  return r;
}

}  // namespace hypermatch

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hypermatch/hypergraph.hpp"

// Dense two-phase tableau simplex for the small LPs this library solves
// (fractional matchings and covers, tens of rows, up to a few thousand
// columns). Works over double or exact rationals (mpq_class).
namespace hypermatch::lp {

enum class Sense { le, ge, eq };

template <class T>
struct Row {
  std::vector<std::pair<int, T>> terms;
  Sense sense = Sense::le;
  T rhs{};
};

// maximize objective . x  subject to rows, x >= 0
template <class T>
struct Problem {
  int num_vars = 0;
  std::vector<T> objective;
  std::vector<Row<T>> rows;
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

template <class T>
struct NumTraits;

template <>
struct NumTraits<double> {
  static constexpr double pivot_tol = 1e-9;
  static constexpr double cost_tol = 1e-9;
  static constexpr double feas_tol = 1e-8;
  static bool positive(double x, double tol) { return x > tol; }
  static bool negative(double x, double tol) { return x < -tol; }
  static double magnitude(double x) { return std::fabs(x); }
};

template <>
struct NumTraits<mpq_class> {
  static constexpr double pivot_tol = 0;
  static constexpr double cost_tol = 0;
  static constexpr double feas_tol = 0;
  static bool positive(const mpq_class& x, double) { return sgn(x) > 0; }
  static bool negative(const mpq_class& x, double) { return sgn(x) < 0; }
  static double magnitude(const mpq_class& x) { return std::fabs(x.get_d()); }
};

struct Options {
  std::size_t max_pivots = 200000;
  // Consecutive degenerate pivots before switching to Bland's rule.
  std::size_t degenerate_switch = 50;
};

template <class T>
class Simplex {
 public:
  explicit Simplex(const Problem<T>& problem, Options options = {});

  // Phase 1 then phase 2 on the problem's objective.
  Status solve();

  // Replaces the objective and re-optimizes from the current (feasible) basis.
  // Only valid after solve() returned optimal or unbounded.
  Status reoptimize(std::span<const T> objective);

  T objective_value() const;
  std::vector<T> primal() const;
  std::size_t pivots() const { return pivots_; }

 private:
  using Traits = NumTraits<T>;

  T& at(std::size_t r, std::size_t c) { return tableau_[r * width_ + c]; }
  const T& at(std::size_t r, std::size_t c) const { return tableau_[r * width_ + c]; }
  std::size_t rhs_col() const { return width_ - 1; }

  void load_costs(std::span<const T> costs);  // costs over all columns
  Status run();
  void pivot(std::size_t row, std::size_t col);
  void drive_out_artificials();

  Options options_;
  int num_vars_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;   // structural + slack + artificial
  std::size_t width_ = 0;  // cols_ + rhs
  std::size_t first_artificial_ = 0;
  std::vector<T> tableau_;
  std::vector<T> reduced_;  // reduced costs, last entry = objective value
  std::vector<T> costs_;
  std::vector<std::size_t> basis_;
  std::vector<char> blocked_;  // columns never allowed to enter
  std::vector<char> row_active_;
  std::size_t pivots_ = 0;
  bool feasible_ = false;
};

template <class T>
Simplex<T>::Simplex(const Problem<T>& problem, Options options)
    : options_(options), num_vars_(problem.num_vars) {
  rows_ = problem.rows.size();
  std::size_t slacks = 0, artificials = 0;
  for (const auto& row : problem.rows) {
    const bool flip = Traits::negative(row.rhs, 0.0);
    Sense sense = row.sense;
    if (flip && sense != Sense::eq) sense = sense == Sense::le ? Sense::ge : Sense::le;
    if (sense != Sense::eq) ++slacks;
    if (sense != Sense::le) ++artificials;
  }
  first_artificial_ = static_cast<std::size_t>(num_vars_) + slacks;
  cols_ = first_artificial_ + artificials;
  width_ = cols_ + 1;
  tableau_.assign(rows_ * width_, T(0));
  basis_.assign(rows_, 0);
  blocked_.assign(cols_, 0);
  row_active_.assign(rows_, 1);

  std::size_t slack = static_cast<std::size_t>(num_vars_);
  std::size_t artificial = first_artificial_;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto& row = problem.rows[r];
    const bool flip = Traits::negative(row.rhs, 0.0);
    Sense sense = row.sense;
    if (flip && sense != Sense::eq) sense = sense == Sense::le ? Sense::ge : Sense::le;
    for (const auto& [var, coeff] : row.terms) {
      if (var < 0 || var >= num_vars_) throw Error("LP term references unknown variable");
      at(r, static_cast<std::size_t>(var)) += flip ? T(-coeff) : coeff;
    }
    at(r, rhs_col()) = flip ? T(-row.rhs) : row.rhs;
    if (sense == Sense::le) {
      at(r, slack) = 1;
      basis_[r] = slack++;
    } else if (sense == Sense::ge) {
      at(r, slack++) = -1;
      at(r, artificial) = 1;
      basis_[r] = artificial++;
    } else {
      at(r, artificial) = 1;
      basis_[r] = artificial++;
    }
  }
  costs_.assign(cols_, T(0));
  for (int j = 0; j < num_vars_ && j < static_cast<int>(problem.objective.size()); ++j) {
    costs_[j] = problem.objective[j];
  }
}

template <class T>
void Simplex<T>::load_costs(std::span<const T> costs) {
  reduced_.assign(width_, T(0));
  for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = -costs[j];
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!row_active_[r]) continue;
    const T& cb = costs[basis_[r]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (at(r, j) != 0) reduced_[j] += cb * at(r, j);
    }
  }
}

template <class T>
void Simplex<T>::pivot(std::size_t row, std::size_t col) {
  const T inv = T(1) / at(row, col);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < width_; ++j) {
    if (at(row, j) != 0) {
      at(row, j) *= inv;
      nz.push_back(j);
    }
  }
  at(row, col) = 1;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r == row || !row_active_[r]) continue;
    const T factor = at(r, col);
    if (factor == 0) continue;
    for (std::size_t j : nz) at(r, j) -= factor * at(row, j);
    at(r, col) = 0;
  }
  const T factor = reduced_[col];
  if (factor != 0) {
    for (std::size_t j : nz) reduced_[j] -= factor * at(row, j);
    reduced_[col] = 0;
  }
  basis_[row] = col;
  ++pivots_;
}

template <class T>
Status Simplex<T>::run() {
  std::size_t degenerate = 0;
  while (true) {
    if (pivots_ >= options_.max_pivots) return Status::iteration_limit;
    const bool bland = degenerate >= options_.degenerate_switch;
    std::size_t enter = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (blocked_[j] || !Traits::negative(reduced_[j], Traits::cost_tol)) continue;
      if (enter == cols_ || (!bland && reduced_[j] < reduced_[enter])) {
        enter = j;
        if (bland) break;
      }
    }
    if (enter == cols_) return Status::optimal;

    std::size_t leave = rows_;
    T best_ratio{};
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!row_active_[r] || !Traits::positive(at(r, enter), Traits::pivot_tol)) continue;
      T rhs = at(r, rhs_col());
      if (Traits::negative(rhs, 0.0)) rhs = 0;  // round-off below zero
      T ratio = rhs / at(r, enter);
      if (leave == rows_ || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows_) return Status::unbounded;
    if (Traits::positive(best_ratio, Traits::pivot_tol)) {
      degenerate = 0;
    } else {
      ++degenerate;
    }
    pivot(leave, enter);
  }
}

template <class T>
void Simplex<T>::drive_out_artificials() {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!row_active_[r] || basis_[r] < first_artificial_) continue;
    std::size_t col = first_artificial_;
    double best = 0;
    for (std::size_t j = 0; j < first_artificial_; ++j) {
      if (at(r, j) == 0) continue;
      const double mag = Traits::magnitude(at(r, j));
      if (col == first_artificial_ || mag > best) {
        if (mag <= Traits::pivot_tol) continue;
        best = mag;
        col = j;
      }
    }
    if (col < first_artificial_) {
      pivot(r, col);
    } else {
      row_active_[r] = 0;  // redundant equality
    }
  }
  for (std::size_t j = first_artificial_; j < cols_; ++j) blocked_[j] = 1;
}

template <class T>
Status Simplex<T>::solve() {
  if (first_artificial_ < cols_) {
    std::vector<T> phase1(cols_, T(0));
    for (std::size_t j = first_artificial_; j < cols_; ++j) phase1[j] = -1;
    load_costs(phase1);
    const Status s = run();
    if (s == Status::iteration_limit) return s;
    if (Traits::negative(reduced_[rhs_col()], Traits::feas_tol)) return Status::infeasible;
    drive_out_artificials();
  }
  feasible_ = true;
  load_costs(costs_);
  return run();
}

template <class T>
Status Simplex<T>::reoptimize(std::span<const T> objective) {
  if (!feasible_) throw Error("reoptimize called before a feasible basis was found");
  std::fill(costs_.begin(), costs_.end(), T(0));
  for (std::size_t j = 0; j < objective.size() && j < static_cast<std::size_t>(num_vars_); ++j) {
    costs_[j] = objective[j];
  }
  load_costs(costs_);
  return run();
}

template <class T>
T Simplex<T>::objective_value() const {
  return reduced_[rhs_col()];
}

template <class T>
std::vector<T> Simplex<T>::primal() const {
  std::vector<T> x(static_cast<std::size_t>(num_vars_), T(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_active_[r] && basis_[r] < static_cast<std::size_t>(num_vars_)) {
      x[basis_[r]] = at(r, rhs_col());
    }
  }
  return x;
}

template <class T>
struct Solution {
  Status status = Status::infeasible;
  T objective{};
  std::vector<T> x;
};

template <class T>
Solution<T> solve(const Problem<T>& problem, Options options = {}) {
  Simplex<T> simplex(problem, options);
  Solution<T> out;
  out.status = simplex.solve();
  if (out.status == Status::optimal) {
    out.objective = simplex.objective_value();
    out.x = simplex.primal();
  }
  return out;
}

}  // namespace hypermatch::lp

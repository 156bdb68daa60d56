#ifndef SCP_KKT_HPP
#define SCP_KKT_HPP

#include <optional>

#include "scp/problem.hpp"

namespace scp {

constexpr double kDefaultActiveTol = 1e-7;

/// Approximate KKT residuals of the original problem at (x, lam):
///   stationarity    ||P_X(x - [grad f + s_p - s_u
///                      + sum_i lam_i (grad g_i + s_qi - s_vi)]) - x||,
///                   minimized over the admissible subgradient selections
///                   where oracles expose componentwise intervals (this is
///                   the retry-over-kink-selections refinement; with one
///                   fixed selection a nonzero value would not disprove KKT)
///   feasibility     max_i (g_i + q_i - v_i)(x); -infinity when m = 0
///   set_gap         ||P_X(x) - x||
///   complementarity max_i |lam_i (g_i + q_i - v_i)(x)|
struct KktResidual {
  double stationarity = 0.0;
  double feasibility = 0.0;
  double set_gap = 0.0;
  double complementarity = 0.0;
  Vec multipliers;
  std::vector<std::size_t> active;  // indices with |constraint| <= tol_active
};

// max(stationarity, feasibility^+, set_gap, complementarity)
double worst_residual(const KktResidual& r);

bool default_kkt_stop(const KktResidual& r, double kkt_tol);

KktResidual kkt_residual(const ProblemInstance& prob, const Vec& x,
                         const Vec& lam,
                         double tol_active = kDefaultActiveTol);

// Indices i with |g_i(x) + q_i(x) - v_i(x)| <= tol.
std::vector<std::size_t> active_set(const ProblemInstance& prob, const Vec& x,
                                    double tol);

/// Exhaustive grid minimization over a bounded box for dim <= 3 instances;
/// the desk-scale ground-truth oracle. Feasibility is tested at tolerance
/// grid_step. Absence of a feasible grid point is a value, not an error.
struct GridSearchResult {
  bool found = false;
  Vec point;
  double value = 0.0;
};

GridSearchResult brute_force_minimize(const ProblemInstance& prob,
                                      const Vec& lo, const Vec& hi,
                                      double grid_step);

}  // namespace scp

#endif  // SCP_KKT_HPP

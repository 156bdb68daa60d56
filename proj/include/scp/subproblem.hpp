#ifndef SCP_SUBPROBLEM_HPP
#define SCP_SUBPROBLEM_HPP

#include <optional>

#include "scp/problem.hpp"

namespace scp {

/// Linearization snapshot at a base point x: function values, gradients of
/// the smooth parts, subgradient selections of the subtracted convex parts,
/// and the curvatures defining the convex model
///   h(y)   = f(x) + s_f.(y-x) + l_f/2 ||y-x||^2 + p(y) - u(x) - s_u.(y-x)
///   C_i(y) = g_i(x) + s_gi.(y-x) + l_gi/2 ||y-x||^2 + q_i(y)
///              - v_i(x) - s_vi.(y-x) <= 0,    y in X.
struct SubproblemData {
  const ProblemInstance* prob = nullptr;
  Vec x;
  double f_x = 0.0;
  double u_x = 0.0;
  Vec grad_f;     // s_f
  Vec subgrad_u;  // s_u
  std::vector<double> g_x, v_x;
  std::vector<Vec> grad_g;     // s_{g_i}
  std::vector<Vec> subgrad_v;  // s_{v_i}
  double l_f = 0.0;            // objective curvature; must be > 0 unless p is
                               // strongly convex
  std::vector<double> l_g;     // constraint curvatures, >= 0
};

// Evaluates all oracles at x and freezes the snapshot. Throws InputError on
// curvature violations (l_f, l_g) or infeasible shapes.
SubproblemData make_subproblem(const ProblemInstance& prob, const Vec& x,
                               double l_f, const std::vector<double>& l_g);

// Cheap re-curvature of an existing snapshot (no oracle calls).
SubproblemData with_curvatures(const SubproblemData& sub, double l_f,
                               const std::vector<double>& l_g);

double model_objective(const SubproblemData& sub, const Vec& y);
double model_constraint(const SubproblemData& sub, std::size_t i, const Vec& y);
// max_i model_constraint; -infinity when m = 0.
double max_model_constraint(const SubproblemData& sub, const Vec& y);

/// Approximate solution of the convex model together with multipliers and
/// the achieved residuals of the approximate KKT system:
///   stationarity    ||P_X(y - [s_f + l_f(y-x) + s_p - s_u
///                     + sum_i lam_i (s_gi + l_gi(y-x) + s_qi - s_vi)]) - y||
///                   minimized over admissible selections s_p, s_qi,
///   feasibility     max_i C_i(y)            (may be negative; -inf if m = 0)
///   complementarity max(0, max_i -lam_i C_i(y))   (one-sided violation)
struct SubproblemSolution {
  Vec y;
  Vec multipliers;
  double stationarity = 0.0;
  double feasibility = 0.0;
  double complementarity = 0.0;
  long inner_iterations = 0;
  int al_rounds = 0;
};

/// Inner-solver knobs: augmented Lagrangian over the m model constraints,
/// each AL subproblem solved by accelerated proximal gradient using the
/// prox of p composed with the projection onto X (Dykstra when both are
/// nontrivial).
struct SolveControls {
  double init_penalty = 10.0;
  double penalty_growth = 5.0;
  double multiplier_cap = 1e8;
  long apg_cap = 20000;
  int al_rounds_cap = 100;
  double tol_floor = 1e-13;
  Vec warm_multipliers;  // optional, length m
};

class SubproblemError : public std::runtime_error {
 public:
  SubproblemError(const std::string& msg, SubproblemSolution best,
                  std::string diagnostic_json)
      : std::runtime_error(msg),
        best_(std::move(best)),
        diagnostic_(std::move(diagnostic_json)) {}
  const SubproblemSolution& best() const { return best_; }
  const std::string& diagnostic_json() const { return diagnostic_; }

 private:
  SubproblemSolution best_;
  std::string diagnostic_;
};

/// Inner iteration cap hit before reaching the requested residuals.
class NonconvergenceError : public SubproblemError {
 public:
  using SubproblemError::SubproblemError;
};

/// The model constraint system appears to have no feasible point (penalty
/// diverged and no Slater point was found).
class InfeasibleModelError : public SubproblemError {
 public:
  using SubproblemError::SubproblemError;
};

// Solve the model to all three residuals <= tol_inner.
SubproblemSolution solve_exact(const SubproblemData& sub, double tol_inner,
                               const SolveControls& ctl = {});

// Solve until stationarity <= eps_k, every model constraint <= eps_k, and
// every lam_i * C_i(y) >= -eps_k. tol_floor bounds how tightly the inner
// loops are ever pushed.
SubproblemSolution solve_inexact(const SubproblemData& sub, double eps_k,
                                 double tol_floor,
                                 const SolveControls& ctl = {});

// Searches for y in X with all model constraints < -margin by projected
// subgradient descent on the max-constraint from x (capped). Absence is a
// value, not an error. For m = 0 returns x itself.
std::optional<Vec> find_slater_point(const SubproblemData& sub,
                                     double margin = 1e-8,
                                     int max_steps = 500);

// Stationarity residual at (y, lam) in the projection form above, refined
// over the admissible subgradient selections of p (and q_i) where interval
// information is available.
double stationarity_residual(const SubproblemData& sub, const Vec& y,
                             const Vec& lam);

namespace detail {
// min over s in [slack_lo, slack_hi] (componentwise) of
//   || P_X(y - d_fixed - s) - y ||.
// Exact for componentwise-projecting sets; per-pair line search on epigraph
// products; clamp heuristic otherwise.
double refined_projection_residual(const SetOracle& X, const Vec& y,
                                   const Vec& d_fixed, const Vec& slack_lo,
                                   const Vec& slack_hi);
}  // namespace detail

}  // namespace scp

#endif  // SCP_SUBPROBLEM_HPP

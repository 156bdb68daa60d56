#ifndef SCP_PROBLEM_HPP
#define SCP_PROBLEM_HPP

#include <string>
#include <vector>

#include "scp/oracles.hpp"
#include "scp/sets.hpp"

namespace scp {

constexpr double kDefaultFeasTol = 1e-9;

/// Oracle bundle for
///   min  f(x) + p(x) - u(x)
///   s.t. g_i(x) + q_i(x) - v_i(x) <= 0,  i = 1..m,   x in X,
/// with f, g_i smooth (declared Lipschitz-gradient constants) and p, u, q_i,
/// v_i convex. Immutable after construction; all operations are pure.
struct ProblemInstance {
  std::string name = "problem";
  std::size_t dim = 0;
  std::size_t m = 0;
  SmoothOracle f;
  ConvexOracle p, u;
  std::vector<SmoothOracle> g;
  std::vector<ConvexOracle> q, v;
  SetPtr domain;  // X

  // Prox of p + indicator(X) when analytically available (set by builders
  // that know both parts, e.g. the sparse reformulation). Null otherwise.
  std::function<Vec(double, const Vec&)> prox_p_plus_domain;
};

// Shape and oracle-count consistency; throws InputError on violation.
void validate_shapes(const ProblemInstance& prob);

// F(x) = f(x) + p(x) - u(x)
double evaluate_objective(const ProblemInstance& prob, const Vec& x);

// g_i(x) + q_i(x) - v_i(x), 0-based index.
double evaluate_constraint(const ProblemInstance& prob, std::size_t i,
                           const Vec& x);

// max_i of the constraint values; -infinity when m = 0.
double max_constraint(const ProblemInstance& prob, const Vec& x);

// x in X (membership at tol) and all constraint values <= tol.
bool is_feasible(const ProblemInstance& prob, const Vec& x,
                 double tol = kDefaultFeasTol);

}  // namespace scp

#endif  // SCP_PROBLEM_HPP

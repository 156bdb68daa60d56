#include "scp/problem.hpp"

#include <cmath>
#include <limits>

namespace scp {

void validate_shapes(const ProblemInstance& prob) {
  if (prob.dim == 0) throw InputError("problem: dim must be positive");
  if (!prob.domain) throw InputError("problem: missing set oracle");
  if (prob.domain->dim() != prob.dim)
    throw InputError("problem: set dimension != dim");
  if (prob.g.size() != prob.m || prob.q.size() != prob.m ||
      prob.v.size() != prob.m)
    throw InputError("problem: constraint oracle counts != m");
  if (!prob.f.value || !prob.f.gradient)
    throw InputError("problem: f oracle incomplete");
  if (!prob.p.value || !prob.p.subgradient)
    throw InputError("problem: p oracle incomplete");
  if (!prob.u.value || !prob.u.subgradient)
    throw InputError("problem: u oracle incomplete");
  for (std::size_t i = 0; i < prob.m; ++i) {
    if (!prob.g[i].value || !prob.g[i].gradient)
      throw InputError("problem: g oracle incomplete");
    if (!prob.q[i].value || !prob.q[i].subgradient)
      throw InputError("problem: q oracle incomplete");
    if (!prob.v[i].value || !prob.v[i].subgradient)
      throw InputError("problem: v oracle incomplete");
    if (prob.f.lipschitz_grad < 0.0 || prob.g[i].lipschitz_grad < 0.0)
      throw InputError("problem: negative Lipschitz constant");
  }
}

namespace {
void require_dim(const ProblemInstance& prob, const Vec& x) {
  if (x.size() != prob.dim)
    throw InputError("point dimension " + std::to_string(x.size()) +
                     " != problem dim " + std::to_string(prob.dim));
  for (double xi : x)
    if (!std::isfinite(xi)) throw InputError("point has non-finite entries");
}
}  // namespace

double evaluate_objective(const ProblemInstance& prob, const Vec& x) {
  require_dim(prob, x);
  return checked_value(prob.f, x) + checked_value(prob.p, x) -
         checked_value(prob.u, x);
}

double evaluate_constraint(const ProblemInstance& prob, std::size_t i,
                           const Vec& x) {
  if (i >= prob.m)
    throw InputError("constraint index " + std::to_string(i) +
                     " out of range (m = " + std::to_string(prob.m) + ")");
  require_dim(prob, x);
  return checked_value(prob.g[i], x) + checked_value(prob.q[i], x) -
         checked_value(prob.v[i], x);
}

double max_constraint(const ProblemInstance& prob, const Vec& x) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < prob.m; ++i)
    worst = std::max(worst, evaluate_constraint(prob, i, x));
  return worst;
}

bool is_feasible(const ProblemInstance& prob, const Vec& x, double tol) {
  if (tol < 0.0) throw InputError("is_feasible: negative tolerance");
  require_dim(prob, x);
  if (!prob.domain->contains(x, tol)) return false;
  for (std::size_t i = 0; i < prob.m; ++i)
    if (evaluate_constraint(prob, i, x) > tol) return false;
  return true;
}

}  // namespace scp

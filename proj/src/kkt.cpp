#include "scp/kkt.hpp"

#include <cmath>
#include <limits>

#include "scp/kernels.hpp"
#include "scp/subproblem.hpp"

namespace scp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double worst_residual(const KktResidual& r) {
  return std::max({r.stationarity, std::max(0.0, r.feasibility), r.set_gap,
                   r.complementarity});
}

bool default_kkt_stop(const KktResidual& r, double kkt_tol) {
  return worst_residual(r) <= kkt_tol;
}

std::vector<std::size_t> active_set(const ProblemInstance& prob, const Vec& x,
                                    double tol) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < prob.m; ++i)
    if (std::fabs(evaluate_constraint(prob, i, x)) <= tol) idx.push_back(i);
  return idx;
}

KktResidual kkt_residual(const ProblemInstance& prob, const Vec& x,
                         const Vec& lam, double tol_active) {
  if (lam.size() != prob.m)
    throw InputError("kkt_residual: multiplier count != m");
  for (double li : lam)
    if (li < 0.0) throw InputError("kkt_residual: negative multiplier");
  const std::size_t n = prob.dim;

  KktResidual r;
  r.multipliers = lam;
  r.active = active_set(prob, x, tol_active);

  Vec d_fixed = checked_gradient(prob.f, x);
  Vec slack_lo(n, 0.0), slack_hi(n, 0.0);

  auto add_convex = [&](const ConvexOracle& o, double weight) {
    if (weight == 0.0) return;
    if (o.subdiff_box) {
      SubdiffBox b = o.subdiff_box(x);
      if (weight > 0.0) {
        kernels::axpy(weight, b.lo.data(), slack_lo.data(), n);
        kernels::axpy(weight, b.hi.data(), slack_hi.data(), n);
      } else {
        kernels::axpy(weight, b.hi.data(), slack_lo.data(), n);
        kernels::axpy(weight, b.lo.data(), slack_hi.data(), n);
      }
    } else {
      Vec s = checked_subgradient(o, x);
      kernels::axpy(weight, s.data(), d_fixed.data(), n);
    }
  };

  add_convex(prob.p, 1.0);
  add_convex(prob.u, -1.0);
  double feas = -kInf, comp = 0.0;
  for (std::size_t i = 0; i < prob.m; ++i) {
    const double c = evaluate_constraint(prob, i, x);
    feas = std::max(feas, c);
    comp = std::max(comp, std::fabs(lam[i] * c));
    if (lam[i] == 0.0) continue;
    Vec gg = checked_gradient(prob.g[i], x);
    kernels::axpy(lam[i], gg.data(), d_fixed.data(), n);
    add_convex(prob.q[i], lam[i]);
    add_convex(prob.v[i], -lam[i]);
  }
  r.feasibility = feas;
  r.complementarity = comp;
  r.stationarity = detail::refined_projection_residual(*prob.domain, x,
                                                       d_fixed, slack_lo,
                                                       slack_hi);
  Vec px = prob.domain->project(x);
  Vec gap(n);
  kernels::sub(px.data(), x.data(), gap.data(), n);
  r.set_gap = std::sqrt(kernels::nrm2sq(gap.data(), n));
  return r;
}

GridSearchResult brute_force_minimize(const ProblemInstance& prob,
                                      const Vec& lo, const Vec& hi,
                                      double grid_step) {
  if (prob.dim > 3)
    throw InputError("brute_force_minimize: dim must be <= 3");
  if (lo.size() != prob.dim || hi.size() != prob.dim)
    throw InputError("brute_force_minimize: box dimension mismatch");
  if (!(grid_step > 0.0))
    throw InputError("brute_force_minimize: grid_step must be > 0");
  std::vector<long> counts(prob.dim);
  for (std::size_t d = 0; d < prob.dim; ++d) {
    if (!(lo[d] <= hi[d]) || !std::isfinite(lo[d]) || !std::isfinite(hi[d]))
      throw InputError("brute_force_minimize: box must be bounded");
    counts[d] = static_cast<long>(std::floor((hi[d] - lo[d]) / grid_step +
                                             1e-12)) + 1;
  }

  GridSearchResult best;
  Vec x(prob.dim);
  std::vector<long> idx(prob.dim, 0);
  const double tol = grid_step;
  while (true) {
    for (std::size_t d = 0; d < prob.dim; ++d)
      x[d] = std::min(lo[d] + grid_step * idx[d], hi[d]);
    bool ok = prob.domain->contains(x, tol);
    for (std::size_t i = 0; ok && i < prob.m; ++i)
      ok = evaluate_constraint(prob, i, x) <= tol;
    if (ok) {
      const double v = evaluate_objective(prob, x);
      if (!best.found || v < best.value) {
        best.found = true;
        best.value = v;
        best.point = x;
      }
    }
    // Odometer increment.
    std::size_t d = 0;
    for (; d < prob.dim; ++d) {
      if (++idx[d] < counts[d]) break;
      idx[d] = 0;
    }
    if (d == prob.dim) break;
  }
  return best;
}

}  // namespace scp

#include "scp/subproblem.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "scp/kernels.hpp"

namespace scp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

Vec diff(const Vec& a, const Vec& b) {
  Vec d(a.size());
  kernels::sub(a.data(), b.data(), d.data(), a.size());
  return d;
}
}  // namespace

SubproblemData make_subproblem(const ProblemInstance& prob, const Vec& x,
                               double l_f, const std::vector<double>& l_g) {
  if (x.size() != prob.dim) throw InputError("make_subproblem: dim mismatch");
  if (l_g.size() != prob.m)
    throw InputError("make_subproblem: curvature count != m");
  if (!(l_f > 0.0) && !(l_f >= 0.0 && prob.p.strong_convexity > 0.0))
    throw InputError(
        "make_subproblem: l_f must be positive (or p strongly convex)");
  for (double lg : l_g)
    if (!(lg >= 0.0)) throw InputError("make_subproblem: l_g must be >= 0");

  SubproblemData sub;
  sub.prob = &prob;
  sub.x = x;
  sub.f_x = checked_value(prob.f, x);
  sub.u_x = checked_value(prob.u, x);
  sub.grad_f = checked_gradient(prob.f, x);
  sub.subgrad_u = checked_subgradient(prob.u, x);
  sub.g_x.resize(prob.m);
  sub.v_x.resize(prob.m);
  sub.grad_g.resize(prob.m);
  sub.subgrad_v.resize(prob.m);
  for (std::size_t i = 0; i < prob.m; ++i) {
    sub.g_x[i] = checked_value(prob.g[i], x);
    sub.v_x[i] = checked_value(prob.v[i], x);
    sub.grad_g[i] = checked_gradient(prob.g[i], x);
    sub.subgrad_v[i] = checked_subgradient(prob.v[i], x);
  }
  sub.l_f = l_f;
  sub.l_g = l_g;
  return sub;
}

SubproblemData with_curvatures(const SubproblemData& sub, double l_f,
                               const std::vector<double>& l_g) {
  if (l_g.size() != sub.prob->m)
    throw InputError("with_curvatures: curvature count != m");
  SubproblemData out = sub;
  out.l_f = l_f;
  out.l_g = l_g;
  return out;
}

double model_objective(const SubproblemData& sub, const Vec& y) {
  Vec d = diff(y, sub.x);
  const double lin = kernels::dot(sub.grad_f.data(), d.data(), d.size()) -
                     kernels::dot(sub.subgrad_u.data(), d.data(), d.size());
  const double quad = 0.5 * sub.l_f * kernels::nrm2sq(d.data(), d.size());
  return sub.f_x + lin + quad + checked_value(sub.prob->p, y) - sub.u_x;
}

double model_constraint(const SubproblemData& sub, std::size_t i,
                        const Vec& y) {
  if (i >= sub.prob->m)
    throw InputError("model_constraint: index out of range");
  Vec d = diff(y, sub.x);
  const double lin =
      kernels::dot(sub.grad_g[i].data(), d.data(), d.size()) -
      kernels::dot(sub.subgrad_v[i].data(), d.data(), d.size());
  const double quad = 0.5 * sub.l_g[i] * kernels::nrm2sq(d.data(), d.size());
  return sub.g_x[i] + lin + quad + checked_value(sub.prob->q[i], y) -
         sub.v_x[i];
}

double max_model_constraint(const SubproblemData& sub, const Vec& y) {
  double worst = -kInf;
  for (std::size_t i = 0; i < sub.prob->m; ++i)
    worst = std::max(worst, model_constraint(sub, i, y));
  return worst;
}

// ---------------------------------------------------------------------------
// Stationarity residual with selection refinement
// ---------------------------------------------------------------------------

namespace detail {

namespace {
// Distance contribution of one epigraph pair for slack value s added to the
// second slot.
double epi_pair_dist2(double ya, double yb, double da, double db, double s) {
  auto [px, py] = project_epigraph_abs(ya - da, yb - db - s);
  const double ex = px - ya;
  const double ey = py - yb;
  return ex * ex + ey * ey;
}

double minimize_pair_slack(double ya, double yb, double da, double db,
                           double lo, double hi) {
  if (lo >= hi) return epi_pair_dist2(ya, yb, da, db, lo);
  // Coarse scan then golden-section refinement around the best bracket.
  const int kScan = 32;
  double best_s = lo, best = kInf;
  for (int j = 0; j <= kScan; ++j) {
    const double s = lo + (hi - lo) * j / kScan;
    const double v = epi_pair_dist2(ya, yb, da, db, s);
    if (v < best) {
      best = v;
      best_s = s;
    }
  }
  const double w = (hi - lo) / kScan;
  double a = std::max(lo, best_s - w), b = std::min(hi, best_s + w);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = epi_pair_dist2(ya, yb, da, db, c);
  double fd = epi_pair_dist2(ya, yb, da, db, d);
  for (int it = 0; it < 80; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = epi_pair_dist2(ya, yb, da, db, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = epi_pair_dist2(ya, yb, da, db, d);
    }
  }
  return std::min({best, fc, fd});
}
}  // namespace

double refined_projection_residual(const SetOracle& X, const Vec& y,
                                   const Vec& d_fixed, const Vec& slack_lo,
                                   const Vec& slack_hi) {
  const std::size_t n = y.size();
  const std::size_t pairs = X.epi_pairs_trivial_omega();
  if (pairs > 0 && 2 * pairs == n) {
    // Per-pair treatment: clamp-optimal slack on the lower (x) slot, line
    // search over the interval on the upper (y) slot where p and u live.
    double total = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
      const double sa = std::clamp(-d_fixed[i], slack_lo[i], slack_hi[i]);
      total += minimize_pair_slack(y[i], y[pairs + i], d_fixed[i] + sa,
                                   d_fixed[pairs + i], slack_lo[pairs + i],
                                   slack_hi[pairs + i]);
    }
    return std::sqrt(total);
  }

  // Componentwise-optimal slack; exact when X projects componentwise and a
  // valid selection for any X.
  Vec w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::clamp(-d_fixed[i], slack_lo[i], slack_hi[i]);
    w[i] = y[i] - d_fixed[i] - s;
  }
  Vec pw = X.project(w);
  Vec r = diff(pw, y);
  return std::sqrt(kernels::nrm2sq(r.data(), r.size()));
}

}  // namespace detail

double stationarity_residual(const SubproblemData& sub, const Vec& y,
                             const Vec& lam) {
  const ProblemInstance& prob = *sub.prob;
  if (lam.size() != prob.m)
    throw InputError("stationarity_residual: multiplier count != m");
  const std::size_t n = y.size();
  Vec d = diff(y, sub.x);  // y - x
  Vec d_fixed(n);
  // s_f + l_f (y - x) - s_u
  kernels::waxpby(1.0, sub.grad_f.data(), sub.l_f, d.data(), d_fixed.data(), n);
  kernels::axpy(-1.0, sub.subgrad_u.data(), d_fixed.data(), n);

  Vec slack_lo(n, 0.0), slack_hi(n, 0.0);
  if (prob.p.subdiff_box) {
    SubdiffBox b = prob.p.subdiff_box(y);
    slack_lo = b.lo;
    slack_hi = b.hi;
  } else {
    Vec sp = checked_subgradient(prob.p, y);
    kernels::axpy(1.0, sp.data(), d_fixed.data(), n);
  }

  for (std::size_t i = 0; i < prob.m; ++i) {
    if (lam[i] == 0.0) continue;
    kernels::axpy(lam[i], sub.grad_g[i].data(), d_fixed.data(), n);
    kernels::axpy(lam[i] * sub.l_g[i], d.data(), d_fixed.data(), n);
    kernels::axpy(-lam[i], sub.subgrad_v[i].data(), d_fixed.data(), n);
    if (prob.q[i].subdiff_box) {
      SubdiffBox b = prob.q[i].subdiff_box(y);
      kernels::axpy(lam[i], b.lo.data(), slack_lo.data(), n);
      kernels::axpy(lam[i], b.hi.data(), slack_hi.data(), n);
    } else {
      Vec sq = checked_subgradient(prob.q[i], y);
      kernels::axpy(lam[i], sq.data(), d_fixed.data(), n);
    }
  }
  return detail::refined_projection_residual(*prob.domain, y, d_fixed,
                                             slack_lo, slack_hi);
}

// ---------------------------------------------------------------------------
// Composite prox of p + indicator(X)
// ---------------------------------------------------------------------------

namespace {

struct CompositeProx {
  enum class Mode { Registered, ProjectOnly, ProxOnly, Dykstra, Fallback };
  Mode mode = Mode::ProjectOnly;
  const ProblemInstance* prob = nullptr;

  static CompositeProx build(const ProblemInstance& prob) {
    CompositeProx cp;
    cp.prob = &prob;
    if (prob.prox_p_plus_domain) {
      cp.mode = Mode::Registered;
    } else if (prob.p.zero) {
      cp.mode = Mode::ProjectOnly;
    } else if (prob.domain->is_whole_space() && prob.p.has_prox()) {
      cp.mode = Mode::ProxOnly;
    } else if (prob.p.has_prox()) {
      cp.mode = Mode::Dykstra;
    } else {
      // p has no prox: it is folded into the smooth part by subgradient
      // steps; the prox reduces to the projection.
      cp.mode = Mode::Fallback;
    }
    return cp;
  }

  bool p_in_smooth_part() const { return mode == Mode::Fallback; }

  Vec operator()(double t, const Vec& w) const {
    switch (mode) {
      case Mode::Registered:
        return prob->prox_p_plus_domain(t, w);
      case Mode::ProjectOnly:
      case Mode::Fallback:
        return prob->domain->project(w);
      case Mode::ProxOnly:
        return prob->p.prox(t, w);
      case Mode::Dykstra: {
        std::vector<std::function<Vec(const Vec&)>> maps;
        maps.emplace_back(
            [this, t](const Vec& z) { return prob->p.prox(t, z); });
        maps.emplace_back(
            [this](const Vec& z) { return prob->domain->project(z); });
        return dykstra(maps, w);
      }
    }
    return w;
  }
};

// ---------------------------------------------------------------------------
// Augmented Lagrangian smooth part
// ---------------------------------------------------------------------------

struct AugLag {
  const SubproblemData* sub;
  double rho = 0.0;
  Vec mu;                 // current multiplier estimates
  bool p_in_smooth = false;
  bool nonsmooth_q = false;

  explicit AugLag(const SubproblemData& s) : sub(&s) {
    for (std::size_t i = 0; i < s.prob->m; ++i)
      if (!s.prob->q[i].is_smooth()) nonsmooth_q = true;
  }

  double constraint(const Vec& y, std::size_t i) const {
    return model_constraint(*sub, i, y);
  }

  double value(const Vec& y) const {
    Vec d = diff(y, sub->x);
    const std::size_t n = y.size();
    double v = sub->f_x - sub->u_x +
               kernels::dot(sub->grad_f.data(), d.data(), n) -
               kernels::dot(sub->subgrad_u.data(), d.data(), n) +
               0.5 * sub->l_f * kernels::nrm2sq(d.data(), n);
    if (p_in_smooth) v += checked_value(sub->prob->p, y);
    for (std::size_t i = 0; i < sub->prob->m; ++i) {
      const double c = constraint(y, i);
      const double a = std::max(0.0, mu[i] + rho * c);
      v += (a * a - mu[i] * mu[i]) / (2.0 * rho);
    }
    return v;
  }

  Vec gradient(const Vec& y) const {
    const std::size_t n = y.size();
    Vec d = diff(y, sub->x);
    Vec g(n);
    kernels::waxpby(1.0, sub->grad_f.data(), sub->l_f, d.data(), g.data(), n);
    kernels::axpy(-1.0, sub->subgrad_u.data(), g.data(), n);
    if (p_in_smooth) {
      Vec sp = checked_subgradient(sub->prob->p, y);
      kernels::axpy(1.0, sp.data(), g.data(), n);
    }
    for (std::size_t i = 0; i < sub->prob->m; ++i) {
      const double c = constraint(y, i);
      const double a = std::max(0.0, mu[i] + rho * c);
      if (a == 0.0) continue;
      kernels::axpy(a, sub->grad_g[i].data(), g.data(), n);
      kernels::axpy(a * sub->l_g[i], d.data(), g.data(), n);
      kernels::axpy(-a, sub->subgrad_v[i].data(), g.data(), n);
      Vec sq = checked_subgradient(sub->prob->q[i], y);
      kernels::axpy(a, sq.data(), g.data(), n);
    }
    return g;
  }

  // Objective the APG monitors for monotonicity (smooth part + p unless p is
  // already inside the smooth part).
  double merit(const Vec& y) const {
    double v = value(y);
    if (!p_in_smooth) v += checked_value(sub->prob->p, y);
    return v;
  }
};

// ---------------------------------------------------------------------------
// Accelerated proximal gradient with backtracking and monotone restarts
// ---------------------------------------------------------------------------

struct ApgOutcome {
  long iters = 0;
  double grad_map = kInf;
  bool converged = false;
};

ApgOutcome apg(const AugLag& model, const CompositeProx& prox, Vec& y,
               double tol, long cap, double& t) {
  const std::size_t n = y.size();
  ApgOutcome out;
  if (cap <= 0) return out;
  const double t_min = 1e-18, t_max = 1e6;
  const bool plain = model.nonsmooth_q || model.p_in_smooth;

  Vec z = y, w(n), trial(n);
  double theta = 1.0;
  double merit_y = model.merit(y);

  auto step_from = [&](const Vec& base, double& step) -> Vec {
    Vec g = model.gradient(base);
    const double base_val = model.value(base);
    for (int bt = 0; bt < 60; ++bt) {
      kernels::waxpby(1.0, base.data(), -step, g.data(), trial.data(), n);
      Vec cand = prox(step, trial);
      Vec dd = diff(cand, base);
      const double quad = base_val +
                          kernels::dot(g.data(), dd.data(), n) +
                          kernels::nrm2sq(dd.data(), n) / (2.0 * step);
      const double cand_val = model.value(cand);
      if (cand_val <= quad + 1e-14 * (1.0 + std::fabs(base_val)) ||
          step <= t_min)
        return cand;
      step *= 0.5;
    }
    kernels::waxpby(1.0, base.data(), -step, g.data(), trial.data(), n);
    return prox(step, trial);
  };

  while (out.iters < cap) {
    ++out.iters;
    double step = t;
    Vec cand = step_from(z, step);
    double merit_cand = model.merit(cand);
    if (!plain && merit_cand > merit_y) {
      // Momentum overshoot: restart from the best point.
      z = y;
      theta = 1.0;
      step = t;
      cand = step_from(z, step);
      merit_cand = model.merit(cand);
    }
    Vec dz = diff(cand, z);
    const double gm = std::sqrt(kernels::nrm2sq(dz.data(), n)) / step;
    t = std::min(step * 1.25, t_max);

    if (plain) {
      y = cand;
      z = cand;
      merit_y = merit_cand;
    } else {
      const double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
      Vec ynew = cand;
      kernels::waxpby(1.0 + (theta - 1.0) / theta_next, ynew.data(),
                      -(theta - 1.0) / theta_next, y.data(), z.data(), n);
      y = std::move(ynew);
      theta = theta_next;
      merit_y = merit_cand;
    }

    if (gm <= tol) {
      // Verify with a plain step from y.
      double vstep = t;
      Vec vy = step_from(y, vstep);
      Vec dv = diff(vy, y);
      const double gv = std::sqrt(kernels::nrm2sq(dv.data(), n)) / vstep;
      y = vy;
      merit_y = model.merit(y);
      z = y;
      theta = 1.0;
      if (gv <= tol) {
        out.grad_map = gv;
        out.converged = true;
        return out;
      }
      out.grad_map = gv;
    }
    if (std::sqrt(kernels::nrm2sq(y.data(), n)) > 1e13) break;  // diverging
  }
  return out;
}

// ---------------------------------------------------------------------------
// AL driver
// ---------------------------------------------------------------------------

struct ResidualTriple {
  double stat = 0.0;
  double feas = -kInf;
  double comp = 0.0;
};

ResidualTriple residuals_at(const SubproblemData& sub, const Vec& y,
                            const Vec& lam) {
  ResidualTriple r;
  r.stat = stationarity_residual(sub, y, lam);
  for (std::size_t i = 0; i < sub.prob->m; ++i) {
    const double c = model_constraint(sub, i, y);
    r.feas = std::max(r.feas, c);
    r.comp = std::max(r.comp, -lam[i] * c);
  }
  r.comp = std::max(0.0, sub.prob->m ? r.comp : 0.0);
  return r;
}

nlohmann::json diagnostic_json(const SubproblemData& sub,
                               const SubproblemSolution& best,
                               const std::vector<std::array<double, 5>>& hist,
                               const std::string& what) {
  nlohmann::json j;
  j["what"] = what;
  j["base_point"] = sub.x;
  j["l_f"] = sub.l_f;
  j["l_g"] = sub.l_g;
  j["f_x"] = sub.f_x;
  j["u_x"] = sub.u_x;
  j["g_x"] = sub.g_x;
  j["v_x"] = sub.v_x;
  j["grad_f"] = sub.grad_f;
  j["subgrad_u"] = sub.subgrad_u;
  j["y"] = best.y;
  j["multipliers"] = best.multipliers;
  j["stationarity"] = best.stationarity;
  j["feasibility"] = best.feasibility;
  j["complementarity"] = best.complementarity;
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& h : hist)
    rounds.push_back({{"rho", h[0]},
                      {"stat", h[1]},
                      {"feas", h[2]},
                      {"comp", h[3]},
                      {"al_residual", h[4]}});
  j["rounds"] = rounds;
  return j;
}

SubproblemSolution solve_core(const SubproblemData& sub, double target,
                              double tol_floor, const SolveControls& ctl) {
  const ProblemInstance& prob = *sub.prob;
  const std::size_t m = prob.m;
  CompositeProx prox = CompositeProx::build(prob);

  AugLag model(sub);
  model.p_in_smooth = prox.p_in_smooth_part();
  model.mu.assign(m, 0.0);
  if (ctl.warm_multipliers.size() == m)
    for (std::size_t i = 0; i < m; ++i)
      model.mu[i] = std::max(0.0, ctl.warm_multipliers[i]);
  model.rho = ctl.init_penalty;

  SubproblemSolution best;
  best.y = prob.domain->project(sub.x);
  best.multipliers.assign(m, 0.0);
  best.stationarity = kInf;
  best.feasibility = m ? kInf : -kInf;

  Vec y = best.y;
  double t = 1.0 / std::max(1.0, sub.l_f);
  long iters_total = 0;
  double apg_tol = std::max(tol_floor, std::min(1e-2, 0.25 * target));
  double prev_alres = kInf;
  std::vector<std::array<double, 5>> hist;

  for (int round = 1; round <= ctl.al_rounds_cap; ++round) {
    const long budget = ctl.apg_cap - iters_total;
    if (budget <= 0) break;
    ApgOutcome apo = apg(model, prox, y, apg_tol, budget, t);
    iters_total += apo.iters;

    Vec lam(m);
    double alres = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double c = model.constraint(y, i);
      lam[i] = std::max(0.0, model.mu[i] + model.rho * c);
      alres = std::max(alres,
                       std::fabs(std::max(c, -model.mu[i] / model.rho)));
    }
    ResidualTriple r = residuals_at(sub, y, lam);
    hist.push_back({model.rho, r.stat, r.feas, r.comp, alres});

    SubproblemSolution cur;
    cur.y = y;
    cur.multipliers = lam;
    cur.stationarity = r.stat;
    cur.feasibility = r.feas;
    cur.complementarity = r.comp;
    cur.inner_iterations = iters_total;
    cur.al_rounds = round;
    const double cur_worst =
        std::max({r.stat, std::max(0.0, r.feas), r.comp});
    const double best_worst = std::max(
        {best.stationarity, std::max(0.0, best.feasibility), best.complementarity});
    if (cur_worst <= best_worst) best = cur;

    if (r.stat <= target && r.feas <= target && r.comp <= target) {
      best = cur;
      return best;
    }

    if (m == 0) {
      // Tighten the inner tolerance until the literal residual meets the
      // target; give up when stalled at the floor.
      if (apg_tol <= tol_floor && apo.converged && hist.size() >= 3 &&
          hist[hist.size() - 3][1] <= r.stat * (1.0 + 1e-9))
        break;
      const double shrink =
          r.stat > 0 ? std::min(0.25, 0.5 * target / r.stat) : 0.25;
      apg_tol = std::max(tol_floor, apg_tol * shrink);
      continue;
    }

    model.mu = lam;
    double mu_max = 0.0;
    for (double mi : model.mu) mu_max = std::max(mu_max, mi);
    if (mu_max > ctl.multiplier_cap || model.rho > 1e14) {
      if (!find_slater_point(sub)) {
        best.inner_iterations = iters_total;
        throw InfeasibleModelError(
            "subproblem model appears infeasible (penalty diverged, no "
            "Slater point found)",
            best,
            diagnostic_json(sub, best, hist, "infeasible_model").dump(2));
      }
      best.inner_iterations = iters_total;
      throw NonconvergenceError(
          "augmented Lagrangian multipliers exceeded the safeguard cap",
          best, diagnostic_json(sub, best, hist, "multiplier_cap").dump(2));
    }
    if (alres > 0.5 * prev_alres) model.rho *= ctl.penalty_growth;
    prev_alres = alres;
    apg_tol = std::max(tol_floor,
                       std::min({apg_tol, 0.25 * target, 0.25 * alres}));
  }

  best.inner_iterations = iters_total;
  throw NonconvergenceError(
      "inner iteration cap exceeded before reaching the requested residuals",
      best, diagnostic_json(sub, best, hist, "nonconvergence").dump(2));
}

}  // namespace

SubproblemSolution solve_exact(const SubproblemData& sub, double tol_inner,
                               const SolveControls& ctl) {
  if (!(tol_inner > 0.0)) throw InputError("solve_exact: tol_inner must be > 0");
  return solve_core(sub, tol_inner, ctl.tol_floor, ctl);
}

SubproblemSolution solve_inexact(const SubproblemData& sub, double eps_k,
                                 double tol_floor, const SolveControls& ctl) {
  if (!(eps_k > 0.0)) throw InputError("solve_inexact: eps_k must be > 0");
  return solve_core(sub, eps_k, std::max(tol_floor, 0.0), ctl);
}

std::optional<Vec> find_slater_point(const SubproblemData& sub, double margin,
                                     int max_steps) {
  const ProblemInstance& prob = *sub.prob;
  if (prob.m == 0) return sub.x;
  const std::size_t n = prob.dim;

  auto worst = [&](const Vec& y) {
    double w = -kInf;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < prob.m; ++i) {
      const double c = model_constraint(sub, i, y);
      if (c > w) {
        w = c;
        arg = i;
      }
    }
    return std::make_pair(w, arg);
  };

  Vec y = prob.domain->project(sub.x);
  auto [best_val, arg0] = worst(y);
  Vec best = y;
  for (int k = 1; k <= max_steps; ++k) {
    auto [val, j] = worst(y);
    if (val < best_val) {
      best_val = val;
      best = y;
    }
    if (best_val <= -0.5) break;  // clearly strict already
    // Subgradient of the active model constraint.
    Vec d = diff(y, sub.x);
    Vec g(n);
    kernels::waxpby(1.0, sub.grad_g[j].data(), sub.l_g[j], d.data(), g.data(),
                    n);
    kernels::axpy(-1.0, sub.subgrad_v[j].data(), g.data(), n);
    Vec sq = checked_subgradient(prob.q[j], y);
    kernels::axpy(1.0, sq.data(), g.data(), n);
    const double g2 = kernels::nrm2sq(g.data(), n);
    if (g2 <= 1e-24) break;
    // Polyak-style step aiming below the best value seen.
    const double step =
        (val - (best_val - 0.1 - 0.5 * std::fabs(best_val))) / g2;
    kernels::axpy(-step, g.data(), y.data(), n);
    y = prob.domain->project(y);
  }
  if (best_val < -margin) return best;
  return std::nullopt;
}

}  // namespace scp

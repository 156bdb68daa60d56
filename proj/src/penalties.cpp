#include "scp/penalties.hpp"

#include <cmath>

#include "scp/kernels.hpp"

namespace scp {

std::string penalty_kind_name(PenaltyKind k) {
  switch (k) {
    case PenaltyKind::L1: return "l1";
    case PenaltyKind::Scad: return "scad";
    case PenaltyKind::Lq: return "lq";
    case PenaltyKind::Log: return "log";
    case PenaltyKind::CappedL1: return "capped_l1";
  }
  throw InputError("unknown penalty kind");
}

PenaltyKind penalty_kind_from_name(const std::string& s) {
  if (s == "l1") return PenaltyKind::L1;
  if (s == "scad") return PenaltyKind::Scad;
  if (s == "lq") return PenaltyKind::Lq;
  if (s == "log") return PenaltyKind::Log;
  if (s == "capped_l1") return PenaltyKind::CappedL1;
  throw InputError("unknown penalty kind '" + s + "'");
}

void validate(const PenaltySpec& spec) {
  if (!(spec.lambda > 0.0)) throw InputError("penalty: lambda must be > 0");
  switch (spec.kind) {
    case PenaltyKind::L1:
      break;
    case PenaltyKind::Scad:
      if (!(spec.a > 1.0)) throw InputError("scad: a must be > 1");
      break;
    case PenaltyKind::Lq:
      if (!(spec.q > 0.0 && spec.q < 1.0))
        throw InputError("lq: q must be in (0, 1)");
      if (!(spec.eps > 0.0)) throw InputError("lq: eps must be > 0");
      break;
    case PenaltyKind::Log:
      if (!(spec.eps > 0.0)) throw InputError("log: eps must be > 0");
      break;
    case PenaltyKind::CappedL1:
      if (!(spec.eta > 0.0)) throw InputError("capped_l1: eta must be > 0");
      break;
  }
}

namespace {
// Lq and Log are defined for t > -eps; anything far below zero means a
// caller bug rather than projection dust.
void check_extension_domain(const PenaltySpec& spec, double t) {
  if ((spec.kind == PenaltyKind::Lq || spec.kind == PenaltyKind::Log) &&
      t <= -0.5 * spec.eps)
    throw OracleError("penalty '" + penalty_kind_name(spec.kind) +
                      "' evaluated far outside its domain");
}
}  // namespace

double penalty_value(const PenaltySpec& spec, double t) {
  if (t < 0.0) throw InputError("penalty_value: t must be >= 0");
  const double lam = spec.lambda;
  switch (spec.kind) {
    case PenaltyKind::L1:
      return lam * t;
    case PenaltyKind::Scad: {
      const double a = spec.a;
      if (t <= lam) return lam * t;
      if (t <= a * lam)
        return (-t * t + 2.0 * a * lam * t - lam * lam) / (2.0 * (a - 1.0));
      return 0.5 * (a + 1.0) * lam * lam;
    }
    case PenaltyKind::Lq:
      return lam * std::pow(t + spec.eps, spec.q);
    case PenaltyKind::Log:
      return lam * (std::log(t + spec.eps) - std::log(spec.eps));
    case PenaltyKind::CappedL1:
      return t < spec.eta ? lam * t : lam * spec.eta;
  }
  throw InputError("unknown penalty kind");
}

double penalty_right_slope(const PenaltySpec& spec, double t) {
  if (t < 0.0) throw InputError("penalty_right_slope: t must be >= 0");
  const double lam = spec.lambda;
  switch (spec.kind) {
    case PenaltyKind::L1:
      return lam;
    case PenaltyKind::Scad: {
      const double a = spec.a;
      if (t < lam) return lam;
      if (t < a * lam) return (a * lam - t) / (a - 1.0);
      return 0.0;
    }
    case PenaltyKind::Lq:
      return lam * spec.q * std::pow(t + spec.eps, spec.q - 1.0);
    case PenaltyKind::Log:
      return lam / (t + spec.eps);
    case PenaltyKind::CappedL1:
      return t < spec.eta ? lam : 0.0;
  }
  throw InputError("unknown penalty kind");
}

double dc_term(const PenaltySpec& spec, double t) {
  check_extension_domain(spec, t);
  const double lam = spec.lambda;
  switch (spec.kind) {
    case PenaltyKind::L1:
      return 0.0;
    case PenaltyKind::Scad: {
      const double a = spec.a;
      if (t <= lam) return 0.0;
      if (t <= a * lam)
        return lam * t -
               (-t * t + 2.0 * a * lam * t - lam * lam) / (2.0 * (a - 1.0));
      return lam * t - 0.5 * (a + 1.0) * lam * lam;
    }
    case PenaltyKind::Lq:
      return lam * t - lam * std::pow(t + spec.eps, spec.q);
    case PenaltyKind::Log:
      return lam * t - lam * (std::log(t + spec.eps) - std::log(spec.eps));
    case PenaltyKind::CappedL1:
      return t < spec.eta ? 0.0 : lam * (t - spec.eta);
  }
  throw InputError("unknown penalty kind");
}

double dc_term_slope(const PenaltySpec& spec, double t) {
  check_extension_domain(spec, t);
  const double lam = spec.lambda;
  switch (spec.kind) {
    case PenaltyKind::L1:
      return 0.0;
    case PenaltyKind::Scad: {
      const double a = spec.a;
      if (t < lam) return 0.0;
      if (t < a * lam) return lam - (a * lam - t) / (a - 1.0);
      return lam;
    }
    case PenaltyKind::Lq:
      return lam - lam * spec.q * std::pow(t + spec.eps, spec.q - 1.0);
    case PenaltyKind::Log:
      return lam - lam / (t + spec.eps);
    case PenaltyKind::CappedL1:
      return t < spec.eta ? 0.0 : lam;
  }
  throw InputError("unknown penalty kind");
}

std::pair<double, double> dc_term_slope_interval(const PenaltySpec& spec,
                                                 double t) {
  const double right = dc_term_slope(spec, t);
  if (spec.kind == PenaltyKind::CappedL1 && t == spec.eta)
    return {0.0, right};
  return {right, right};
}

double u_value(const PenaltySpec& spec, const Vec& y) {
  double s = 0.0;
  for (double yi : y) {
    if (yi < 0.0) throw InputError("u_value: negative component");
    s += dc_term(spec, yi);
  }
  return s;
}

Vec u_subgradient(const PenaltySpec& spec, const Vec& y) {
  Vec g(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) g[i] = dc_term_slope(spec, y[i]);
  return g;
}

Vec lift_point(const Vec& x) {
  Vec w(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    w[i] = x[i];
    w[x.size() + i] = std::fabs(x[i]);
  }
  return w;
}

double sparse_objective(const SmoothOracle& loss, const PenaltySpec& spec,
                        const Vec& x) {
  double s = checked_value(loss, x);
  for (double xi : x) s += penalty_value(spec, std::fabs(xi));
  return s;
}

ProblemInstance build_sparse_nlp(const SmoothOracle& loss, std::size_t n,
                                 SetPtr omega, const PenaltySpec& spec) {
  validate(spec);
  if (n == 0) throw InputError("build_sparse_nlp: n must be positive");
  if (omega && omega->dim() != n)
    throw InputError("build_sparse_nlp: omega dimension != n");

  ProblemInstance prob;
  prob.name = "sparse_nlp_" + penalty_kind_name(spec.kind);
  prob.dim = 2 * n;
  prob.m = 0;

  prob.f.name = loss.name + "_lift";
  prob.f.lipschitz_grad = loss.lipschitz_grad;
  prob.f.value = [loss, n](const Vec& w) {
    Vec x(w.begin(), w.begin() + n);
    return loss.value(x);
  };
  prob.f.gradient = [loss, n](const Vec& w) {
    Vec x(w.begin(), w.begin() + n);
    Vec gx = loss.gradient(x);
    Vec g(2 * n, 0.0);
    std::copy(gx.begin(), gx.end(), g.begin());
    return g;
  };

  const double lam = spec.lambda;
  prob.p.name = "l1_lift";
  prob.p.value = [lam, n](const Vec& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(w[n + i]);
    return lam * s;
  };
  prob.p.subgradient = [lam, n](const Vec& w) {
    Vec g(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double yi = w[n + i];
      g[n + i] = yi > 0.0 ? lam : (yi < 0.0 ? -lam : 0.0);
    }
    return g;
  };
  prob.p.prox = [lam, n](double t, const Vec& w) {
    Vec z = w;
    kernels::soft_threshold(w.data() + n, t * lam, z.data() + n, n);
    return z;
  };
  prob.p.subdiff_box = [lam, n](const Vec& w) {
    SubdiffBox b{Vec(2 * n, 0.0), Vec(2 * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
      const double yi = w[n + i];
      if (yi > 0.0) {
        b.lo[n + i] = b.hi[n + i] = lam;
      } else if (yi < 0.0) {
        b.lo[n + i] = b.hi[n + i] = -lam;
      } else {
        b.lo[n + i] = -lam;
        b.hi[n + i] = lam;
      }
    }
    return b;
  };

  const PenaltySpec sp = spec;
  prob.u.name = "dc_remainder_" + penalty_kind_name(spec.kind);
  prob.u.zero = spec.kind == PenaltyKind::L1;
  prob.u.value = [sp, n](const Vec& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += dc_term(sp, w[n + i]);
    return s;
  };
  prob.u.subgradient = [sp, n](const Vec& w) {
    Vec g(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) g[n + i] = dc_term_slope(sp, w[n + i]);
    return g;
  };
  prob.u.subdiff_box = [sp, n](const Vec& w) {
    SubdiffBox b{Vec(2 * n, 0.0), Vec(2 * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
      auto [lo, hi] = dc_term_slope_interval(sp, w[n + i]);
      b.lo[n + i] = lo;
      b.hi[n + i] = hi;
    }
    return b;
  };

  prob.domain = make_epi_abs_product(n, omega);
  if (!omega || omega->is_whole_space()) {
    prob.prox_p_plus_domain = [lam, n](double t, const Vec& w) {
      Vec z(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        auto [xi, yi] = project_epigraph_abs(w[i], w[n + i] - t * lam);
        z[i] = xi;
        z[n + i] = yi;
      }
      return z;
    };
  }
  return prob;
}

}  // namespace scp

#ifndef SCP_PENALTIES_HPP
#define SCP_PENALTIES_HPP

#include <string>

#include "scp/problem.hpp"

namespace scp {

enum class PenaltyKind { L1, Scad, Lq, Log, CappedL1 };

std::string penalty_kind_name(PenaltyKind k);
PenaltyKind penalty_kind_from_name(const std::string& s);

/// One of the five sparsity penalties h: [0, inf) -> [0, inf) together with
/// the parameters of its DC split h(t) = lambda t - (lambda t - h(t)).
///   L1        h(t) = lambda t
///   Scad      h(t) = lambda t                              on [0, lambda]
///             h(t) = (-t^2 + 2 a lambda t - lambda^2)
///                      / (2 (a - 1))                       on (lambda, a lambda]
///             h(t) = (a + 1) lambda^2 / 2                  beyond
///   Lq        h(t) = lambda (t + eps)^q       (note h(0) = lambda eps^q != 0)
///   Log       h(t) = lambda log(t + eps) - lambda log(eps)
///   CappedL1  h(t) = lambda min(t, eta)
struct PenaltySpec {
  PenaltyKind kind = PenaltyKind::L1;
  double lambda = 1.0;
  double a = 3.7;    // Scad, > 1
  double q = 0.5;    // Lq, in (0, 1)
  double eps = 0.1;  // Lq and Log, > 0
  double eta = 0.1;  // CappedL1, > 0
};

void validate(const PenaltySpec& spec);

// h(t); t < 0 is an input error.
double penalty_value(const PenaltySpec& spec, double t);

// Right derivative h'(t+); t < 0 is an input error.
double penalty_right_slope(const PenaltySpec& spec, double t);

// The convex remainder w(t) = lambda t - h(t) of the DC split, analytically
// extended a little past 0 so problem oracles tolerate projection dust.
// Slope selections use the right derivative everywhere (the documented kink
// rule); slope_interval returns [left, right] derivatives, which differ only
// at the capped-l1 breakpoint.
double dc_term(const PenaltySpec& spec, double t);
double dc_term_slope(const PenaltySpec& spec, double t);
std::pair<double, double> dc_term_slope_interval(const PenaltySpec& spec,
                                                 double t);

// u(y) = sum_i (lambda y_i - h(y_i)); components must be >= 0.
double u_value(const PenaltySpec& spec, const Vec& y);

// Componentwise lambda - h'(y_i+), the documented selection from the
// subdifferential of u.
Vec u_subgradient(const PenaltySpec& spec, const Vec& y);

// Reformulates   min_{x in omega} loss(x) + sum_i h(|x_i|)
// as a 2n-dimensional instance over (x, y):
//   f(x, y) = loss(x),  p(x, y) = lambda ||y||_1,  u(x, y) = sum w(y_i),
//   m = 0,  X = {(x, y): y >= |x|, x in omega}.
// `omega` may be null for the whole space, in which case prox of
// p + indicator(X) has a closed per-pair form and is registered.
ProblemInstance build_sparse_nlp(const SmoothOracle& loss, std::size_t n,
                                 SetPtr omega, const PenaltySpec& spec);

// (x, |x|), feasible in the reformulated instance for any x in omega.
Vec lift_point(const Vec& x);

// Objective of the original formulation: loss(x) + sum_i h(|x_i|).
double sparse_objective(const SmoothOracle& loss, const PenaltySpec& spec,
                        const Vec& x);

}  // namespace scp

#endif  // SCP_PENALTIES_HPP

#include "scp/oracles.hpp"

#include <cmath>

#include "scp/kernels.hpp"

namespace scp {

Vec matvec(const Mat& A, const Vec& x) {
  if (x.size() != A.cols) throw InputError("matvec: dimension mismatch");
  Vec y(A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    y[i] = kernels::dot(A.row(i), x.data(), A.cols);
  return y;
}

Vec matvec_transposed(const Mat& A, const Vec& x) {
  if (x.size() != A.rows) throw InputError("matvec_transposed: dimension mismatch");
  Vec y(A.cols, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i)
    kernels::axpy(x[i], A.row(i), y.data(), A.cols);
  return y;
}

double spectral_bound(const Mat& S) {
  if (S.rows != S.cols) throw InputError("spectral_bound: matrix not square");
  const std::size_t n = S.rows;
  if (n == 0) return 0.0;
  Vec v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lambda = 0.0;
  for (int it = 0; it < 500; ++it) {
    Vec w = matvec(S, v);
    const double nw = std::sqrt(kernels::nrm2sq(w.data(), n));
    if (nw == 0.0) return 0.0;
    lambda = kernels::dot(v.data(), w.data(), n);
    kernels::scale(1.0 / nw, w.data(), v.data(), n);
  }
  return std::fabs(lambda) * (1.0 + 1e-6) + 1e-12;
}

ConvexOracle zero_convex() {
  ConvexOracle o;
  o.name = "zero";
  o.value = [](const Vec&) { return 0.0; };
  o.subgradient = [](const Vec& x) { return Vec(x.size(), 0.0); };
  o.prox = [](double, const Vec& w) { return w; };
  o.subdiff_box = [](const Vec& x) {
    return SubdiffBox{Vec(x.size(), 0.0), Vec(x.size(), 0.0)};
  };
  o.smooth_curvature = 0.0;
  o.zero = true;
  return o;
}

SmoothOracle zero_smooth(const std::string& name) {
  SmoothOracle o;
  o.name = name;
  o.lipschitz_grad = 0.0;
  o.value = [](const Vec&) { return 0.0; };
  o.gradient = [](const Vec& x) { return Vec(x.size(), 0.0); };
  return o;
}

SmoothOracle quadratic_smooth(const Mat& Q, const Vec& b, double c,
                              const std::string& name, double lipschitz) {
  if (Q.rows != Q.cols || b.size() != Q.rows)
    throw InputError("quadratic_smooth: inconsistent shapes");
  SmoothOracle o;
  o.name = name;
  o.lipschitz_grad = lipschitz >= 0.0 ? lipschitz : spectral_bound(Q);
  o.value = [Q, b, c](const Vec& x) {
    Vec Qx = matvec(Q, x);
    return 0.5 * kernels::dot(x.data(), Qx.data(), x.size()) +
           kernels::dot(b.data(), x.data(), x.size()) + c;
  };
  o.gradient = [Q, b](const Vec& x) {
    Vec g = matvec(Q, x);
    kernels::axpy(1.0, b.data(), g.data(), g.size());
    return g;
  };
  return o;
}

SmoothOracle least_squares_smooth(const Mat& A, const Vec& b,
                                  const std::string& name) {
  if (b.size() != A.rows) throw InputError("least_squares_smooth: shapes");
  // Gram matrix for the Lipschitz constant.
  Mat G;
  G.rows = G.cols = A.cols;
  G.data.assign(A.cols * A.cols, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j)
      kernels::axpy(A.at(i, j), A.row(i), G.row(j), A.cols);
  SmoothOracle o;
  o.name = name;
  o.lipschitz_grad = spectral_bound(G);
  o.value = [A, b](const Vec& x) {
    Vec r = matvec(A, x);
    kernels::axpy(-1.0, b.data(), r.data(), r.size());
    return 0.5 * kernels::nrm2sq(r.data(), r.size());
  };
  o.gradient = [A, b](const Vec& x) {
    Vec r = matvec(A, x);
    kernels::axpy(-1.0, b.data(), r.data(), r.size());
    return matvec_transposed(A, r);
  };
  return o;
}

ConvexOracle l1_oracle(double weight, const std::string& name) {
  if (weight < 0.0) throw InputError("l1_oracle: negative weight");
  ConvexOracle o;
  o.name = name;
  o.value = [weight](const Vec& x) {
    double s = 0.0;
    for (double xi : x) s += std::fabs(xi);
    return weight * s;
  };
  o.subgradient = [weight](const Vec& x) {
    Vec g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      g[i] = x[i] > 0.0 ? weight : (x[i] < 0.0 ? -weight : 0.0);
    return g;
  };
  o.prox = [weight](double t, const Vec& w) {
    Vec z(w.size());
    kernels::soft_threshold(w.data(), t * weight, z.data(), w.size());
    return z;
  };
  o.subdiff_box = [weight](const Vec& x) {
    SubdiffBox b{Vec(x.size()), Vec(x.size())};
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > 0.0) {
        b.lo[i] = b.hi[i] = weight;
      } else if (x[i] < 0.0) {
        b.lo[i] = b.hi[i] = -weight;
      } else {
        b.lo[i] = -weight;
        b.hi[i] = weight;
      }
    }
    return b;
  };
  return o;
}

ConvexOracle convex_from_smooth(const SmoothOracle& s,
                                double strong_convexity) {
  ConvexOracle o;
  o.name = s.name;
  o.value = s.value;
  o.subgradient = s.gradient;
  o.smooth_curvature = s.lipschitz_grad;
  o.strong_convexity = strong_convexity;
  return o;
}

namespace {
void require_finite(double v, const std::string& name) {
  if (!std::isfinite(v))
    throw OracleError("oracle '" + name + "' returned a non-finite value");
}
void require_finite(const Vec& v, const std::string& name) {
  for (double x : v) require_finite(x, name);
}
}  // namespace

double checked_value(const SmoothOracle& o, const Vec& x) {
  const double v = o.value(x);
  require_finite(v, o.name);
  return v;
}

double checked_value(const ConvexOracle& o, const Vec& x) {
  const double v = o.value(x);
  require_finite(v, o.name);
  return v;
}

Vec checked_gradient(const SmoothOracle& o, const Vec& x) {
  Vec g = o.gradient(x);
  if (g.size() != x.size())
    throw OracleError("oracle '" + o.name + "' returned a gradient of wrong size");
  require_finite(g, o.name);
  return g;
}

Vec checked_subgradient(const ConvexOracle& o, const Vec& x) {
  Vec g = o.subgradient(x);
  if (g.size() != x.size())
    throw OracleError("oracle '" + o.name + "' returned a subgradient of wrong size");
  require_finite(g, o.name);
  return g;
}

}  // namespace scp

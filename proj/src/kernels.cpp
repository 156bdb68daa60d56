#include "scp/kernels.hpp"

#include <cmath>
#include <cstdlib>

namespace scp::kernels {

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double nrm2sq_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return s;
}

double max_abs_scalar(const double* a, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::fabs(a[i]);
    if (v > m) m = v;
  }
  return m;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void waxpby_scalar(double a, const double* x, double b, const double* y,
                   double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] = a * x[i] + b * y[i];
}

void sub_scalar(const double* x, const double* y, double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] = x[i] - y[i];
}

void scale_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = alpha * x[i];
}

void clamp_scalar(const double* x, const double* lo, const double* hi,
                  double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double v = x[i];
    if (v < lo[i]) v = lo[i];
    if (v > hi[i]) v = hi[i];
    z[i] = v;
  }
}

void soft_threshold_scalar(const double* x, double kappa, double* z,
                           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    const double m = std::fabs(v) - kappa;
    z[i] = std::copysign(m > 0.0 ? m : 0.0, v);
  }
}

}  // namespace detail

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {
Backend g_backend = cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

Backend active_backend() { return g_backend; }

Backend set_backend(Backend b) {
  Backend prev = g_backend;
  if (b == Backend::Avx2 && !cpu_has_avx2()) b = Backend::Scalar;
  g_backend = b;
  return prev;
}

std::string backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

#if defined(__x86_64__) || defined(_M_X64)
#define SCP_DISPATCH(fn, ...)                                  \
  do {                                                         \
    if (g_backend == Backend::Avx2)                            \
      return detail::fn##_avx2(__VA_ARGS__);                   \
    return detail::fn##_scalar(__VA_ARGS__);                   \
  } while (0)
#else
#define SCP_DISPATCH(fn, ...) return detail::fn##_scalar(__VA_ARGS__)
#endif

double dot(const double* a, const double* b, std::size_t n) {
  SCP_DISPATCH(dot, a, b, n);
}

double nrm2sq(const double* a, std::size_t n) { SCP_DISPATCH(nrm2sq, a, n); }

double max_abs(const double* a, std::size_t n) { SCP_DISPATCH(max_abs, a, n); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  SCP_DISPATCH(axpy, alpha, x, y, n);
}

void waxpby(double a, const double* x, double b, const double* y, double* z,
            std::size_t n) {
  SCP_DISPATCH(waxpby, a, x, b, y, z, n);
}

void sub(const double* x, const double* y, double* z, std::size_t n) {
  SCP_DISPATCH(sub, x, y, z, n);
}

void scale(double alpha, const double* x, double* y, std::size_t n) {
  SCP_DISPATCH(scale, alpha, x, y, n);
}

void clamp(const double* x, const double* lo, const double* hi, double* z,
           std::size_t n) {
  SCP_DISPATCH(clamp, x, lo, hi, z, n);
}

void soft_threshold(const double* x, double kappa, double* z, std::size_t n) {
  SCP_DISPATCH(soft_threshold, x, kappa, z, n);
}

#undef SCP_DISPATCH

}  // namespace scp::kernels

#ifndef SCP_KERNELS_HPP
#define SCP_KERNELS_HPP

#include <cstddef>
#include <string>

// Dense vector kernels used by the solver inner loops. Every kernel has a
// scalar reference implementation and (on x86-64) an AVX2 variant; the
// active backend is picked once at startup from CPUID and can be overridden
// programmatically (tests compare the two paths).
//
// Elementwise kernels produce bit-identical results on both backends.
// Reductions (dot, nrm2sq) accumulate in a different order under SIMD, so
// they agree only up to roundoff; the backend never changes during a run,
// which keeps traces reproducible on a given machine.

namespace scp::kernels {

enum class Backend { Scalar, Avx2 };

// Backend selected at startup (Avx2 when the CPU supports it).
Backend active_backend();

// Force a backend; returns the previous one. Asking for Avx2 on a machine
// without it falls back to Scalar.
Backend set_backend(Backend b);

bool cpu_has_avx2();

std::string backend_name(Backend b);

// r = sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// r = sum_i a[i]^2
double nrm2sq(const double* a, std::size_t n);

// r = max_i |a[i]|   (0 for n = 0)
double max_abs(const double* a, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// z[i] = a * x[i] + b * y[i]
void waxpby(double a, const double* x, double b, const double* y, double* z,
            std::size_t n);

// z[i] = x[i] - y[i]
void sub(const double* x, const double* y, double* z, std::size_t n);

// y[i] = alpha * x[i]
void scale(double alpha, const double* x, double* y, std::size_t n);

// z[i] = min(max(x[i], lo[i]), hi[i])
void clamp(const double* x, const double* lo, const double* hi, double* z,
           std::size_t n);

// z[i] = sign(x[i]) * max(|x[i]| - kappa, 0), kappa >= 0
void soft_threshold(const double* x, double kappa, double* z, std::size_t n);

namespace detail {
// Scalar reference path, exposed for equivalence tests.
double dot_scalar(const double* a, const double* b, std::size_t n);
double nrm2sq_scalar(const double* a, std::size_t n);
double max_abs_scalar(const double* a, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void waxpby_scalar(double a, const double* x, double b, const double* y,
                   double* z, std::size_t n);
void sub_scalar(const double* x, const double* y, double* z, std::size_t n);
void scale_scalar(double alpha, const double* x, double* y, std::size_t n);
void clamp_scalar(const double* x, const double* lo, const double* hi,
                  double* z, std::size_t n);
void soft_threshold_scalar(const double* x, double kappa, double* z,
                           std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* a, const double* b, std::size_t n);
double nrm2sq_avx2(const double* a, std::size_t n);
double max_abs_avx2(const double* a, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void waxpby_avx2(double a, const double* x, double b, const double* y,
                 double* z, std::size_t n);
void sub_avx2(const double* x, const double* y, double* z, std::size_t n);
void scale_avx2(double alpha, const double* x, double* y, std::size_t n);
void clamp_avx2(const double* x, const double* lo, const double* hi, double* z,
                std::size_t n);
void soft_threshold_avx2(const double* x, double kappa, double* z,
                         std::size_t n);
#endif
}  // namespace detail

}  // namespace scp::kernels

#endif  // SCP_KERNELS_HPP

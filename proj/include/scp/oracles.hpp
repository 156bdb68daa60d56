#ifndef SCP_ORACLES_HPP
#define SCP_ORACLES_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scp {

using Vec = std::vector<double>;

/// Invalid caller input (dimension mismatch, bad index, bad option value).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oracle returned a non-finite value or was queried outside its domain.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix, just enough for quadratic and least-squares
/// oracles.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;  // rows * cols, row-major

  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

Vec matvec(const Mat& A, const Vec& x);
Vec matvec_transposed(const Mat& A, const Vec& x);

// Largest eigenvalue of a symmetric PSD matrix by power iteration with a
// deterministic start, inflated by a small safety margin so it is a valid
// Lipschitz constant.
double spectral_bound(const Mat& S);

/// Differentiable function with a declared Lipschitz constant for its
/// gradient (the constant is user-supplied and property-tested by sampling).
struct SmoothOracle {
  std::string name = "f";
  double lipschitz_grad = 0.0;
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
};

/// Componentwise subdifferential bounds of a separable convex function.
struct SubdiffBox {
  Vec lo;
  Vec hi;
};

/// Convex (possibly nonsmooth) function. `subgradient` returns one fixed
/// selection; the methods never need more. Optional hooks:
///   prox        — argmin_z val(z) + ||z - w||^2 / (2 t)
///   subdiff_box — componentwise subdifferential intervals (separable only),
///                 used to refine projection-residual stationarity checks
struct ConvexOracle {
  std::string name = "convex";
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> subgradient;
  std::function<Vec(double, const Vec&)> prox;
  std::function<SubdiffBox(const Vec&)> subdiff_box;
  double smooth_curvature = -1.0;  // >= 0: differentiable, gradient L-Lipschitz
  double strong_convexity = 0.0;
  bool zero = false;

  bool has_prox() const { return static_cast<bool>(prox); }
  bool is_smooth() const { return smooth_curvature >= 0.0; }
};

ConvexOracle zero_convex();
SmoothOracle zero_smooth(const std::string& name = "f");

// 0.5 x'Qx + b'x + c with Q symmetric PSD for convex use; lipschitz_grad is
// computed from Q unless `lipschitz` is nonnegative.
SmoothOracle quadratic_smooth(const Mat& Q, const Vec& b, double c,
                              const std::string& name = "quadratic",
                              double lipschitz = -1.0);

// 0.5 ||Ax - b||^2
SmoothOracle least_squares_smooth(const Mat& A, const Vec& b,
                                  const std::string& name = "least_squares");

// weight * ||x||_1 with soft-threshold prox; subgradient selection is
// weight*sign(x) with 0 at kinks.
ConvexOracle l1_oracle(double weight, const std::string& name = "l1");

// Wrap a smooth convex function as a ConvexOracle (gradient doubles as the
// subgradient selection).
ConvexOracle convex_from_smooth(const SmoothOracle& s,
                                double strong_convexity = 0.0);

// Evaluate with finiteness checking; throws OracleError naming the oracle.
double checked_value(const SmoothOracle& o, const Vec& x);
double checked_value(const ConvexOracle& o, const Vec& x);
Vec checked_gradient(const SmoothOracle& o, const Vec& x);
Vec checked_subgradient(const ConvexOracle& o, const Vec& x);

}  // namespace scp

#endif  // SCP_ORACLES_HPP

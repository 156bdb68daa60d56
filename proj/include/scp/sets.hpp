#ifndef SCP_SETS_HPP
#define SCP_SETS_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scp/oracles.hpp"

namespace scp {

/// Closed convex set with a tolerance-based membership test and an exact
/// Euclidean projection. Implementations are immutable and thread-safe.
class SetOracle {
 public:
  virtual ~SetOracle() = default;
  virtual std::size_t dim() const = 0;
  virtual std::string tag() const = 0;
  virtual bool contains(const Vec& x, double tol) const = 0;
  virtual Vec project(const Vec& z) const = 0;
  // Whole space: projection is the identity.
  virtual bool is_whole_space() const { return false; }
  // Sets that project componentwise expose clamp bounds (box semantics).
  virtual bool componentwise_bounds(Vec* lo, Vec* hi) const {
    (void)lo, (void)hi;
    return false;
  }
  // Number of (x_i, y_i) pairs when the set is exactly the product of
  // epigraphs {y_i >= |x_i|} with no inner omega; 0 otherwise. Lets residual
  // refinement treat the pairs exactly.
  virtual std::size_t epi_pairs_trivial_omega() const { return 0; }
};

using SetPtr = std::shared_ptr<const SetOracle>;

// Euclidean projection of (a, b) onto {(x, y): y >= |x|}. Identity when
// b >= |a|; the apex (0, 0) when b <= -|a|; otherwise the nearest cone face
// point ((sign a) t, t) with t = (|a| + b) / 2.
std::pair<double, double> project_epigraph_abs(double a, double b);

SetPtr make_whole_space(std::size_t n);
// Box [lo, hi], entries may be +-infinity.
SetPtr make_box(Vec lo, Vec hi);
SetPtr make_ball(Vec center, double radius);
// Intersection of halfspaces a_j.x <= b_j. Each row of A is one (unscaled)
// normal. Projection uses the closed form for one halfspace and Dykstra for
// several.
SetPtr make_halfspaces(Mat A, Vec b);
// {(x, y) in R^{2n}: y_i >= |x_i|, x in omega}; omega may be null (R^n).
// Layout: the first n entries are x, the last n are y.
SetPtr make_epi_abs_product(std::size_t n, SetPtr omega);
SetPtr make_product(std::vector<SetPtr> parts);

struct DykstraControls {
  int max_cycles = 10000;
  double tol = 1e-12;
};

// Dykstra's alternating-projection scheme over a list of prox/projection
// maps; computes the projection onto the intersection (or, with proximal
// maps, the prox of the sum). Throws OracleError if the cap is hit before
// the cycle displacement drops below tol.
Vec dykstra(const std::vector<std::function<Vec(const Vec&)>>& maps,
            const Vec& z, const DykstraControls& ctl = {});

}  // namespace scp

#endif  // SCP_SETS_HPP

#include "scp/sets.hpp"

#include <cmath>
#include <limits>

#include "scp/kernels.hpp"

namespace scp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::pair<double, double> project_epigraph_abs(double a, double b) {
  const double aa = std::fabs(a);
  if (b >= aa) return {a, b};
  if (b <= -aa) return {0.0, 0.0};
  const double t = 0.5 * (aa + b);
  return {a >= 0.0 ? t : -t, t};
}

Vec dykstra(const std::vector<std::function<Vec(const Vec&)>>& maps,
            const Vec& z, const DykstraControls& ctl) {
  if (maps.empty()) return z;
  if (maps.size() == 1) return maps[0](z);
  const std::size_t n = z.size();
  Vec x = z;
  std::vector<Vec> corrections(maps.size(), Vec(n, 0.0));
  Vec prev(n), shifted(n);
  for (int cycle = 0; cycle < ctl.max_cycles; ++cycle) {
    prev = x;
    for (std::size_t j = 0; j < maps.size(); ++j) {
      kernels::waxpby(1.0, x.data(), 1.0, corrections[j].data(),
                      shifted.data(), n);
      x = maps[j](shifted);
      kernels::sub(shifted.data(), x.data(), corrections[j].data(), n);
    }
    kernels::sub(x.data(), prev.data(), shifted.data(), n);
    if (std::sqrt(kernels::nrm2sq(shifted.data(), n)) <= ctl.tol) return x;
  }
  throw OracleError("dykstra: iteration cap exceeded before reaching tolerance");
}

namespace {

class WholeSpace final : public SetOracle {
 public:
  explicit WholeSpace(std::size_t n) : n_(n) {}
  std::size_t dim() const override { return n_; }
  std::string tag() const override { return "all"; }
  bool contains(const Vec& x, double) const override { return x.size() == n_; }
  Vec project(const Vec& z) const override { return z; }
  bool is_whole_space() const override { return true; }
  bool componentwise_bounds(Vec* lo, Vec* hi) const override {
    if (lo) lo->assign(n_, -kInf);
    if (hi) hi->assign(n_, kInf);
    return true;
  }

 private:
  std::size_t n_;
};

class BoxSet final : public SetOracle {
 public:
  BoxSet(Vec lo, Vec hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() != hi_.size()) throw InputError("box: lo/hi sizes differ");
    for (std::size_t i = 0; i < lo_.size(); ++i)
      if (!(lo_[i] <= hi_[i])) throw InputError("box: lo > hi");
  }
  std::size_t dim() const override { return lo_.size(); }
  std::string tag() const override { return "box"; }
  bool contains(const Vec& x, double tol) const override {
    if (x.size() != lo_.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < lo_[i] - tol || x[i] > hi_[i] + tol) return false;
    return true;
  }
  Vec project(const Vec& z) const override {
    Vec out(z.size());
    kernels::clamp(z.data(), lo_.data(), hi_.data(), out.data(), z.size());
    return out;
  }
  bool componentwise_bounds(Vec* lo, Vec* hi) const override {
    if (lo) *lo = lo_;
    if (hi) *hi = hi_;
    return true;
  }

 private:
  Vec lo_, hi_;
};

class BallSet final : public SetOracle {
 public:
  BallSet(Vec center, double radius)
      : center_(std::move(center)), radius_(radius) {
    if (radius_ < 0.0) throw InputError("ball: negative radius");
  }
  std::size_t dim() const override { return center_.size(); }
  std::string tag() const override { return "ball"; }
  bool contains(const Vec& x, double tol) const override {
    if (x.size() != center_.size()) return false;
    Vec d(x.size());
    kernels::sub(x.data(), center_.data(), d.data(), x.size());
    return std::sqrt(kernels::nrm2sq(d.data(), d.size())) <= radius_ + tol;
  }
  Vec project(const Vec& z) const override {
    Vec d(z.size());
    kernels::sub(z.data(), center_.data(), d.data(), z.size());
    const double nd = std::sqrt(kernels::nrm2sq(d.data(), d.size()));
    if (nd <= radius_) return z;
    Vec out(z.size());
    kernels::waxpby(1.0, center_.data(), radius_ / nd, d.data(), out.data(),
                    z.size());
    return out;
  }

 private:
  Vec center_;
  double radius_;
};

class HalfspaceSet final : public SetOracle {
 public:
  HalfspaceSet(Mat A, Vec b) : A_(std::move(A)), b_(std::move(b)) {
    if (A_.rows != b_.size()) throw InputError("halfspaces: shapes");
    // Normalize rows so the membership tolerance is a distance.
    for (std::size_t j = 0; j < A_.rows; ++j) {
      const double nr = std::sqrt(kernels::nrm2sq(A_.row(j), A_.cols));
      if (nr == 0.0) throw InputError("halfspaces: zero normal");
      kernels::scale(1.0 / nr, A_.row(j), A_.row(j), A_.cols);
      b_[j] /= nr;
    }
  }
  std::size_t dim() const override { return A_.cols; }
  std::string tag() const override { return "halfspace-intersection"; }
  bool contains(const Vec& x, double tol) const override {
    if (x.size() != A_.cols) return false;
    for (std::size_t j = 0; j < A_.rows; ++j)
      if (kernels::dot(A_.row(j), x.data(), A_.cols) > b_[j] + tol)
        return false;
    return true;
  }
  Vec project(const Vec& z) const override {
    if (A_.rows == 1) return project_one(0, z);
    std::vector<std::function<Vec(const Vec&)>> maps;
    maps.reserve(A_.rows);
    for (std::size_t j = 0; j < A_.rows; ++j)
      maps.emplace_back([this, j](const Vec& w) { return project_one(j, w); });
    return dykstra(maps, z);
  }

 private:
  Vec project_one(std::size_t j, const Vec& z) const {
    const double viol = kernels::dot(A_.row(j), z.data(), A_.cols) - b_[j];
    if (viol <= 0.0) return z;
    Vec out = z;
    kernels::axpy(-viol, A_.row(j), out.data(), out.size());
    return out;
  }
  Mat A_;
  Vec b_;
};

class EpiAbsProduct final : public SetOracle {
 public:
  EpiAbsProduct(std::size_t n, SetPtr omega) : n_(n), omega_(std::move(omega)) {
    if (omega_ && omega_->dim() != n_)
      throw InputError("epi_abs_product: omega dimension mismatch");
    if (omega_ && omega_->is_whole_space()) omega_.reset();
  }
  std::size_t dim() const override { return 2 * n_; }
  std::string tag() const override { return "epigraph-product"; }
  bool contains(const Vec& w, double tol) const override {
    if (w.size() != 2 * n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (w[n_ + i] < std::fabs(w[i]) - tol) return false;
    if (omega_) {
      Vec x(w.begin(), w.begin() + n_);
      return omega_->contains(x, tol);
    }
    return true;
  }
  std::size_t epi_pairs_trivial_omega() const override {
    return omega_ ? 0 : n_;
  }
  Vec project(const Vec& z) const override {
    if (!omega_) return project_cone(z);
    std::vector<std::function<Vec(const Vec&)>> maps;
    maps.emplace_back([this](const Vec& w) { return project_cone(w); });
    maps.emplace_back([this](const Vec& w) {
      Vec x(w.begin(), w.begin() + n_);
      Vec px = omega_->project(x);
      Vec out = w;
      std::copy(px.begin(), px.end(), out.begin());
      return out;
    });
    return dykstra(maps, z);
  }

 private:
  Vec project_cone(const Vec& z) const {
    Vec out(2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      auto [xi, yi] = project_epigraph_abs(z[i], z[n_ + i]);
      out[i] = xi;
      out[n_ + i] = yi;
    }
    return out;
  }
  std::size_t n_;
  SetPtr omega_;
};

class ProductSet final : public SetOracle {
 public:
  explicit ProductSet(std::vector<SetPtr> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
      if (!p) throw InputError("product: null part");
      dim_ += p->dim();
    }
  }
  std::size_t dim() const override { return dim_; }
  std::string tag() const override { return "cartesian-product"; }
  bool contains(const Vec& x, double tol) const override {
    if (x.size() != dim_) return false;
    std::size_t off = 0;
    for (const auto& p : parts_) {
      Vec piece(x.begin() + off, x.begin() + off + p->dim());
      if (!p->contains(piece, tol)) return false;
      off += p->dim();
    }
    return true;
  }
  Vec project(const Vec& z) const override {
    Vec out;
    out.reserve(dim_);
    std::size_t off = 0;
    for (const auto& p : parts_) {
      Vec piece(z.begin() + off, z.begin() + off + p->dim());
      Vec pp = p->project(piece);
      out.insert(out.end(), pp.begin(), pp.end());
      off += p->dim();
    }
    return out;
  }
  bool componentwise_bounds(Vec* lo, Vec* hi) const override {
    Vec alo, ahi;
    for (const auto& p : parts_) {
      Vec plo, phi;
      if (!p->componentwise_bounds(&plo, &phi)) return false;
      alo.insert(alo.end(), plo.begin(), plo.end());
      ahi.insert(ahi.end(), phi.begin(), phi.end());
    }
    if (lo) *lo = std::move(alo);
    if (hi) *hi = std::move(ahi);
    return true;
  }

 private:
  std::vector<SetPtr> parts_;
  std::size_t dim_ = 0;
};

}  // namespace

SetPtr make_whole_space(std::size_t n) {
  return std::make_shared<WholeSpace>(n);
}
SetPtr make_box(Vec lo, Vec hi) {
  return std::make_shared<BoxSet>(std::move(lo), std::move(hi));
}
SetPtr make_ball(Vec center, double radius) {
  return std::make_shared<BallSet>(std::move(center), radius);
}
SetPtr make_halfspaces(Mat A, Vec b) {
  return std::make_shared<HalfspaceSet>(std::move(A), std::move(b));
}
SetPtr make_epi_abs_product(std::size_t n, SetPtr omega) {
  return std::make_shared<EpiAbsProduct>(n, std::move(omega));
}
SetPtr make_product(std::vector<SetPtr> parts) {
  return std::make_shared<ProductSet>(std::move(parts));
}

}  // namespace scp

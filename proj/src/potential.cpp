#include "scatter1d/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace scatter1d {

namespace {

// Natural cubic spline through (x_i, y_i); complex values are interpolated
// componentwise through the complex second-derivative solve.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<Cx> y)
      : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2) throw std::invalid_argument("sampled potential needs >= 2 points");
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(x_[i] < x_[i + 1]))
        throw std::invalid_argument("sampled potential grid must be increasing");
    if (y_.size() != n)
      throw std::invalid_argument("sampled potential: |x| != |v|");

    m_.assign(n, Cx{0.0});
    if (n == 2) return;
    // Tridiagonal system for the interior second derivatives.
    std::vector<double> diag(n, 0.0), sub(n, 0.0), sup(n, 0.0);
    std::vector<Cx> rhs(n, Cx{0.0});
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x_[i] - x_[i - 1];
      const double h1 = x_[i + 1] - x_[i];
      sub[i] = h0 / 6.0;
      diag[i] = (h0 + h1) / 3.0;
      sup[i] = h1 / 6.0;
      rhs[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
    }
    for (std::size_t i = 2; i + 1 < n; ++i) {
      const double w = sub[i] / diag[i - 1];
      diag[i] -= w * sup[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      Cx v = rhs[i];
      if (i + 2 < n) v -= sup[i] * m_[i + 1];
      m_[i] = v / diag[i];
      if (i == 1) break;
    }
  }

  Cx eval(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = it == x_.begin() ? 0 : std::size_t(it - x_.begin()) - 1;
    i = std::min(i, x_.size() - 2);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) *
               (h * h / 6.0);
  }

 private:
  std::vector<double> x_;
  std::vector<Cx> y_;
  std::vector<Cx> m_;
};

}  // namespace

struct Potential::Impl {
  Kind kind = Kind::Derived;
  std::function<Cx(double, double)> fn;  // handles windowing itself
  Interval support{0.0, 0.0};
  std::vector<double> breaks;  // interior discontinuities, sorted

  std::shared_ptr<const BarrierParams> barrier;
  std::shared_ptr<const ModExpParams> modexp;
  std::shared_ptr<const SampledParams> sampled;
};

Potential::Potential(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Potential::Potential() : Potential(zero()) {}

Potential Potential::zero() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Zero;
  impl->fn = [](double, double) { return Cx{0.0}; };
  impl->support = {0.0, 0.0};
  return Potential(std::move(impl));
}

Potential Potential::barrier(Cx height, double length) {
  if (!(length > 0.0)) throw std::invalid_argument("barrier: length must be > 0");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Barrier;
  impl->support = {0.0, length};
  impl->fn = [height, length](double x, double) {
    return (x >= 0.0 && x <= length) ? height : Cx{0.0};
  };
  impl->barrier = std::make_shared<BarrierParams>(BarrierParams{height, length});
  return Potential(std::move(impl));
}

Potential Potential::modulated_exponential(Cx height, double modulation_k,
                                           double length) {
  if (!(length > 0.0) || !(modulation_k > 0.0))
    throw std::invalid_argument("modulated_exponential: bad parameters");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::ModulatedExponential;
  impl->support = {0.0, length};
  const Cx i_unit{0.0, 1.0};
  impl->fn = [height, modulation_k, length, i_unit](double x, double) {
    if (x < 0.0 || x > length) return Cx{0.0};
    return height * std::exp(-4.0 * i_unit * modulation_k * x);
  };
  impl->modexp = std::make_shared<ModExpParams>(
      ModExpParams{height, modulation_k, length});
  return Potential(std::move(impl));
}

Potential Potential::from_index(std::function<Cx(double)> n_squared,
                                double reference_k, Interval support) {
  if (!(reference_k > 0.0))
    throw std::invalid_argument("from_index: reference_k must be > 0");
  if (!(support.lo < support.hi))
    throw std::invalid_argument("from_index: empty support");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::IndexProfile;
  impl->support = support;
  impl->fn = [n2 = std::move(n_squared), support](double x, double k) {
    if (x < support.lo || x > support.hi) return Cx{0.0};
    return k * k * (Cx{1.0} - n2(x));
  };
  return Potential(std::move(impl));
}

Potential Potential::sampled(std::vector<double> x, std::vector<Cx> v) {
  if (x.size() < 2 || x.size() != v.size())
    throw std::invalid_argument("sampled: need matching grids with >= 2 points");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Sampled;
  impl->support = {x.front(), x.back()};
  auto params = std::make_shared<SampledParams>(SampledParams{x, v});
  auto spline = std::make_shared<CubicSpline>(std::move(x), std::move(v));
  const Interval sup = impl->support;
  impl->fn = [spline, sup](double xx, double) {
    if (xx < sup.lo || xx > sup.hi) return Cx{0.0};
    return spline->eval(xx);
  };
  impl->sampled = std::move(params);
  return Potential(std::move(impl));
}

Potential Potential::closure(std::function<Cx(double, double)> f,
                             Interval support,
                             std::vector<double> interior_breakpoints) {
  if (!(support.lo <= support.hi))
    throw std::invalid_argument("closure: inverted support");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Closure;
  impl->support = support;
  impl->fn = [f = std::move(f), support](double x, double k) {
    if (x < support.lo || x > support.hi) return Cx{0.0};
    return f(x, k);
  };
  std::sort(interior_breakpoints.begin(), interior_breakpoints.end());
  impl->breaks = std::move(interior_breakpoints);
  return Potential(std::move(impl));
}

Cx Potential::operator()(double x, double k) const { return impl_->fn(x, k); }

Interval Potential::support() const { return impl_->support; }

Potential::Kind Potential::kind() const { return impl_->kind; }

const std::vector<double>& Potential::breakpoints() const {
  return impl_->breaks;
}

Potential Potential::truncated(double a) const {
  const Interval sup = impl_->support;
  const double cut = std::clamp(a, sup.lo, sup.hi);
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Derived;
  impl->support = {sup.lo, cut};
  impl->fn = [base = impl_, a](double x, double k) {
    return x <= a ? base->fn(x, k) : Cx{0.0};
  };
  for (double b : impl_->breaks)
    if (b < cut) impl->breaks.push_back(b);
  return Potential(std::move(impl));
}

Potential Potential::upper_remainder(double a) const {
  const Interval sup = impl_->support;
  const double cut = std::clamp(a, sup.lo, sup.hi);
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Derived;
  impl->support = {cut, sup.hi};
  // Closed at the cut: solvers sample the support edge itself, and the edge
  // value must be the interior limit for the step across it to converge.
  impl->fn = [base = impl_, cut](double x, double k) {
    return x >= cut ? base->fn(x, k) : Cx{0.0};
  };
  for (double b : impl_->breaks)
    if (b > cut) impl->breaks.push_back(b);
  return Potential(std::move(impl));
}

Potential Potential::parity_reflected() const {
  const Interval sup = impl_->support;
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Derived;
  impl->support = {-sup.hi, -sup.lo};
  impl->fn = [base = impl_](double x, double k) { return base->fn(-x, k); };
  for (auto it = impl_->breaks.rbegin(); it != impl_->breaks.rend(); ++it)
    impl->breaks.push_back(-*it);
  return Potential(std::move(impl));
}

const Potential::BarrierParams* Potential::barrier_params() const {
  return impl_->barrier.get();
}
const Potential::ModExpParams* Potential::modexp_params() const {
  return impl_->modexp.get();
}
const Potential::SampledParams* Potential::sampled_params() const {
  return impl_->sampled.get();
}

}  // namespace scatter1d

#ifndef SCATTER1D_COMPLEX2X2_HPP
#define SCATTER1D_COMPLEX2X2_HPP

#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>

namespace scatter1d {

using Cx = std::complex<double>;

namespace detail {
// Compensated sum of products (fma-based). det M - 1 sits many orders below
// |M11 M22| for strong barriers; a plain product difference would drown it
// in rounding.
inline double compensated_dot(
    std::initializer_list<std::pair<double, double>> terms) {
  double sum = 0.0, err = 0.0;
  for (const auto& [x, y] : terms) {
    const double p = x * y;
    const double p_err = std::fma(x, y, -p);
    const double t = sum + p;
    const double z = t - sum;
    err += p_err + (sum - (t - z)) + (p - z);
    sum = t;
  }
  return sum + err;
}
}  // namespace detail

// 2x2 complex matrix. Transfer matrices and evolution operators live here;
// for those det = 1 holds up to integration error.
struct Complex2x2 {
  Cx m11{0.0}, m12{0.0}, m21{0.0}, m22{0.0};

  static Complex2x2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Complex2x2 zero() { return {}; }

  Cx det() const {
    const double re = detail::compensated_dot(
        {{m11.real(), m22.real()},
         {-m11.imag(), m22.imag()},
         {-m12.real(), m21.real()},
         {m12.imag(), m21.imag()}});
    const double im = detail::compensated_dot(
        {{m11.real(), m22.imag()},
         {m11.imag(), m22.real()},
         {-m12.real(), m21.imag()},
         {-m12.imag(), m21.real()}});
    return {re, im};
  }

  Complex2x2 inverse() const {
    const Cx d = det();
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
  }

  // Largest entry magnitude (max norm).
  double max_abs() const {
    return std::max(std::max(std::abs(m11), std::abs(m12)),
                    std::max(std::abs(m21), std::abs(m22)));
  }

  Complex2x2 operator*(const Complex2x2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
  }

  Complex2x2 operator+(const Complex2x2& o) const {
    return {m11 + o.m11, m12 + o.m12, m21 + o.m21, m22 + o.m22};
  }

  Complex2x2 operator-(const Complex2x2& o) const {
    return {m11 - o.m11, m12 - o.m12, m21 - o.m21, m22 - o.m22};
  }

  friend Complex2x2 operator*(const Cx& s, const Complex2x2& m) {
    return {s * m.m11, s * m.m12, s * m.m21, s * m.m22};
  }
};

inline double max_abs_diff(const Complex2x2& a, const Complex2x2& b) {
  return (a - b).max_abs();
}

}  // namespace scatter1d

#endif  // SCATTER1D_COMPLEX2X2_HPP

#include "scatter1d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "scatter1d/errors.hpp"

namespace scatter1d {
namespace {

// 15-point Kronrod / 7-point Gauss nodes and weights (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Cx value;
  double err;
};

Panel gk15(const std::function<Cx(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  auto eval = [&](double x) {
    const Cx v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NonFiniteIntegrand("quadrature: integrand not finite");
    return v;
  };

  Cx result_g{0.0};
  Cx result_k{0.0};
  const Cx fc = eval(center);
  result_k = kWgk[7] * fc;
  result_g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Cx fsum = eval(center - dx) + eval(center + dx);
    result_k += kWgk[j] * fsum;
    if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = half * result_k;
  p.err = std::abs(half * (result_k - result_g));
  return p;
}

}  // namespace

Cx quadrature_real(const std::function<Cx(double)>& f, double x0, double x1,
                   const IntegratorConfig& cfg,
                   std::span<const double> breakpoints) {
  if (x0 == x1) return Cx{0.0};
  const double sign = x1 >= x0 ? 1.0 : -1.0;
  const double lo = std::min(x0, x1), hi = std::max(x0, x1);

  std::vector<double> edges{lo};
  for (double b : breakpoints)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto worse = [](const Panel& p, const Panel& q) { return p.err < q.err; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);

  Cx total{0.0};
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gk15(f, edges[i], edges[i + 1]);
    total += p.value;
    total_err += p.err;
    queue.push(std::move(p));
  }

  const std::size_t max_panels =
      std::min<std::size_t>(cfg.max_steps, 20000);
  std::size_t panels = edges.size() - 1;
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
         panels < max_panels) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval at rounding limit
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(std::move(left));
    queue.push(std::move(right));
    ++panels;
  }
  return sign * total;
}

int ArcPath::windings() const {
  return static_cast<int>(
      std::floor((phase_end - phase_begin) / 3.14159265358979323846 +
                 1e-12));
}

Cx quadrature_arc(const std::function<Cx(double, Cx)>& g, const ArcPath& path,
                  const IntegratorConfig& cfg) {
  const Cx i_unit{0.0, 1.0};
  auto integrand = [&](double phi) {
    const Cx w = std::exp(-2.0 * i_unit * phi);
    return g(phi, w) * (-2.0 * i_unit * w);
  };
  // Panel edges every quarter winding keep the oscillatory factor tame.
  std::vector<double> edges;
  const double quarter = 3.14159265358979323846 / 2.0;
  for (double p = path.phase_begin + quarter; p < path.phase_end; p += quarter)
    edges.push_back(p);
  return quadrature_real(integrand, path.phase_begin, path.phase_end, cfg,
                         edges);
}

Cx quadrature_arc(const std::function<Cx(Cx)>& g, const ArcPath& path,
                  const IntegratorConfig& cfg) {
  return quadrature_arc(
      [&g](double, Cx w) { return g(w); }, path, cfg);
}

}  // namespace scatter1d

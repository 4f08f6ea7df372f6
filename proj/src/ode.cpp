#include "scatter1d/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scatter1d/errors.hpp"

namespace scatter1d {
namespace {

// Dormand-Prince 8(5,3) coefficients (Hairer, Norsett & Wanner).
namespace dp853 {
constexpr double c2 = 0.526001519587677318785587544488e-01;
constexpr double c3 = 0.789002279381515978178381316732e-01;
constexpr double c4 = 0.118350341907227396726757197510e+00;
constexpr double c5 = 0.281649658092772603273242802490e+00;
constexpr double c6 = 0.333333333333333333333333333333e+00;
constexpr double c7 = 0.25e+00;
constexpr double c8 = 0.307692307692307692307692307692e+00;
constexpr double c9 = 0.651282051282051282051282051282e+00;
constexpr double c10 = 0.6e+00;
constexpr double c11 = 0.857142857142857142857142857142e+00;
constexpr double c14 = 0.1e+00;
constexpr double c15 = 0.2e+00;
constexpr double c16 = 0.777777777777777777777777777778e+00;

constexpr double a21 = 5.26001519587677318785587544488e-2;
constexpr double a31 = 1.97250569845378994544595329183e-2;
constexpr double a32 = 5.91751709536136983633785987549e-2;
constexpr double a41 = 2.95875854768068491816892993775e-2;
constexpr double a43 = 8.87627564304205475450678981324e-2;
constexpr double a51 = 2.41365134159266685502369798665e-1;
constexpr double a53 = -8.84549479328286085344864962717e-1;
constexpr double a54 = 9.24834003261792003115737966543e-1;
constexpr double a61 = 3.7037037037037037037037037037e-2;
constexpr double a64 = 1.70828608729473871279604482173e-1;
constexpr double a65 = 1.25467687566822425016691814123e-1;
constexpr double a71 = 3.7109375e-2;
constexpr double a74 = 1.70252211019544039314978060272e-1;
constexpr double a75 = 6.02165389804559606850219397283e-2;
constexpr double a76 = -1.7578125e-2;
constexpr double a81 = 3.70920001185047927108779319836e-2;
constexpr double a84 = 1.70383925712239993810214054705e-1;
constexpr double a85 = 1.07262030446373284651809199168e-1;
constexpr double a86 = -1.53194377486244017527936158236e-2;
constexpr double a87 = 8.27378916381402288758473766002e-3;
constexpr double a91 = 6.24110958716075717114429577812e-1;
constexpr double a94 = -3.36089262944694129406857109825e0;
constexpr double a95 = -8.68219346841726006818189891453e-1;
constexpr double a96 = 2.75920996994467083049415600797e1;
constexpr double a97 = 2.01540675504778934086186788979e1;
constexpr double a98 = -4.34898841810699588477366255144e1;
constexpr double a101 = 4.77662536438264365890433908527e-1;
constexpr double a104 = -2.48811461997166764192642586468e0;
constexpr double a105 = -5.90290826836842996371446475743e-1;
constexpr double a106 = 2.12300514481811942347288949897e1;
constexpr double a107 = 1.52792336328824235832596922938e1;
constexpr double a108 = -3.32882109689848629194453265587e1;
constexpr double a109 = -2.03312017085086261358222928593e-2;
constexpr double a111 = -9.3714243008598732571704021658e-1;
constexpr double a114 = 5.18637242884406370830023853209e0;
constexpr double a115 = 1.09143734899672957818500254654e0;
constexpr double a116 = -8.14978701074692612513997267357e0;
constexpr double a117 = -1.85200656599969598641566180701e1;
constexpr double a118 = 2.27394870993505042818970056734e1;
constexpr double a119 = 2.49360555267965238987089396762e0;
constexpr double a1110 = -3.0467644718982195003823669022e0;
constexpr double a121 = 2.27331014751653820792359768449e0;
constexpr double a124 = -1.05344954667372501984066689879e1;
constexpr double a125 = -2.00087205822486249909675718444e0;
constexpr double a126 = -1.79589318631187989172765950534e1;
constexpr double a127 = 2.79488845294199600508499808837e1;
constexpr double a128 = -2.85899827713502369474065508674e0;
constexpr double a129 = -8.87285693353062954433549289258e0;
constexpr double a1210 = 1.23605671757943030647266201528e1;
constexpr double a1211 = 6.43392746015763530355970484046e-1;

// Extra stages for 7th-order dense output.
constexpr double a141 = 5.61675022830479523392909219681e-2;
constexpr double a147 = 2.53500210216624811088794765333e-1;
constexpr double a148 = -2.46239037470802489917441475441e-1;
constexpr double a149 = -1.24191423263816360469010140626e-1;
constexpr double a1410 = 1.5329179827876569731206322685e-1;
constexpr double a1411 = 8.20105229563468988491666602057e-3;
constexpr double a1412 = 7.56789766054569976138603589584e-3;
constexpr double a1413 = -8.298e-3;
constexpr double a151 = 3.18346481635021405060768473261e-2;
constexpr double a156 = 2.83009096723667755288322961402e-2;
constexpr double a157 = 5.35419883074385676223797384372e-2;
constexpr double a158 = -5.49237485713909884646569340306e-2;
constexpr double a1511 = -1.08347328697249322858509316994e-4;
constexpr double a1512 = 3.82571090835658412954920192323e-4;
constexpr double a1513 = -3.40465008687404560802977114492e-4;
constexpr double a1514 = 1.41312443674632500278074618366e-1;
constexpr double a161 = -4.28896301583791923408573538692e-1;
constexpr double a166 = -4.69762141536116384314449447206e0;
constexpr double a167 = 7.68342119606259904184240953878e0;
constexpr double a168 = 4.06898981839711007970213554331e0;
constexpr double a169 = 3.56727187455281109270669543021e-1;
constexpr double a1613 = -1.39902416515901462129418009734e-3;
constexpr double a1614 = 2.9475147891527723389556272149e0;
constexpr double a1615 = -9.15095847217987001081870187138e0;

constexpr double b1 = 5.42937341165687622380535766363e-2;
constexpr double b6 = 4.45031289275240888144113950566e0;
constexpr double b7 = 1.89151789931450038304281599044e0;
constexpr double b8 = -5.8012039600105847814672114227e0;
constexpr double b9 = 3.1116436695781989440891606237e-1;
constexpr double b10 = -1.52160949662516078556178806805e-1;
constexpr double b11 = 2.01365400804030348374776537501e-1;
constexpr double b12 = 4.47106157277725905176885569043e-2;

constexpr double bhh1 = 0.244094488188976377952755905512e+00;
constexpr double bhh2 = 0.733846688281611857341361741547e+00;
constexpr double bhh3 = 0.220588235294117647058823529412e-01;

constexpr double er1 = 0.1312004499419488073250102996e-01;
constexpr double er6 = -0.1225156446376204440720569753e+01;
constexpr double er7 = -0.4957589496572501915214079952e+00;
constexpr double er8 = 0.1664377182454986536961530415e+01;
constexpr double er9 = -0.3503288487499736816886487290e+00;
constexpr double er10 = 0.3341791187130174790297318841e+00;
constexpr double er11 = 0.8192320648511571246570742613e-01;
constexpr double er12 = -0.2235530786388629525884427845e-01;

constexpr double d41 = -0.84289382761090128651353491142e+01;
constexpr double d46 = 0.56671495351937776962531783590e+00;
constexpr double d47 = -0.30689499459498916912797304727e+01;
constexpr double d48 = 0.23846676565120698287728149680e+01;
constexpr double d49 = 0.21170345824450282767155149946e+01;
constexpr double d410 = -0.87139158377797299206789907490e+00;
constexpr double d411 = 0.22404374302607882758541771650e+01;
constexpr double d412 = 0.63157877876946881815570249290e+00;
constexpr double d413 = -0.88990336451333310820698117400e-01;
constexpr double d414 = 0.18148505520854727256656404962e+02;
constexpr double d415 = -0.91946323924783554000451984436e+01;
constexpr double d416 = -0.44360363875948939664310572000e+01;
constexpr double d51 = 0.10427508642579134603413151009e+02;
constexpr double d56 = 0.24228349177525818288430175319e+03;
constexpr double d57 = 0.16520045171727028198505394887e+03;
constexpr double d58 = -0.37454675472269020279518312152e+03;
constexpr double d59 = -0.22113666853125306036270938578e+02;
constexpr double d510 = 0.77334326684722638389603898808e+01;
constexpr double d511 = -0.30674084731089398182061213626e+02;
constexpr double d512 = -0.93321305264302278729567221706e+01;
constexpr double d513 = 0.15697238121770843886131091075e+02;
constexpr double d514 = -0.31139403219565177677282850411e+02;
constexpr double d515 = -0.93529243588444783865713862664e+01;
constexpr double d516 = 0.35816841486394083752465898540e+02;
constexpr double d61 = 0.19985053242002433820987653617e+02;
constexpr double d66 = -0.38703730874935176555105901742e+03;
constexpr double d67 = -0.18917813819516756882830838328e+03;
constexpr double d68 = 0.52780815920542364900561016686e+03;
constexpr double d69 = -0.11573902539959630126141871134e+02;
constexpr double d610 = 0.68812326946963000169666922661e+01;
constexpr double d611 = -0.10006050966910838403183860980e+01;
constexpr double d612 = 0.77771377980534432092869265740e+00;
constexpr double d613 = -0.27782057523535084065932004339e+01;
constexpr double d614 = -0.60196695231264120758267380846e+02;
constexpr double d615 = 0.84320405506677161018159903784e+02;
constexpr double d616 = 0.11992291136182789328035130030e+02;
constexpr double d71 = -0.25693933462703749003312586129e+02;
constexpr double d76 = -0.15418974869023643374053993627e+03;
constexpr double d77 = -0.23152937917604549567536039109e+03;
constexpr double d78 = 0.35763911791061412378285349910e+03;
constexpr double d79 = 0.93405324183624310003907691704e+02;
constexpr double d710 = -0.37458323136451633156875139351e+02;
constexpr double d711 = 0.10409964950896230045147246184e+03;
constexpr double d712 = 0.29840293426660503123344363579e+02;
constexpr double d713 = -0.43533456590011143754432175058e+02;
constexpr double d714 = 0.96324553959188282948394950600e+02;
constexpr double d715 = -0.39177261675615439165231486172e+02;
constexpr double d716 = -0.14972683625798562581422125276e+03;
}  // namespace dp853

bool all_finite(std::span<const Cx> y) {
  for (const Cx& v : y) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

// Hairer's starting step size heuristic.
double initial_step_guess(const OdeRhs& rhs, double t, double hmax,
                          std::span<const Cx> y, std::span<const Cx> f0,
                          const IntegratorConfig& cfg,
                          std::vector<Cx>& y1_buf, std::vector<Cx>& f1_buf) {
  const std::size_t n = y.size();
  double dnf = 0.0, dny = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sk = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
    const double fi = std::abs(f0[i]) / sk;
    const double yi = std::abs(y[i]) / sk;
    dnf += fi * fi;
    dny += yi * yi;
  }
  double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
  h = std::min(h, hmax);

  for (std::size_t i = 0; i < n; ++i) y1_buf[i] = y[i] + h * f0[i];
  rhs(t + h, y1_buf, f1_buf);

  double der2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sk = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
    const double di = std::abs(f1_buf[i] - f0[i]) / sk;
    der2 += di * di;
  }
  der2 = std::sqrt(der2) / h;

  const double der12 = std::max(der2, std::sqrt(dnf));
  const double h1 = (der12 <= 1e-15) ? std::max(1e-6, h * 1e-3)
                                     : std::pow(0.01 / der12, 1.0 / 8.0);
  return std::min({100.0 * h, h1, hmax});
}

}  // namespace

std::vector<double> OdeTrajectory::step_times() const {
  std::vector<double> ts;
  ts.reserve(segments_.size() + 1);
  ts.push_back(t_begin_);
  for (const Segment& s : segments_) ts.push_back(s.t0 + s.h);
  if (segments_.empty()) ts.push_back(t_end_);
  return ts;
}

void OdeTrajectory::eval(double t, std::span<Cx> out) const {
  if (segments_.empty()) {
    std::copy(initial_state_.begin(), initial_state_.end(), out.begin());
    return;
  }
  // Locate the step containing t (clamped to the integration range).
  std::size_t lo = 0, hi = segments_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (segments_[mid].t0 <= t)
      lo = mid;
    else
      hi = mid - 1;
  }
  const Segment& seg = segments_[lo];
  const double s = (t - seg.t0) / seg.h;
  const double s1 = 1.0 - s;
  const Cx* r = seg.r.data();
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i) {
    const Cx inner = r[6 * n + i] + s * r[7 * n + i];
    out[i] = r[i] +
             s * (r[n + i] +
                  s1 * (r[2 * n + i] +
                        s * (r[3 * n + i] +
                             s1 * (r[4 * n + i] + s * (r[5 * n + i] + s1 * inner)))));
  }
}

std::vector<Cx> OdeTrajectory::eval(double t) const {
  std::vector<Cx> out(dim_);
  eval(t, out);
  return out;
}

OdeTrajectory integrate_ode(const OdeRhs& rhs, double t0, double t1,
                            std::vector<Cx> y0, const IntegratorConfig& cfg,
                            std::span<const double> breakpoints) {
  using namespace dp853;
  if (!(t1 >= t0)) throw std::invalid_argument("integrate_ode: t1 < t0");
  if (cfg.rel_tol <= 0.0 || cfg.abs_tol <= 0.0 || cfg.max_steps < 1)
    throw std::invalid_argument("integrate_ode: invalid tolerances");

  const std::size_t n = y0.size();
  OdeTrajectory traj;
  traj.dim_ = n;
  traj.t_begin_ = t0;
  traj.t_end_ = t1;
  traj.initial_state_ = y0;
  traj.final_state_ = y0;
  if (t1 == t0) return traj;

  // Segment boundaries: interior breakpoints splitting [t0, t1].
  std::vector<double> bounds;
  bounds.push_back(t0);
  for (double b : breakpoints) {
    if (b > t0 && b < t1) bounds.push_back(b);
  }
  bounds.push_back(t1);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  std::vector<Cx> y = std::move(y0);
  std::vector<Cx> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), k8(n),
      k9(n), k10(n), yw(n), yw2(n), ynew(n), fnew(n);

  const double safe = 0.9;
  const double fac1 = 0.333, fac2 = 6.0;
  const double facc1 = 1.0 / fac1, facc2 = 1.0 / fac2;
  const double expo1 = 1.0 / 8.0;
  const double ueps = std::numeric_limits<double>::epsilon();

  std::size_t steps_used = 0;

  for (std::size_t seg_i = 0; seg_i + 1 < bounds.size(); ++seg_i) {
    const double ta = bounds[seg_i];
    const double tb = bounds[seg_i + 1];
    const double hmax = tb - ta;
    double t = ta;

    rhs(t, y, k1);
    if (!all_finite(k1))
      throw NonFiniteState("integrate_ode: non-finite derivative at segment start");

    double h = cfg.initial_step > 0.0
                   ? std::min(cfg.initial_step, hmax)
                   : initial_step_guess(rhs, t, hmax, y, k1, cfg, yw, k3);

    while (t < tb) {
      if (++steps_used > cfg.max_steps)
        throw StepLimitExceeded("integrate_ode: step budget exhausted");
      if (h < 10.0 * ueps * std::max(std::abs(t), 1.0))
        throw StepLimitExceeded("integrate_ode: step size underflow");
      if (t + 1.0001 * h > tb) h = tb - t;

      // Twelve core stages.
      for (std::size_t i = 0; i < n; ++i) yw[i] = y[i] + h * (a21 * k1[i]);
      rhs(t + c2 * h, yw, k2);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
      rhs(t + c3 * h, yw, k3);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a41 * k1[i] + a43 * k3[i]);
      rhs(t + c4 * h, yw, k4);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a51 * k1[i] + a53 * k3[i] + a54 * k4[i]);
      rhs(t + c5 * h, yw, k5);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a61 * k1[i] + a64 * k4[i] + a65 * k5[i]);
      rhs(t + c6 * h, yw, k6);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a71 * k1[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
      rhs(t + c7 * h, yw, k7);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a81 * k1[i] + a84 * k4[i] + a85 * k5[i] +
                            a86 * k6[i] + a87 * k7[i]);
      rhs(t + c8 * h, yw, k8);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a91 * k1[i] + a94 * k4[i] + a95 * k5[i] +
                            a96 * k6[i] + a97 * k7[i] + a98 * k8[i]);
      rhs(t + c9 * h, yw, k9);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a101 * k1[i] + a104 * k4[i] + a105 * k5[i] +
                            a106 * k6[i] + a107 * k7[i] + a108 * k8[i] +
                            a109 * k9[i]);
      rhs(t + c10 * h, yw, k10);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a111 * k1[i] + a114 * k4[i] + a115 * k5[i] +
                            a116 * k6[i] + a117 * k7[i] + a118 * k8[i] +
                            a119 * k9[i] + a1110 * k10[i]);
      rhs(t + c11 * h, yw, k2);
      for (std::size_t i = 0; i < n; ++i)
        yw[i] = y[i] + h * (a121 * k1[i] + a124 * k4[i] + a125 * k5[i] +
                            a126 * k6[i] + a127 * k7[i] + a128 * k8[i] +
                            a129 * k9[i] + a1210 * k10[i] + a1211 * k2[i]);
      rhs(t + h, yw, k3);

      // 8th order solution and the two embedded error estimators.
      for (std::size_t i = 0; i < n; ++i) {
        k4[i] = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] +
                b9 * k9[i] + b10 * k10[i] + b11 * k2[i] + b12 * k3[i];
        ynew[i] = y[i] + h * k4[i];
      }

      double err5 = 0.0, err3 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double sk =
            cfg.abs_tol +
            cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        const Cx e3 = k4[i] - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k3[i];
        const Cx e5 = er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] +
                      er9 * k9[i] + er10 * k10[i] + er11 * k2[i] +
                      er12 * k3[i];
        const double a3 = std::abs(e3) / sk;
        const double a5 = std::abs(e5) / sk;
        err3 += a3 * a3;
        err5 += a5 * a5;
      }
      double deno = err5 + 0.01 * err3;
      if (deno <= 0.0) deno = 1.0;
      double err = h * err5 * std::sqrt(1.0 / (double(n) * deno));

      if (!std::isfinite(err)) {
        if (!all_finite(ynew) && h < 1e3 * ueps * std::max(std::abs(t), 1.0))
          throw NonFiniteState("integrate_ode: state became non-finite");
        h *= 0.25;
        continue;
      }

      const double fac11 = std::pow(err, expo1);
      if (err > 1.0) {
        h /= std::min(facc1, fac11 / safe);
        continue;
      }

      // Accepted: derivative at the new point plus dense-output stages.
      if (!all_finite(ynew))
        throw NonFiniteState("integrate_ode: state became non-finite");
      rhs(t + h, ynew, fnew);

      OdeTrajectory::Segment seg;
      seg.t0 = t;
      seg.h = h;
      seg.r.resize(8 * n);
      Cx* r = seg.r.data();
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = y[i];
        const Cx ydiff = ynew[i] - y[i];
        r[n + i] = ydiff;
        const Cx bspl = h * k1[i] - ydiff;
        r[2 * n + i] = bspl;
        r[3 * n + i] = ydiff - h * fnew[i] - bspl;
        r[4 * n + i] = d41 * k1[i] + d46 * k6[i] + d47 * k7[i] + d48 * k8[i] +
                       d49 * k9[i] + d410 * k10[i] + d411 * k2[i] +
                       d412 * k3[i];
        r[5 * n + i] = d51 * k1[i] + d56 * k6[i] + d57 * k7[i] + d58 * k8[i] +
                       d59 * k9[i] + d510 * k10[i] + d511 * k2[i] +
                       d512 * k3[i];
        r[6 * n + i] = d61 * k1[i] + d66 * k6[i] + d67 * k7[i] + d68 * k8[i] +
                       d69 * k9[i] + d610 * k10[i] + d611 * k2[i] +
                       d612 * k3[i];
        r[7 * n + i] = d71 * k1[i] + d76 * k6[i] + d77 * k7[i] + d78 * k8[i] +
                       d79 * k9[i] + d710 * k10[i] + d711 * k2[i] +
                       d712 * k3[i];
      }
      for (std::size_t i = 0; i < n; ++i)
        yw2[i] = y[i] + h * (a141 * k1[i] + a147 * k7[i] + a148 * k8[i] +
                             a149 * k9[i] + a1410 * k10[i] + a1411 * k2[i] +
                             a1412 * k3[i] + a1413 * fnew[i]);
      rhs(t + c14 * h, yw2, k10);
      for (std::size_t i = 0; i < n; ++i)
        yw2[i] = y[i] + h * (a151 * k1[i] + a156 * k6[i] + a157 * k7[i] +
                             a158 * k8[i] + a1511 * k2[i] + a1512 * k3[i] +
                             a1513 * fnew[i] + a1514 * k10[i]);
      rhs(t + c15 * h, yw2, k2);
      for (std::size_t i = 0; i < n; ++i)
        yw2[i] = y[i] + h * (a161 * k1[i] + a166 * k6[i] + a167 * k7[i] +
                             a168 * k8[i] + a169 * k9[i] + a1613 * fnew[i] +
                             a1614 * k10[i] + a1615 * k2[i]);
      rhs(t + c16 * h, yw2, k3);
      for (std::size_t i = 0; i < n; ++i) {
        r[4 * n + i] = h * (r[4 * n + i] + d413 * fnew[i] + d414 * k10[i] +
                            d415 * k2[i] + d416 * k3[i]);
        r[5 * n + i] = h * (r[5 * n + i] + d513 * fnew[i] + d514 * k10[i] +
                            d515 * k2[i] + d516 * k3[i]);
        r[6 * n + i] = h * (r[6 * n + i] + d613 * fnew[i] + d614 * k10[i] +
                            d615 * k2[i] + d616 * k3[i]);
        r[7 * n + i] = h * (r[7 * n + i] + d713 * fnew[i] + d714 * k10[i] +
                            d715 * k2[i] + d716 * k3[i]);
      }
      traj.segments_.push_back(std::move(seg));

      t += h;
      y.swap(ynew);
      k1.swap(fnew);

      double fac = std::max(facc2, std::min(facc1, fac11 / safe));
      h = std::min(h / fac, hmax);
    }
  }

  traj.final_state_ = y;
  return traj;
}

}  // namespace scatter1d

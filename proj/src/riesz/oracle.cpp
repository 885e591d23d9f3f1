#include "covforms/riesz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "covforms/error.hpp"
#include "covforms/exterior/exterior.hpp"

namespace covforms::riesz {

namespace {

using cplx = std::complex<double>;
using exterior::Mask;
using Vec = std::vector<cplx>;  // indexed by basis mask

void eps_x(const std::vector<double>& x, const Vec& in, Vec& out) {
  std::fill(out.begin(), out.end(), cplx{});
  int n = static_cast<int>(x.size());
  for (Mask m = 0; m < in.size(); ++m) {
    if (in[m] == cplx{}) continue;
    for (int j = 0; j < n; ++j) {
      if (m & (Mask{1} << j)) continue;
      out[m | (Mask{1} << j)] += double(exterior::sign_before(m, j)) * x[j] * in[m];
    }
  }
}

void iota_x(const std::vector<double>& x, const Vec& in, Vec& out) {
  std::fill(out.begin(), out.end(), cplx{});
  int n = static_cast<int>(x.size());
  for (Mask m = 0; m < in.size(); ++m) {
    if (in[m] == cplx{}) continue;
    for (int j = 0; j < n; ++j) {
      if (!(m & (Mask{1} << j))) continue;
      out[m & ~(Mask{1} << j)] += double(exterior::sign_before(m, j)) * x[j] * in[m];
    }
  }
}

double hermite(int m, double x) {
  double h0 = 1, h1 = x;
  if (m == 0) return h0;
  for (int i = 1; i < m; ++i) {
    double h2 = x * h1 - i * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

struct TestForm {
  std::vector<int> alpha;
  Mask mask;
};

struct Rule {
  std::vector<std::vector<double>> dirs;  // unit vectors
  std::vector<double> dir_w;
  std::vector<double> r;
  std::vector<double> r_w;
};

Rule make_rule(int n, int level) {
  static const int radial_pts[] = {8, 16, 24};
  static const int sphere_pts[] = {16, 32, 48};
  Rule rule;
  std::vector<double> gx, gw;
  gauss_legendre(radial_pts[level], gx, gw);
  // Panels: geometric towards 0 (ratio 1/2 down to 2^-80), unit width to 14.
  std::vector<double> edges{0.0};
  for (int e = -80; e <= 0; ++e) edges.push_back(std::ldexp(1.0, e));
  for (int r = 2; r <= 14; ++r) edges.push_back(r);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    double a = edges[p], b = edges[p + 1];
    for (std::size_t i = 0; i < gx.size(); ++i) {
      rule.r.push_back(0.5 * (a + b) + 0.5 * (b - a) * gx[i]);
      rule.r_w.push_back(0.5 * (b - a) * gw[i]);
    }
  }
  int m = sphere_pts[level];
  if (n == 1) {
    rule.dirs = {{1.0}, {-1.0}};
    rule.dir_w = {1.0, 1.0};
  } else if (n == 2) {
    for (int i = 0; i < m; ++i) {
      double th = 2 * M_PI * i / m;
      rule.dirs.push_back({std::cos(th), std::sin(th)});
      rule.dir_w.push_back(2 * M_PI / m);
    }
  } else {
    std::vector<double> cx, cw;
    gauss_legendre(m / 2, cx, cw);
    for (std::size_t a = 0; a < cx.size(); ++a) {
      double z = cx[a], rho = std::sqrt(1 - z * z);
      for (int i = 0; i < m; ++i) {
        double ph = 2 * M_PI * i / m;
        rule.dirs.push_back({rho * std::cos(ph), rho * std::sin(ph), z});
        rule.dir_w.push_back(cw[a] * 2 * M_PI / m);
      }
    }
  }
  return rule;
}

struct Pairing {
  Vec lhs, rhs, lhs_abs;
};

}  // namespace

void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(m, 0);
  weights.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int j = 2; j <= m; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = x;
    weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
}

OracleResult fourier_oracle(int n, int k, double s0, const OracleOptions& opts) {
  if (n < 1 || n > 3) throw DimensionMismatch("the Fourier oracle supports 1 <= n <= 3");
  if (k < 0 || k > n) throw DegreeError("form degree out of range");
  const bool delta = s0 == -n;
  if (!(s0 < 0) || (!(s0 > -n) && !delta)) {
    throw InvalidScalar("s0 must satisfy -n < s0 < 0 for the defining integral to converge");
  }
  // Normalizing constant of the defining integral.
  const double cs = std::pow(M_PI, -0.5 * n) * std::pow(2.0, -s0 - n + 1) * std::tgamma(1 - s0 / 2) /
                    std::tgamma((s0 + n) / 2);

  std::vector<TestForm> forms;
  for (Mask m : exterior::basis(n, k)) {
    std::vector<int> a(n, 0);
    forms.push_back({a, m});
    for (int j = 0; j < n; ++j) {
      a.assign(n, 0);
      a[j] = 1;
      forms.push_back({a, m});
      for (int i = j; i < n; ++i) {
        std::vector<int> b = a;
        b[i] += 1;
        forms.push_back({b, m});
      }
    }
  }
  if (opts.trials > 0 && opts.trials < static_cast<int>(forms.size())) {
    std::mt19937_64 rng(opts.seed);
    std::shuffle(forms.begin(), forms.end(), rng);
    forms.resize(opts.trials);
  }

  const std::size_t dimv = std::size_t{1} << n;
  auto pair_form = [&](const TestForm& f, const Rule& rule) {
    Pairing out{Vec(dimv), Vec(dimv), Vec(dimv)};
    int deg = 0;
    for (int a : f.alpha) deg += a;
    const cplx phase = std::pow(cplx(0, 1), deg) * std::pow(2 * M_PI, 0.5 * n);
    Vec v(dimv), t1(dimv), t2(dimv), t3(dimv);
    std::vector<double> x(n);
    for (std::size_t ir = 0; ir < rule.r.size(); ++ir) {
      double r = rule.r[ir];
      double wr = rule.r_w[ir] * std::pow(r, n - 1);
      double gauss = std::exp(-0.5 * r * r);
      double wl = std::pow(r, -s0 - n - 2);
      double wx = std::pow(r, s0 - 2);
      for (std::size_t id = 0; id < rule.dirs.size(); ++id) {
        double w = wr * rule.dir_w[id];
        double mono = 1, herm = 1;
        for (int j = 0; j < n; ++j) {
          x[j] = r * rule.dirs[id][j];
          mono *= std::pow(x[j], f.alpha[j]);
          herm *= hermite(f.alpha[j], x[j]);
        }
        // Frequency side: |xi|^{-s-n-2}(-(s+2k) iota eps + (s+2n-2k) eps iota) phi.
        std::fill(v.begin(), v.end(), cplx{});
        v[f.mask] = mono * gauss;
        eps_x(x, v, t1);
        iota_x(x, t1, t2);  // iota eps
        iota_x(x, v, t1);
        eps_x(x, t1, t3);  // eps iota
        for (std::size_t m = 0; m < dimv; ++m) {
          cplx val = wl * (-(s0 + 2 * k) * t2[m] + (s0 + 2 * n - 2 * k) * t3[m]);
          out.lhs[m] += w * val;
          out.lhs_abs[m] += w * std::abs(val);
        }
        if (delta) continue;
        // Space side: c_s |x|^{s-2}(iota eps - eps iota) F(phi).
        std::fill(v.begin(), v.end(), cplx{});
        v[f.mask] = phase * herm * gauss;
        eps_x(x, v, t1);
        iota_x(x, t1, t2);
        iota_x(x, v, t1);
        eps_x(x, t1, t3);
        for (std::size_t m = 0; m < dimv; ++m) out.rhs[m] += w * cs * wx * (t2[m] - t3[m]);
      }
    }
    if (delta) {
      double herm0 = 1;
      for (int j = 0; j < n; ++j) herm0 *= hermite(f.alpha[j], 0.0);
      out.rhs[f.mask] = double(n - 2 * k) * phase * herm0;
    }
    return out;
  };

  OracleResult res;
  res.trials = static_cast<int>(forms.size());
  res.delta_limit = delta;
  std::vector<std::vector<Pairing>> levels;
  for (int level = 0; level < 3; ++level) {
    Rule rule = make_rule(n, level);
    std::vector<Pairing> ps;
    double worst = 0;
    for (const auto& f : forms) {
      Pairing p = pair_form(f, rule);
      double num = 0, den = 0;
      for (std::size_t m = 0; m < dimv; ++m) {
        num = std::max(num, std::abs(p.lhs[m] - p.rhs[m]));
        den = std::max({den, std::abs(p.lhs[m]), std::abs(p.rhs[m]), std::abs(p.lhs_abs[m])});
      }
      if (!std::isfinite(num) || !std::isfinite(den)) throw QuadratureError("non-finite quadrature value", NAN);
      worst = std::max(worst, den > 0 ? num / den : num);
      ps.push_back(std::move(p));
    }
    res.level_errors.push_back(worst);
    levels.push_back(std::move(ps));
  }
  double est = 0;
  for (std::size_t t = 0; t < forms.size(); ++t) {
    const Pairing& a = levels[1][t];
    const Pairing& b = levels[2][t];
    double num = 0, den = 0;
    for (std::size_t m = 0; m < dimv; ++m) {
      num = std::max({num, std::abs(a.lhs[m] - b.lhs[m]), std::abs(a.rhs[m] - b.rhs[m])});
      den = std::max({den, std::abs(b.lhs[m]), std::abs(b.rhs[m]), std::abs(b.lhs_abs[m])});
    }
    est = std::max(est, den > 0 ? num / den : num);
  }
  res.quad_estimate = est;
  res.max_rel_err = res.level_errors.back();
  const auto& le = res.level_errors;
  bool monotone = le[2] <= le[1] * (1 + 1e-9) + 1e-15 && le[1] <= le[0] * (1 + 1e-9) + 1e-15;
  res.converged = est < 1e-10 || monotone;
  if (est > 1e-6) throw QuadratureError("quadrature did not converge", est);
  return res;
}

}  // namespace covforms::riesz

#include "covforms/source/source.hpp"

#include <sstream>

#include "covforms/error.hpp"
#include "covforms/riesz/symbol.hpp"

namespace covforms::source {

using weyl::compose;
using weyl::DiffOpBuilder;
using weyl::PolyForm;
using weyl::VarSet;

namespace {

constexpr VarSet XY = VarSet::XY;

void require_degrees(int n, int k, int l) {
  if (n < 1 || n > weyl::kMaxDim) throw DimensionMismatch("dimension out of range");
  if (k < 0 || k > n || l < 0 || l > n) throw DegreeError("form degrees must lie in [0, n]");
}

Bideg shifted(Bideg deg, int side, int by) {
  (side == 0 ? deg.k : deg.l) += by;
  return deg;
}

int side_degree(Bideg deg, int side) { return side == 0 ? deg.k : deg.l; }

ParamScalar sc(long long v) { return ParamScalar(v); }

// delta o eps_j, d o iota_j, eps_j o delta, d o delta, delta o d on one side.
DiffOp delta_eps(int n, Bideg deg, int side, int j) {
  return compose(weyl::delta_side(n, XY, shifted(deg, side, 1), side), weyl::eps(n, XY, deg, side, j));
}
DiffOp d_iota(int n, Bideg deg, int side, int j) {
  return compose(weyl::d_side(n, XY, shifted(deg, side, -1), side), weyl::iota(n, XY, deg, side, j));
}
DiffOp eps_delta(int n, Bideg deg, int side, int j) {
  return compose(weyl::eps(n, XY, shifted(deg, side, -1), side, j), weyl::delta_side(n, XY, deg, side));
}
DiffOp delta_d(int n, Bideg deg, int side) {
  return compose(weyl::delta_side(n, XY, shifted(deg, side, 1), side), weyl::d_side(n, XY, deg, side));
}
DiffOp d_delta(int n, Bideg deg, int side) {
  return compose(weyl::d_side(n, XY, shifted(deg, side, -1), side), weyl::delta_side(n, XY, deg, side));
}
DiffOp iota_eps_field(int n, Bideg deg, int side) {
  return compose(weyl::iota_field(n, XY, shifted(deg, side, 1), side), weyl::eps_field(n, XY, deg, side));
}
DiffOp eps_iota_field(int n, Bideg deg, int side) {
  return compose(weyl::eps_field(n, XY, shifted(deg, side, -1), side), weyl::iota_field(n, XY, deg, side));
}

DiffOp id(int n, Bideg deg) { return weyl::identity(n, XY, deg); }

// The hatted pieces of the cleared D: alpha iota eps + beta eps iota, and
// p kappa x_j + gamma iota_x eps_j + delta eps_x iota_j.
DiffOp a_hat(int n, Bideg deg, int side) {
  Coeffs c = coeffs(n, side_degree(deg, side), side);
  return iota_eps_field(n, deg, side).scaled(c.alpha) + eps_iota_field(n, deg, side).scaled(c.beta);
}

DiffOp b_hat(int n, Bideg deg, int side, int j) {
  Coeffs c = coeffs(n, side_degree(deg, side), side);
  DiffOp iota_x_eps_j = compose(weyl::iota_field(n, XY, shifted(deg, side, 1), side), weyl::eps(n, XY, deg, side, j));
  DiffOp eps_x_iota_j = compose(weyl::eps_field(n, XY, shifted(deg, side, -1), side), weyl::iota(n, XY, deg, side, j));
  return weyl::coord(n, XY, deg, side, j).scaled(c.p * c.kappa) + iota_x_eps_j.scaled(c.gamma) +
         eps_x_iota_j.scaled(c.delta);
}

DiffOp delta_diff(int n, Bideg deg, int j) {
  return weyl::partial(n, XY, deg, 0, j) - weyl::partial(n, XY, deg, 1, j);
}

// sigma kappa d/dx_j - gamma delta eps_j + delta d iota_j, the factor of the
// middle blocks of E.
DiffOp g_factor(int n, Bideg deg, int side, int j) {
  Coeffs c = coeffs(n, side_degree(deg, side), side);
  return weyl::partial(n, XY, deg, side, j).scaled(c.p * c.kappa) - delta_eps(n, deg, side, j).scaled(c.gamma) +
         d_iota(n, deg, side, j).scaled(c.delta);
}

void add_comparison(Report& r, const std::string& label, const DiffOp& a, const DiffOp& b) {
  bool ok = a == b;
  r.add(label, ok, ok ? std::string() : weyl::diff_summary(a, b));
}

ParamPoly lin(int slot, long long a, long long b) {
  // a * var(slot) + b
  return ParamPoly::var(slot).scaled(GaussRat(a)) + ParamPoly(b);
}

}  // namespace

Coeffs coeffs(int n, int k, int slot) {
  ParamScalar p = ParamScalar::var(slot);
  Coeffs c;
  c.p = p;
  ParamScalar u = p + sc(n - 2 * k);   // s + n - 2k
  ParamScalar v = p - sc(n - 2 * k);   // s - n + 2k
  c.alpha = u * (v - sc(2));
  c.beta = v * (u - sc(2));
  c.gamma = sc(2) * p * (v - sc(2));
  c.delta = sc(2) * p * (u - sc(2));
  c.kappa = (v - sc(2)) * (u - sc(2));
  c.a = u / (u - sc(2));
  c.b = v / (v - sc(2));
  c.c = sc(2) * p / (u - sc(2));
  c.d = sc(2) * p / (v - sc(2));
  return c;
}

DiffOp box(int n, Bideg deg, int side) {
  Coeffs c = coeffs(n, side_degree(deg, side), side);
  return delta_d(n, deg, side).scaled(c.alpha) + d_delta(n, deg, side).scaled(c.beta);
}

DiffOp nabla(int n, Bideg deg, int side, int j) {
  int k = side_degree(deg, side);
  Coeffs c = coeffs(n, k, side);
  DiffOp dj = weyl::partial(n, XY, deg, side, j);
  DiffOp ed = eps_delta(n, deg, side, j);
  DiffOp di = d_iota(n, deg, side, j);
  ParamScalar m(4LL * (n - 2 * k));
  DiffOp first = dj.scaled(sc(2) * c.alpha) - ed.scaled(m) + di.scaled(m);
  DiffOp second = dj.scaled(c.p * c.alpha) + ed.scaled(c.gamma) + di.scaled(c.delta);
  return first - second;
}

DiffOp nabla_factored(int n, Bideg deg, int side, int j) {
  int k = side_degree(deg, side);
  ParamScalar p = ParamScalar::var(side);
  ParamScalar u = p + sc(n - 2 * k), v = p - sc(n - 2 * k);
  DiffOp inner = weyl::partial(n, XY, deg, side, j).scaled(u * (v - sc(2))) +
                 eps_delta(n, deg, side, j).scaled(sc(2) * v) + d_iota(n, deg, side, j).scaled(sc(2) * u);
  return inner.scaled(sc(2) - p);
}

DiffOp multiplier(int n, Bideg deg, int side, int j) {
  Coeffs c = coeffs(n, side_degree(deg, side), side);
  DiffOp iota_x_eps_j = compose(weyl::iota_field(n, XY, shifted(deg, side, 1), side), weyl::eps(n, XY, deg, side, j));
  DiffOp eps_x_iota_j = compose(weyl::eps_field(n, XY, shifted(deg, side, -1), side), weyl::iota(n, XY, deg, side, j));
  return weyl::coord(n, XY, deg, side, j).scaled(c.p) + iota_x_eps_j.scaled(c.c) + eps_x_iota_j.scaled(c.d);
}

DiffOp q_difference(int n, Bideg deg) {
  DiffOpBuilder b(n, XY, deg, deg);
  for (int j = 0; j < n; ++j) {
    DiffOp dj = delta_diff(n, deg, j);
    b.add(compose(dj, dj));
  }
  return b.finish();
}

DiffOp coord_difference(int n, Bideg deg, int j) {
  return weyl::coord(n, XY, deg, 0, j) - weyl::coord(n, XY, deg, 1, j);
}

DiffOp dist2(int n, Bideg deg) {
  DiffOpBuilder b(n, XY, deg, deg);
  for (int j = 0; j < n; ++j) {
    DiffOp m = coord_difference(n, deg, j);
    b.add(compose(m, m));
  }
  return b.finish();
}

DiffOp build_D(int n, int k, int l) {
  require_degrees(n, k, l);
  Bideg deg{k, l};
  Coeffs cx = coeffs(n, k, 0), cy = coeffs(n, l, 1);
  DiffOp ax = iota_eps_field(n, deg, 0).scaled(cx.a) + eps_iota_field(n, deg, 0).scaled(cx.b);
  DiffOp ay = iota_eps_field(n, deg, 1).scaled(cy.a) + eps_iota_field(n, deg, 1).scaled(cy.b);
  DiffOp axy = compose(ax, ay);
  DiffOpBuilder b(n, XY, deg, deg);
  b.add(compose(axy, q_difference(n, deg)));
  for (int j = 0; j < n; ++j) {
    DiffOp bx = multiplier(n, deg, 0, j), by = multiplier(n, deg, 1, j);
    DiffOp dj = delta_diff(n, deg, j);
    b.add(compose(compose(bx, ay), dj), sc(2));
    b.add(compose(compose(ax, by), dj), sc(-2));
    b.add(compose(bx, by), sc(-2));
  }
  b.add(ay, cx.p * (cx.p + sc(n)));
  b.add(ax, cy.p * (cy.p + sc(n)));
  return b.finish();
}

DiffOp build_D_cleared(int n, int k, int l) {
  require_degrees(n, k, l);
  Bideg deg{k, l};
  Coeffs cx = coeffs(n, k, 0), cy = coeffs(n, l, 1);
  DiffOp ax = a_hat(n, deg, 0), ay = a_hat(n, deg, 1);
  DiffOpBuilder b(n, XY, deg, deg);
  b.add(compose(compose(ax, ay), q_difference(n, deg)));
  for (int j = 0; j < n; ++j) {
    DiffOp bx = b_hat(n, deg, 0, j), by = b_hat(n, deg, 1, j);
    DiffOp dj = delta_diff(n, deg, j);
    b.add(compose(compose(bx, ay), dj), sc(2));
    b.add(compose(compose(ax, by), dj), sc(-2));
    b.add(compose(bx, by), sc(-2));
  }
  b.add(ay, cx.p * (cx.p + sc(n)) * cx.kappa);
  b.add(ax, cy.p * (cy.p + sc(n)) * cy.kappa);
  return b.finish();
}

Report verify_main1(int n, int k, int l, int max_degree, bool operator_form) {
  require_degrees(n, k, l);
  Report r{"main1 n=" + std::to_string(n) + " (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")", {}};
  Bideg deg{k, l};
  Coeffs cx = coeffs(n, k, 0), cy = coeffs(n, l, 1);
  DiffOp D = build_D(n, k, l);
  DiffOp Dc = build_D_cleared(n, k, l);
  add_comparison(r, "cleared D equals kappa kappa D", Dc, D.scaled(cx.kappa * cy.kappa));

  // Z_s (x) Z_t and Z_{s-2} (x) Z_{t-2} as pointwise operators in (x, y).
  auto zz = [&](int shift) {
    riesz::WeightedSymbol zx = riesz::z_symbol(n, k, shift), zy = riesz::z_symbol(n, l, shift);
    DiffOp py = zy.payload().map_coeffs([](const ParamScalar& c) { return c.swap_params(); });
    return weyl::tensor(zx.payload(), py);
  };
  DiffOp z0 = zz(0), zm = zz(-1);
  ParamScalar kk = cx.kappa * cy.kappa;

  // Operator form: conjugating Q(d/dx - d/dy) by |x|^{s-2}|y|^{t-2} and
  // clearing |x|^4 |y|^4 gives a polynomial-coefficient operator L, and the
  // identity becomes kappa kappa L o (Z_s (x) Z_t) = |x|^2 |y|^2 (Z_{s-2} (x) Z_{t-2}) o D_cleared.
  if (operator_form) {
    PolyForm qx(n, XY, Bideg{0, 0}), qy(n, XY, Bideg{0, 0});
    for (int j = 0; j < n; ++j) {
      PolyForm a = PolyForm::coordinate(n, XY, 0, j), b = PolyForm::coordinate(n, XY, 1, j);
      qx += a.times(a);
      qy += b.times(b);
    }
    DiffOp mx = weyl::multiply(qx, deg), my = weyl::multiply(qy, deg);
    DiffOpBuilder lb(n, XY, deg, deg);
    for (int j = 0; j < n; ++j) {
      DiffOp xj = weyl::coord(n, XY, deg, 0, j), yj = weyl::coord(n, XY, deg, 1, j);
      DiffOp aj = compose(mx, weyl::partial(n, XY, deg, 0, j)) + xj.scaled(cx.p - sc(2));
      DiffOp bj = compose(my, weyl::partial(n, XY, deg, 1, j)) + yj.scaled(cy.p - sc(2));
      DiffOp ax = compose(aj - xj.scaled(sc(2)), aj), by = compose(bj - yj.scaled(sc(2)), bj);
      lb.add(compose(compose(my, my), ax));
      lb.add(compose(compose(mx, my), compose(aj, bj)), sc(-2));
      lb.add(compose(compose(mx, mx), by));
    }
    DiffOp lhs = compose(lb.finish(), z0).scaled(kk);
    DiffOp rhs = compose(compose(compose(mx, my), zm), Dc);
    add_comparison(r, "operator form of the identity", lhs, rhs);
  }

  int checked = 0;
  for (const auto& f : weyl::monomial_forms(n, XY, deg, max_degree)) {
    riesz::BiWeighted lhs_in = riesz::BiWeighted::from_form(weyl::apply(z0, f), -1, -1);
    // Both sides multiplied by kappa kappa so that every coefficient stays a
    // polynomial in (s, t); the clearing itself is checked structurally above.
    riesz::BiWeighted lhs = riesz::q_difference(lhs_in).scaled(kk);
    riesz::BiWeighted rhs = riesz::BiWeighted::from_form(weyl::apply(zm, weyl::apply(Dc, f)), -2, -2);
    ++checked;
    if (!(lhs == rhs)) {
      r.add("Q(dx - dy)(Z (x) Z omega) = Z (x) Z D omega", false, "fails on " + f.to_string());
      return r;
    }
  }
  r.add("Q(dx - dy)(Z (x) Z omega) = Z (x) Z D omega", true, std::to_string(checked) + " monomial forms");
  return r;
}

DiffOp build_E_raw(int n, int k, int l, FifthBlock fifth) {
  require_degrees(n, k, l);
  Bideg deg{k, l};
  Coeffs cx = coeffs(n, k, 0), cy = coeffs(n, l, 1);
  DiffOp bx = box(n, deg, 0), by = box(n, deg, 1);
  DiffOp bxy = compose(bx, by);
  DiffOpBuilder b(n, XY, deg, deg);
  b.add(compose(bxy, dist2(n, deg)), sc(-1));
  for (int j = 0; j < n; ++j) {
    DiffOp gx = g_factor(n, deg, 0, j), gy = g_factor(n, deg, 1, j);
    DiffOp mj = coord_difference(n, deg, j);
    b.add(compose(compose(gx, by), mj), sc(-2));
    b.add(compose(compose(bx, gy), mj), sc(2));
    b.add(compose(gx, gy), sc(2));
  }
  ParamScalar c5 = cx.p * (cx.p + sc(n)) * cx.kappa;
  if (fifth == FifthBlock::Literal) c5 *= cy.kappa;
  b.add(by, c5);
  b.add(bx, cy.p * (cy.p + sc(n)) * cy.kappa);
  return b.finish();
}

DiffOp build_E_normal(int n, int k, int l) {
  require_degrees(n, k, l);
  Bideg deg{k, l};
  ParamScalar s = ParamScalar::var(0), t = ParamScalar::var(1);
  DiffOp bx = box(n, deg, 0), by = box(n, deg, 1);
  DiffOpBuilder b(n, XY, deg, deg);
  b.add(compose(dist2(n, deg), compose(bx, by)), sc(-1));
  for (int j = 0; j < n; ++j) {
    DiffOp nx = nabla(n, deg, 0, j), ny = nabla(n, deg, 1, j);
    DiffOp inner = compose(nx, by) - compose(bx, ny);
    b.add(compose(coord_difference(n, deg, j), inner), sc(2));
    b.add(compose(nx, ny), sc(2));
  }
  b.add(bx, (t - sc(2)) * (t - sc(n + 2)) * (t - sc(n - 2 * l)) * (t + sc(n - 2 * l)));
  b.add(by, (s - sc(2)) * (s - sc(n + 2)) * (s - sc(n - 2 * k)) * (s + sc(n - 2 * k)));
  return b.finish();
}

DiffOp build_E_derived(int n, int k, int l) { return weyl::fourier_preimage(build_D_cleared(n, k, l)); }

DiffOp build_E00_closed(int n) {
  require_degrees(n, 0, 0);
  Bideg deg{0, 0};
  ParamScalar s = ParamScalar::var(0), t = ParamScalar::var(1);
  DiffOp qx = weyl::sum_of_squares(n, XY, deg, 0), qy = weyl::sum_of_squares(n, XY, deg, 1);
  DiffOpBuilder b(n, XY, deg, deg);
  b.add(compose(dist2(n, deg), compose(qx, qy)), sc(-1));
  for (int j = 0; j < n; ++j) {
    DiffOp mj = coord_difference(n, deg, j);
    DiffOp px = weyl::partial(n, XY, deg, 0, j), py = weyl::partial(n, XY, deg, 1, j);
    b.add(compose(mj, compose(qx, py)), sc(-2) * (t - sc(2)));
    b.add(compose(mj, compose(px, qy)), sc(2) * (s - sc(2)));
    b.add(compose(px, py), sc(2) * (s - sc(2)) * (t - sc(2)));
  }
  b.add(qx, -(t - sc(2)) * (t - sc(n)));
  b.add(qy, -(s - sc(2)) * (s - sc(n)));
  ParamScalar pre = (s + sc(n)) * (s - sc(n + 2)) * (t + sc(n)) * (t - sc(n + 2));
  return b.finish().scaled(pre);
}

Report verify_main2_and_normal(int n, int k, int l) {
  require_degrees(n, k, l);
  Report r{"E n=" + std::to_string(n) + " (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")", {}};
  DiffOp derived = build_E_derived(n, k, l);
  DiffOp raw = build_E_raw(n, k, l, FifthBlock::Derived);
  DiffOp normal = build_E_normal(n, k, l);
  r.add("transported operator has real coefficients", derived.is_real());
  add_comparison(r, "transported equals E (fifth block s(s+n) kappa_k)", derived, raw);
  add_comparison(r, "transported equals normal form", derived, normal);
  DiffOp literal = build_E_raw(n, k, l, FifthBlock::Literal);
  // Recorded but not required: the extra kappa_{l,t} of the literal reading.
  r.add("literal fifth block (extra kappa_{l,t}) differs from transported", !(literal == derived),
        literal == derived ? "unexpected agreement" : std::string());
  return r;
}

Report verify_lemma_ident(int n) {
  Report r{"commutation lemma n=" + std::to_string(n), {}};
  for (int k = 0; k <= n; ++k) {
    Bideg deg{k, 0};
    DiffOp dd = delta_d(n, deg, 0), dl = d_delta(n, deg, 0);
    DiffOp r2 = dist2(n, deg);
    DiffOpBuilder acc1(n, XY, deg, deg), acc2(n, XY, deg, deg);
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      DiffOp mj = coord_difference(n, deg, j);
      DiffOp dj = weyl::partial(n, XY, deg, 0, j);
      DiffOp ed = eps_delta(n, deg, 0, j), di = d_iota(n, deg, 0, j);
      DiffOp lhs1 = compose(dd, mj);
      DiffOp rhs1 = compose(mj, dd) - dj.scaled(sc(2)) - ed + di;
      DiffOp lhs2 = compose(dl, mj);
      DiffOp rhs2 = compose(mj, dl) + ed - di;
      ok = ok && lhs1 == rhs1 && lhs2 == rhs2;
      acc1.add(compose(mj, dj.scaled(sc(-2)) - ed + di), sc(2));
      acc2.add(compose(mj, ed - di), sc(2));
    }
    r.add("k=" + std::to_string(k) + " single coordinate", ok);
    DiffOp rhs3 = compose(r2, dd) + acc1.finish() - id(n, deg).scaled(sc(2 * (n - k)));
    DiffOp rhs4 = compose(r2, dl) + acc2.finish() - id(n, deg).scaled(sc(2 * k));
    add_comparison(r, "k=" + std::to_string(k) + " delta d |x-y|^2", compose(dd, r2), rhs3);
    add_comparison(r, "k=" + std::to_string(k) + " d delta |x-y|^2", compose(dl, r2), rhs4);
  }
  return r;
}

Report verify_nabla_forms(int n) {
  Report r{"nabla forms n=" + std::to_string(n), {}};
  for (int k = 0; k <= n; ++k) {
    Bideg deg{k, 0};
    for (int j = 0; j < n; ++j) {
      Coeffs c = coeffs(n, k, 0);
      ParamScalar s = c.p, m(4LL * (n - 2 * k));
      DiffOp middle = weyl::partial(n, XY, deg, 0, j).scaled((sc(2) - s) * c.alpha) -
                      eps_delta(n, deg, 0, j).scaled(m + c.gamma) + d_iota(n, deg, 0, j).scaled(m - c.delta);
      DiffOp def = nabla(n, deg, 0, j);
      add_comparison(r, "k=" + std::to_string(k) + " j=" + std::to_string(j + 1) + " collected", def, middle);
      add_comparison(r, "k=" + std::to_string(k) + " j=" + std::to_string(j + 1) + " factored", def,
                     nabla_factored(n, deg, 0, j));
    }
  }
  return r;
}

Report verify_swap_symmetry(int n, int k, int l) {
  Report r{"swap symmetry n=" + std::to_string(n), {}};
  add_comparison(r, "D", weyl::swap_factors(build_D(n, k, l)), build_D(n, l, k));
  add_comparison(r, "E", weyl::swap_factors(build_E_normal(n, k, l)), build_E_normal(n, l, k));
  return r;
}

DiffOp to_lambda_mu(const DiffOp& op) {
  int n = op.dim();
  return weyl::substitute(op, lin(0, -2, n), lin(1, -2, n));
}

DiffOp build_F(int n, int k, int l) { return -to_lambda_mu(build_E_derived(n, k, l)); }

DiffOp box_tilde(int n, Bideg deg, int side) {
  int k = side_degree(deg, side);
  ParamScalar p = ParamScalar::var(side);
  return delta_d(n, deg, side).scaled((p - sc(n - k)) * (p - sc(k - 1))) +
         d_delta(n, deg, side).scaled((p - sc(n - k - 1)) * (p - sc(k)));
}

DiffOp nabla_tilde(int n, Bideg deg, int side, int j) {
  int k = side_degree(deg, side);
  ParamScalar p = ParamScalar::var(side);
  return weyl::partial(n, XY, deg, side, j).scaled((p - sc(n - k)) * (p - sc(k - 1))) -
         eps_delta(n, deg, side, j).scaled(p - sc(k)) - d_iota(n, deg, side, j).scaled(p - sc(n - k));
}

DiffOp build_F_display(int n, int k, int l) {
  require_degrees(n, k, l);
  Bideg deg{k, l};
  ParamScalar lam = ParamScalar::var(0), mu = ParamScalar::var(1);
  ParamScalar gl = sc(2) * lam - sc(n - 2), gm = sc(2) * mu - sc(n - 2);
  DiffOp bx = box_tilde(n, deg, 0), by = box_tilde(n, deg, 1);
  DiffOpBuilder b(n, XY, deg, deg);
  b.add(compose(dist2(n, deg), compose(bx, by)), sc(16));
  for (int j = 0; j < n; ++j) {
    DiffOp nx = nabla_tilde(n, deg, 0, j), ny = nabla_tilde(n, deg, 1, j);
    DiffOp inner = compose(nx, by).scaled(gl) - compose(bx, ny).scaled(gm);
    b.add(compose(coord_difference(n, deg, j), inner), sc(-32));
    b.add(compose(nx, ny), sc(-32) * gl * gm);
  }
  b.add(bx, sc(-32) * gm * (mu + sc(1)) * (mu - sc(l)) * (mu - sc(n - l)));
  b.add(by, sc(-32) * gl * (lam + sc(1)) * (lam - sc(k)) * (lam - sc(n - k)));
  return b.finish();
}

Report compare_F(int n, int k, int l) {
  Report r{"F n=" + std::to_string(n) + " (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")", {}};
  Bideg deg{k, l};
  // Substitution identities behind the display.
  DiffOp bsub = to_lambda_mu(box(n, deg, 0));
  add_comparison(r, "Box at s=n-2lambda is 4 Box~", bsub, box_tilde(n, deg, 0).scaled(sc(4)));
  for (int j = 0; j < n; ++j) {
    ParamScalar lam = ParamScalar::var(0);
    add_comparison(r, "nabla at s=n-2lambda j=" + std::to_string(j + 1), to_lambda_mu(nabla(n, deg, 0, j)),
                   nabla_tilde(n, deg, 0, j).scaled(sc(4) * (sc(2) * lam - sc(n - 2))));
  }
  add_comparison(r, "F equals the display", build_F(n, k, l), build_F_display(n, k, l));
  return r;
}

ParamScalar kappa_lm(int n, int k, int l) {
  ParamScalar lam = ParamScalar::var(0), mu = ParamScalar::var(1);
  return sc(16) * (lam - sc(k - 1)) * (lam - sc(n - k - 1)) * (mu - sc(l - 1)) * (mu - sc(n - l - 1));
}

Report verify_kappa(int n, int k, int l) {
  Report r{"kappa n=" + std::to_string(n), {}};
  ParamScalar prod = (coeffs(n, k, 0).kappa * coeffs(n, l, 1).kappa).compose(lin(0, -2, n), lin(1, -2, n));
  bool ok = prod == kappa_lm(n, k, l);
  r.add("kappa_{lambda,mu} = kappa_{k,n-2lambda} kappa_{l,n-2mu}", ok,
        ok ? std::string() : prod.to_string(lm_names()) + " vs " + kappa_lm(n, k, l).to_string(lm_names()));
  return r;
}

DiffOp shift_params(const DiffOp& op, int m) {
  return weyl::substitute(op, ParamPoly::var(0) + ParamPoly(m), ParamPoly::var(1) + ParamPoly(m));
}

DiffOp build_F_iter(int n, int k, int l, int m) {
  if (m < 1) throw DegreeError("iteration count must be positive");
  DiffOp f = build_F(n, k, l);
  DiffOp acc = f;
  for (int i = 1; i < m; ++i) acc = compose(shift_params(f, i), acc);
  return acc;
}

}  // namespace covforms::source

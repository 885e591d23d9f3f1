#include <chrono>

#include "covforms/error.hpp"
#include "covforms/riesz/oracle.hpp"
#include "covforms/riesz/symbol.hpp"
#include "doctest.h"

using namespace covforms;
using namespace covforms::riesz;
using weyl::Bideg;
using weyl::VarSet;

namespace {

void check_report(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.label << " " << c.detail);
    CHECK(c.pass);
  }
}

WeightedSymbol radial(int n, int k, int offset, const ParamScalar& c) {
  return WeightedSymbol(n, k, Rational(1), Rational(offset), weyl::scalar_op(n, VarSet::X, Bideg{k, 0}, c));
}

}  // namespace

TEST_CASE("Z symbol on top and bottom degrees") {
  ParamScalar s = ParamScalar::var(0);
  for (int n = 1; n <= 4; ++n) {
    ParamScalar spn = s + ParamScalar(n);
    CHECK(z_symbol(n, 0) == radial(n, 0, 0, spn));
    // On top degree only eps_x iota_x = Q survives, with the minus sign.
    CHECK(z_symbol(n, n) == radial(n, n, 0, -spn));
    CHECK(z_symbol(n, 0).reduced().offset() == Rational(0));
  }
  CHECK_THROWS_AS(z_symbol(2, 3), DegreeError);
}

TEST_CASE("Z symbol at a point") {
  // n=2, k=1, x=e1, s=3: diag(-3 on e1, +3 on e2).
  WeightedSymbol z = z_symbol(2, 1);
  DiffOp p = weyl::substitute(z.payload(), ParamPoly(3), ParamPoly::var(1));
  weyl::PolyForm e1 = weyl::PolyForm::monomial(2, VarSet::X, Bideg{1, 0}, {}, {}, 0b01, 0);
  weyl::PolyForm e2 = weyl::PolyForm::monomial(2, VarSet::X, Bideg{1, 0}, {}, {}, 0b10, 0);
  auto at_e1 = [](const weyl::PolyForm& f) {
    // keep only the x-free parts after setting x = e1: x1 -> 1, x2 -> 0
    weyl::PolyForm out(f.dim(), f.vars(), f.deg());
    for (const auto& [k, c] : f.terms()) {
      if (k.x[1] != 0) continue;
      weyl::FormKey r = k;
      r.x = {};
      out.add_term(r, c);
    }
    return out;
  };
  CHECK(at_e1(weyl::apply(p, e1)) == e1.scaled(ParamScalar(-3)));
  CHECK(at_e1(weyl::apply(p, e2)) == e2.scaled(ParamScalar(3)));
}

TEST_CASE("radial calculus") {
  ParamScalar s = ParamScalar::var(0);
  for (int n = 1; n <= 3; ++n) {
    WeightedSymbol r = radial(n, 0, 0, ParamScalar(1));
    for (int j = 0; j < n; ++j) CHECK(derive(r, j) == multiply_coord(radial(n, 0, -2, s), j));
    CHECK(laplace(r) == radial(n, 0, -2, s * (s + ParamScalar(n - 2))));
    CHECK(laplace(z_symbol(n, 0)) == z_symbol(n, 0, -1).scaled(s * (s + ParamScalar(n))));
  }
}

TEST_CASE("reduction by Q") {
  WeightedSymbol z = z_symbol(3, 0);
  WeightedSymbol low = z.at_offset(Rational(-6));
  CHECK(low == z);
  CHECK(low.reduced().offset() == Rational(0));
  CHECK(z_symbol(3, 1).reduced().offset() == Rational(-2));
  CHECK_THROWS_AS(z.at_offset(Rational(-3)), DegreeError);
}

TEST_CASE("shift identities") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) check_report(verify_shift_identities(n, k));
  }
}

TEST_CASE("Knapp-Stein symbol and its inverse") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) check_report(verify_ks_inverse(n, k));
  }
  // k = 0 collapse: 2 (n - lambda) |x|^{n - 2 lambda}
  ParamScalar l = ParamScalar::var(0);
  WeightedSymbol k0(2, 0, Rational(-2), Rational(2),
                    weyl::scalar_op(2, VarSet::X, Bideg{0, 0}, (ParamScalar(2) - l).scaled(GaussRat(2))));
  CHECK(ks_symbol(2, 0) == k0);
  CHECK_THROWS_AS(ks_symbol_inverse(3, 1, Rational(1)), DegenerateParameter);
  CHECK_THROWS_AS(ks_symbol_inverse(3, 1, Rational(2)), DegenerateParameter);
}

TEST_CASE("two-variable weights") {
  int n = 2;
  Bideg d{0, 0};
  weyl::PolyForm one = weyl::PolyForm::constant(n, VarSet::XY, ParamScalar(1));
  BiWeighted w = BiWeighted::from_form(one, 0, 0);
  // d/dx_1 |x|^s = s x_1 |x|^{s-2}
  BiWeighted dx = w.partial(0, 0);
  BiWeighted expect = BiWeighted::from_form(weyl::PolyForm::coordinate(n, VarSet::XY, 0, 0).scaled(ParamScalar::var(0)), -1, 0);
  CHECK(dx == expect);
  // Same function at a lower weight.
  weyl::PolyForm qy(n, VarSet::XY, d);
  for (int j = 0; j < n; ++j) {
    auto c = weyl::PolyForm::coordinate(n, VarSet::XY, 1, j);
    qy += c.times(c);
  }
  CHECK(BiWeighted::from_form(qy, 0, -1) == w);
}

TEST_CASE("weighted equality with high powers of x_1 and y_1") {
  int n = 3;
  Bideg d{1, 1};
  auto q = [&](int side) {
    weyl::PolyForm out(n, VarSet::XY, Bideg{0, 0});
    for (int j = 0; j < n; ++j) {
      auto c = weyl::PolyForm::coordinate(n, VarSet::XY, side, j);
      out += c.times(c);
    }
    return out;
  };
  weyl::Exps x{}, y{};
  x[0] = 5;
  x[2] = 1;
  y[0] = 3;
  weyl::PolyForm f = weyl::PolyForm::monomial(n, VarSet::XY, d, x, y, 0b010, 0b100, ParamScalar::var(0) + ParamScalar(3));
  x[0] = 1;
  x[1] = 2;
  f += weyl::PolyForm::monomial(n, VarSet::XY, d, x, y, 0b001, 0b001, ParamScalar::var(1));
  weyl::PolyForm qx = q(0), qy = q(1);
  BiWeighted a = BiWeighted::from_form(f.times(qx).times(qx).times(qy), -2, -1);
  CHECK(a == BiWeighted::from_form(f, 0, 0));
  CHECK_FALSE(a == BiWeighted::from_form(f, 0, 1));
  CHECK_FALSE(BiWeighted::from_form(f.times(qx), -2, 0) == BiWeighted::from_form(f, 0, 0));
  // Split across weights: |x|^2 f + g at weight -1 against f + |x|^{-2} g.
  BiWeighted split(n, d);
  split.add(0, 0, f);
  split.add(-1, 0, f.times(qy));
  BiWeighted joined = BiWeighted::from_form(f.times(qx) + f.times(qy), -1, 0);
  CHECK(split == joined);
  // Rational coefficients go through the expanded comparison.
  ParamScalar inv = ParamScalar(1) / (ParamScalar::var(0) - ParamScalar(1));
  CHECK(BiWeighted::from_form(f.scaled(inv).times(qx), -1, 0) == BiWeighted::from_form(f.scaled(inv), 0, 0));
  CHECK_FALSE(BiWeighted::from_form(f.scaled(inv), -1, 0) == BiWeighted::from_form(f.scaled(inv), 0, 0));
}

TEST_CASE("Fourier oracle") {
  struct Case {
    int n, k;
    double s, tol;
  };
  for (Case c : {Case{1, 0, -0.5, 1e-8}, Case{1, 0, -1.0, 1e-8}, Case{2, 0, -0.5, 1e-8}, Case{2, 0, -1.0, 1e-8},
                 Case{2, 1, -0.5, 1e-6}, Case{2, 1, -1.0, 1e-6}}) {
    auto t0 = std::chrono::steady_clock::now();
    OracleResult r = fourier_oracle(c.n, c.k, c.s);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    INFO("n=" << c.n << " k=" << c.k << " s=" << c.s << " err=" << r.max_rel_err << " est=" << r.quad_estimate);
    CHECK(r.max_rel_err <= c.tol);
    CHECK(r.converged);
    CHECK(secs < 30);
  }
  CHECK(fourier_oracle(1, 0, -1.0).delta_limit);
  CHECK_THROWS_AS(fourier_oracle(2, 0, 0.5), InvalidScalar);
  CHECK_THROWS_AS(fourier_oracle(2, 0, -2.5), InvalidScalar);
}

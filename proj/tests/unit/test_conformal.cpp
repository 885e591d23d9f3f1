#include "covforms/conformal/conformal.hpp"
#include "covforms/error.hpp"
#include "covforms/source/source.hpp"
#include "doctest.h"

using namespace covforms;
using namespace covforms::conformal;
using weyl::Bideg;
using weyl::VarSet;

namespace {

void check_report(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(r.name << ": " << c.label << " " << c.detail);
    CHECK(c.pass);
  }
}

Point pt(std::initializer_list<Rational> v) { return Point(v); }

}  // namespace

TEST_CASE("group elements act as expected") {
  Point x = pt({Rational(1, 3), Rational(-2)});
  Point y = pt({Rational(5, 7), Rational(1, 2)});
  CHECK(act(translation(y), x) == pt({Rational(1, 3) + Rational(5, 7), Rational(-3, 2)}));
  CHECK(omega(translation(y), x) == Rational(1));
  // (cosh, sinh) = (5/4, 3/4): e^t = 2, x -> x / 2.
  CHECK(act(boost(2, Rational(5, 4), Rational(3, 4)), x) == pt({Rational(1, 6), Rational(-1)}));
  CHECK(omega(boost(2, Rational(5, 4), Rational(3, 4)), x) == Rational(1, 2));
  Point r = act(rotation(2, 0, 1, Rational(3, 5), Rational(4, 5)), pt({Rational(1), Rational(0)}));
  CHECK(r == pt({Rational(3, 5), Rational(-4, 5)}));
  LorentzMatrix g = special_conformal(y) * translation(x);
  CHECK(g * g.inverse() == LorentzMatrix::identity(2));
  check_report(verify_cov1(LorentzMatrix::identity(2), x, y));
  check_report(verify_cocycle(g, g.inverse(), x));
}

TEST_CASE("point at infinity is detected exactly") {
  // The special conformal map x -> (x + |x|^2 b)/(1 + 2 b.x + |b|^2 |x|^2)
  // sends x = -b/|b|^2 to infinity.
  LorentzMatrix g = special_conformal(pt({Rational(1)}));
  CHECK_THROWS_AS(act(g, pt({Rational(-1)})), PointAtInfinity);
  CHECK_THROWS_AS(LorentzMatrix(RatMatrix::identity(3).scaled(Rational(2))), DimensionMismatch);
}

TEST_CASE("random group instances") {
  for (int n = 1; n <= 3; ++n) check_report(verify_group_random(n, 100, 7));
}

TEST_CASE("generators and basis decomposition") {
  for (int n = 1; n <= 3; ++n) {
    auto gens = generators(n);
    CHECK(gens.size() == static_cast<std::size_t>(2 * n + 1 + n * (n - 1) / 2));
    for (const auto& g : gens) {
      CHECK(in_lie_algebra(g.matrix));
      for (const auto& v : g.vectorfield) CHECK(v.total_degree() <= 2);
    }
  }
  auto gens = generators(2);
  // [translation 1, special 1] = 2 dilation in this normalization.
  auto c = decompose(bracket(gens[0].matrix, gens[2].matrix));
  CHECK(c[4] != Rational(0));
  CHECK_THROWS_AS(decompose(RatMatrix::identity(4)), DimensionMismatch);
}

TEST_CASE("dpi on the classical generators") {
  auto gens = generators(2);
  Bideg d0{0, 0};
  CHECK(dpi(gens[0], 0) == -weyl::partial(2, VarSet::X, d0, 0, 0));
  // Dilation on the constant function 1 gives lambda.
  auto one = weyl::PolyForm::constant(2, VarSet::X, ParamScalar(1));
  CHECK(weyl::apply(dpi(gens[4], 0), one) == one.scaled(ParamScalar::var(0)));
  // Rotation on 1-forms: minus the Lie derivative, which also rotates the basis.
  DiffOp rot = dpi(gens[5], 1);
  Bideg d1{1, 0};
  auto e1 = weyl::PolyForm::monomial(2, VarSet::X, d1, {}, {}, 1, 0);
  auto e2 = weyl::PolyForm::monomial(2, VarSet::X, d1, {}, {}, 2, 0);
  // The flow field is x_2 e_1 - x_1 e_2; L_V e_1 = d(x_2) = e_2, so dpi e_1 = -e_2.
  CHECK(weyl::apply(rot, e1) == e2.scaled(ParamScalar(-1)));
  CHECK(weyl::apply(rot, e2) == e1);
}

TEST_CASE("dpi certification") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= n; ++k) check_report(certify_dpi(n, k));
  }
  Report r = certify_dpi(1, 0);
  bool sign_fixed = false;
  for (const auto& c : r.checks) {
    if (c.label.find("M-covariance with the opposite") != std::string::npos) sign_fixed = c.detail.rfind("fails", 0) == 0;
  }
  CHECK(sign_fixed);
}

TEST_CASE("F covariance") {
  check_report(verify_F_covariance(1, 0, 0, 1));
  check_report(verify_F_covariance(1, 1, 0, 1));
  check_report(verify_F_covariance(2, 1, 1, 1));
  check_report(verify_F_covariance(1, 0, 0, 2));
}

TEST_CASE("F covariance picks the induced normalization") {
  Report lit = verify_F_covariance(1, 1, 0, 1, Normalization::Pullback);
  CHECK_FALSE(lit.pass());
  Report ind = verify_F_covariance(1, 1, 0, 1);
  CHECK(ind.pass());
  CHECK(ind.checks.back().detail == "not covariant");
  // On functions both normalizations agree.
  CHECK(verify_F_covariance(1, 0, 0, 1, Normalization::Pullback).pass());
}

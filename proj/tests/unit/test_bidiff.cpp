#include "covforms/bidiff/bidiff.hpp"
#include "covforms/error.hpp"
#include "doctest.h"

using namespace covforms;
using namespace covforms::bidiff;
using weyl::Exps;
using weyl::VarSet;

namespace {

void check_report(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(r.name << ": " << c.label << " " << c.detail);
    CHECK(c.pass);
  }
}

const CheckResult& find(const Report& r, const std::string& label) {
  for (const auto& c : r.checks) {
    if (c.label == label) return c;
  }
  FAIL("missing check " << label);
  return r.checks.front();
}

Exps ex(std::initializer_list<int> v) {
  Exps e{};
  int j = 0;
  for (int x : v) e[j++] = static_cast<std::uint8_t>(x);
  return e;
}

}  // namespace

TEST_CASE("restriction to the diagonal") {
  // (x1 - y1) e1 (x) e1 vanishes on the diagonal.
  PolyForm f(2, VarSet::XY, Bideg{1, 1});
  f.add_term({ex({1}), Exps{}, 1, 1}, ParamScalar(1));
  f.add_term({Exps{}, ex({1}), 1, 1}, ParamScalar(-1));
  CHECK(restrict(f).is_zero());
  PolyForm g = PolyForm::monomial(2, VarSet::XY, Bideg{1, 1}, ex({1}), ex({0, 1}), 1, 2);
  CHECK(restrict(g) == PolyForm::monomial(2, VarSet::X, Bideg{1, 1}, ex({1, 1}), Exps{}, 1, 2));
}

TEST_CASE("translations descend to -d/dx_j on the diagonal") {
  for (const auto& gen : conformal::generators(2)) {
    auto q = descend(conformal::dpi_pair(gen.matrix, 1, 1));
    REQUIRE(q.has_value());
    if (gen.kind == conformal::GenKind::Translation) {
      CHECK(*q == -weyl::partial(2, VarSet::X, Bideg{1, 1}, 0, gen.i));
    }
  }
  // x_1 d/dy_1 does not descend.
  DiffOp bad = weyl::compose(weyl::coord(1, VarSet::XY, Bideg{0, 0}, 0, 0), weyl::partial(1, VarSet::XY, Bideg{0, 0}, 1, 0)) -
               weyl::compose(weyl::coord(1, VarSet::XY, Bideg{0, 0}, 0, 0), weyl::partial(1, VarSet::XY, Bideg{0, 0}, 0, 0));
  CHECK_FALSE(descend(bad).has_value());
}

TEST_CASE("Cartan projection") {
  exterior::Multivector e12 = cartan_project({{{1, 2}, ParamScalar(1)}}, 2);
  CHECK(e12 == exterior::Multivector::basis_element(2, 3));
  CHECK(cartan_project({{{1, 1}, ParamScalar(1)}}, 2).is_zero());
  CHECK_THROWS_AS(cartan_projector(2, 2, 1), DegreeError);
  for (int n = 1; n <= 4; ++n) check_report(verify_projection(n));
}

TEST_CASE("three-block formula equals build_B") {
  check_report(verify_dernier(1, 0, 1));
  check_report(verify_dernier(2, 1, 1));
  check_report(verify_dernier(2, 0, 2, 3));
  check_report(verify_dernier(3, 1, 2, 2));
  CHECK_THROWS_AS(build_B(2, 2, 1, 1), DegreeError);
}

TEST_CASE("applying B to a pair of forms") {
  BiDiffOp b = build_B(2, 1, 1, 1);
  PolyForm omega = PolyForm::monomial(2, VarSet::X, Bideg{1, 0}, ex({2}), Exps{}, 1, 0);
  PolyForm eta = PolyForm::monomial(2, VarSet::X, Bideg{1, 0}, ex({0, 1}), Exps{}, 2, 0);
  PolyForm out = b.apply(omega, eta);
  CHECK(out.deg() == Bideg{2, 0});
  CHECK(out == restrict(cartan_project(weyl::apply(*b.pre(), tensor_forms(omega, eta)))));
}

TEST_CASE("scalar case") {
  for (int n = 1; n <= 3; ++n) {
    Report r = verify_rankin_cohen(n);
    // The display's outer blocks carry the opposite sign to build_B when
    // Q(d) = sum d_j^2; reading Q(d) as delta d fixes it.
    CHECK(find(r, "literal display vs build_B (recorded)").detail.rfind("differs", 0) == 0);
    CHECK_FALSE(rankin_cohen_scalar(n) == build_B(n, 0, 0, 1));
    CHECK(find(r, "display with Q(d) read as delta d equals build_B").pass);
    CHECK(find(r, "lambda <-> mu with omega <-> eta symmetry").pass);
    CHECK(find(r, "vanishes on constants").pass);
    CHECK(find(r, "covariance of the literal display (recorded)").detail == "not covariant");
    if (n == 1) CHECK(find(r, "literal display at (x^2, x) matches the hand expansion").pass);
  }
}

TEST_CASE("B is covariant") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; k + l <= n; ++l) check_report(verify_B_covariance(n, k, l, 1));
    }
  }
  check_report(verify_bidiff_covariance(rankin_cohen_scalar(2, RCReading::Codiff), 1, "codiff reading"));
}

#include "covforms/error.hpp"
#include "covforms/source/source.hpp"
#include "doctest.h"

using namespace covforms;
using namespace covforms::source;
using weyl::VarSet;

namespace {

void check_report(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(r.name << ": " << c.label << " " << c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("coefficients clear the fractions") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      Coeffs c = coeffs(n, k, 0);
      CHECK(c.a * c.kappa == c.alpha);
      CHECK(c.b * c.kappa == c.beta);
      CHECK(c.c * c.kappa == c.gamma);
      CHECK(c.d * c.kappa == c.delta);
    }
  }
}

TEST_CASE("Riesz product identity for D") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) check_report(verify_main1(n, k, l, n == 1 ? 3 : 2));
    }
  }
}

TEST_CASE("E: transport, literal blocks and normal form agree") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) check_report(verify_main2_and_normal(n, k, l));
    }
  }
}

TEST_CASE("E on functions has the closed form") {
  for (int n = 1; n <= 3; ++n) CHECK(build_E00_closed(n) == build_E_derived(n, 0, 0));
}

TEST_CASE("commutation lemma and nabla rewritings") {
  for (int n = 1; n <= 3; ++n) {
    check_report(verify_lemma_ident(n));
    check_report(verify_nabla_forms(n));
  }
}

TEST_CASE("swap symmetry") {
  check_report(verify_swap_symmetry(2, 0, 1));
  check_report(verify_swap_symmetry(2, 1, 2));
  check_report(verify_swap_symmetry(3, 1, 2));
}

TEST_CASE("F in the lambda, mu parameters") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        check_report(compare_F(n, k, l));
        check_report(verify_kappa(n, k, l));
      }
    }
  }
  DiffOp f = build_F(2, 1, 0);
  CHECK(f.is_real());
  CHECK(f.order() == 4);
}

TEST_CASE("iterated F") {
  DiffOp f1 = build_F_iter(1, 0, 0, 1);
  CHECK(f1 == build_F(1, 0, 0));
  DiffOp f2 = build_F_iter(1, 0, 0, 2);
  CHECK(f2 == weyl::compose(shift_params(f1, 1), f1));
  CHECK(f2.order() == 8);
  CHECK_THROWS_AS(build_F_iter(1, 0, 0, 0), DegreeError);
}

TEST_CASE("degree validation") {
  CHECK_THROWS_AS(build_D(2, 3, 0), DegreeError);
  CHECK_THROWS_AS(build_E_normal(2, 0, -1), DegreeError);
}

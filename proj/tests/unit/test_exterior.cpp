#include "covforms/error.hpp"
#include "covforms/exterior/exterior.hpp"
#include "doctest.h"

using namespace covforms;
using namespace covforms::exterior;

namespace {

Multivector e(int n, std::initializer_list<int> idx, long long c = 1) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << (i - 1);
  return Multivector::basis_element(n, m, ParamScalar(c));
}

Vector unit(int n, int j) {
  Vector v(n);
  v[j - 1] = ParamScalar(1);
  return v;
}

}  // namespace

TEST_CASE("wedge of basis covectors") {
  CHECK(wedge(e(2, {1}), e(2, {2})) == e(2, {1, 2}));
  CHECK(wedge(e(2, {2}), e(2, {1})) == e(2, {1, 2}, -1));
  CHECK(wedge(e(2, {1}), e(2, {1})).is_zero());
  CHECK(wedge(e(4, {1, 3}), e(4, {2})) == e(4, {1, 2, 3}, -1));
  CHECK_THROWS_AS(wedge(e(2, {1}), e(3, {1})), DimensionMismatch);
}

TEST_CASE("interior product signs") {
  CHECK(interior(unit(2, 1), e(2, {1, 2})) == e(2, {2}));
  CHECK(interior(unit(2, 2), e(2, {1, 2})) == e(2, {1}, -1));
  CHECK(interior(unit(3, 3), e(3, {1, 2})).is_zero());
  CHECK(exterior_mul(unit(3, 2), e(3, {1, 3})) == e(3, {1, 2, 3}, -1));
}

TEST_CASE("endo_of words: anticommutator and rank identities") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      Endo anti = endo_of({Letter::eps(0), Letter::iota(0)}, n, k) + endo_of({Letter::iota(0), Letter::eps(0)}, n, k);
      CHECK(anti == Endo::identity(n, k));
      Endo ei(n, k, k), ie(n, k, k);
      for (int j = 0; j < n; ++j) {
        ei += endo_of({Letter::eps(j), Letter::iota(j)}, n, k);
        ie += endo_of({Letter::iota(j), Letter::eps(j)}, n, k);
      }
      CHECK(ei == Endo::scalar(n, k, ParamScalar(k)));
      CHECK(ie == Endo::scalar(n, k, ParamScalar(n - k)));
    }
  }
}

TEST_CASE("compose, tensor and apply agree") {
  int n = 3;
  Endo a = endo_of({Letter::eps(1)}, n, 1);
  Endo b = endo_of({Letter::iota(0)}, n, 2);
  Multivector v = e(n, {1, 3}, 5);
  CHECK(apply(compose(a, b), v) == apply(a, apply(b, v)));
  Endo t = tensor(Endo::identity(n, 1), a);
  CHECK(t.factors() == 2);
  CHECK(t.entries().size() == 3 * 2);
  CHECK_THROWS_AS(compose(a, a), DegreeError);
}

TEST_CASE("word letters with constant vectors") {
  Vector x{ParamScalar(Rational(1, 2)), ParamScalar(-3)};
  Endo ex = endo_of({Letter::eps(x)}, 2, 0);
  CHECK(apply(ex, e(2, {})) == e(2, {1}).scaled(ParamScalar(Rational(1, 2))) + e(2, {2}, -3));
  // the word with a letter past the top degree is the zero map
  CHECK(endo_of({Letter::eps(0), Letter::eps(1)}, 2, 1).is_zero());
}

TEST_CASE("randomized relations hold for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    Report r = verify_exterior_relations(n, 20, 1234);
    const CheckResult* bad = r.first_failure();
    CHECK_MESSAGE(bad == nullptr, (bad ? bad->label + " " + bad->detail : std::string()));
  }
}

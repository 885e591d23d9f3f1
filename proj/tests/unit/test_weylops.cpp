#include "covforms/error.hpp"
#include "covforms/weylops/algebra.hpp"
#include "covforms/weylops/io.hpp"
#include "doctest.h"

using namespace covforms;
using namespace covforms::weyl;

namespace {

const VarSet X = VarSet::X;
const VarSet XY = VarSet::XY;

Exps ex(std::initializer_list<int> v) {
  Exps e{};
  int j = 0;
  for (int a : v) e[j++] = static_cast<std::uint8_t>(a);
  return e;
}

PolyForm mono(int n, std::initializer_list<int> x, Mask m = 0, int k = 0) {
  return PolyForm::monomial(n, X, Bideg{k, 0}, ex(x), Exps{}, m, 0);
}

void check_report(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.label << " " << c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("compose reorders derivatives past coordinates") {
  Bideg z{0, 0};
  DiffOp lhs = compose(partial(1, X, z, 0, 0), coord(1, X, z, 0, 0));
  DiffOp rhs = compose(coord(1, X, z, 0, 0), partial(1, X, z, 0, 0)) + identity(1, X, z);
  CHECK(lhs == rhs);
  CHECK(lhs.size() == 2);
  // [d^2, x^2] = 4 x d + 2
  DiffOp d2 = compose(partial(1, X, z, 0, 0), partial(1, X, z, 0, 0));
  DiffOp x2 = compose(coord(1, X, z, 0, 0), coord(1, X, z, 0, 0));
  DiffOp expect = compose(coord(1, X, z, 0, 0), partial(1, X, z, 0, 0)).scaled(ParamScalar(4)) +
                  identity(1, X, z).scaled(ParamScalar(2));
  CHECK(commutator(d2, x2) == expect);
  CHECK_THROWS_AS(compose(d_op(3, 1), d_op(3, 1)), DegreeError);
}

TEST_CASE("compose is associative") {
  int n = 2;
  Bideg b1{1, 0};
  DiffOp a = compose(coord(n, X, b1, 0, 0), d_op(n, 0));
  DiffOp b = compose(partial(n, X, Bideg{0, 0}, 0, 1), coord(n, X, Bideg{0, 0}, 0, 1));
  DiffOp c = compose(coord(n, X, Bideg{0, 0}, 0, 0), partial(n, X, Bideg{0, 0}, 0, 0));
  CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("d squares to zero and apply matches hand computation") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k + 1 < n; ++k) CHECK(compose(d_op(n, k + 1), d_op(n, k)).is_zero());
  }
  // d(x1 x2) = x2 e1 + x1 e2
  PolyForm f = mono(2, {1, 1});
  PolyForm expect = mono(2, {0, 1}, 0b01, 1) + mono(2, {1, 0}, 0b10, 1);
  CHECK(apply(d_op(2, 0), f) == expect);
  // d(x1 x2 e1) = x1 e2 ^ e1 = -x1 e12
  CHECK(apply(d_op(2, 1), mono(2, {1, 1}, 0b01, 1)) == mono(2, {1, 0}, 0b11, 2).scaled(ParamScalar(-1)));
  // delta(x1 e1) = -1
  CHECK(apply(delta_op(2, 1), mono(2, {1, 0}, 0b01, 1)) == PolyForm::constant(2, X, ParamScalar(-1)));
  CHECK_THROWS_AS(d_op(2, 3), DegreeError);
}

TEST_CASE("Cartan relations and the Hodge Laplacian") {
  for (int n = 1; n <= 4; ++n) check_report(verify_cartan_relations(n));
}

TEST_CASE("symbolic exterior relations") {
  for (int n = 1; n <= 4; ++n) check_report(verify_symbolic_exterior(n));
}

TEST_CASE("Fourier maps") {
  Bideg z{0, 0};
  DiffOp euler = compose(coord(1, X, z, 0, 0), partial(1, X, z, 0, 0));
  CHECK(fourier_image(euler) == -(euler + identity(1, X, z)));
  CHECK(fourier_image(partial(1, X, z, 0, 0)) == coord(1, X, z, 0, 0).scaled(ParamScalar(GaussRat(0, -1))));
  DiffOp op = compose(laplacian_op(2, 1), compose(coord(2, X, Bideg{1, 0}, 0, 1), d_op(2, 0)));
  CHECK(fourier_preimage(fourier_image(op)) == op);
  CHECK(fourier_image(fourier_preimage(op)) == op);
  // The image of a composition is the composition of images.
  DiffOp a = d_op(2, 0);
  DiffOp b = compose(coord(2, X, z, 0, 0), coord(2, X, z, 0, 1));
  CHECK(fourier_image(compose(a, b)) == compose(fourier_image(a), fourier_image(b)));
}

TEST_CASE("Lie derivative along translations and dilations") {
  int n = 2;
  PolyVector e1{PolyForm::constant(n, X, ParamScalar(1)), PolyForm(n, X, Bideg{0, 0})};
  for (int k = 0; k <= n; ++k) CHECK(lie_derivative(e1, k) == partial(n, X, Bideg{k, 0}, 0, 0));
  // Euler field: L_E on k-forms with monomial coefficient of degree m scales
  // by m + k.
  PolyVector euler{PolyForm::coordinate(n, X, 0, 0), PolyForm::coordinate(n, X, 0, 1)};
  PolyForm w = mono(n, {2, 1}, 0b01, 1);
  CHECK(apply(lie_derivative(euler, 1), w) == w.scaled(ParamScalar(4)));
}

TEST_CASE("tensor, lift and swap") {
  int n = 2;
  DiffOp a = d_op(n, 0);
  DiffOp b = delta_op(n, 1);
  DiffOp t = tensor(a, b);
  CHECK(t.src() == Bideg{0, 1});
  CHECK(t.tgt() == Bideg{1, 0});
  CHECK(t == compose(lift_x(a, 0), lift_y(b, 0)));
  CHECK(t == compose(lift_y(b, 1), lift_x(a, 1)));
  CHECK(swap_factors(t) == tensor(b, a));
  CHECK(swap_factors(swap_factors(t)) == t);
  CHECK(lift_x(a, 1) == d_side(n, XY, Bideg{0, 1}, 0));
  CHECK(lift_y(b, 2) == delta_side(n, XY, Bideg{2, 1}, 1));
  DiffOp withs = t.scaled(ParamScalar::var(0));
  CHECK(swap_factors(withs) == tensor(b, a).scaled(ParamScalar::var(1)));
}

TEST_CASE("equal_on_monomials agrees with structural equality") {
  DiffOp lap = laplacian_op(3, 1);
  DiffOp sq = sum_of_squares(3, X, Bideg{1, 0}, 0);
  CHECK(equal_on_monomials(lap, sq));
  CHECK_FALSE(equal_on_monomials(lap, sq + identity(3, X, Bideg{1, 0})));
  CHECK_FALSE(equal_on_monomials(lap, sq.scaled(ParamScalar(2))));
}

TEST_CASE("substitution of parameters") {
  DiffOp op = d_op(2, 0).scaled(ParamScalar(ParamPoly::var(0) * ParamPoly::var(1)));
  DiffOp sub = substitute(op, ParamPoly(3), ParamPoly::var(0) + ParamPoly(1));
  CHECK(sub == d_op(2, 0).scaled(ParamScalar(ParamPoly::var(0).scaled(GaussRat(3)) + ParamPoly(3))));
}

TEST_CASE("JSON round trip is exact") {
  ParamScalar s = ParamScalar::var(0);
  ParamScalar c(ParamPoly::var(0) + ParamPoly(2), ParamPoly::var(1) - ParamPoly(1));
  DiffOp a = tensor(d_op(3, 1).scaled(c), laplacian_op(3, 2).scaled(s)) +
             tensor(d_op(3, 1), identity(3, X, Bideg{2, 0})).scaled(ParamScalar(GaussRat(Rational(1), Rational(-2, 3))));
  auto j = to_json(a);
  CHECK(j["schema_version"] == kSchemaVersion);
  DiffOp back = from_json(j);
  CHECK(back == a);
  CHECK(to_json(back).dump() == j.dump());
  auto parsed = nlohmann::json::parse(j.dump());
  CHECK(from_json(parsed) == a);
  DiffOp lm = from_json(to_json(a, lm_names()));
  CHECK(lm == a);
  nlohmann::json bad = j;
  bad["terms"][0]["endo"] = {0, 0, 0, 0};
  CHECK_THROWS_AS(from_json(bad), ParseError);
  bad = j;
  bad.erase("n");
  CHECK_THROWS_AS(from_json(bad), ParseError);
  CHECK_THROWS_AS(from_json(nlohmann::json::array()), ParseError);
}

TEST_CASE("LaTeX rendering") {
  std::string s = to_latex(d_op(2, 0));
  CHECK(s.find("\\partial_{x_{1}}") != std::string::npos);
  CHECK(s.find("E_{1 \\leftarrow \\varnothing}") != std::string::npos);
  DiffOp op = identity(1, X, Bideg{0, 0}).scaled(ParamScalar::var(0) * ParamScalar::var(0));
  CHECK(to_latex(op, lm_names()).find("\\lambda^{2}") != std::string::npos);
  CHECK(to_latex(DiffOp(2, X, Bideg{0, 0}, Bideg{0, 0})) == "0");
}

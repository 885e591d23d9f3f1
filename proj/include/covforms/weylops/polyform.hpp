#pragma once

#include <map>
#include <string>
#include <vector>

#include "covforms/weylops/diffop.hpp"

namespace covforms::weyl {

// Monomial x^x y^y times the basis element e_{xm} (x) e_{ym}.
struct FormKey {
  Exps x{};
  Exps y{};
  std::uint16_t xm = 0;
  std::uint16_t ym = 0;

  friend bool operator==(const FormKey& a, const FormKey& b) {
    return a.x == b.x && a.y == b.y && a.xm == b.xm && a.ym == b.ym;
  }
  friend bool operator<(const FormKey& a, const FormKey& b);
};

// Differential form with polynomial coefficients, valued in Lambda^k (x)
// Lambda^l. A 0-form with vars X is an ordinary polynomial in x.
class PolyForm {
 public:
  PolyForm(int n, VarSet vars, Bideg deg);

  static PolyForm monomial(int n, VarSet vars, Bideg deg, const Exps& x, const Exps& y, Mask xm, Mask ym,
                           const ParamScalar& c = ParamScalar(1));
  static PolyForm constant(int n, VarSet vars, const ParamScalar& c);
  static PolyForm coordinate(int n, VarSet vars, int side, int j);

  int dim() const noexcept { return n_; }
  VarSet vars() const noexcept { return vars_; }
  Bideg deg() const noexcept { return deg_; }
  const std::map<FormKey, ParamScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ParamScalar coeff(const FormKey& k) const;
  int total_degree() const;

  void add_term(const FormKey& k, const ParamScalar& c);
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  PolyForm scaled(const ParamScalar& c) const;
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.n_ == b.n_ && a.vars_ == b.vars_ && a.deg_ == b.deg_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

  // Pointwise product with a scalar polynomial (a 0-form).
  PolyForm times(const PolyForm& scalar_poly) const;
  PolyForm map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const;

  std::string to_string(const ParamNames& names = st_names()) const;

 private:
  int n_;
  VarSet vars_;
  Bideg deg_;
  std::map<FormKey, ParamScalar> terms_;
};

// Polynomial vector field: n scalar polynomials (0-forms).
using PolyVector = std::vector<PolyForm>;

// Every monomial form of total polynomial degree <= max_degree, with every
// basis element of the given bidegree. The test set for operator identities.
std::vector<PolyForm> monomial_forms(int n, VarSet vars, Bideg deg, int max_degree);

}  // namespace covforms::weyl

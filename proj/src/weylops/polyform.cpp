#include "covforms/weylops/polyform.hpp"

#include <sstream>

#include "covforms/error.hpp"

namespace covforms::weyl {

bool operator<(const FormKey& a, const FormKey& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  if (a.xm != b.xm) return a.xm < b.xm;
  return a.ym < b.ym;
}

PolyForm::PolyForm(int n, VarSet vars, Bideg deg) : n_(n), vars_(vars), deg_(deg) {
  if (n < 1 || n > kMaxDim) throw DimensionMismatch("form dimension out of range");
}

PolyForm PolyForm::monomial(int n, VarSet vars, Bideg deg, const Exps& x, const Exps& y, Mask xm, Mask ym,
                            const ParamScalar& c) {
  PolyForm f(n, vars, deg);
  f.add_term(FormKey{x, y, static_cast<std::uint16_t>(xm), static_cast<std::uint16_t>(ym)}, c);
  return f;
}

PolyForm PolyForm::constant(int n, VarSet vars, const ParamScalar& c) {
  return monomial(n, vars, Bideg{0, 0}, Exps{}, Exps{}, 0, 0, c);
}

PolyForm PolyForm::coordinate(int n, VarSet vars, int side, int j) {
  Exps e{};
  e[j] = 1;
  if (side == 0) return monomial(n, vars, Bideg{0, 0}, e, Exps{}, 0, 0);
  if (vars != VarSet::XY) throw DimensionMismatch("no y variables in a single-variable form");
  return monomial(n, vars, Bideg{0, 0}, Exps{}, e, 0, 0);
}

ParamScalar PolyForm::coeff(const FormKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? ParamScalar() : it->second;
}

int PolyForm::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int j = 0; j < kMaxDim; ++j) s += k.x[j] + k.y[j];
    d = std::max(d, s);
  }
  return d;
}

void PolyForm::add_term(const FormKey& k, const ParamScalar& c) {
  if (c.is_zero()) return;
  if (exterior::degree_of(k.xm) != deg_.k || exterior::degree_of(k.ym) != deg_.l || (k.xm >> n_) || (k.ym >> n_)) {
    throw DegreeError("basis element does not match the form bidegree");
  }
  if (vars_ == VarSet::X) {
    for (int j = 0; j < kMaxDim; ++j) {
      if (k.y[j]) throw DimensionMismatch("y monomial in a single-variable form");
    }
  }
  for (int j = n_; j < kMaxDim; ++j) {
    if (k.x[j] || k.y[j]) throw DimensionMismatch("monomial uses a variable beyond the dimension");
  }
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim() || a.vars() != b.vars() || a.deg() != b.deg()) {
    throw DegreeError("forms live in different spaces");
  }
}

}  // namespace

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  require_same(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  require_same(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PolyForm PolyForm::scaled(const ParamScalar& c) const {
  PolyForm out(n_, vars_, deg_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

PolyForm PolyForm::times(const PolyForm& p) const {
  if (p.deg() != Bideg{0, 0} || p.dim() != n_) throw DegreeError("pointwise factor must be a scalar polynomial");
  if (p.vars() == VarSet::XY && vars_ == VarSet::X) throw DimensionMismatch("factor uses y variables");
  PolyForm out(n_, vars_, deg_);
  for (const auto& [kp, cp] : p.terms()) {
    for (const auto& [k, c] : terms_) {
      FormKey r = k;
      for (int j = 0; j < kMaxDim; ++j) {
        r.x[j] = static_cast<std::uint8_t>(r.x[j] + kp.x[j]);
        r.y[j] = static_cast<std::uint8_t>(r.y[j] + kp.y[j]);
      }
      out.add_term(r, c * cp);
    }
  }
  return out;
}

PolyForm PolyForm::map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const {
  PolyForm out(n_, vars_, deg_);
  for (const auto& [k, c] : terms_) out.add_term(k, f(c));
  return out;
}

std::string PolyForm::to_string(const ParamNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string(names) << ")";
    for (int j = 0; j < n_; ++j) {
      if (k.x[j]) os << "*x" << (j + 1) << (k.x[j] > 1 ? "^" + std::to_string(k.x[j]) : "");
    }
    for (int j = 0; j < n_; ++j) {
      if (k.y[j]) os << "*y" << (j + 1) << (k.y[j] > 1 ? "^" + std::to_string(k.y[j]) : "");
    }
    if (deg_.k > 0 || vars_ == VarSet::XY || deg_.l > 0) os << " " << exterior::mask_label(k.xm);
    if (vars_ == VarSet::XY || deg_.l > 0) os << "(x)" << exterior::mask_label(k.ym);
  }
  return os.str();
}

namespace {

void enumerate_exps(int vars, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.push_back(e);
    enumerate_exps(vars, remaining - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PolyForm> monomial_forms(int n, VarSet vars, Bideg deg, int max_degree) {
  int nv = vars == VarSet::XY ? 2 * n : n;
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  enumerate_exps(nv, max_degree, cur, exps);
  std::vector<PolyForm> out;
  for (Mask xm : exterior::basis(n, deg.k)) {
    for (Mask ym : exterior::basis(n, deg.l)) {
      for (const auto& e : exps) {
        Exps x{}, y{};
        for (int j = 0; j < n; ++j) {
          x[j] = static_cast<std::uint8_t>(e[j]);
          if (vars == VarSet::XY) y[j] = static_cast<std::uint8_t>(e[n + j]);
        }
        out.push_back(PolyForm::monomial(n, vars, deg, x, y, xm, ym));
      }
    }
  }
  return out;
}

}  // namespace covforms::weyl

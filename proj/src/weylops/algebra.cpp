#include "covforms/weylops/algebra.hpp"

#include <unordered_map>

#include "covforms/error.hpp"

namespace covforms::weyl {

namespace {

using exterior::basis;
using exterior::sign_before;

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t falling(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

// Enumerates the normal ordering of D^d X^a (D = derivatives, X = the
// matching coordinates): sum over v <= min(d, a) of
// prod_j C(d_j, v_j) a_j!/(a_j - v_j)! * X^{a-v} D^{d-v}.
template <class F>
void leibniz(const Exps& d, const Exps& a, int n, F&& emit) {
  int active[kMaxDim];
  int limit[kMaxDim];
  int m = 0;
  for (int j = 0; j < n; ++j) {
    int l = std::min(d[j], a[j]);
    if (l > 0) {
      active[m] = j;
      limit[m] = l;
      ++m;
    }
  }
  int v[kMaxDim] = {0};
  while (true) {
    std::int64_t factor = 1;
    Exps xr = a;
    Exps dr = d;
    for (int i = 0; i < m; ++i) {
      int j = active[i];
      factor *= binom(d[j], v[i]) * falling(a[j], v[i]);
      xr[j] = static_cast<std::uint8_t>(a[j] - v[i]);
      dr[j] = static_cast<std::uint8_t>(d[j] - v[i]);
    }
    emit(factor, xr, dr);
    int i = 0;
    while (i < m && v[i] == limit[i]) {
      v[i] = 0;
      ++i;
    }
    if (i == m) break;
    ++v[i];
  }
}

Exps add(const Exps& a, const Exps& b) {
  Exps r{};
  for (int j = 0; j < kMaxDim; ++j) {
    int s = a[j] + b[j];
    if (s > 255) throw DegreeError("exponent overflow in operator algebra");
    r[j] = static_cast<std::uint8_t>(s);
  }
  return r;
}

int exps_sum(const Exps& e) {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

void require_side(VarSet vars, int side, bool needs_variables) {
  if (side != 0 && side != 1) throw DimensionMismatch("side must be 0 or 1");
  if (side == 1 && needs_variables && vars != VarSet::XY) {
    throw DimensionMismatch("single-variable operators have no y variables");
  }
}

// Calls f(xm, ym) for every basis element of Lambda^k (x) Lambda^l.
template <class F>
void for_basis(int n, Bideg deg, F&& f) {
  for (Mask xm : basis(n, deg.k)) {
    for (Mask ym : basis(n, deg.l)) f(xm, ym);
  }
}

}  // namespace

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.dim() != b.dim() || a.vars() != b.vars()) throw DimensionMismatch("composition of operators on different spaces");
  if (a.src() != b.tgt()) throw DegreeError("composition: source bidegree of the left factor differs from target of the right");
  DiffOpBuilder out(a.dim(), a.vars(), b.src(), a.tgt());
  if (a.is_zero() || b.is_zero()) return out.finish();
  std::unordered_map<std::uint32_t, std::vector<const DiffOp::Term*>> by_out;
  for (const auto& t : b.terms()) by_out[std::uint32_t{t.key->xo} | (std::uint32_t{t.key->yo} << 16)].push_back(&t);
  const int n = a.dim();
  for (const auto& ta : a.terms()) {
    auto it = by_out.find(std::uint32_t{ta.key->xi} | (std::uint32_t{ta.key->yi} << 16));
    if (it == by_out.end()) continue;
    const OpKey& ka = *ta.key;
    for (const DiffOp::Term* tb : it->second) {
      const OpKey& kb = *tb->key;
      ParamScalar c = ta.coeff * tb->coeff;
      if (c.is_zero()) continue;
      OpKey base;
      base.xo = ka.xo;
      base.xi = kb.xi;
      base.yo = ka.yo;
      base.yi = kb.yi;
      // Move dx^{ka.dx} past x^{kb.x}, then dy^{ka.dy} past y^{kb.y}.
      leibniz(ka.dx, kb.x, n, [&](std::int64_t fx, const Exps& xr, const Exps& dxr) {
        leibniz(ka.dy, kb.y, n, [&](std::int64_t fy, const Exps& yr, const Exps& dyr) {
          OpKey k = base;
          k.x = add(ka.x, xr);
          k.y = add(ka.y, yr);
          k.dx = add(dxr, kb.dx);
          k.dy = add(dyr, kb.dy);
          std::int64_t f = fx * fy;
          out.add(k, f == 1 ? c : c.scaled(GaussRat(Rational(f))));
        });
      });
    }
  }
  return out.finish();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

PolyForm apply(const DiffOp& op, const PolyForm& form) {
  if (op.dim() != form.dim() || op.vars() != form.vars()) throw DimensionMismatch("operator and form live on different spaces");
  if (op.src() != form.deg()) throw DegreeError("form bidegree does not match operator source");
  PolyForm out(op.dim(), op.vars(), op.tgt());
  std::unordered_map<std::uint32_t, std::vector<std::pair<const FormKey*, const ParamScalar*>>> by_mask;
  for (const auto& [k, c] : form.terms()) by_mask[std::uint32_t{k.xm} | (std::uint32_t{k.ym} << 16)].push_back({&k, &c});
  for (const auto& t : op.terms()) {
    const OpKey& k = *t.key;
    auto it = by_mask.find(std::uint32_t{k.xi} | (std::uint32_t{k.yi} << 16));
    if (it == by_mask.end()) continue;
    for (const auto& [fk, fc] : it->second) {
      std::int64_t factor = 1;
      FormKey r;
      for (int j = 0; j < kMaxDim && factor != 0; ++j) {
        if (fk->x[j] < k.dx[j] || fk->y[j] < k.dy[j]) {
          factor = 0;
          break;
        }
        factor *= falling(fk->x[j], k.dx[j]) * falling(fk->y[j], k.dy[j]);
        r.x[j] = static_cast<std::uint8_t>(fk->x[j] - k.dx[j] + k.x[j]);
        r.y[j] = static_cast<std::uint8_t>(fk->y[j] - k.dy[j] + k.y[j]);
      }
      if (factor == 0) continue;
      r.xm = k.xo;
      r.ym = k.yo;
      out.add_term(r, (t.coeff * *fc).scaled(GaussRat(Rational(factor))));
    }
  }
  return out;
}

DiffOp identity(int n, VarSet vars, Bideg deg) { return scalar_op(n, vars, deg, ParamScalar(1)); }

DiffOp scalar_op(int n, VarSet vars, Bideg deg, const ParamScalar& c) {
  DiffOpBuilder b(n, vars, deg, deg);
  for_basis(n, deg, [&](Mask xm, Mask ym) {
    OpKey k;
    k.xo = k.xi = static_cast<std::uint16_t>(xm);
    k.yo = k.yi = static_cast<std::uint16_t>(ym);
    b.add(k, c);
  });
  return b.finish();
}

namespace {

DiffOp monomial_op(int n, VarSet vars, Bideg deg, int side, int j, bool derivative) {
  require_side(vars, side, true);
  if (j < 0 || j >= n) throw DimensionMismatch("coordinate index out of range");
  DiffOpBuilder b(n, vars, deg, deg);
  for_basis(n, deg, [&](Mask xm, Mask ym) {
    OpKey k;
    k.xo = k.xi = static_cast<std::uint16_t>(xm);
    k.yo = k.yi = static_cast<std::uint16_t>(ym);
    Exps& e = derivative ? (side == 0 ? k.dx : k.dy) : (side == 0 ? k.x : k.y);
    e[j] = 1;
    b.add(k, ParamScalar(1));
  });
  return b.finish();
}

// eps_j / iota_j on one factor, optionally multiplied by the coordinate x_j
// (field = true) or followed by d/dx_j (derivative = true) of the same side.
DiffOp letter_op(int n, VarSet vars, Bideg deg, int side, int j, bool raise, bool field, bool derivative,
                 const ParamScalar& c) {
  require_side(vars, side, field || derivative);
  Bideg tgt = deg;
  (side == 0 ? tgt.k : tgt.l) += raise ? 1 : -1;
  DiffOpBuilder b(n, vars, deg, tgt);
  Mask bit = Mask{1} << j;
  for_basis(n, deg, [&](Mask xm, Mask ym) {
    Mask m = side == 0 ? xm : ym;
    if (raise == bool(m & bit)) return;
    Mask out = raise ? (m | bit) : (m & ~bit);
    OpKey k;
    k.xi = static_cast<std::uint16_t>(xm);
    k.yi = static_cast<std::uint16_t>(ym);
    k.xo = static_cast<std::uint16_t>(side == 0 ? out : xm);
    k.yo = static_cast<std::uint16_t>(side == 0 ? ym : out);
    if (field) (side == 0 ? k.x : k.y)[j] = 1;
    if (derivative) (side == 0 ? k.dx : k.dy)[j] = 1;
    b.add(k, c.scaled(GaussRat(sign_before(m, j))));
  });
  return b.finish();
}

DiffOp letter_sum(int n, VarSet vars, Bideg deg, int side, bool raise, bool field, bool derivative,
                  const ParamScalar& c) {
  Bideg tgt = deg;
  (side == 0 ? tgt.k : tgt.l) += raise ? 1 : -1;
  DiffOpBuilder b(n, vars, deg, tgt);
  for (int j = 0; j < n; ++j) b.add(letter_op(n, vars, deg, side, j, raise, field, derivative, c));
  return b.finish();
}

}  // namespace

DiffOp coord(int n, VarSet vars, Bideg deg, int side, int j) { return monomial_op(n, vars, deg, side, j, false); }

DiffOp partial(int n, VarSet vars, Bideg deg, int side, int j) { return monomial_op(n, vars, deg, side, j, true); }

DiffOp eps(int n, VarSet vars, Bideg deg, int side, int j) {
  return letter_op(n, vars, deg, side, j, true, false, false, ParamScalar(1));
}

DiffOp iota(int n, VarSet vars, Bideg deg, int side, int j) {
  return letter_op(n, vars, deg, side, j, false, false, false, ParamScalar(1));
}

DiffOp eps_field(int n, VarSet vars, Bideg deg, int side) {
  return letter_sum(n, vars, deg, side, true, true, false, ParamScalar(1));
}

DiffOp iota_field(int n, VarSet vars, Bideg deg, int side) {
  return letter_sum(n, vars, deg, side, false, true, false, ParamScalar(1));
}

DiffOp d_side(int n, VarSet vars, Bideg deg, int side) {
  return letter_sum(n, vars, deg, side, true, false, true, ParamScalar(1));
}

DiffOp delta_side(int n, VarSet vars, Bideg deg, int side) {
  return letter_sum(n, vars, deg, side, false, false, true, ParamScalar(-1));
}

DiffOp laplacian_side(int n, VarSet vars, Bideg deg, int side) {
  Bideg up = deg, down = deg;
  (side == 0 ? up.k : up.l) += 1;
  (side == 0 ? down.k : down.l) -= 1;
  DiffOp dd = compose(d_side(n, vars, down, side), delta_side(n, vars, deg, side));
  DiffOp dd2 = compose(delta_side(n, vars, up, side), d_side(n, vars, deg, side));
  return -(dd + dd2);
}

DiffOp sum_of_squares(int n, VarSet vars, Bideg deg, int side) {
  require_side(vars, side, true);
  DiffOpBuilder b(n, vars, deg, deg);
  for (int j = 0; j < n; ++j) {
    for_basis(n, deg, [&](Mask xm, Mask ym) {
      OpKey k;
      k.xo = k.xi = static_cast<std::uint16_t>(xm);
      k.yo = k.yi = static_cast<std::uint16_t>(ym);
      (side == 0 ? k.dx : k.dy)[j] = 2;
      b.add(k, ParamScalar(1));
    });
  }
  return b.finish();
}

namespace {

void check_single_degree(int n, int k) {
  if (k < 0 || k > n) throw DegreeError("form degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

}  // namespace

DiffOp d_op(int n, int k) {
  check_single_degree(n, k);
  return d_side(n, VarSet::X, Bideg{k, 0}, 0);
}

DiffOp delta_op(int n, int k) {
  check_single_degree(n, k);
  return delta_side(n, VarSet::X, Bideg{k, 0}, 0);
}

DiffOp laplacian_op(int n, int k) {
  check_single_degree(n, k);
  return laplacian_side(n, VarSet::X, Bideg{k, 0}, 0);
}

DiffOp multiply(const PolyForm& f, Bideg deg) {
  if (f.deg() != Bideg{0, 0}) throw DegreeError("multiplier must be a scalar polynomial");
  DiffOpBuilder b(f.dim(), f.vars(), deg, deg);
  for (const auto& [fk, fc] : f.terms()) {
    for_basis(f.dim(), deg, [&](Mask xm, Mask ym) {
      OpKey k;
      k.x = fk.x;
      k.y = fk.y;
      k.xo = k.xi = static_cast<std::uint16_t>(xm);
      k.yo = k.yi = static_cast<std::uint16_t>(ym);
      b.add(k, fc);
    });
  }
  return b.finish();
}

DiffOp endo_op(const exterior::Endo& e, VarSet vars, Bideg deg, int side) {
  if (e.factors() != 1) throw DimensionMismatch("endo_op expects a single-factor endomorphism");
  if ((side == 0 ? deg.k : deg.l) != e.src()) throw DegreeError("endomorphism source does not match the factor degree");
  int n = e.dim();
  Bideg tgt = deg;
  (side == 0 ? tgt.k : tgt.l) = e.tgt();
  DiffOpBuilder b(n, vars, deg, tgt);
  for (const auto& [key, c] : e.entries()) {
    Mask out = static_cast<Mask>(key & 0xffff);
    Mask in = static_cast<Mask>((key >> 16) & 0xffff);
    for (Mask other : basis(n, side == 0 ? deg.l : deg.k)) {
      OpKey k;
      if (side == 0) {
        k.xo = static_cast<std::uint16_t>(out);
        k.xi = static_cast<std::uint16_t>(in);
        k.yo = k.yi = static_cast<std::uint16_t>(other);
      } else {
        k.yo = static_cast<std::uint16_t>(out);
        k.yi = static_cast<std::uint16_t>(in);
        k.xo = k.xi = static_cast<std::uint16_t>(other);
      }
      b.add(k, c);
    }
  }
  return b.finish();
}

DiffOp iota_vector(const PolyVector& field, Bideg deg, VarSet vars, int side) {
  if (field.empty()) throw DimensionMismatch("empty vector field");
  int n = field[0].dim();
  if (static_cast<int>(field.size()) != n) throw DimensionMismatch("vector field length differs from dimension");
  Bideg tgt = deg;
  (side == 0 ? tgt.k : tgt.l) -= 1;
  DiffOpBuilder b(n, vars, deg, tgt);
  for (int m = 0; m < n; ++m) {
    if (field[m].is_zero()) continue;
    b.add(compose(multiply(field[m], tgt), iota(n, vars, deg, side, m)));
  }
  return b.finish();
}

DiffOp lie_derivative(const PolyVector& field, int k) {
  if (field.empty()) throw DimensionMismatch("empty vector field");
  int n = field[0].dim();
  check_single_degree(n, k);
  for (const auto& f : field) {
    if (f.vars() != VarSet::X) throw DimensionMismatch("Lie derivative expects a field in x only");
  }
  Bideg here{k, 0}, up{k + 1, 0}, down{k - 1, 0};
  DiffOp a = compose(d_side(n, VarSet::X, down, 0), iota_vector(field, here, VarSet::X, 0));
  DiffOp b = compose(iota_vector(field, up, VarSet::X, 0), d_side(n, VarSet::X, here, 0));
  return a + b;
}

namespace {

DiffOp fourier_swap(const DiffOp& op, int phase) {
  const int n = op.dim();
  DiffOpBuilder out(n, op.vars(), op.src(), op.tgt());
  for (const auto& t : op.terms()) {
    const OpKey& k = *t.key;
    int weight = exps_sum(k.x) + exps_sum(k.y) + exps_sum(k.dx) + exps_sum(k.dy);
    ParamScalar c = t.coeff.scaled(i_power(phase * weight));
    // x^a d^g  ->  d^a x^g  (up to the phase), then normal order.
    leibniz(k.x, k.dx, n, [&](std::int64_t fx, const Exps& xr, const Exps& dxr) {
      leibniz(k.y, k.dy, n, [&](std::int64_t fy, const Exps& yr, const Exps& dyr) {
        OpKey r = k;
        r.x = xr;
        r.dx = dxr;
        r.y = yr;
        r.dy = dyr;
        std::int64_t f = fx * fy;
        out.add(r, f == 1 ? c : c.scaled(GaussRat(Rational(f))));
      });
    });
  }
  return out.finish();
}

}  // namespace

DiffOp fourier_image(const DiffOp& op) { return fourier_swap(op, -1); }

DiffOp fourier_preimage(const DiffOp& op) { return fourier_swap(op, 1); }

DiffOp swap_factors(const DiffOp& op) {
  if (op.vars() != VarSet::XY) throw DimensionMismatch("swap_factors needs a two-variable operator");
  DiffOpBuilder out(op.dim(), op.vars(), Bideg{op.src().l, op.src().k}, Bideg{op.tgt().l, op.tgt().k});
  for (const auto& t : op.terms()) {
    const OpKey& k = *t.key;
    OpKey r;
    r.x = k.y;
    r.y = k.x;
    r.dx = k.dy;
    r.dy = k.dx;
    r.xo = k.yo;
    r.xi = k.yi;
    r.yo = k.xo;
    r.yi = k.xi;
    out.add(r, t.coeff.swap_params());
  }
  return out.finish();
}

DiffOp tensor(const DiffOp& a, const DiffOp& b) {
  if (a.vars() != VarSet::X || b.vars() != VarSet::X || a.dim() != b.dim()) {
    throw DimensionMismatch("tensor expects two single-variable operators of equal dimension");
  }
  if (a.src().l != 0 || a.tgt().l != 0 || b.src().l != 0 || b.tgt().l != 0) {
    throw DegreeError("tensor factors must act on a single exterior power");
  }
  DiffOpBuilder out(a.dim(), VarSet::XY, Bideg{a.src().k, b.src().k}, Bideg{a.tgt().k, b.tgt().k});
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      OpKey k;
      k.x = ta.key->x;
      k.dx = ta.key->dx;
      k.xo = ta.key->xo;
      k.xi = ta.key->xi;
      k.y = tb.key->x;
      k.dy = tb.key->dx;
      k.yo = tb.key->xo;
      k.yi = tb.key->xi;
      out.add(k, ta.coeff * tb.coeff);
    }
  }
  return out.finish();
}

DiffOp lift_x(const DiffOp& op, int l) { return tensor(op, identity(op.dim(), VarSet::X, Bideg{l, 0})); }

DiffOp lift_y(const DiffOp& op, int k) { return tensor(identity(op.dim(), VarSet::X, Bideg{k, 0}), op); }

DiffOp substitute(const DiffOp& op, const ParamPoly& f0, const ParamPoly& f1) {
  return op.map_coeffs([&](const ParamScalar& c) { return c.compose(f0, f1); });
}

bool equal_on_monomials(const DiffOp& a, const DiffOp& b) {
  if (!a.same_space(b)) return false;
  int r = std::max(a.order(), b.order());
  for (const auto& f : monomial_forms(a.dim(), a.vars(), a.src(), r)) {
    if (apply(a, f) != apply(b, f)) return false;
  }
  return true;
}

namespace {

// Order-0 operators eps_x, eps_y, iota_x, iota_y on the first factor with x
// and y the two independent symbolic coordinate vectors.
DiffOp field_letter(int n, int k, int var_side, bool raise) {
  Bideg deg{k, 0};
  Bideg tgt{raise ? k + 1 : k - 1, 0};
  DiffOpBuilder b(n, VarSet::XY, deg, tgt);
  for (int j = 0; j < n; ++j) {
    DiffOp l = raise ? eps(n, VarSet::XY, deg, 0, j) : iota(n, VarSet::XY, deg, 0, j);
    b.add(compose(multiply(PolyForm::coordinate(n, VarSet::XY, var_side, j), tgt), l));
  }
  return b.finish();
}

PolyForm dot(int n, int a, int b) {
  PolyForm acc(n, VarSet::XY, Bideg{0, 0});
  for (int j = 0; j < n; ++j) {
    acc += PolyForm::coordinate(n, VarSet::XY, a, j).times(PolyForm::coordinate(n, VarSet::XY, b, j));
  }
  return acc;
}

PolyForm wedge_forms(const PolyForm& a, const PolyForm& b) {
  PolyForm out(a.dim(), a.vars(), Bideg{a.deg().k + b.deg().k, 0});
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      int sg = exterior::wedge_sign(ka.xm, kb.xm);
      if (sg == 0) continue;
      FormKey r;
      r.x = add(ka.x, kb.x);
      r.y = add(ka.y, kb.y);
      r.xm = static_cast<std::uint16_t>(ka.xm | kb.xm);
      out.add_term(r, (ca * cb).scaled(GaussRat(sg)));
    }
  }
  return out;
}

// Generic k-form whose coefficient on the i-th basis element is the monomial
// v_1^{i+1} in the chosen variable set, so no two coefficients coincide.
PolyForm generic_form(int n, int k, int var_side) {
  PolyForm f(n, VarSet::XY, Bideg{k, 0});
  int i = 0;
  for (Mask m : basis(n, k)) {
    Exps e{};
    e[0] = static_cast<std::uint8_t>(++i);
    f.add_term(FormKey{var_side == 0 ? e : Exps{}, var_side == 1 ? e : Exps{}, static_cast<std::uint16_t>(m), 0},
               ParamScalar(1));
  }
  return f;
}

}  // namespace

Report verify_symbolic_exterior(int n) {
  Report rep;
  rep.name = "symbolic exterior relations n=" + std::to_string(n);
  PolyForm xy = dot(n, 0, 1);
  PolyForm xx = dot(n, 0, 0);
  for (int k = 0; k <= n; ++k) {
    std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
    Bideg here{k, 0};
    auto lt = [&](int kk, int side, bool raise) { return field_letter(n, kk, side, raise); };
    DiffOp ex = lt(k, 0, true), ey = lt(k, 1, true), ix = lt(k, 0, false), iy = lt(k, 1, false);
    rep.add("iota_x iota_y + iota_y iota_x = 0" + tag,
            (compose(lt(k - 1, 0, false), iy) + compose(lt(k - 1, 1, false), ix)).is_zero());
    rep.add("eps_x eps_y + eps_y eps_x = 0" + tag,
            (compose(lt(k + 1, 0, true), ey) + compose(lt(k + 1, 1, true), ex)).is_zero());
    DiffOp id_lhs = compose(lt(k - 1, 0, true), iy) + compose(lt(k + 1, 1, false), ex);
    rep.add("eps_x iota_y + iota_y eps_x = <x,y> Id" + tag, id_lhs == multiply(xy, here));
    DiffOp cor1 = compose(lt(k, 0, true), compose(lt(k + 1, 1, false), ex));
    rep.add("eps_x iota_y eps_x = <x,y> eps_x" + tag, cor1 == compose(multiply(xy, Bideg{k + 1, 0}), ex));
    DiffOp cor2 = compose(lt(k, 1, false), compose(lt(k - 1, 0, true), iy));
    rep.add("iota_y eps_x iota_y = <x,y> iota_y" + tag, cor2 == compose(multiply(xy, Bideg{k - 1, 0}), iy));
    DiffOp ie = compose(lt(k + 1, 0, false), ex);
    DiffOp ei = compose(lt(k - 1, 0, true), ix);
    DiffOp qx = multiply(xx, here);
    rep.add("(iota_x eps_x)^2 = |x|^2 iota_x eps_x" + tag, compose(ie, ie) == compose(qx, ie));
    rep.add("(eps_x iota_x)^2 = |x|^2 eps_x iota_x" + tag, compose(ei, ei) == compose(qx, ei));
    rep.add("(iota_x eps_x)(eps_x iota_x) = 0" + tag, compose(ie, ei).is_zero());
    for (int l = 0; l + k <= n; ++l) {
      PolyForm w = generic_form(n, k, 0);
      PolyForm h = generic_form(n, l, 1);
      int sg = (k * l) % 2 ? -1 : 1;
      rep.add("w^h = (-1)^{kl} h^w" + tag + " l=" + std::to_string(l),
              wedge_forms(w, h) == wedge_forms(h, w).scaled(ParamScalar(sg)));
    }
  }
  return rep;
}

Report verify_cartan_relations(int n) {
  Report rep;
  rep.name = "Cartan relations n=" + std::to_string(n);
  const VarSet X = VarSet::X;
  for (int k = 0; k <= n; ++k) {
    std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
    Bideg here{k, 0}, up{k + 1, 0}, down{k - 1, 0};
    bool t1 = true, t2 = true;
    std::string why1, why2;
    for (int j = 0; j < n; ++j) {
      DiffOp lhs1 = compose(d_side(n, X, down, 0), iota(n, X, here, 0, j)) +
                    compose(iota(n, X, up, 0, j), d_side(n, X, here, 0));
      DiffOp rhs = partial(n, X, here, 0, j);
      if (lhs1 != rhs && t1) {
        t1 = false;
        why1 = "j=" + std::to_string(j + 1) + ": " + diff_summary(lhs1, rhs);
      }
      DiffOp lhs2 = compose(delta_side(n, X, up, 0), eps(n, X, here, 0, j)) +
                    compose(eps(n, X, down, 0, j), delta_side(n, X, here, 0));
      if (lhs2 != -rhs && t2) {
        t2 = false;
        why2 = "j=" + std::to_string(j + 1) + ": " + diff_summary(lhs2, -rhs);
      }
    }
    rep.add("d iota_j + iota_j d = d_j" + tag, t1, why1);
    rep.add("delta eps_j + eps_j delta = -d_j" + tag, t2, why2);
    DiffOp lap = laplacian_op(n, k);
    DiffOp sq = sum_of_squares(n, X, here, 0);
    rep.add("-(d delta + delta d) = sum d_m^2" + tag, lap == sq, diff_summary(lap, sq));
    rep.add("d d = 0" + tag, compose(d_side(n, X, up, 0), d_side(n, X, here, 0)).is_zero());
    rep.add("delta delta = 0" + tag, compose(delta_side(n, X, down, 0), delta_side(n, X, here, 0)).is_zero());
  }
  return rep;
}

}  // namespace covforms::weyl

#include "covforms/scalars/param_scalar.hpp"

#include <algorithm>

#include "covforms/error.hpp"

namespace covforms {

ParamScalar::ParamScalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize_in_place();
}

void ParamScalar::normalize_in_place() {
  if (den_.is_zero()) throw InvalidScalar("parameter fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_.scaled(GaussRat(1) / den_.constant_term());
      den_ = ParamPoly(1);
    }
    return;
  }
  ParamPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  GaussRat lead = den_.leading().coeff;
  if (!lead.is_one()) {
    GaussRat inv = GaussRat(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

ParamScalar normalize(const ParamPoly& num, const ParamPoly& den) { return ParamScalar(num, den); }

ParamScalar ParamScalar::operator-() const { return ParamScalar(-num_, den_, Trusted{}); }

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize_in_place();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize_in_place();
  return *this;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r = a;
  r += b;
  return r;
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r = a;
  r += -b;
  return r;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero() || b.is_zero()) return ParamScalar();
  if (a.den_.is_one() && b.den_.is_one()) return ParamScalar(a.num_ * b.num_, ParamPoly(1), ParamScalar::Trusted{});
  if (b.num_.is_constant() && b.den_.is_one()) return a.scaled(b.num_.constant_term());
  if (a.num_.is_constant() && a.den_.is_one()) return b.scaled(a.num_.constant_term());
  return ParamScalar(a.num_ * b.num_, a.den_ * b.den_);
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) { return a * b.inverse(); }

ParamScalar ParamScalar::scaled(const GaussRat& c) const {
  if (c.is_zero()) return ParamScalar();
  return ParamScalar(num_.scaled(c), den_, Trusted{});
}

ParamScalar ParamScalar::inverse() const {
  if (num_.is_zero()) throw InvalidScalar("inverse of zero");
  return ParamScalar(den_, num_);
}

GaussRat ParamScalar::evaluate(const GaussRat& v0, const GaussRat& v1) const {
  GaussRat d = den_.evaluate(v0, v1);
  if (d.is_zero()) {
    throw PoleError("denominator " + den_.to_string() + " vanishes at (" + v0.to_string() + ", " +
                    v1.to_string() + ")");
  }
  return num_.evaluate(v0, v1) / d;
}

ParamScalar ParamScalar::compose(const ParamPoly& f0, const ParamPoly& f1) const {
  ParamPoly n = num_.compose(f0, f1);
  if (den_.is_one()) return ParamScalar(std::move(n));
  return ParamScalar(std::move(n), den_.compose(f0, f1));
}

ParamScalar ParamScalar::swap_params() const {
  if (den_.is_one()) return ParamScalar(num_.swap_params());
  return ParamScalar(num_.swap_params(), den_.swap_params());
}

std::string ParamScalar::to_string(const ParamNames& names) const {
  if (den_.is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

bool equal_by_evaluation(const ParamScalar& a, const ParamScalar& b) {
  // a = b  iff  a.num*b.den - b.num*a.den vanishes identically; a bivariate
  // polynomial of degree <= d in each variable vanishing on a (d+1)^2 grid is
  // zero.
  ParamPoly diff = a.num() * b.den() - b.num() * a.den();
  int d = std::max(diff.degree(0), diff.degree(1));
  if (d < 0) return true;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      GaussRat p0(Rational(2 * i + 1, 3));
      GaussRat p1(Rational(5 * j - 2, 7));
      if (!diff.evaluate(p0, p1).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace covforms

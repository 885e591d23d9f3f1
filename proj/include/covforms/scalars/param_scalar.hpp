#pragma once

#include <string>

#include "covforms/scalars/param_poly.hpp"

namespace covforms {

// Element of Q(i)(p0, p1), kept as a reduced fraction whose denominator has
// leading coefficient 1. Polynomials (denominator 1) take fast paths in the
// arithmetic, which matters because almost every operator coefficient is
// polynomial once denominators are cleared.
class ParamScalar {
 public:
  ParamScalar() : den_(1) {}
  ParamScalar(ParamPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(GaussRat c) : num_(std::move(c)), den_(1) {}   // NOLINT
  ParamScalar(Rational c) : num_(std::move(c)), den_(1) {}   // NOLINT
  ParamScalar(long long c) : num_(c), den_(1) {}              // NOLINT
  ParamScalar(ParamPoly num, ParamPoly den);  // normalizes; throws InvalidScalar on zero den

  static ParamScalar var(int slot) { return ParamScalar(ParamPoly::var(slot)); }

  const ParamPoly& num() const noexcept { return num_; }
  const ParamPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }
  bool is_real() const noexcept { return num_.is_real() && den_.is_real(); }

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o) { return *this += -o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  ParamScalar scaled(const GaussRat& c) const;
  ParamScalar inverse() const;

  // Throws PoleError when the denominator vanishes at the point.
  GaussRat evaluate(const GaussRat& v0, const GaussRat& v1) const;
  ParamScalar compose(const ParamPoly& f0, const ParamPoly& f1) const;
  ParamScalar swap_params() const;

  std::string to_string(const ParamNames& names = st_names()) const;

  std::size_t hash() const { return num_.hash() * 7919u + den_.hash(); }

 private:
  struct Trusted {};
  ParamScalar(ParamPoly num, ParamPoly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_in_place();

  ParamPoly num_;
  ParamPoly den_;
};

// Canonical representative of num/den.
ParamScalar normalize(const ParamPoly& num, const ParamPoly& den);

// Identity test by exact evaluation on a (d+1)x(d+1) grid of rational points,
// d bounding the degrees involved. Independent of the gcd-based canonical form.
bool equal_by_evaluation(const ParamScalar& a, const ParamScalar& b);

}  // namespace covforms

#pragma once

#include <string>

#include "covforms/scalars/rational.hpp"

namespace covforms {

// Element re + i*im of the Gaussian rationals Q(i).
struct GaussRat {
  Rational re;
  Rational im;

  GaussRat() = default;
  GaussRat(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(long long r) : re(r) {}            // NOLINT(google-explicit-constructor)
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  bool is_one() const noexcept { return re.is_one() && im.is_zero(); }
  bool is_real() const noexcept { return im.is_zero(); }

  GaussRat conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  // Canonical text: "3/2", "-i", "2/3*i", "(1+2*i)".
  std::string to_string() const;

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::size_t hash() const { return re.hash() * 31 + im.hash(); }
};

// i^k for any integer k.
GaussRat i_power(int k);

}  // namespace covforms

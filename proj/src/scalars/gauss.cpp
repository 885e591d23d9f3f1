#include "covforms/scalars/gauss.hpp"

#include "covforms/error.hpp"

namespace covforms {

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  if (!o.im.is_zero()) im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  if (!o.im.is_zero()) im -= o.im;
  return *this;
}

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
  GaussRat r = a;
  r += b;
  return r;
}

GaussRat operator-(const GaussRat& a, const GaussRat& b) {
  GaussRat r = a;
  r -= b;
  return r;
}

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
  if (a.im.is_zero() && b.im.is_zero()) return GaussRat(a.re * b.re);
  if (a.im.is_zero()) return {a.re * b.re, a.re * b.im};
  if (b.im.is_zero()) return {a.re * b.re, a.im * b.re};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) throw InvalidScalar("division by zero in Q(i)");
  if (b.im.is_zero()) {
    if (a.im.is_zero()) return GaussRat(a.re / b.re);
    return {a.re / b.re, a.im / b.re};
  }
  Rational n2 = b.norm2();
  GaussRat num = a * b.conj();
  return {num.re / n2, num.im / n2};
}

std::string GaussRat::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag;
  if (im.is_one()) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.to_string() + "*i";
  }
  if (re.is_zero()) return imag;
  std::string sep = im.sign() < 0 ? "" : "+";
  return "(" + re.to_string() + sep + imag + ")";
}

GaussRat i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussRat(1);
    case 1: return GaussRat(Rational(0), Rational(1));
    case 2: return GaussRat(-1);
    default: return GaussRat(Rational(0), Rational(-1));
  }
}

}  // namespace covforms

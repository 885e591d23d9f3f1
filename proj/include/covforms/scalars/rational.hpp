#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace covforms {

// Exact rational number. Values whose reduced numerator and denominator fit
// in a signed 64-bit word are stored inline; anything larger spills into a
// GMP rational. The representation is canonical, so a value is "small" iff it
// fits, and equality never needs to compare across the two encodings.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

  // Accepts "a", "-a", "a/b" with arbitrary-length decimal integers.
  static Rational parse(const std::string& text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const noexcept { return !big_; }

  // Only meaningful when is_small().
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  mpq_class to_mpq() const;
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::size_t hash() const;

 private:
  struct Raw {};
  Rational(std::int64_t n, std::int64_t d, Raw) noexcept : num_(n), den_(d) {}
  static Rational from_mpq(mpq_class q);
  static Rational from_i128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

Rational pow(const Rational& base, int exponent);

}  // namespace covforms

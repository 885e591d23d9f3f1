#include "covforms/scalars/rational.hpp"

#include <climits>
#include <cmath>
#include <functional>

#include "covforms/error.hpp"

namespace covforms {
namespace {

constexpr std::int64_t kMin = -INT64_MAX;  // keep negation of small values safe

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

unsigned __int128 abs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    unsigned __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN;
}

}  // namespace

Rational::Rational(long long v) {
  if (v == LLONG_MIN) {
    big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(v)));
  } else {
    num_ = v;
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InvalidScalar("rational with zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  if (fits(q.get_num()) && fits(q.get_den())) {
    return Rational(q.get_num().get_si(), q.get_den().get_si(), Raw{});
  }
  Rational r;
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_i128(__int128 n, __int128 d) {
  if (d == 0) throw InvalidScalar("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  unsigned __int128 g = gcd_u128(abs128(n), static_cast<unsigned __int128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (n >= kMin && n <= INT64_MAX && d <= INT64_MAX) {
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), Raw{});
  }
  Rational r;
  r.big_ = std::make_unique<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
  return r;
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || q.set_str(t, 10) != 0) throw ParseError("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw InvalidScalar("rational with zero denominator: '" + text + "'");
  return from_mpq(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  return Rational(-num_, den_, Raw{});
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r) && r >= kMin) {
        return Rational(r, 1, Rational::Raw{});
      }
      return Rational::from_i128(static_cast<__int128>(a.num_) + b.num_, 1);
    }
    std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
    if (g == 1) {
      __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
      __int128 d = static_cast<__int128>(a.den_) * b.den_;
      return Rational::from_i128(n, d);
    }
    std::int64_t ad = a.den_ / static_cast<std::int64_t>(g);
    std::int64_t bd = b.den_ / static_cast<std::int64_t>(g);
    __int128 n = static_cast<__int128>(a.num_) * bd + static_cast<__int128>(b.num_) * ad;
    __int128 d = static_cast<__int128>(ad) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r >= kMin) {
        return Rational(r, 1, Rational::Raw{});
      }
    }
    std::int64_t g1 = static_cast<std::int64_t>(
        gcd_u64(static_cast<std::uint64_t>(a.num_ < 0 ? -a.num_ : a.num_), static_cast<std::uint64_t>(b.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(
        gcd_u64(static_cast<std::uint64_t>(b.num_ < 0 ? -b.num_ : b.num_), static_cast<std::uint64_t>(a.den_)));
    __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
    __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
    if (n >= kMin && n <= INT64_MAX && d <= INT64_MAX) {
      return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), Rational::Raw{});
    }
    return Rational::from_i128(n, d);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InvalidScalar("division by zero");
  if (!b.big_) {
    Rational inv = b.num_ < 0 ? Rational(-b.den_, -b.num_, Rational::Raw{})
                              : Rational(b.den_, b.num_, Rational::Raw{});
    return a * inv;
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace covforms

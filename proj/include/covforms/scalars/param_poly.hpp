#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covforms/scalars/gauss.hpp"

namespace covforms {

// Display names of the two formal parameters: (s,t) for the Riesz side,
// (lambda,mu) for the representation side.
using ParamNames = std::array<std::string, 2>;

inline const ParamNames& st_names() {
  static const ParamNames names{"s", "t"};
  return names;
}

inline const ParamNames& lm_names() {
  static const ParamNames names{"lambda", "mu"};
  return names;
}

// Polynomial in two parameters p0, p1 with coefficients in Q(i). Terms are
// kept sorted by packed exponent (e0 << 16 | e1), which is the lexicographic
// order with p0 > p1; no zero coefficients are stored.
class ParamPoly {
 public:
  struct Term {
    std::uint32_t exp;
    GaussRat coeff;
  };

  static constexpr std::uint32_t pack(unsigned e0, unsigned e1) { return (e0 << 16) | e1; }
  static constexpr unsigned exp0(std::uint32_t e) { return e >> 16; }
  static constexpr unsigned exp1(std::uint32_t e) { return e & 0xffffu; }

  ParamPoly() = default;
  ParamPoly(GaussRat c);  // NOLINT(google-explicit-constructor)
  ParamPoly(Rational c) : ParamPoly(GaussRat(std::move(c))) {}  // NOLINT
  ParamPoly(long long c) : ParamPoly(GaussRat(c)) {}             // NOLINT

  static ParamPoly var(int slot);
  static ParamPoly monomial(GaussRat c, unsigned e0, unsigned e1);
  // Trusted constructor: terms must already be sorted, unique and nonzero.
  static ParamPoly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff.is_one(); }
  bool is_real() const noexcept;
  GaussRat constant_term() const;
  GaussRat coeff(unsigned e0, unsigned e1) const;
  const Term& leading() const { return terms_.back(); }

  int degree(int slot) const;
  int total_degree() const;
  // Coefficient of p_slot^d, as a polynomial in the other parameter (kept in
  // its original slot).
  ParamPoly coeff_in(int slot, unsigned d) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly scaled(const GaussRat& c) const;
  ParamPoly shifted(unsigned e0, unsigned e1) const;  // multiply by a monomial
  ParamPoly pow(unsigned e) const;

  GaussRat evaluate(const GaussRat& v0, const GaussRat& v1) const;
  // P(f0, f1): substitutes polynomials for both parameters.
  ParamPoly compose(const ParamPoly& f0, const ParamPoly& f1) const;
  ParamPoly swap_params() const;

  std::string to_string(const ParamNames& names = st_names()) const;
  static ParamPoly parse(const std::string& text, const ParamNames& names = st_names());

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);
// Monic gcd over Q(i)[p0, p1] (zero only when both inputs are zero).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace covforms

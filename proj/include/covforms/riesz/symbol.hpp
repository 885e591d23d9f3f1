#pragma once

#include <map>
#include <optional>
#include <utility>

#include "covforms/report.hpp"
#include "covforms/weylops/algebra.hpp"

namespace covforms::riesz {

using weyl::DiffOp;
using weyl::PolyForm;

// ||x||^{w} P(x) with w = pcoef * p + offset, p the first parameter slot
// (s for Riesz symbols, lambda for Knapp-Stein symbols) and P an
// End(Lambda^k)-valued polynomial stored as an order-0 operator in x.
class WeightedSymbol {
 public:
  WeightedSymbol(int n, int k, Rational pcoef, Rational offset, DiffOp payload);

  int dim() const noexcept { return n_; }
  int degree() const noexcept { return k_; }
  const Rational& pcoef() const noexcept { return pcoef_; }
  const Rational& offset() const noexcept { return offset_; }
  const DiffOp& payload() const noexcept { return p_; }
  // The weight exponent as an element of the parameter field.
  ParamScalar exponent() const;

  // Same function written with the smaller weight offset `off`; requires
  // offset - off to be a nonnegative even integer.
  WeightedSymbol at_offset(const Rational& off) const;
  // Divide out the largest power of Q the payload admits.
  WeightedSymbol reduced() const;

  WeightedSymbol scaled(const ParamScalar& c) const;
  friend WeightedSymbol operator+(const WeightedSymbol& a, const WeightedSymbol& b);
  friend WeightedSymbol operator-(const WeightedSymbol& a, const WeightedSymbol& b);
  friend bool operator==(const WeightedSymbol& a, const WeightedSymbol& b);
  friend bool operator!=(const WeightedSymbol& a, const WeightedSymbol& b) { return !(a == b); }

  std::string to_string(const ParamNames& names = st_names()) const;

 private:
  int n_;
  int k_;
  Rational pcoef_;
  Rational offset_;
  DiffOp p_;
};

// Order-0 operators iota_x eps_x and eps_x iota_x on Lambda^k, and the
// scalar Q(x) = |x|^2 on Lambda^k.
DiffOp iota_eps(int n, int k);
DiffOp eps_iota(int n, int k);
DiffOp q_times(int n, int k);

// Pointwise product; weights add.
WeightedSymbol product(const WeightedSymbol& a, const WeightedSymbol& b);
// Constant-weight (weight 0) symbol from an order-0 payload.
WeightedSymbol plain(const DiffOp& payload);

WeightedSymbol derive(const WeightedSymbol& w, int j);
WeightedSymbol multiply_coord(const WeightedSymbol& w, int j);
// Sum of second derivatives, applied entrywise.
WeightedSymbol laplace(const WeightedSymbol& w);

// Z_{s+2 shift}^k = |x|^{s+2shift-2}((s'+n-2k) iota_x eps_x - (s'-n+2k) eps_x iota_x),
// s' = s + 2 shift.
WeightedSymbol z_symbol(int n, int k, int shift = 0);

// Fourier symbol of the Knapp-Stein kernel:
// 2 |x|^{n-2lambda-2}((n-k-lambda) iota_x eps_x + (lambda-k) eps_x iota_x).
// With no lambda given the parameter stays symbolic in slot 0.
WeightedSymbol ks_symbol(int n, int k, std::optional<Rational> lambda = std::nullopt);
// |x|^{2lambda-n-2}(iota_x eps_x / (f (n-k-lambda)) + eps_x iota_x / (f (lambda-k)))
// with f = 2, the exact inverse. Other f values exist only to test candidate
// normalizations.
WeightedSymbol ks_symbol_inverse(int n, int k, std::optional<Rational> lambda = std::nullopt,
                                 const Rational& f = Rational(2));

// Both Riesz shift identities (denominator-cleared and fractional, plus
// evaluation at 12 rational points) and the Laplacian identity.
Report verify_shift_identities(int n, int k, std::uint64_t seed = 1);
// ks_symbol composed with its inverse in both orders is the identity; the
// report also records whether the 1/4-normalized candidate works.
Report verify_ks_inverse(int n, int k);

// Sum over weight pairs (a, b) of |x|^{s+2a} |y|^{t+2b} F_{a,b}(x, y), with
// F_{a,b} a polynomial form of bidegree (k, l) in (x, y).
class BiWeighted {
 public:
  BiWeighted(int n, weyl::Bideg deg);
  static BiWeighted from_form(const PolyForm& f, int a, int b);

  int dim() const noexcept { return n_; }
  weyl::Bideg deg() const noexcept { return deg_; }
  const std::map<std::pair<int, int>, PolyForm>& parts() const noexcept { return parts_; }

  void add(int a, int b, const PolyForm& f);
  BiWeighted partial(int side, int j) const;
  // Apply an order-0 operator in (x, y) to every part.
  BiWeighted apply_pointwise(const DiffOp& op) const;
  BiWeighted operator-(const BiWeighted& o) const;
  BiWeighted operator+(const BiWeighted& o) const;
  BiWeighted scaled(const ParamScalar& c) const;

  // All parts rewritten at the smallest weights (a, b) present.
  std::pair<std::pair<int, int>, PolyForm> common_weight() const;
  friend bool operator==(const BiWeighted& a, const BiWeighted& b);

 private:
  int n_;
  weyl::Bideg deg_;
  std::map<std::pair<int, int>, PolyForm> parts_;
};

// Q(d/dx - d/dy) = sum_j (d/dx_j - d/dy_j)^2.
BiWeighted q_difference(const BiWeighted& w);

}  // namespace covforms::riesz

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covforms/report.hpp"
#include "covforms/weylops/algebra.hpp"

namespace covforms::conformal {

using weyl::DiffOp;
using weyl::PolyVector;
using Point = std::vector<Rational>;

// Square rational matrix, used for Lie algebra elements of so(1, n+1).
class RatMatrix {
 public:
  explicit RatMatrix(int size);
  static RatMatrix identity(int size);

  int size() const noexcept { return size_; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * size_ + j)]; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * size_ + j)]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& c) const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) { return a.size_ == b.size_ && a.a_ == b.a_; }
  bool is_zero() const;
  Rational determinant() const;
  std::string to_string() const;

 private:
  int size_;
  std::vector<Rational> a_;
};

// The Lorentz form x0^2 - (x1^2 + ... + x_{n+1}^2) as diag(1, -1, ..., -1).
RatMatrix lorentz_form(int n);
// X^T J + J X = 0.
bool in_lie_algebra(const RatMatrix& x);
RatMatrix bracket(const RatMatrix& a, const RatMatrix& b);

// Element of SO_0(1, n+1) acting on (n+2)-vectors; the constructor checks
// that the form is preserved, the determinant is 1 and g_00 > 0.
class LorentzMatrix {
 public:
  explicit LorentzMatrix(RatMatrix m);
  static LorentzMatrix identity(int n);

  int dim() const noexcept { return m_.size() - 2; }
  const RatMatrix& matrix() const noexcept { return m_; }
  LorentzMatrix operator*(const LorentzMatrix& o) const;
  LorentzMatrix inverse() const;
  friend bool operator==(const LorentzMatrix& a, const LorentzMatrix& b) { return a.m_ == b.m_; }

 private:
  RatMatrix m_;
};

// Group elements with rational entries.
LorentzMatrix translation(const Point& y);                      // x -> x + y
LorentzMatrix special_conformal(const Point& y);                // exp of the special generators
LorentzMatrix rotation(int n, int i, int j, const Rational& c, const Rational& s);  // c^2 + s^2 = 1
LorentzMatrix boost(int n, const Rational& ch, const Rational& sh);  // ch^2 - sh^2 = 1; x -> x/(ch+sh)

// Point of the null cone (1 + |x|^2, 2x, 1 - |x|^2) over x.
std::vector<Rational> cone_point(const Point& x);
// Action on R^n through the cone; throws PointAtInfinity when the image
// leaves R^n.
Point act(const LorentzMatrix& g, const Point& x);
// Conformal factor: |g(x) - g(y)|^2 = Omega(g,x) |x - y|^2 Omega(g,y).
Rational omega(const LorentzMatrix& g, const Point& x);

Report verify_cov1(const LorentzMatrix& g, const Point& x, const Point& y);
Report verify_cocycle(const LorentzMatrix& g1, const LorentzMatrix& g2, const Point& x);
// Random products of rational generators and random rational points.
Report verify_group_random(int n, int instances, std::uint64_t seed = 1);

enum class GenKind { Translation, Rotation, Dilation, Special };

struct ConformalGen {
  std::string label;
  GenKind kind;
  int i = -1;  // coordinate index (translation, special, rotation first index)
  int j = -1;  // rotation second index
  RatMatrix matrix;
  PolyVector vectorfield;    // flow direction on R^n
  weyl::PolyForm divergence_factor;  // h_X, the derivative of the cone scale
};

// Field and scale of an arbitrary Lie algebra element.
PolyVector vector_field_of(const RatMatrix& x);
weyl::PolyForm scale_factor_of(const RatMatrix& x);

std::vector<ConformalGen> generators(int n);
// Coefficients of x in the generator basis (same order as generators(n));
// throws DimensionMismatch when x is not in the Lie algebra.
std::vector<Rational> decompose(const RatMatrix& x);

// How lambda enters the representation on k-forms.
//  Induced:  Omega(g^-1, x)^{lambda - k} L*_{g^-1}, i.e. Ind(sigma_k (x) chi_lambda);
//            the Knapp-Stein operators then reflect lambda -> n - lambda.
//  Pullback: Omega(g^-1, x)^lambda L*_{g^-1}, i.e. Ind(sigma_k (x) chi_{lambda+k}).
enum class Normalization { Induced, Pullback };

// dpi_lambda^k(X) = (lambda - shift) h_X - L_{V_X} on k-forms, lambda in slot 0,
// shift = k for Induced and 0 for Pullback. weight_sign = -1 flips the sign of
// lambda (the other candidate convention for the weight term).
DiffOp dpi(const RatMatrix& x, int k, int weight_sign = 1, Normalization norm = Normalization::Induced);
DiffOp dpi(const ConformalGen& g, int k, int weight_sign = 1, Normalization norm = Normalization::Induced);
// dpi_lambda^k (x) Id + Id (x) dpi_mu^l in (x, y).
DiffOp dpi_pair(const RatMatrix& x, int k, int l, int weight_sign = 1, Normalization norm = Normalization::Induced);

// Bracket compatibility, M-covariance for every l, and the scalar formulas.
Report certify_dpi(int n, int k);
// F_iter_m o dpi_{lambda,mu}(X) = dpi_{lambda+m,mu+m}(X) o F_iter_m for every
// generator X. The report also records whether the identity holds with the
// other normalization.
Report verify_F_covariance(int n, int k, int l, int m, Normalization norm = Normalization::Induced);

}  // namespace covforms::conformal

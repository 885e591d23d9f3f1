#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "covforms/conformal/conformal.hpp"
#include "covforms/report.hpp"
#include "covforms/weylops/algebra.hpp"

namespace covforms::bidiff {

using weyl::Bideg;
using weyl::DiffOp;
using weyl::PolyForm;
using exterior::Mask;

// Restriction to the diagonal y = x.
//
// On forms: an XY form of bidegree (k, l) becomes an X form of the same
// bidegree with every y exponent merged into x.
PolyForm restrict(const PolyForm& f);
// On operators: res o P, written with its coefficients already restricted.
// The result stays an XY operator (dx acts on the first argument, dy on the
// second) whose coefficient monomials involve x only.
DiffOp restrict_op(const DiffOp& op);
// Lift of a single-variable operator acting on functions of the diagonal
// point: d/dx_j becomes d/dx_j + d/dy_j, coefficients stay in x, exterior
// parts are copied. Q o res = res o diag_lift(Q).
DiffOp diag_lift(const DiffOp& op);
// The X operator Q with res o P = Q o res when P descends to the diagonal,
// nullopt otherwise.
std::optional<DiffOp> descend(const DiffOp& op);

// A projection Lambda^k (x) Lambda^l -> Lambda^target, given on basis pairs.
struct TensorProjector {
  int target_degree;
  std::function<std::vector<std::pair<Mask, ParamScalar>>(Mask, Mask)> image;
};
// omega (x) eta -> omega ^ eta. Throws DegreeError when k + l > n.
TensorProjector cartan_projector(int n, int k, int l);

exterior::Multivector cartan_project(const exterior::TensorMultivector& v, int n);
// Forms of bidegree (k, l) in either variable set to bidegree (k + l, 0).
PolyForm cartan_project(const PolyForm& f);
// Composition of the projection with the output of an XY operator.
DiffOp project_op(const DiffOp& op, const TensorProjector& p);
DiffOp cartan_project_op(const DiffOp& op);

// Bi-differential operator Lambda^k x Lambda^l -> Lambda^{k+l}. The stored
// operator is in XY variables with coefficients in x only: d/dx hits omega,
// d/dy hits eta, and the output is read on the diagonal.
class BiDiffOp {
 public:
  BiDiffOp(int n, int k, int l, int m, DiffOp restricted, std::optional<DiffOp> pre = std::nullopt);

  int dim() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  const DiffOp& op() const noexcept { return op_; }
  // The XY operator before restriction and projection, when known.
  const std::optional<DiffOp>& pre() const noexcept { return pre_; }

  // omega and eta are X forms of bidegree (k, 0) and (l, 0).
  PolyForm apply(const PolyForm& omega, const PolyForm& eta) const;
  // An XY form of bidegree (k, l), read as a sum of products omega(x) eta(y).
  PolyForm apply_pair(const PolyForm& pair) const;

  friend bool operator==(const BiDiffOp& a, const BiDiffOp& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.l_ == b.l_ && a.op_ == b.op_;
  }

 private:
  int n_, k_, l_, m_;
  DiffOp op_;
  std::optional<DiffOp> pre_;
};

// omega(x) eta(y) as an XY form of bidegree (k, l).
PolyForm tensor_forms(const PolyForm& omega, const PolyForm& eta);

// cartan_project o restrict o F_iter_m, with lambda in slot 0 and mu in slot 1.
BiDiffOp build_B(int n, int k, int l, int m);
// The three-block tilde formula for m = 1.
BiDiffOp dernier(int n, int k, int l);
// build_B(n, k, l, 1) against the three-block formula, as operators and on
// every monomial pair of total degree <= max_degree (evaluated through the
// unrestricted F).
Report verify_dernier(int n, int k, int l, int max_degree = 4);

// The scalar case with blocks mu(mu-n/2+1) Q omega . eta,
// 2(lambda-n/2+1)(mu-n/2+1) sum d_j omega d_j eta, lambda(lambda-n/2+1) omega Q eta
// and prefactor -64(lambda+1)(lambda-n)(mu+1)(mu-n).
//  Literal:  Q(d/dx) = sum_j d_j^2.
//  Codiff:   Q(d/dx) read as delta d = -sum_j d_j^2 on functions.
enum class RCReading { Literal, Codiff };
BiDiffOp rankin_cohen_scalar(int n, RCReading reading = RCReading::Literal);
// Hand expansion of the literal display for n = 1 at (x^2, x):
// -64 (lambda^2-1)(mu^2-1) x (2mu^2 + mu + (2lambda+1)(2mu+1)).
PolyForm rc_hand_oracle();
// The delta d reading against build_B(n, 0, 0, 1), the hand oracle (n = 1),
// the lambda <-> mu symmetry and vanishing on constants. How the literal
// reading compares with build_B, and whether it is covariant, is recorded.
Report verify_rankin_cohen(int n);

// B o dpi_{lambda,mu}(X) = dpi^{k+l}_{lambda+mu+2m}(X) o B on the diagonal,
// for every generator X. Also records whether the restriction of the pair
// representation descends.
Report verify_B_covariance(int n, int k, int l, int m, conformal::Normalization norm = conformal::Normalization::Induced);
// Covariance of an arbitrary scalar bi-differential operator (k = l = 0)
// with target weight lambda + mu + 2m.
Report verify_bidiff_covariance(const BiDiffOp& b, int m, const std::string& name);

// Projection checks: cartan_project o swap = (-1)^{kl} cartan_project for all
// k + l <= n, and equivariance under a rational rotation.
Report verify_projection(int n);
// Lambda^k of an n x n matrix acting on the exterior basis.
exterior::Multivector exterior_power_apply(const std::vector<std::vector<Rational>>& m, Mask basis);

}  // namespace covforms::bidiff

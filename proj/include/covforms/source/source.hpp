#pragma once

#include "covforms/report.hpp"
#include "covforms/weylops/algebra.hpp"

namespace covforms::source {

using weyl::Bideg;
using weyl::DiffOp;

// Coefficient polynomials for a factor of degree k whose parameter sits in
// `slot` (0 = s, 1 = t).
struct Coeffs {
  ParamScalar p;  // the parameter itself
  ParamScalar a, b, c, d;
  ParamScalar alpha, beta, gamma, delta, kappa;
};
Coeffs coeffs(int n, int k, int slot);

// Operators on Lambda^k (x) Lambda^l in the variables (x, y). `side` picks
// the factor; the parameter of side 0 is s and of side 1 is t.
DiffOp box(int n, Bideg deg, int side);                 // alpha delta d + beta d delta
DiffOp nabla(int n, Bideg deg, int side, int j);        // defining two-bracket form
DiffOp nabla_factored(int n, Bideg deg, int side, int j);  // (2-s)[...] form
DiffOp multiplier(int n, Bideg deg, int side, int j);   // s x_j + c iota_x eps_j + d eps_x iota_j
DiffOp q_difference(int n, Bideg deg);                  // sum_j (d/dx_j - d/dy_j)^2
DiffOp dist2(int n, Bideg deg);                         // multiplication by |x - y|^2
DiffOp coord_difference(int n, Bideg deg, int j);       // multiplication by x_j - y_j

// The operator D_{s,t}^{k,l} (fractional coefficients) and kappa_{k,s}
// kappa_{l,t} D with polynomial coefficients.
DiffOp build_D(int n, int k, int l);
DiffOp build_D_cleared(int n, int k, int l);

// The identity Q(d/dx - d/dy)(Z_s (x) Z_t omega) = Z_{s-2} (x) Z_{t-2} D omega on
// every monomial form of degree <= max_degree. With operator_form set, the
// identity is also checked once as an equality of operators in (x, y). That
// check needs about 2 GB at n = 4, (k, l) = (1, 1) and more than 5 GB at
// (2, 2), so the suites only run it for n <= 3.
Report verify_main1(int n, int k, int l, int max_degree = 2, bool operator_form = true);

enum class FifthBlock {
  Derived,  // s(s+n) kappa_{k,s} Id (x) Box_{l,t}
  Literal   // s(s+n) kappa_{k,s} kappa_{l,t} Id (x) Box_{l,t}
};
DiffOp build_E_raw(int n, int k, int l, FifthBlock fifth = FifthBlock::Derived);
DiffOp build_E_normal(int n, int k, int l);
// Mechanical transport of kappa kappa D through the Fourier correspondence.
DiffOp build_E_derived(int n, int k, int l);
// Closed form of E^{0,0} with Q = sum d^2.
DiffOp build_E00_closed(int n);

Report verify_main2_and_normal(int n, int k, int l);
Report verify_lemma_ident(int n);
Report verify_nabla_forms(int n);
Report verify_swap_symmetry(int n, int k, int l);

// F_{lambda,mu} = -E_{n-2lambda, n-2mu}; parameters lambda (slot 0), mu (slot 1).
DiffOp build_F(int n, int k, int l);
// The tilde-form display with its 16/32 constants.
DiffOp build_F_display(int n, int k, int l);
DiffOp box_tilde(int n, Bideg deg, int side);
DiffOp nabla_tilde(int n, Bideg deg, int side, int j);
Report compare_F(int n, int k, int l);
// kappa_{lambda,mu} versus kappa_{k,n-2lambda} kappa_{l,n-2mu}.
Report verify_kappa(int n, int k, int l);
ParamScalar kappa_lm(int n, int k, int l);
// F_{lambda+m-1, mu+m-1} o ... o F_{lambda, mu}.
DiffOp build_F_iter(int n, int k, int l, int m);
// Shift both parameters by m.
DiffOp shift_params(const DiffOp& op, int m);

// F with s = n - 2lambda, t = n - 2mu substituted into any (s, t) operator.
DiffOp to_lambda_mu(const DiffOp& op);

}  // namespace covforms::source

#pragma once

#include "covforms/report.hpp"
#include "covforms/weylops/diffop.hpp"
#include "covforms/weylops/polyform.hpp"

namespace covforms::weyl {

// a after b, renormal-ordered with [d/dx_j, x_i] = delta_ij.
DiffOp compose(const DiffOp& a, const DiffOp& b);
PolyForm apply(const DiffOp& op, const PolyForm& form);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

// Elementary operators on Lambda^k (x) Lambda^l. `side` 0 acts on the first
// tensor factor with the x variables, side 1 on the second factor with the y
// variables (for vars == X, side 1 only carries endomorphisms).
DiffOp identity(int n, VarSet vars, Bideg deg);
DiffOp scalar_op(int n, VarSet vars, Bideg deg, const ParamScalar& c);
DiffOp coord(int n, VarSet vars, Bideg deg, int side, int j);
DiffOp partial(int n, VarSet vars, Bideg deg, int side, int j);
DiffOp eps(int n, VarSet vars, Bideg deg, int side, int j);
DiffOp iota(int n, VarSet vars, Bideg deg, int side, int j);
// eps_x = sum_j x_j eps_j and iota_x, with x the variables of `side`.
DiffOp eps_field(int n, VarSet vars, Bideg deg, int side);
DiffOp iota_field(int n, VarSet vars, Bideg deg, int side);
// Multiplication by a scalar polynomial.
DiffOp multiply(const PolyForm& f, Bideg deg);
// A constant exterior endomorphism acting on one factor.
DiffOp endo_op(const exterior::Endo& e, VarSet vars, Bideg deg, int side);

// d, delta, -(d delta + delta d) and sum_m d_m^2 on the chosen factor.
DiffOp d_side(int n, VarSet vars, Bideg deg, int side);
DiffOp delta_side(int n, VarSet vars, Bideg deg, int side);
DiffOp laplacian_side(int n, VarSet vars, Bideg deg, int side);
DiffOp sum_of_squares(int n, VarSet vars, Bideg deg, int side);

// Single-variable-set versions on Lambda^k of R^n. delta on degree 0 is the
// zero operator; k must lie in [0, n].
DiffOp d_op(int n, int k);
DiffOp delta_op(int n, int k);
DiffOp laplacian_op(int n, int k);

// Cartan formula L_X = d iota_X + iota_X d.
DiffOp lie_derivative(const PolyVector& field, int k);
// iota_X with polynomial coefficients.
DiffOp iota_vector(const PolyVector& field, Bideg deg, VarSet vars, int side);

// Fourier correspondence on operators. fourier_image: d/dx_j -> -i x_j and
// x_j -> -i d/dx_j (space to frequency); fourier_preimage: the reverse maps
// x_j -> i d/dx_j, d/dx_j -> i x_j. Endomorphism parts are unchanged.
DiffOp fourier_image(const DiffOp& op);
DiffOp fourier_preimage(const DiffOp& op);

// Exchange the two variable sets, the two tensor factors and the two
// parameters.
DiffOp swap_factors(const DiffOp& op);
// Embed a single-variable operator on Lambda^k as acting on the first factor
// of Lambda^k (x) Lambda^l in (x, y); lift_y acts on the second factor with
// the variables renamed to y.
DiffOp lift_x(const DiffOp& op, int l);
DiffOp lift_y(const DiffOp& op, int k);
// Both variable sets of an XY operator acting on the same side of a tensor
// product of two operators: (a (x) b) = lift_x(a) o lift_y(b).
DiffOp tensor(const DiffOp& a, const DiffOp& b);

// Substitute polynomials for the two parameters in every coefficient.
DiffOp substitute(const DiffOp& op, const ParamPoly& f0, const ParamPoly& f1);

// Independent equality oracle: a and b (of order <= r) agree iff they agree
// on every monomial form of degree <= r.
bool equal_on_monomials(const DiffOp& a, const DiffOp& b);

// Order-0 symbolic versions of the exterior relations with x and y as
// independent symbolic vectors (the two variable sets).
Report verify_symbolic_exterior(int n);
// dι_j + ι_j d = ∂_j and δε_j + ε_jδ = -∂_j, and Δ = Σ∂_m^2, on Λ^k of R^n.
Report verify_cartan_relations(int n);

}  // namespace covforms::weyl

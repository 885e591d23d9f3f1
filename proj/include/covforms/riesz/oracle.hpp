#pragma once

#include <cstdint>
#include <vector>

namespace covforms::riesz {

struct OracleOptions {
  // Number of test forms; 0 means every monomial x^alpha e_I with
  // |alpha| <= 2.
  int trials = 0;
  std::uint64_t seed = 1;
};

struct OracleResult {
  double max_rel_err = 0;
  int trials = 0;
  bool converged = false;
  // Largest change between the two finest quadrature levels, relative.
  double quad_estimate = 0;
  // max_rel_err at each of the three refinement levels, coarse to fine.
  std::vector<double> level_errors;
  // True when s0 = -n and the x-side pairing was taken as its limit
  // (n - 2k) * (F phi)(0).
  bool delta_limit = false;
};

// Compares <F(R_s^k), phi> with <R_s^k, F phi> for Gaussian test forms
// phi = x^alpha exp(-|x|^2/2) e_I, the left side from the closed-form
// Fourier symbol and the right side from the defining integral.
// Requires 1 <= n <= 3 and -n < s0 < 0 (s0 = -n is accepted as the limit).
OracleResult fourier_oracle(int n, int k, double s0, const OracleOptions& opts = {});

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace covforms::riesz

#pragma once

#include "hopflattice/hopf.hpp"

namespace hopflattice {

/// The Drinfeld double D(R) on R (x) Rbar, with basis e_{(a,b)} = x_a (x) e^b
/// flattened as a*dim(R) + b.
struct DoubleAlgebra {
  HopfAlgebra hopf;  // D(R) as structure constants
  HopfAlgebra base;  // R
  HopfAlgebra rbar;  // (R^op)^*
  int n = 0;         // dim R; dim D = n^2
  Mat factor_r;      // n^2 x n: x -> x (x) 1
  Mat factor_rbar;   // n^2 x n: alpha -> 1 (x) alpha

  Vec embed_base(const Vec& x) const { return factor_r * x; }
  Vec embed_dual(const Vec& alpha) const { return factor_rbar * alpha; }
};

DoubleAlgebra drinfeld_double(const HopfAlgebra& h, double tol_axiom = 1e-12);

/// h (x) hbar; asserts agreement with the nullspace Haar of D(R) and
/// centrality of both factors.
Vec double_haar(const DoubleAlgebra& d, const HaarIntegral& h, const HaarIntegral& hbar,
                double tol = 1e-10);

/// R-matrix sum_a (x_a (x) 1) (x) (1 (x) e^a) as a flat (dim D)^2 vector.
/// Verifies R Delta(b) = Delta^op(b) R for every basis b of D(R).
Vec r_matrix(const DoubleAlgebra& d, double tol = 1e-10, double* residual_out = nullptr);

/// Residual of the half-braiding V (x) Y -> Y (x) V, v (x) y -> x^a y (x) x_a v,
/// as an intertwiner of the diagonal R-actions, with V the left regular
/// R-module and Y the left regular D(R)-module.
double half_braiding_residual(const DoubleAlgebra& d);

/// Given operator families p (indexed by the R basis) and q (indexed by the
/// dual basis) on a common space, checks that e_{(a,b)} -> p_a q_b is an
/// algebra morphism out of D(R); returns the max residual over basis pairs.
double site_rep_check(const DoubleAlgebra& d, const std::vector<Mat>& p_ops,
                      const std::vector<Mat>& q_ops);

/// The operators of the D(R)-action on R (x) R:
///   p_a(u (x) v) = a'u (x) vS(a''),  q_alpha(u (x) v) = <alpha, S(u'v')> u'' (x) v''.
void two_strand_operators(const HopfAlgebra& h, std::vector<Mat>& p_ops, std::vector<Mat>& q_ops);

/// The extended action on R (x) X (x) Y (x) R with X the regular R-module and
/// Y the regular Rbar-module:
///   p_a = a'u (x) a''x (x) y (x) vS(a''')
///   q_alpha = alpha'''.u (x) x (x) alpha''y (x) alpha'.v
void four_strand_operators(const HopfAlgebra& h, std::vector<Mat>& p_ops, std::vector<Mat>& q_ops);

}  // namespace hopflattice

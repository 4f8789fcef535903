#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopflattice/tensor.hpp"
#include "hopflattice/types.hpp"

namespace hopflattice {

/// A finite-dimensional Hopf algebra over C, given by structure constants in
/// a fixed basis.
///
/// Storage conventions (row-major composite indices throughout):
///   mul(k, i*dim + j)   = coefficient of e_k in e_i * e_j
///   comul(i*dim + j, k) = coefficient of e_i (x) e_j in Delta(e_k)
///   unit(k)             = coordinates of 1
///   counit(k)           = eps(e_k)
///   antipode(i, k)      = coefficient of e_i in S(e_k)
struct HopfAlgebra {
  int dim = 0;
  Mat mul;
  Mat comul;
  Vec unit;
  Vec counit;
  Mat antipode;
  std::vector<std::string> basis_labels;

  std::string name;

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec comultiply(const Vec& x) const;  // flat dim^2 vector
  cplx eps(const Vec& x) const { return counit.cwiseProduct(x).sum(); }
  Vec s(const Vec& x) const { return antipode * x; }

  // y -> x*y
  Mat left_mult(const Vec& x) const;
  // y -> y*x   (plain right multiplication, no antipode twist)
  Mat right_mult(const Vec& x) const;
  // y -> y*S(x), the antipode-twisted right regular action
  Mat right_mult_s(const Vec& x) const { return right_mult(s(x)); }

  // Left action of the dual on R:  x -> <alpha, S(x')> x''
  Mat dual_left_action(const Vec& alpha) const;
  // Right action of the dual on R: x -> x' <alpha, x''>   (this is x.S(alpha))
  Mat dual_right_action(const Vec& alpha) const;

  Vec basis_vector(int i) const;

  // Delta^{(m-1)}(x) as a sparse order-m tensor over basis indices.
  SparseTensor iterated_coproduct_sparse(const Vec& x, int m) const;
  // Dense flat version (size dim^m); m >= 1.
  Vec iterated_coproduct(const Vec& x, int m) const;

  // Iterated coproduct of a dual element alpha in the R^* Sweedler convention:
  // entry (l_1,...,l_m) is the coefficient with
  //   <alpha, x_1...x_m> = sum entry * <e^{l_1},x_1> ... <e^{l_m},x_m>.
  SparseTensor iterated_dual_coproduct_sparse(const Vec& alpha, int m) const;
};

struct Element {
  Vec coeffs;
  const HopfAlgebra* algebra = nullptr;
};

struct AxiomReport {
  double associativity = 0;
  double coassociativity = 0;
  double unit_axiom = 0;
  double counit_axiom = 0;
  double antipode_axiom = 0;
  double comul_morphism = 0;
  double counit_morphism = 0;
  double antipode_squared = 0;
  double max_residual() const;
};

AxiomReport verify_hopf_axioms(const HopfAlgebra& h);

// Standard constructors.
struct CayleyTable {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[g][h] = index of g*h, identity = 0
  std::vector<std::string> labels;
};

void validate_group(const CayleyTable& t);
CayleyTable cyclic_group(int n);
CayleyTable symmetric_group_s3();

HopfAlgebra group_algebra(const CayleyTable& t);
HopfAlgebra function_algebra(const CayleyTable& t);
HopfAlgebra dual_hopf(const HopfAlgebra& h);

struct HaarIntegral {
  Vec element;
};

// Solves the defining linear system {h x = x h = eps(x) h} and normalizes
// by h^2 = h.  Requires a semisimple input (1-dimensional solution space).
HaarIntegral haar_integral(const HopfAlgebra& h, double tol = 1e-9);

struct RegularActions {
  std::vector<Mat> left;        // L_x, x over basis
  std::vector<Mat> right;       // R_x : y -> y S(x)
  std::vector<Mat> dual_left;   // L*_alpha, alpha over dual basis
  std::vector<Mat> dual_right;  // R*_alpha : x -> x.S(alpha)
};

RegularActions regular_actions(const HopfAlgebra& h);

}  // namespace hopflattice

#pragma once

#include <cstdint>
#include <string>

#include "hopflattice/hopf.hpp"
#include "hopflattice/surface.hpp"

namespace hopflattice {

struct OracleReport {
  std::string name;
  double computed = 0;
  double engine = 0;
  bool match = false;
};

/// Number of pairs (a, b) with ab = ba, counted modulo simultaneous
/// conjugation.  Equals the torus ground-space dimension for R = C[G].
std::uint64_t commuting_pairs_mod_conj(const CayleyTable& t);

/// Dense kernel count of H = sum (1 - A_v) + sum (1 - B_p), assembled by
/// explicit Kronecker products straight from the structure constants.  Kept
/// deliberately independent of the lazy operator engine.
std::uint64_t brute_ground_dim(const HopfAlgebra& h, const CellDecomposition& c);

/// Closed-form Haar integrals: flavor "group" gives (1/|G|) sum_g g,
/// "function" the delta at the identity, "dual-of-group" the normalized
/// trace of the left regular representation.
Vec haar_formula_oracle(const std::string& flavor, const CayleyTable& t);

}  // namespace hopflattice

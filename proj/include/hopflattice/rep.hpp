#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hopflattice/hopf.hpp"

namespace hopflattice {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Wedderburn block data of a semisimple structure-constant algebra:
/// primitive central idempotents and block dimensions.
struct WedderburnData {
  std::vector<Vec> idempotents;
  std::vector<int> block_dims;
  int trivial_index = -1;  // block of the Haar integral (d = 1, eps = 1)
};

WedderburnData wedderburn(const HopfAlgebra& h, std::uint64_t seed = kDefaultSeed);

int global_dim_squared(const WedderburnData& w);

/// Pushes the central idempotent e_i through a representation given as one
/// matrix per basis element of the algebra.
Mat isotypic_projector(const HopfAlgebra& h, const WedderburnData& w, int block,
                       const std::vector<Mat>& rep, double morphism_tol = 1e-9);

/// A module over an algebra, given by explicit action matrices per basis element.
struct ModuleRep {
  int dim = 0;
  std::vector<Mat> rho;
};

/// Extracts one irreducible module for block `i` out of the regular
/// representation: a minimal left ideal inside the block, with explicit
/// action matrices.
ModuleRep extract_block_module(const HopfAlgebra& h, const WedderburnData& w, int block,
                               std::uint64_t seed = kDefaultSeed);

/// Max residual of rho(e_a e_b) - rho(e_a) rho(e_b) over all basis pairs.
double algebra_morphism_residual(const HopfAlgebra& h, const std::vector<Mat>& rep);

}  // namespace hopflattice

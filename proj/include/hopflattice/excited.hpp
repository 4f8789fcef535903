#pragma once

#include <cstdint>
#include <vector>

#include "hopflattice/double.hpp"
#include "hopflattice/model.hpp"
#include "hopflattice/rep.hpp"

namespace hopflattice {

/// Lattice model with labeled sites: the state space is
/// Y_1 (x) ... (x) Y_n (x) HK, label factors first (factor i = Y_i), edge
/// factors shifted by n.  Each label is a D(R)-module given by explicit
/// action matrices per D(R) basis element.
struct LabeledModel {
  LatticeModel base;
  DoubleAlgebra dbl;
  std::vector<Site> sites;
  std::vector<ModuleRep> labels;
  TensorSpace space;
  int factor_offset = 0;  // number of label factors

  // Per label: action of x (x) 1 over the R basis, and of 1 (x) e^b over
  // the dual basis.
  std::vector<std::vector<Mat>> label_r;
  std::vector<std::vector<Mat>> label_rbar;

  std::vector<int> site_of_vertex;  // -1 if unlabeled
  std::vector<int> site_of_face;
};

LabeledModel make_labeled_model(const HopfAlgebra& h, const CellDecomposition& c,
                                const std::vector<Site>& sites,
                                const std::vector<ModuleRep>& labels,
                                double morphism_tol = 1e-9);

/// A~_v^a.  At an unlabeled vertex this is identity on labels tensor A_v^a
/// (anchored at the orbit's first dart); at a labeled site the first Sweedler
/// leg of Delta^{deg}(a) acts on the label through x -> x (x) 1 and the
/// remaining legs act on the edges from the site's anchor.
LocalOperator tilde_vertex_operator(const LabeledModel& lm, int vertex, const Vec& a);
/// B~_p^alpha; the label leg is the last dual Sweedler leg through
/// alpha -> 1 (x) alpha.
LocalOperator tilde_plaquette_operator(const LabeledModel& lm, int face, const Vec& alpha);

/// All Haar-argument tilde projectors, one per vertex and face.
HaarProjectors tilde_haar_projectors(const LabeledModel& lm);

/// Trace of prod_p B~_p prod_v A~_v on the extended space.
std::uint64_t protected_dim_route_a(const LabeledModel& lm);

/// Drinfeld double bundled with its block data: one extracted irreducible
/// module per Wedderburn block and the dual-block pairing (block j is i's
/// dual iff Y_i (x) Y_j has a one-dimensional invariant subspace under the
/// coproduct action).
struct DoubleBlocks {
  DoubleAlgebra dbl;
  WedderburnData wd;
  std::vector<ModuleRep> modules;
  std::vector<int> dual;
};

DoubleBlocks double_blocks(const HopfAlgebra& h, std::uint64_t seed = kDefaultSeed);

std::vector<int> dual_block_table(const DoubleAlgebra& d, const WedderburnData& wd,
                                  const std::vector<ModuleRep>& modules);

/// Works on the plain edge space: projects onto L(S) with the Haar
/// projectors away from S, then applies at each site the isotypic projector
/// of the block dual to Y_i through the site's D(R) action, and divides the
/// trace by prod dim Y_i.
std::uint64_t protected_dim_route_b(const LatticeModel& m, const DoubleBlocks& db,
                                    const std::vector<Site>& sites,
                                    const std::vector<int>& blocks);

struct ProtectedSpace {
  std::vector<int> labels;  // block indices into db.modules
  std::uint64_t route_a_dim = 0;
  std::uint64_t route_b_dim = 0;
  std::uint64_t dim = 0;
};

/// Runs both routes and requires agreement.
ProtectedSpace protected_space(const DoubleBlocks& db, const LatticeModel& m,
                               const std::vector<Site>& sites, const std::vector<int>& blocks);
ProtectedSpace protected_space(const HopfAlgebra& h, const CellDecomposition& c,
                               const std::vector<Site>& sites, const std::vector<int>& blocks,
                               std::uint64_t seed = kDefaultSeed);

/// The map Y (x) R -> Y, y (x) r -> hbar'' . y <hbar', r>, as a dense
/// dim(Y) x (dim(Y) * dim(R)) matrix (row-major composite columns).
Mat haar_smearing_map(const DoubleAlgebra& d, const ModuleRep& y);

/// Checks the Delta(hbar) leg-exchange symmetry and that B~^hbar at the
/// labeled site equals the composite of hbar'' on the label with B^{hbar'}
/// on the edges.  Returns the max residual.
double haar_half_braiding_check(const LabeledModel& lm, int site_index);

}  // namespace hopflattice

#pragma once

#include <cstdint>
#include <vector>

#include "hopflattice/hopf.hpp"
#include "hopflattice/surface.hpp"
#include "hopflattice/tensor.hpp"

namespace hopflattice {

/// A tensor-product state space given by per-factor dimensions, flat indices
/// row-major (factor 0 most significant).
struct TensorSpace {
  std::vector<int> dims;
  std::vector<std::uint64_t> strides;
  std::uint64_t total = 1;
};

TensorSpace make_space(std::vector<int> dims);

/// Kitaev state space: one copy of R per edge, edge id = tensor factor.
struct LatticeModel {
  HopfAlgebra algebra;  // R
  HopfAlgebra rbar;
  CellDecomposition cells;
  TensorSpace space;
  // Per-basis operator families on R: left mult, y -> y S(x), dual left
  // action, dual right action.
  RegularActions acts;
};

LatticeModel make_model(const HopfAlgebra& h, const CellDecomposition& c);

/// Lazily applied local operator: a Sweedler coefficient tensor whose legs
/// act on individual tensor factors through per-basis matrix families.
struct LocalOperator {
  struct Leg {
    int factor;
    const std::vector<Mat>* family;
  };
  std::vector<Leg> legs;  // one per tensor index of coeffs, in order
  SparseTensor coeffs;
};

StateMap apply_local(const TensorSpace& sp, const LocalOperator& op, const StateMap& in);
Vec apply_local_dense(const TensorSpace& sp, const LocalOperator& op, const Vec& in);
Mat to_matrix(const TensorSpace& sp, const LocalOperator& op);

/// Edge incidences around the site's vertex in counterclockwise order
/// starting after the site's face; bool = edge points out of the vertex.
std::vector<std::pair<int, bool>> vertex_leg_edges(const CellDecomposition& c, const Site& s);
/// Edge incidences along the site's face boundary, counterclockwise from the
/// site's vertex; bool = edge is clockwise-oriented along the boundary.
std::vector<std::pair<int, bool>> face_leg_edges(const CellDecomposition& c, const Site& s);

/// A_{v,p}^a. The optional factor_offset shifts edge factors (used when the
/// state space has extra label factors in front).
LocalOperator vertex_operator(const LatticeModel& m, const Site& s, const Vec& a,
                              int factor_offset = 0);
/// B_{p,v}^alpha.
LocalOperator plaquette_operator(const LatticeModel& m, const Site& s, const Vec& alpha,
                                 int factor_offset = 0);

struct HaarProjectors {
  std::vector<LocalOperator> a;  // per vertex
  std::vector<LocalOperator> b;  // per face
};

/// One projector per vertex and face, anchored at each orbit's first dart.
HaarProjectors haar_projectors(const LatticeModel& m);

/// Max deviation, on seeded probe vectors, between Haar projectors built
/// from different anchor darts at the same vertex / face.
double anchor_independence_residual(const LatticeModel& m, std::uint64_t seed, int probes = 2);

/// Morphism residual of a (x) alpha -> A_v^a B_p^alpha out of D(R), measured
/// on seeded probe vectors over all basis pairs of D(R).
double site_double_action(const LatticeModel& m, const Site& s, std::uint64_t seed,
                          int probes = 2);

/// Vertex/plaquette transpose identities against the dual model; exhaustive when
/// state_dim is small, sampled otherwise.  Returns the max residual.
double duality_check(const LatticeModel& m, const Site& s, std::uint64_t seed);

/// Residual of conjugating by the per-edge antipode after flipping one
/// edge's reference orientation.
double orientation_reversal_consistency(const LatticeModel& m, int edge, std::uint64_t seed,
                                        int probes = 2);

/// Trace of a product of commuting projectors given as local operators,
/// state by state with early termination; asserted integer within 1e-6.
std::uint64_t projector_product_trace(const TensorSpace& sp,
                                      const std::vector<const LocalOperator*>& ops);

/// dim of the joint fixed space of all A_v, B_p, by trace of the projector
/// product; cross-checked against a dense rank when the space is small.
std::uint64_t ground_space_dim(const LatticeModel& m);

/// Same with the vertices and faces of the given sites omitted.
std::uint64_t excitation_space_dim(const LatticeModel& m, const std::vector<Site>& sites);

}  // namespace hopflattice

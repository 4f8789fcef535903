#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopflattice/model.hpp"
#include "hopflattice/oracles.hpp"

using namespace hopflattice;

namespace {

constexpr std::uint64_t kSeed = 0xC0FFEE;

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

LatticeModel model(const HopfAlgebra& h, const char* surface) {
  return make_model(h, build_standard(surface));
}

}  // namespace

TEST_CASE("tensor spaces index row-major") {
  TensorSpace sp = make_space({2, 3, 4});
  CHECK(sp.total == 24);
  CHECK(sp.strides == std::vector<std::uint64_t>{12, 4, 1});
  CHECK_THROWS_AS(make_space(std::vector<int>(64, 4)), error);  // overflows
}

TEST_CASE("vertex operators of a group algebra are permutations") {
  LatticeModel m = model(group_algebra(cyclic_group(2)), "sphere:tetrahedron");
  Site s = make_site(m.cells, 0);
  for (int g = 0; g < 2; ++g) {
    Mat a = to_matrix(m.space, vertex_operator(m, s, m.algebra.basis_vector(g)));
    for (int col = 0; col < a.cols(); ++col) {
      int nonzero = 0;
      for (int row = 0; row < a.rows(); ++row)
        if (std::abs(a(row, col)) > 1e-12) {
          ++nonzero;
          CHECK(std::abs(a(row, col) - cplx(1.0)) < 1e-12);
        }
      CHECK(nonzero == 1);
    }
  }
}

TEST_CASE("haar projectors square to themselves") {
  for (const char* surf : {"sphere:bigon", "sphere:tetrahedron"}) {
    CAPTURE(surf);
    LatticeModel m = model(group_algebra(cyclic_group(2)), surf);
    HaarProjectors hp = haar_projectors(m);
    for (const LocalOperator& op : hp.a) {
      Mat p = to_matrix(m.space, op);
      CHECK(max_abs(p * p - p) < 1e-10);
      CHECK(max_abs(p - p.adjoint()) < 1e-10);
    }
    for (const LocalOperator& op : hp.b) {
      Mat p = to_matrix(m.space, op);
      CHECK(max_abs(p * p - p) < 1e-10);
      CHECK(max_abs(p - p.adjoint()) < 1e-10);
    }
  }
}

TEST_CASE("operators at distinct cells commute for every basis argument") {
  LatticeModel m = model(group_algebra(cyclic_group(3)), "sphere:tetrahedron");
  std::vector<Mat> av, bf;
  for (int v = 0; v < m.cells.num_vertices(); ++v) {
    Site s = make_site(m.cells, m.cells.vertices[static_cast<size_t>(v)][0]);
    for (int g = 0; g < m.algebra.dim; ++g)
      av.push_back(to_matrix(m.space, vertex_operator(m, s, m.algebra.basis_vector(g))));
  }
  for (int f = 0; f < m.cells.num_faces(); ++f) {
    Site s = make_site(m.cells, m.cells.faces[static_cast<size_t>(f)][0]);
    for (int a = 0; a < m.algebra.dim; ++a)
      bf.push_back(to_matrix(m.space, plaquette_operator(m, s, m.rbar.basis_vector(a))));
  }
  const int n = m.algebra.dim;
  double res = 0.0;
  for (size_t i = 0; i < av.size(); ++i)
    for (size_t j = i + 1; j < av.size(); ++j)
      if (i / n != j / n) res = std::max(res, max_abs(av[i] * av[j] - av[j] * av[i]));
  for (size_t i = 0; i < bf.size(); ++i)
    for (size_t j = i + 1; j < bf.size(); ++j)
      if (i / n != j / n) res = std::max(res, max_abs(bf[i] * bf[j] - bf[j] * bf[i]));
  // vertex against plaquette at cells that do not share a site
  for (size_t i = 0; i < av.size(); ++i)
    for (size_t j = 0; j < bf.size(); ++j) {
      Site sv = make_site(m.cells, m.cells.vertices[i / n][0]);
      if (vertex_incident_to_face(m.cells, sv.vertex, static_cast<int>(j / n))) continue;
      res = std::max(res, max_abs(av[i] * bf[j] - bf[j] * av[i]));
    }
  CHECK(res < 1e-10);
}

TEST_CASE("a site carries an action of the double") {
  for (const HopfAlgebra& h : {group_algebra(symmetric_group_s3()),
                               function_algebra(symmetric_group_s3())}) {
    CAPTURE(h.name);
    LatticeModel m = make_model(h, build_standard("sphere:bigon"));
    CHECK(site_double_action(m, make_site(m.cells, 0), kSeed) < 1e-10);
  }
  LatticeModel m = model(group_algebra(cyclic_group(3)), "sphere:tetrahedron");
  CHECK(site_double_action(m, make_site(m.cells, 0), kSeed) < 1e-10);
}

TEST_CASE("projectors do not depend on the anchor dart") {
  for (const char* surf : {"sphere:tetrahedron", "torus:square-1v"}) {
    CAPTURE(surf);
    LatticeModel m = model(group_algebra(symmetric_group_s3()), surf);
    CHECK(anchor_independence_residual(m, kSeed) < 1e-10);
  }
}

TEST_CASE("duality against the dual model") {
  for (const char* surf : {"sphere:bigon", "sphere:tetrahedron", "torus:square-1v"}) {
    for (const HopfAlgebra& h : {group_algebra(cyclic_group(3)),
                                 group_algebra(symmetric_group_s3())}) {
      CAPTURE(surf);
      CAPTURE(h.name);
      LatticeModel m = make_model(h, build_standard(surf));
      CHECK(duality_check(m, make_site(m.cells, 0), kSeed) < 1e-10);
    }
  }
}

TEST_CASE("orientation reversal is a gauge choice") {
  LatticeModel m = model(group_algebra(symmetric_group_s3()), "sphere:bigon");
  for (int e = 0; e < m.cells.num_edges(); ++e)
    CHECK(orientation_reversal_consistency(m, e, kSeed) < 1e-10);
  LatticeModel t = model(group_algebra(cyclic_group(3)), "torus:square-1v");
  for (int e = 0; e < t.cells.num_edges(); ++e)
    CHECK(orientation_reversal_consistency(t, e, kSeed) < 1e-10);
}

TEST_CASE("ground space dimensions on spheres are one") {
  for (const char* surf : {"sphere:bigon", "sphere:tetrahedron"}) {
    for (const HopfAlgebra& h : {group_algebra(cyclic_group(2)), group_algebra(cyclic_group(3)),
                                 group_algebra(symmetric_group_s3())}) {
      if (std::string(surf) == "sphere:tetrahedron" && h.dim == 6) continue;  // 6^6 states, slow
      CAPTURE(surf);
      CAPTURE(h.name);
      CHECK(ground_space_dim(make_model(h, build_standard(surf))) == 1);
    }
  }
  CHECK(ground_space_dim(model(group_algebra(cyclic_group(2)), "sphere:cube")) == 1);
}

TEST_CASE("torus ground space dimensions") {
  CHECK(ground_space_dim(model(group_algebra(cyclic_group(2)), "torus:square-1v")) == 4);
  CHECK(ground_space_dim(model(group_algebra(cyclic_group(3)), "torus:square-1v")) == 9);
  CHECK(ground_space_dim(model(group_algebra(symmetric_group_s3()), "torus:square-1v")) == 8);
}

TEST_CASE("refining the cell decomposition keeps the ground space") {
  for (int k : {2, 3}) {
    CAPTURE(k);
    std::uint64_t coarse = ground_space_dim(model(group_algebra(cyclic_group(k)), "torus:square-1v"));
    CHECK(ground_space_dim(model(group_algebra(cyclic_group(k)), "torus:grid-2x2")) == coarse);
  }
  CHECK(ground_space_dim(model(group_algebra(cyclic_group(2)), "torus:grid-3x2")) == 4);
}

TEST_CASE("genus two ground space") {
  LatticeModel m = model(group_algebra(cyclic_group(2)), "genus2:octagon-1v");
  std::uint64_t dim = ground_space_dim(m);
  CHECK(dim == 16);
  CHECK(brute_ground_dim(m.algebra, m.cells) == dim);
}

TEST_CASE("excitation spaces at unexcited sites") {
  // leaving out sites while keeping every other projector
  LatticeModel m = model(group_algebra(cyclic_group(2)), "sphere:cube");
  CHECK(excitation_space_dim(m, {make_site(m.cells, 0)}) == 1);
  CHECK(excitation_space_dim(m, {make_site(m.cells, 0), make_site(m.cells, 12)}) == 4);
  CHECK_THROWS_AS(excitation_space_dim(m, {make_site(m.cells, 0), make_site(m.cells, 1)}), error);
}

TEST_CASE("dense paths refuse oversized spaces") {
  LatticeModel m = model(group_algebra(cyclic_group(3)), "sphere:cube");  // 3^12 states
  CHECK_THROWS_AS(to_matrix(m.space, haar_projectors(m).a[0]), error);
}

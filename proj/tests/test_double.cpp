#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopflattice/double.hpp"

using namespace hopflattice;

namespace {

double max_abs_v(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

std::vector<HopfAlgebra> base_algebras() {
  return {group_algebra(cyclic_group(2)), group_algebra(cyclic_group(3)),
          group_algebra(symmetric_group_s3()), function_algebra(symmetric_group_s3())};
}

}  // namespace

TEST_CASE("drinfeld doubles satisfy the Hopf axioms") {
  for (const HopfAlgebra& h : base_algebras()) {
    CAPTURE(h.name);
    DoubleAlgebra d = drinfeld_double(h);  // verifies axioms < 1e-12 internally
    CHECK(d.hopf.dim == h.dim * h.dim);
    CHECK(verify_hopf_axioms(d.hopf).max_residual() < 1e-12);
  }
}

TEST_CASE("factor embeddings are unital algebra maps") {
  for (const HopfAlgebra& h : {group_algebra(symmetric_group_s3())}) {
    DoubleAlgebra d = drinfeld_double(h);
    const int n = h.dim;
    double res = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = d.hopf.multiply(d.embed_base(h.basis_vector(i)), d.embed_base(h.basis_vector(j)));
        res = std::max(res, max_abs_v(lhs - d.embed_base(h.multiply(h.basis_vector(i),
                                                                    h.basis_vector(j)))));
        Vec dl = d.hopf.multiply(d.embed_dual(d.rbar.basis_vector(i)),
                                 d.embed_dual(d.rbar.basis_vector(j)));
        res = std::max(res, max_abs_v(dl - d.embed_dual(d.rbar.multiply(d.rbar.basis_vector(i),
                                                                        d.rbar.basis_vector(j)))));
      }
    CHECK(res < 1e-12);
    CHECK(max_abs_v(d.embed_base(h.unit) - d.hopf.unit) < 1e-12);
  }
}

TEST_CASE("haar of the double is the tensor product of the factor haars") {
  for (const HopfAlgebra& h : base_algebras()) {
    CAPTURE(h.name);
    DoubleAlgebra d = drinfeld_double(h);
    Vec hd = double_haar(d, haar_integral(h), haar_integral(d.rbar));
    CHECK(max_abs_v(d.hopf.multiply(hd, hd) - hd) < 1e-10);
    CHECK(std::abs(d.hopf.eps(hd) - cplx(1.0)) < 1e-10);
  }
}

TEST_CASE("R-matrix intertwines the coproduct with its opposite") {
  for (const HopfAlgebra& h : base_algebras()) {
    CAPTURE(h.name);
    DoubleAlgebra d = drinfeld_double(h);
    double res = -1.0;
    Vec r = r_matrix(d, 1e-10, &res);
    CHECK(r.size() == static_cast<Eigen::Index>(d.hopf.dim) * d.hopf.dim);
    CHECK(res >= 0.0);
    CHECK(res < 1e-10);
  }
}

TEST_CASE("half-braiding of the regular modules") {
  for (const HopfAlgebra& h : base_algebras()) {
    CAPTURE(h.name);
    CHECK(half_braiding_residual(drinfeld_double(h)) < 1e-10);
  }
}

TEST_CASE("the two-strand action represents the double") {
  for (const HopfAlgebra& h : base_algebras()) {
    CAPTURE(h.name);
    DoubleAlgebra d = drinfeld_double(h);
    std::vector<Mat> p, q;
    two_strand_operators(h, p, q);
    CHECK(site_rep_check(d, p, q) < 1e-10);
  }
}

TEST_CASE("the four-strand extended action represents the double") {
  for (const HopfAlgebra& h : {group_algebra(cyclic_group(2)), group_algebra(cyclic_group(3))}) {
    CAPTURE(h.name);
    DoubleAlgebra d = drinfeld_double(h);
    std::vector<Mat> p, q;
    four_strand_operators(h, p, q);
    CHECK(site_rep_check(d, p, q) < 1e-10);
  }
}

TEST_CASE("site_rep_check flags a broken family") {
  HopfAlgebra h = group_algebra(cyclic_group(2));
  DoubleAlgebra d = drinfeld_double(h);
  std::vector<Mat> p, q;
  two_strand_operators(h, p, q);
  p[1] *= cplx(2.0);
  CHECK(site_rep_check(d, p, q) > 1e-3);
}

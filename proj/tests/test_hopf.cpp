#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "hopflattice/hopf.hpp"
#include "hopflattice/specparse.hpp"

using namespace hopflattice;

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs_v(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

std::vector<HopfAlgebra> standard_algebras() {
  std::vector<HopfAlgebra> out;
  out.push_back(group_algebra(cyclic_group(2)));
  out.push_back(group_algebra(cyclic_group(3)));
  out.push_back(group_algebra(symmetric_group_s3()));
  out.push_back(function_algebra(symmetric_group_s3()));
  out.push_back(dual_hopf(group_algebra(symmetric_group_s3())));
  return out;
}

Vec random_vec(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = cplx(unif(rng), unif(rng));
  return v;
}

}  // namespace

TEST_CASE("hopf axioms hold exactly for the standard algebras") {
  for (const HopfAlgebra& h : standard_algebras()) {
    CAPTURE(h.name);
    AxiomReport r = verify_hopf_axioms(h);
    CHECK(r.max_residual() < 1e-12);
    CHECK(r.antipode_squared < 1e-12);  // involutive antipode
  }
}

TEST_CASE("group table validation") {
  CayleyTable t = cyclic_group(3);
  CHECK_NOTHROW(validate_group(t));
  t.table[1][1] = 1;  // breaks cancellation
  CHECK_THROWS_AS(validate_group(t), error);
}

TEST_CASE("double dual is the original with both products reversed") {
  for (const HopfAlgebra& h :
       {group_algebra(symmetric_group_s3()), function_algebra(symmetric_group_s3())}) {
    HopfAlgebra dd = dual_hopf(dual_hopf(h));
    const int n = h.dim;
    double rmul = 0, rcm = 0;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          rmul = std::max(rmul, std::abs(dd.mul(k, i * n + j) - h.mul(k, j * n + i)));
          rcm = std::max(rcm, std::abs(dd.comul(i * n + j, k) - h.comul(j * n + i, k)));
        }
    CHECK(rmul < 1e-12);
    CHECK(rcm < 1e-12);
    CHECK(max_abs_v(dd.unit - h.unit) < 1e-12);
    CHECK(max_abs_v(dd.counit - h.counit) < 1e-12);
    CHECK(max_abs(dd.antipode - h.antipode) < 1e-12);
  }
}

TEST_CASE("haar integral properties") {
  for (const HopfAlgebra& h : standard_algebras()) {
    CAPTURE(h.name);
    Vec haar = haar_integral(h).element;
    CHECK(max_abs_v(h.multiply(haar, haar) - haar) < 1e-10);  // idempotent
    CHECK(max_abs_v(h.s(haar) - haar) < 1e-10);
    CHECK(std::abs(h.eps(haar) - cplx(1.0)) < 1e-10);
    // two-sided invariance: x h = h x = eps(x) h for every basis element
    for (int i = 0; i < h.dim; ++i) {
      Vec x = h.basis_vector(i);
      CHECK(max_abs_v(h.multiply(x, haar) - h.counit(i) * haar) < 1e-10);
      CHECK(max_abs_v(h.multiply(haar, x) - h.counit(i) * haar) < 1e-10);
    }
  }
}

TEST_CASE("haar integrals of the group family have their closed forms") {
  HopfAlgebra cg = group_algebra(symmetric_group_s3());
  CHECK(max_abs_v(haar_integral(cg).element - Vec::Constant(6, cplx(1.0 / 6))) < 1e-12);

  HopfAlgebra fg = function_algebra(cyclic_group(3));
  Vec delta_e = Vec::Zero(3);
  delta_e(0) = 1.0;
  CHECK(max_abs_v(haar_integral(fg).element - delta_e) < 1e-12);

  // Haar of the dual: normalized trace of left multiplication.
  HopfAlgebra dual = dual_hopf(cg);
  Vec hbar = haar_integral(dual).element;
  for (int g = 0; g < 6; ++g) {
    const cplx expect = cg.left_mult(cg.basis_vector(g)).trace() / cplx(6.0);
    CHECK(std::abs(hbar(g) - expect) < 1e-12);
  }
}

TEST_CASE("regular actions commute and represent") {
  std::mt19937_64 rng(1);
  for (const HopfAlgebra& h : standard_algebras()) {
    CAPTURE(h.name);
    RegularActions acts = regular_actions(h);
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) {
        // left and right regular actions commute
        CHECK(max_abs(acts.left[i] * acts.right[j] - acts.right[j] * acts.left[i]) < 1e-12);
        // dual left and dual right commute
        CHECK(max_abs(acts.dual_left[i] * acts.dual_right[j] -
                      acts.dual_right[j] * acts.dual_left[i]) < 1e-12);
      }
    // module property of the left action on random elements
    Vec x = random_vec(h.dim, rng), y = random_vec(h.dim, rng), z = random_vec(h.dim, rng);
    CHECK(max_abs_v(h.left_mult(h.multiply(x, y)) * z - h.left_mult(x) * (h.left_mult(y) * z)) <
          1e-10);
  }
}

TEST_CASE("iterated coproducts") {
  std::mt19937_64 rng(2);
  HopfAlgebra h = group_algebra(symmetric_group_s3());
  Vec x = random_vec(h.dim, rng);
  CHECK(max_abs_v(h.iterated_coproduct(x, 1) - x) < 1e-12);
  CHECK(max_abs_v(h.iterated_coproduct(x, 2) - h.comultiply(x)) < 1e-12);

  // coassociativity: splitting the first or the second leg agree
  const int n = h.dim;
  Vec d2 = h.comultiply(x);
  Vec left = Vec::Zero(n * n * n), right = Vec::Zero(n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx c = d2(i * n + j);
      if (c == cplx(0.0)) continue;
      Vec di = h.comultiply(h.basis_vector(i));
      Vec dj = h.comultiply(h.basis_vector(j));
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          left((p * n + q) * n + j) += c * di(p * n + q);
          right((i * n + p) * n + q) += c * dj(p * n + q);
        }
    }
  CHECK(max_abs_v(left - h.iterated_coproduct(x, 3)) < 1e-10);
  CHECK(max_abs_v(right - h.iterated_coproduct(x, 3)) < 1e-10);
}

TEST_CASE("dual coproduct legs reproduce the pairing with products") {
  std::mt19937_64 rng(3);
  for (const HopfAlgebra& h :
       {group_algebra(symmetric_group_s3()), function_algebra(symmetric_group_s3())}) {
    CAPTURE(h.name);
    const int n = h.dim;
    Vec alpha = random_vec(n, rng);
    Vec x = random_vec(n, rng), y = random_vec(n, rng), z = random_vec(n, rng);
    // <alpha, xyz> directly
    Vec xyz = h.multiply(h.multiply(x, y), z);
    cplx direct = alpha.cwiseProduct(xyz).sum();
    cplx viaten = 0.0;
    for (const auto& [idx, c] : h.iterated_dual_coproduct_sparse(alpha, 3).entries)
      viaten += c * x(idx[0]) * y(idx[1]) * z(idx[2]);
    CHECK(std::abs(direct - viaten) < 1e-10);
  }
}

TEST_CASE("algebra spec strings compose") {
  HopfAlgebra a = parse_algebra("group:Z3");
  CHECK(a.dim == 3);
  HopfAlgebra b = parse_algebra("dual:group:S3");
  CHECK(b.dim == 6);
  CHECK(verify_hopf_axioms(b).max_residual() < 1e-12);
  HopfAlgebra c = parse_algebra("double:group:Z2");
  CHECK(c.dim == 4);
  CHECK(verify_hopf_axioms(c).max_residual() < 1e-12);
  CHECK_THROWS_AS(parse_algebra("frobnicate:Z2"), error);
  CHECK_THROWS_AS(parse_algebra("no-colon"), error);
}

TEST_CASE("cayley table files load and validate") {
  const char* path = "test_hopf_z2.cayley";
  {
    std::ofstream f(path);
    f << "2\n0 1\n1 0\n";
  }
  CayleyTable t = parse_group(path);
  CHECK(t.order == 2);
  {
    std::ofstream f(path);
    f << "2\n0 1\n1 1\n";  // not a group
  }
  CHECK_THROWS_AS(parse_group(path), error);
  std::remove(path);
  CHECK_THROWS_AS(parse_group("does_not_exist.cayley"), error);
}

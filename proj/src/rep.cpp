#include "hopflattice/rep.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace hopflattice {

namespace {

constexpr double kClusterTol = 1e-7;

// Basis of the nullspace of `m` (columns), relative threshold.
Mat nullspace(const Mat& m, double tol = 1e-9) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double scale = s.size() ? std::max(1.0, s(0)) : 1.0;
  int nullity = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) < tol * scale) ++nullity;
  return svd.matrixV().rightCols(nullity);
}

// Orthonormal basis of the column space.
Mat column_space(const Mat& m, double tol = 1e-9) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double scale = s.size() ? std::max(1.0, s(0)) : 1.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) >= tol * scale) ++rank;
  return svd.matrixU().leftCols(rank);
}

std::vector<std::vector<int>> cluster_values(const Vec& vals, double tol) {
  std::vector<int> order(static_cast<size_t>(vals.size()));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<std::vector<int>> clusters;
  std::vector<bool> used(order.size(), false);
  for (size_t i = 0; i < order.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> cl{static_cast<int>(i)};
    used[i] = true;
    for (size_t j = i + 1; j < order.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(vals(static_cast<Eigen::Index>(j)) - vals(static_cast<Eigen::Index>(i))) < tol) {
        cl.push_back(static_cast<int>(j));
        used[j] = true;
      }
    }
    clusters.push_back(std::move(cl));
  }
  return clusters;
}

}  // namespace

WedderburnData wedderburn(const HopfAlgebra& h, std::uint64_t seed) {
  const int n = h.dim;
  // Center: nullspace of the stacked commutator system z e_k - e_k z = 0.
  Mat sys(static_cast<Eigen::Index>(n) * n, n);
  for (int k = 0; k < n; ++k) {
    Vec b = h.basis_vector(k);
    sys.block(static_cast<Eigen::Index>(k) * n, 0, n, n) = h.left_mult(b) - h.right_mult(b);
  }
  Mat center = nullspace(sys);
  const int c = static_cast<int>(center.cols());
  require(c >= 1, errc::not_semisimple, "empty center");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec coeffs(c);
    for (int i = 0; i < c; ++i) coeffs(i) = cplx(unif(rng), unif(rng));
    Vec z = center * coeffs;
    Mat lz = h.left_mult(z);
    Eigen::ComplexEigenSolver<Mat> es(lz, /*computeEigenvectors=*/false);
    auto clusters = cluster_values(es.eigenvalues(), kClusterTol);
    if (static_cast<int>(clusters.size()) != c) continue;  // not generic enough; retry

    // Lagrange interpolation on the distinct eigenvalues, applied to the
    // multiplication-by-z matrix and read off against 1.
    std::vector<cplx> lambdas;
    for (const auto& cl : clusters) {
      cplx mean = 0.0;
      for (int idx : cl) mean += es.eigenvalues()(idx);
      lambdas.push_back(mean / static_cast<double>(cl.size()));
    }
    WedderburnData w;
    bool ok = true;
    for (size_t j = 0; j < lambdas.size(); ++j) {
      Mat p = Mat::Identity(n, n);
      for (size_t k = 0; k < lambdas.size(); ++k) {
        if (k == j) continue;
        p = p * (lz - lambdas[k] * Mat::Identity(n, n)) / (lambdas[j] - lambdas[k]);
      }
      Vec e = p * h.unit;
      // Primitivity check: rank of left multiplication must be a perfect square.
      Mat le = h.left_mult(e);
      Eigen::JacobiSVD<Mat> svd(le);
      const auto& s = svd.singularValues();
      int rank = 0;
      for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > 1e-7 * std::max(1.0, s(0))) ++rank;
      const double droot = std::sqrt(static_cast<double>(rank));
      const int d = static_cast<int>(std::lround(droot));
      if (std::abs(droot - d) > 1e-6 || d < 1) {
        ok = false;
        break;
      }
      w.idempotents.push_back(e);
      w.block_dims.push_back(d);
    }
    if (!ok) continue;

    int total = 0;
    for (int d : w.block_dims) total += d * d;
    if (total != n) continue;

    // Locate the trivial block: the block of the Haar integral.
    Vec haar = haar_integral(h).element;
    double best = 1e300;
    for (size_t j = 0; j < w.idempotents.size(); ++j) {
      double dist = (w.idempotents[j] - haar).cwiseAbs().maxCoeff();
      if (dist < best) {
        best = dist;
        w.trivial_index = static_cast<int>(j);
      }
    }
    require(best < 1e-8, errc::not_semisimple, "Haar integral is not a central idempotent block");
    require(w.block_dims[static_cast<size_t>(w.trivial_index)] == 1, errc::not_semisimple,
            "trivial block has dimension != 1");

    // Invariants: orthogonality, completeness, centrality.
    Vec sum = Vec::Zero(n);
    for (size_t i = 0; i < w.idempotents.size(); ++i) {
      sum += w.idempotents[i];
      for (size_t j = 0; j < w.idempotents.size(); ++j) {
        Vec prod = h.multiply(w.idempotents[i], w.idempotents[j]);
        Vec expect = (i == j) ? w.idempotents[i] : Vec(Vec::Zero(n));
        require((prod - expect).cwiseAbs().maxCoeff() < 1e-8, errc::not_semisimple,
                "idempotents not orthogonal");
      }
    }
    require((sum - h.unit).cwiseAbs().maxCoeff() < 1e-8, errc::not_semisimple,
            "idempotents do not sum to 1");
    return w;
  }
  throw error(errc::randomization_exhausted, "wedderburn: retries exhausted");
}

int global_dim_squared(const WedderburnData& w) {
  int total = 0;
  for (int d : w.block_dims) total += d * d;
  return total;
}

double algebra_morphism_residual(const HopfAlgebra& h, const std::vector<Mat>& rep) {
  const int n = h.dim;
  require(static_cast<int>(rep.size()) == n, errc::dimension_mismatch, "rep family size mismatch");
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec prod = h.mul.col(i * n + j);
      Mat lhs = Mat::Zero(rep[0].rows(), rep[0].cols());
      for (int k = 0; k < n; ++k)
        if (prod(k) != cplx(0.0)) lhs += prod(k) * rep[static_cast<size_t>(k)];
      Mat diff = lhs - rep[static_cast<size_t>(i)] * rep[static_cast<size_t>(j)];
      res = std::max(res, diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0);
    }
  }
  return res;
}

Mat isotypic_projector(const HopfAlgebra& h, const WedderburnData& w, int block,
                       const std::vector<Mat>& rep, double morphism_tol) {
  require(block >= 0 && block < static_cast<int>(w.idempotents.size()), errc::invalid_argument,
          "block index out of range");
  require(algebra_morphism_residual(h, rep) < morphism_tol, errc::not_a_morphism,
          "representation fails the basis-product test");
  const Vec& e = w.idempotents[static_cast<size_t>(block)];
  Mat out = Mat::Zero(rep[0].rows(), rep[0].cols());
  for (int k = 0; k < h.dim; ++k)
    if (e(k) != cplx(0.0)) out += e(k) * rep[static_cast<size_t>(k)];
  return out;
}

ModuleRep extract_block_module(const HopfAlgebra& h, const WedderburnData& w, int block,
                               std::uint64_t seed) {
  const int n = h.dim;
  const int d = w.block_dims[static_cast<size_t>(block)];
  const Vec& e = w.idempotents[static_cast<size_t>(block)];
  Mat le = h.left_mult(e);
  Mat q = column_space(le);  // d^2 columns spanning the block
  require(static_cast<int>(q.cols()) == d * d, errc::not_semisimple, "block rank != d^2");

  if (d == 1) {
    ModuleRep m;
    m.dim = 1;
    Vec wv = q.col(0);
    for (int k = 0; k < n; ++k) {
      Vec img = h.multiply(h.basis_vector(k), wv);
      // one-dimensional: scalar = <wv, img> with wv unit norm
      cplx scalar = wv.dot(img);
      Mat r(1, 1);
      r(0, 0) = scalar;
      m.rho.push_back(r);
    }
    require(algebra_morphism_residual(h, m.rho) < 1e-8, errc::not_a_morphism,
            "1-dim block extraction failed the morphism test");
    return m;
  }

  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(block + 1)));
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int attempt = 0; attempt < 32; ++attempt) {
    // Right multiplication by a random block element commutes with the left
    // action; a generic eigenspace is one irreducible copy.
    Vec r(n);
    for (int i = 0; i < n; ++i) r(i) = cplx(unif(rng), unif(rng));
    Vec u = h.multiply(e, h.multiply(r, e));
    Mat t = q.adjoint() * h.right_mult(u) * q;  // d^2 x d^2
    Eigen::ComplexEigenSolver<Mat> es(t);
    auto clusters = cluster_values(es.eigenvalues(), 1e-6);
    const std::vector<int>* pick = nullptr;
    for (const auto& cl : clusters)
      if (static_cast<int>(cl.size()) == d) {
        pick = &cl;
        break;
      }
    if (!pick) continue;
    Mat evec(d * d, d);
    for (int i = 0; i < d; ++i) evec.col(i) = es.eigenvectors().col((*pick)[static_cast<size_t>(i)]);
    Mat p = q * evec;  // n x d basis of one irreducible copy
    // Orthonormalize.
    Eigen::HouseholderQR<Mat> qr(p);
    Mat pq = qr.householderQ() * Mat::Identity(n, d);

    ModuleRep m;
    m.dim = d;
    bool ok = true;
    for (int k = 0; k < n; ++k) {
      Mat img = h.left_mult(h.basis_vector(k)) * pq;   // n x d
      Mat coeff = pq.adjoint() * img;                  // d x d
      if ((img - pq * coeff).cwiseAbs().maxCoeff() > 1e-8) {
        ok = false;
        break;
      }
      m.rho.push_back(coeff);
    }
    if (!ok) continue;
    if (algebra_morphism_residual(h, m.rho) > 1e-8) continue;
    return m;
  }
  throw error(errc::randomization_exhausted, "extract_block_module: retries exhausted");
}

}  // namespace hopflattice

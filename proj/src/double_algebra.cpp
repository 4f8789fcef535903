#include "hopflattice/double.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace hopflattice {

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Sparse product in D (x) D of two flat (dim D)^2 vectors.
StateMap pair_product(const HopfAlgebra& dd, const StateMap& u, const StateMap& v) {
  const int N = dd.dim;
  StateMap out;
  for (const auto& [key1, c1] : u) {
    const int i1 = static_cast<int>(key1) / N;
    const int j1 = static_cast<int>(key1) % N;
    for (const auto& [key2, c2] : v) {
      const int i2 = static_cast<int>(key2) / N;
      const int j2 = static_cast<int>(key2) % N;
      const cplx w = c1 * c2;
      for (int p = 0; p < N; ++p) {
        const cplx mp = dd.mul(p, i1 * N + i2);
        if (mp == cplx(0.0)) continue;
        for (int q = 0; q < N; ++q) {
          const cplx mq = dd.mul(q, j1 * N + j2);
          if (mq == cplx(0.0)) continue;
          out[static_cast<std::uint64_t>(p) * N + q] += w * mp * mq;
        }
      }
    }
  }
  return out;
}

double map_diff(const StateMap& a, const StateMap& b) {
  double res = 0.0;
  for (const auto& [k, c] : a) {
    auto it = b.find(k);
    res = std::max(res, std::abs(c - (it == b.end() ? cplx(0.0) : it->second)));
  }
  for (const auto& [k, c] : b)
    if (!a.count(k)) res = std::max(res, std::abs(c));
  return res;
}

}  // namespace

DoubleAlgebra drinfeld_double(const HopfAlgebra& h, double tol_axiom) {
  const int n = h.dim;
  const int N = n * n;
  DoubleAlgebra d;
  d.n = n;
  d.base = h;
  d.rbar = dual_hopf(h);

  HopfAlgebra& dd = d.hopf;
  dd.dim = N;
  dd.mul = Mat::Zero(N, static_cast<Eigen::Index>(N) * N);
  dd.comul = Mat::Zero(static_cast<Eigen::Index>(N) * N, N);
  dd.unit = Vec::Zero(N);
  dd.counit = Vec::Zero(N);
  dd.antipode = Mat::Zero(N, N);
  dd.name = h.name.empty() ? "double" : "double(" + h.name + ")";

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      dd.unit(a * n + b) = h.unit(a) * h.counit(b);
      dd.counit(a * n + b) = h.counit(a) * h.unit(b);
      std::string la = a < static_cast<int>(h.basis_labels.size())
                           ? h.basis_labels[static_cast<size_t>(a)]
                           : std::to_string(a);
      std::string lb = b < static_cast<int>(d.rbar.basis_labels.size())
                           ? d.rbar.basis_labels[static_cast<size_t>(b)]
                           : std::to_string(b);
      dd.basis_labels.push_back(la + "|" + lb);
    }

  // Twisted functional: <(e^b)^{(p,r)}, e_m> = <e^b, e_r e_m S(e_p)>,
  // stored as tw[p*n+r](b, m).
  std::vector<Mat> tw(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p) {
    Vec sp = h.antipode.col(p);
    for (int r = 0; r < n; ++r) {
      Mat t(n, n);
      for (int m = 0; m < n; ++m) t.col(m) = h.multiply(h.mul.col(r * n + m), sp);
      tw[static_cast<size_t>(p) * n + r] = t;
    }
  }

  // y e_d in Rbar, per dual-basis d.
  std::vector<Mat> rbar_rm(static_cast<size_t>(n));
  for (int dd_idx = 0; dd_idx < n; ++dd_idx)
    rbar_rm[static_cast<size_t>(dd_idx)] = d.rbar.right_mult(d.rbar.basis_vector(dd_idx));

  // Multiplication: (x (x) alpha)(y (x) beta) = x y'' (x) alpha^y beta.
  for (int c = 0; c < n; ++c) {
    SparseTensor d2 = h.iterated_coproduct_sparse(h.basis_vector(c), 3);
    for (const auto& [idx, t] : d2.entries) {
      const int p = idx[0], q = idx[1], r = idx[2];
      const Mat& twist = tw[static_cast<size_t>(p) * n + r];
      for (int b = 0; b < n; ++b) {
        Vec alpha_t = twist.row(b).transpose();
        if (max_abs(alpha_t) == 0.0) continue;
        for (int dl = 0; dl < n; ++dl) {
          Vec beta = rbar_rm[static_cast<size_t>(dl)] * alpha_t;
          if (max_abs(beta) == 0.0) continue;
          for (int a = 0; a < n; ++a) {
            Vec xy = h.mul.col(a * n + q);
            const Eigen::Index col =
                static_cast<Eigen::Index>(a * n + b) * N + (c * n + dl);
            for (int u = 0; u < n; ++u) {
              if (xy(u) == cplx(0.0)) continue;
              for (int m = 0; m < n; ++m) {
                if (beta(m) == cplx(0.0)) continue;
                dd.mul(u * n + m, col) += t * xy(u) * beta(m);
              }
            }
          }
        }
      }
    }
  }

  // Comultiplication: x (x) alpha -> (x' (x) alpha'') (x) (x'' (x) alpha').
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Eigen::Index col = a * n + b;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const cplx cc = h.comul(p * n + q, a);
          if (cc == cplx(0.0)) continue;
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) {
              const cplx cm = h.mul(b, r * n + s);
              if (cm == cplx(0.0)) continue;
              dd.comul(static_cast<Eigen::Index>(p * n + s) * N + (q * n + r), col) += cc * cm;
            }
        }
    }

  d.factor_r = Mat::Zero(N, n);
  d.factor_rbar = Mat::Zero(N, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      d.factor_r(a * n + b, a) = h.counit(b);
      d.factor_rbar(a * n + b, b) = h.unit(a);
    }

  // Antipode: S(x (x) alpha) = S(alpha) S(x), multiplied out in D.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec sa = d.factor_rbar * d.rbar.antipode.col(b);
      Vec sx = d.factor_r * h.antipode.col(a);
      dd.antipode.col(a * n + b) = dd.multiply(sa, sx);
    }

  AxiomReport rep = verify_hopf_axioms(dd);
  require(rep.max_residual() < tol_axiom, errc::construction_failure,
          "Drinfeld double fails Hopf axioms, residual " + std::to_string(rep.max_residual()));

  // Factor embeddings are algebra morphisms.
  double fres = 0.0;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      Vec lhs = dd.multiply(d.factor_r.col(a), d.factor_r.col(c));
      fres = std::max(fres, max_abs(Vec(lhs - d.factor_r * h.mul.col(a * n + c))));
      Vec lhs2 = dd.multiply(d.factor_rbar.col(a), d.factor_rbar.col(c));
      fres = std::max(fres, max_abs(Vec(lhs2 - d.factor_rbar * d.rbar.mul.col(a * n + c))));
    }
  require(fres < tol_axiom, errc::construction_failure,
          "factor embeddings are not algebra morphisms, residual " + std::to_string(fres));
  return d;
}

Vec double_haar(const DoubleAlgebra& d, const HaarIntegral& h, const HaarIntegral& hbar,
                double tol) {
  const int n = d.n;
  require(h.element.size() == n && hbar.element.size() == n, errc::mismatch,
          "Haar inputs have wrong dimension");
  Vec hd = Vec::Zero(static_cast<Eigen::Index>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) hd(a * n + b) = h.element(a) * hbar.element(b);

  Vec independent = haar_integral(d.hopf).element;
  require(max_abs(Vec(hd - independent)) < tol, errc::mismatch,
          "tensor-product Haar disagrees with the nullspace Haar of D(R)");

  const double cres = max_abs(Mat(d.hopf.left_mult(hd) - d.hopf.right_mult(hd)));
  require(cres < tol, errc::mismatch, "Haar of D(R) is not central");
  return hd;
}

Vec r_matrix(const DoubleAlgebra& d, double tol, double* residual_out) {
  const int n = d.n;
  const int N = n * n;
  StateMap rm;
  for (int a = 0; a < n; ++a) {
    Vec left = d.factor_r.col(a);
    Vec right = d.factor_rbar.col(a);
    for (int i = 0; i < N; ++i) {
      if (left(i) == cplx(0.0)) continue;
      for (int j = 0; j < N; ++j) {
        if (right(j) == cplx(0.0)) continue;
        rm[static_cast<std::uint64_t>(i) * N + j] += left(i) * right(j);
      }
    }
  }

  double res = 0.0;
  int worst = -1;
  for (int k = 0; k < N; ++k) {
    StateMap delta, delta_op;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const cplx c = d.hopf.comul(static_cast<Eigen::Index>(i) * N + j, k);
        if (c == cplx(0.0)) continue;
        delta[static_cast<std::uint64_t>(i) * N + j] += c;
        delta_op[static_cast<std::uint64_t>(j) * N + i] += c;
      }
    StateMap lhs = pair_product(d.hopf, rm, delta);
    StateMap rhs = pair_product(d.hopf, delta_op, rm);
    double r = map_diff(lhs, rhs);
    if (r > res) {
      res = r;
      worst = k;
    }
  }
  if (residual_out) *residual_out = res;
  require(res < tol, errc::quasitriangularity_failure,
          "quasitriangularity fails at basis element " + std::to_string(worst) +
              ", residual " + std::to_string(res));

  Vec out = Vec::Zero(static_cast<Eigen::Index>(N) * N);
  for (const auto& [k, c] : rm) out(static_cast<Eigen::Index>(k)) = c;
  return out;
}

double half_braiding_residual(const DoubleAlgebra& d) {
  const int n = d.n;
  const int N = n * n;
  // V = R (left regular), Y = D(R) (left regular).  Phi: V (x) Y -> Y (x) V.
  Mat phi = Mat::Zero(static_cast<Eigen::Index>(N) * n, static_cast<Eigen::Index>(n) * N);
  for (int a = 0; a < n; ++a) {
    Mat ld = d.hopf.left_mult(d.factor_rbar.col(a));       // N x N on Y
    Mat la = d.base.left_mult(d.base.basis_vector(a));     // n x n on V
    // input index i*N + j  ->  output index J*n + I
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < N; ++j)
        for (int jj = 0; jj < N; ++jj) {
          if (ld(jj, j) == cplx(0.0)) continue;
          for (int ii = 0; ii < n; ++ii) {
            if (la(ii, i) == cplx(0.0)) continue;
            phi(static_cast<Eigen::Index>(jj) * n + ii, static_cast<Eigen::Index>(i) * N + j) +=
                ld(jj, j) * la(ii, i);
          }
        }
  }

  double res = 0.0;
  for (int x = 0; x < n; ++x) {
    // Diagonal R-action via Delta(e_x), acting through the R-embedding on Y.
    Mat act_vy = Mat::Zero(static_cast<Eigen::Index>(n) * N, static_cast<Eigen::Index>(n) * N);
    Mat act_yv = Mat::Zero(static_cast<Eigen::Index>(N) * n, static_cast<Eigen::Index>(N) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const cplx c = d.base.comul(i * n + j, x);
        if (c == cplx(0.0)) continue;
        Mat lv = d.base.left_mult(d.base.basis_vector(i));
        Mat ly = d.hopf.left_mult(d.factor_r.col(j));
        act_vy += c * kron(lv, ly);
        Mat lyi = d.hopf.left_mult(d.factor_r.col(i));
        Mat lvj = d.base.left_mult(d.base.basis_vector(j));
        act_yv += c * kron(lyi, lvj);
      }
    res = std::max(res, max_abs(Mat(phi * act_vy - act_yv * phi)));
  }
  return res;
}

double site_rep_check(const DoubleAlgebra& d, const std::vector<Mat>& p_ops,
                      const std::vector<Mat>& q_ops) {
  const int n = d.n;
  const int N = n * n;
  require(static_cast<int>(p_ops.size()) == n && static_cast<int>(q_ops.size()) == n,
          errc::dimension_mismatch, "operator family sizes must match dim R");
  const Eigen::Index m = p_ops[0].rows();
  for (const Mat& op : p_ops)
    require(op.rows() == m && op.cols() == m, errc::dimension_mismatch, "p operator shape");
  for (const Mat& op : q_ops)
    require(op.rows() == m && op.cols() == m, errc::dimension_mismatch, "q operator shape");

  std::vector<Mat> rho(static_cast<size_t>(N));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      rho[static_cast<size_t>(a * n + b)] = p_ops[static_cast<size_t>(a)] * q_ops[static_cast<size_t>(b)];

  double res = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Mat lhs = Mat::Zero(m, m);
      for (int k = 0; k < N; ++k) {
        const cplx c = d.hopf.mul(k, static_cast<Eigen::Index>(i) * N + j);
        if (c != cplx(0.0)) lhs += c * rho[static_cast<size_t>(k)];
      }
      res = std::max(res, max_abs(Mat(lhs - rho[static_cast<size_t>(i)] * rho[static_cast<size_t>(j)])));
    }
  return res;
}

void two_strand_operators(const HopfAlgebra& h, std::vector<Mat>& p_ops, std::vector<Mat>& q_ops) {
  const int n = h.dim;
  p_ops.clear();
  q_ops.clear();
  for (int a = 0; a < n; ++a) {
    Mat p = Mat::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const cplx c = h.comul(i * n + j, a);
        if (c == cplx(0.0)) continue;
        p += c * kron(h.left_mult(h.basis_vector(i)), h.right_mult(h.s(h.basis_vector(j))));
      }
    p_ops.push_back(std::move(p));
  }
  for (int b = 0; b < n; ++b) {
    // q_alpha(u (x) v) = alpha''.u (x) alpha'.v  (descending R^* legs)
    Mat q = Mat::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
    SparseTensor legs = h.iterated_dual_coproduct_sparse(h.basis_vector(b), 2);
    for (const auto& [idx, c] : legs.entries)
      q += c * kron(h.dual_left_action(h.basis_vector(idx[1])),
                    h.dual_left_action(h.basis_vector(idx[0])));
    q_ops.push_back(std::move(q));
  }
}

void four_strand_operators(const HopfAlgebra& h, std::vector<Mat>& p_ops, std::vector<Mat>& q_ops) {
  const int n = h.dim;
  HopfAlgebra rb = dual_hopf(h);
  const Mat id = Mat::Identity(n, n);
  p_ops.clear();
  q_ops.clear();
  for (int a = 0; a < n; ++a) {
    Mat p = Mat::Zero(static_cast<Eigen::Index>(n) * n * n * n,
                      static_cast<Eigen::Index>(n) * n * n * n);
    SparseTensor legs = h.iterated_coproduct_sparse(h.basis_vector(a), 3);
    for (const auto& [idx, c] : legs.entries)
      p += c * kron(kron(h.left_mult(h.basis_vector(idx[0])), h.left_mult(h.basis_vector(idx[1]))),
                    kron(id, h.right_mult(h.s(h.basis_vector(idx[2])))));
    p_ops.push_back(std::move(p));
  }
  for (int b = 0; b < n; ++b) {
    // q_alpha = alpha'''.u (x) x (x) alpha'' y (x) alpha'.v
    Mat q = Mat::Zero(static_cast<Eigen::Index>(n) * n * n * n,
                      static_cast<Eigen::Index>(n) * n * n * n);
    SparseTensor legs = h.iterated_dual_coproduct_sparse(h.basis_vector(b), 3);
    for (const auto& [idx, c] : legs.entries)
      q += c * kron(kron(h.dual_left_action(h.basis_vector(idx[2])), id),
                    kron(rb.left_mult(rb.basis_vector(idx[1])),
                         h.dual_left_action(h.basis_vector(idx[0]))));
    q_ops.push_back(std::move(q));
  }
}

}  // namespace hopflattice

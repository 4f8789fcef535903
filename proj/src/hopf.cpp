#include "hopflattice/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <Eigen/SVD>

namespace hopflattice {

namespace {

template <typename Expr>
double max_abs(const Expr& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

Vec HopfAlgebra::basis_vector(int i) const {
  Vec v = Vec::Zero(dim);
  v(i) = 1.0;
  return v;
}

Vec HopfAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x(i) == cplx(0.0)) continue;
    for (int j = 0; j < dim; ++j) {
      const cplx c = x(i) * y(j);
      if (c == cplx(0.0)) continue;
      out += c * mul.col(i * dim + j);
    }
  }
  return out;
}

Vec HopfAlgebra::comultiply(const Vec& x) const { return comul * x; }

Mat HopfAlgebra::left_mult(const Vec& x) const {
  Mat out = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (x(i) == cplx(0.0)) continue;
    for (int j = 0; j < dim; ++j) out.col(j) += x(i) * mul.col(i * dim + j);
  }
  return out;
}

Mat HopfAlgebra::right_mult(const Vec& x) const {
  Mat out = Mat::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    if (x(j) == cplx(0.0)) continue;
    for (int i = 0; i < dim; ++i) out.col(i) += x(j) * mul.col(i * dim + j);
  }
  return out;
}

Mat HopfAlgebra::dual_left_action(const Vec& alpha) const {
  // x -> <alpha, S(x')> x''
  Mat out = Mat::Zero(dim, dim);
  Vec sa = antipode.transpose() * alpha;  // <alpha, S e_i> = sa(i)
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < dim; ++i) {
      if (sa(i) == cplx(0.0)) continue;
      for (int j = 0; j < dim; ++j) {
        const cplx c = comul(i * dim + j, k);
        if (c == cplx(0.0)) continue;
        out(j, k) += sa(i) * c;
      }
    }
  }
  return out;
}

Mat HopfAlgebra::dual_right_action(const Vec& alpha) const {
  // x -> x' <alpha, x''>
  Mat out = Mat::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    for (int j = 0; j < dim; ++j) {
      if (alpha(j) == cplx(0.0)) continue;
      for (int i = 0; i < dim; ++i) {
        const cplx c = comul(i * dim + j, k);
        if (c == cplx(0.0)) continue;
        out(i, k) += alpha(j) * c;
      }
    }
  }
  return out;
}

SparseTensor HopfAlgebra::iterated_coproduct_sparse(const Vec& x, int m) const {
  require(m >= 1, errc::invalid_argument, "iterated coproduct needs m >= 1");
  SparseTensor t;
  for (int i = 0; i < dim; ++i)
    if (x(i) != cplx(0.0)) t.entries.push_back({{i}, x(i)});
  for (int step = 1; step < m; ++step) {
    // Expand the last leg with Delta (coassociativity makes the choice moot).
    SparseTensor next;
    StateMap merged;  // keyed by packed indices for accumulation
    std::vector<std::pair<std::vector<int>, cplx>> buf;
    for (const auto& [idx, c] : t.entries) {
      const int k = idx.back();
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          const cplx d = comul(i * dim + j, k);
          if (d == cplx(0.0)) continue;
          auto nidx = idx;
          nidx.back() = i;
          nidx.push_back(j);
          buf.push_back({std::move(nidx), c * d});
        }
      }
    }
    // Merge duplicates.
    std::sort(buf.begin(), buf.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& e : buf) {
      if (!next.entries.empty() && next.entries.back().first == e.first)
        next.entries.back().second += e.second;
      else
        next.entries.push_back(std::move(e));
    }
    t = std::move(next);
  }
  return t;
}

Vec HopfAlgebra::iterated_coproduct(const Vec& x, int m) const {
  SparseTensor t = iterated_coproduct_sparse(x, m);
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= static_cast<std::uint64_t>(dim);
  Vec out = Vec::Zero(static_cast<Eigen::Index>(total));
  for (const auto& [idx, c] : t.entries) {
    std::uint64_t flat = 0;
    for (int d : idx) flat = flat * static_cast<std::uint64_t>(dim) + static_cast<std::uint64_t>(d);
    out(static_cast<Eigen::Index>(flat)) += c;
  }
  return out;
}

SparseTensor HopfAlgebra::iterated_dual_coproduct_sparse(const Vec& alpha, int m) const {
  require(m >= 1, errc::invalid_argument, "iterated dual coproduct needs m >= 1");
  SparseTensor t;
  for (int i = 0; i < dim; ++i)
    if (alpha(i) != cplx(0.0)) t.entries.push_back({{i}, alpha(i)});
  for (int step = 1; step < m; ++step) {
    // Expand the last leg: Delta_{R*}(e^c) = sum mul(c, b1*dim+b2) e^{b1} (x) e^{b2}.
    std::vector<std::pair<std::vector<int>, cplx>> buf;
    for (const auto& [idx, c] : t.entries) {
      const int k = idx.back();
      for (int b1 = 0; b1 < dim; ++b1) {
        for (int b2 = 0; b2 < dim; ++b2) {
          const cplx d = mul(k, b1 * dim + b2);
          if (d == cplx(0.0)) continue;
          auto nidx = idx;
          nidx.back() = b1;
          nidx.push_back(b2);
          buf.push_back({std::move(nidx), c * d});
        }
      }
    }
    std::sort(buf.begin(), buf.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseTensor next;
    for (auto& e : buf) {
      if (!next.entries.empty() && next.entries.back().first == e.first)
        next.entries.back().second += e.second;
      else
        next.entries.push_back(std::move(e));
    }
    t = std::move(next);
  }
  return t;
}

double AxiomReport::max_residual() const {
  return std::max({associativity, coassociativity, unit_axiom, counit_axiom, antipode_axiom,
                   comul_morphism, counit_morphism, antipode_squared});
}

AxiomReport verify_hopf_axioms(const HopfAlgebra& h) {
  const int n = h.dim;
  require(h.mul.rows() == n && h.mul.cols() == static_cast<Eigen::Index>(n) * n &&
              h.comul.rows() == static_cast<Eigen::Index>(n) * n && h.comul.cols() == n &&
              h.unit.size() == n && h.counit.size() == n && h.antipode.rows() == n &&
              h.antipode.cols() == n,
          errc::dimension_mismatch, "inconsistent structure tensor shapes");
  AxiomReport rep;

  std::vector<Mat> left(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) left[static_cast<size_t>(i)] = h.left_mult(h.basis_vector(i));

  // Associativity via faithfulness of left multiplication on a unital algebra:
  // L(e_i e_j) = L(e_i) L(e_j).
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Mat lij = h.left_mult(h.mul.col(i * n + j));
      rep.associativity =
          std::max(rep.associativity, max_abs(lij - left[static_cast<size_t>(i)] * left[static_cast<size_t>(j)]));
    }
  }

  // Unit axiom.
  rep.unit_axiom = std::max(max_abs(h.left_mult(h.unit) - Mat::Identity(n, n)),
                            max_abs(h.right_mult(h.unit) - Mat::Identity(n, n)));

  // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta on each basis element.
  for (int k = 0; k < n; ++k) {
    Vec d1 = h.comultiply(h.basis_vector(k));  // n^2
    Vec lhs = Vec::Zero(static_cast<Eigen::Index>(n) * n * n);
    Vec rhs = Vec::Zero(static_cast<Eigen::Index>(n) * n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const cplx c = d1(i * n + j);
        if (c == cplx(0.0)) continue;
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            const cplx ci = h.comul(a * n + b, i);
            if (ci != cplx(0.0))
              lhs(static_cast<Eigen::Index>(a) * n * n + b * n + j) += c * ci;
            const cplx cj = h.comul(a * n + b, j);
            if (cj != cplx(0.0))
              rhs(static_cast<Eigen::Index>(i) * n * n + a * n + b) += c * cj;
          }
        }
      }
    }
    rep.coassociativity = std::max(rep.coassociativity, max_abs(Vec(lhs - rhs)));
  }

  // Counit axiom: (eps (x) id) Delta = id = (id (x) eps) Delta.
  for (int k = 0; k < n; ++k) {
    Vec d1 = h.comultiply(h.basis_vector(k));
    Vec l = Vec::Zero(n), r = Vec::Zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const cplx c = d1(i * n + j);
        if (c == cplx(0.0)) continue;
        l(j) += c * h.counit(i);
        r(i) += c * h.counit(j);
      }
    rep.counit_axiom = std::max({rep.counit_axiom, max_abs(Vec(l - h.basis_vector(k))),
                                 max_abs(Vec(r - h.basis_vector(k)))});
  }

  // Antipode axiom: mu (S (x) id) Delta = eta eps = mu (id (x) S) Delta.
  for (int k = 0; k < n; ++k) {
    Vec d1 = h.comultiply(h.basis_vector(k));
    Vec l = Vec::Zero(n), r = Vec::Zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const cplx c = d1(i * n + j);
        if (c == cplx(0.0)) continue;
        l += c * h.multiply(h.antipode.col(i), h.basis_vector(j));
        r += c * h.multiply(h.basis_vector(i), h.antipode.col(j));
      }
    Vec target = h.counit(k) * h.unit;
    rep.antipode_axiom =
        std::max({rep.antipode_axiom, max_abs(Vec(l - target)), max_abs(Vec(r - target))});
  }

  // Delta is an algebra morphism: Delta(e_i e_j) = Delta(e_i) Delta(e_j) in R (x) R.
  for (int i = 0; i < n; ++i) {
    Vec di = h.comultiply(h.basis_vector(i));
    for (int j = 0; j < n; ++j) {
      Vec dj = h.comultiply(h.basis_vector(j));
      Vec lhs = h.comultiply(h.mul.col(i * n + j));
      Vec rhs = Vec::Zero(static_cast<Eigen::Index>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const cplx ca = di(a * n + b);
          if (ca == cplx(0.0)) continue;
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
              const cplx cb = dj(c * n + d);
              if (cb == cplx(0.0)) continue;
              const cplx w = ca * cb;
              // (e_a (x) e_b)(e_c (x) e_d) = (e_a e_c) (x) (e_b e_d)
              for (int p = 0; p < n; ++p) {
                const cplx mp = h.mul(p, a * n + c);
                if (mp == cplx(0.0)) continue;
                for (int q = 0; q < n; ++q) {
                  const cplx mq = h.mul(q, b * n + d);
                  if (mq == cplx(0.0)) continue;
                  rhs(p * n + q) += w * mp * mq;
                }
              }
            }
        }
      rep.comul_morphism = std::max(rep.comul_morphism, max_abs(Vec(lhs - rhs)));
    }
  }
  // Delta(1) = 1 (x) 1.
  {
    Vec lhs = h.comultiply(h.unit);
    Vec rhs = Vec::Zero(static_cast<Eigen::Index>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rhs(i * n + j) = h.unit(i) * h.unit(j);
    rep.comul_morphism = std::max(rep.comul_morphism, max_abs(Vec(lhs - rhs)));
  }

  // eps is an algebra morphism.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx lhs = h.eps(h.mul.col(i * n + j));
      rep.counit_morphism = std::max(rep.counit_morphism, std::abs(lhs - h.counit(i) * h.counit(j)));
    }
  rep.counit_morphism = std::max(rep.counit_morphism, std::abs(h.eps(h.unit) - cplx(1.0)));

  rep.antipode_squared = max_abs(Mat(h.antipode * h.antipode - Mat::Identity(n, n)));
  return rep;
}

void validate_group(const CayleyTable& t) {
  const int n = t.order;
  require(n >= 1 && static_cast<int>(t.table.size()) == n, errc::not_a_group,
          "cayley table has wrong number of rows");
  for (const auto& row : t.table) {
    require(static_cast<int>(row.size()) == n, errc::not_a_group, "cayley table row length mismatch");
    for (int v : row) require(v >= 0 && v < n, errc::not_a_group, "cayley table entry out of range");
  }
  for (int g = 0; g < n; ++g)
    require(t.table[0][static_cast<size_t>(g)] == g && t.table[static_cast<size_t>(g)][0] == g,
            errc::not_a_group, "index 0 is not an identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(t.table[static_cast<size_t>(t.table[static_cast<size_t>(a)][static_cast<size_t>(b)])]
                       [static_cast<size_t>(c)] ==
                    t.table[static_cast<size_t>(a)]
                           [static_cast<size_t>(t.table[static_cast<size_t>(b)][static_cast<size_t>(c)])],
                errc::not_a_group, "cayley table is not associative");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (t.table[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0 &&
          t.table[static_cast<size_t>(b)][static_cast<size_t>(a)] == 0)
        has_inverse = true;
    require(has_inverse, errc::not_a_group, "cayley table element lacks an inverse");
  }
}

namespace {

int group_inverse(const CayleyTable& t, int g) {
  for (int b = 0; b < t.order; ++b)
    if (t.table[static_cast<size_t>(g)][static_cast<size_t>(b)] == 0) return b;
  throw error(errc::not_a_group, "missing inverse");
}

}  // namespace

CayleyTable cyclic_group(int n) {
  CayleyTable t;
  t.order = n;
  t.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  for (int a = 0; a < n; ++a) t.labels.push_back(a == 0 ? "e" : "g^" + std::to_string(a));
  return t;
}

CayleyTable symmetric_group_s3() {
  // Permutations of {0,1,2} in one-line notation; identity first.
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  CayleyTable t;
  t.order = 6;
  t.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
      for (int c = 0; c < 6; ++c)
        if (comp[0] == perms[c][0] && comp[1] == perms[c][1] && comp[2] == perms[c][2])
          t.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = c;
    }
  t.labels = {"e", "r", "r2", "s01", "s12", "s02"};
  return t;
}

HopfAlgebra group_algebra(const CayleyTable& t) {
  validate_group(t);
  const int n = t.order;
  HopfAlgebra h;
  h.dim = n;
  h.mul = Mat::Zero(n, static_cast<Eigen::Index>(n) * n);
  h.comul = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
  h.unit = Vec::Zero(n);
  h.counit = Vec::Zero(n);
  h.antipode = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      h.mul(t.table[static_cast<size_t>(a)][static_cast<size_t>(b)], a * n + b) = 1.0;
    h.comul(a * n + a, a) = 1.0;
    h.counit(a) = 1.0;
    h.antipode(group_inverse(t, a), a) = 1.0;
  }
  h.unit(0) = 1.0;
  h.basis_labels = t.labels.empty() ? std::vector<std::string>() : t.labels;
  if (h.basis_labels.empty())
    for (int a = 0; a < n; ++a) h.basis_labels.push_back("g" + std::to_string(a));
  return h;
}

HopfAlgebra function_algebra(const CayleyTable& t) {
  validate_group(t);
  const int n = t.order;
  HopfAlgebra h;
  h.dim = n;
  h.mul = Mat::Zero(n, static_cast<Eigen::Index>(n) * n);
  h.comul = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
  h.unit = Vec::Ones(n);
  h.counit = Vec::Zero(n);
  h.antipode = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    h.mul(a, a * n + a) = 1.0;  // pointwise product of delta functions
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (t.table[static_cast<size_t>(x)][static_cast<size_t>(y)] == a) h.comul(x * n + y, a) = 1.0;
    h.antipode(group_inverse(t, a), a) = 1.0;
  }
  h.counit(0) = 1.0;
  for (int a = 0; a < n; ++a)
    h.basis_labels.push_back("d_" + (a < static_cast<int>(t.labels.size()) ? t.labels[static_cast<size_t>(a)]
                                                                           : std::to_string(a)));
  return h;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const int n = h.dim;
  HopfAlgebra d;
  d.dim = n;
  d.mul = Mat::Zero(n, static_cast<Eigen::Index>(n) * n);
  d.comul = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
  d.unit = h.counit;
  d.counit = h.unit;
  d.antipode = h.antipode.transpose();
  // <e^a e^b, x> = <e^a (x) e^b, Delta(x)>  (R-bar = (R^op)^* coincides with R^* as an algebra)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) d.mul(k, a * n + b) = h.comul(a * n + b, k);
  // Delta_Rbar(e^c) = sum <e^c, e_b e_a> e^a (x) e^b  (opposite of the R^* coproduct)
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d.comul(a * n + b, c) = h.mul(c, b * n + a);
  for (int a = 0; a < n; ++a)
    d.basis_labels.push_back(
        "^" + (a < static_cast<int>(h.basis_labels.size()) ? h.basis_labels[static_cast<size_t>(a)]
                                                           : std::to_string(a)));
  d.name = h.name.empty() ? "" : "dual(" + h.name + ")";
  return d;
}

HaarIntegral haar_integral(const HopfAlgebra& h, double tol) {
  const int n = h.dim;
  {
    const double s2 = max_abs(Mat(h.antipode * h.antipode - Mat::Identity(n, n)));
    require(s2 < 1e-9, errc::not_semisimple, "S^2 != id: input is not semisimple");
  }
  // Stack {x_k h - eps(x_k) h = 0, h x_k - eps(x_k) h = 0} over the basis.
  Mat sys(2 * n * n, n);
  for (int k = 0; k < n; ++k) {
    Mat lk = h.left_mult(h.basis_vector(k));
    Mat rk = h.right_mult(h.basis_vector(k));
    sys.block(2 * k * n, 0, n, n) = lk - h.counit(k) * Mat::Identity(n, n);
    sys.block((2 * k + 1) * n, 0, n, n) = rk - h.counit(k) * Mat::Identity(n, n);
  }
  Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeThinV);
  const auto& sing = svd.singularValues();
  int nullity = 0;
  const double scale = sing.size() ? sing(0) : 1.0;
  for (Eigen::Index i = 0; i < sing.size(); ++i)
    if (sing(i) < tol * std::max(1.0, scale)) ++nullity;
  require(nullity == 1, errc::no_solution,
          "Haar system nullity " + std::to_string(nullity) + " != 1 (non-semisimple input?)");
  Vec v = svd.matrixV().col(n - 1);
  const cplx e = h.eps(v);
  require(std::abs(e) > 1e-12, errc::normalization_failure, "eps(h) = 0, cannot normalize Haar");
  return HaarIntegral{Vec(v / e)};
}

RegularActions regular_actions(const HopfAlgebra& h) {
  RegularActions out;
  for (int i = 0; i < h.dim; ++i) {
    Vec b = h.basis_vector(i);
    out.left.push_back(h.left_mult(b));
    out.right.push_back(h.right_mult_s(b));
    out.dual_left.push_back(h.dual_left_action(b));
    out.dual_right.push_back(h.dual_right_action(b));
  }
  return out;
}

}  // namespace hopflattice

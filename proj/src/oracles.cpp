#include "hopflattice/oracles.hpp"

#include <cmath>
#include <set>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace hopflattice {

namespace {

constexpr std::uint64_t kBruteCap = 4096;

int group_inverse(const CayleyTable& t, int g) {
  for (int h = 0; h < t.order; ++h)
    if (t.table[static_cast<size_t>(g)][static_cast<size_t>(h)] == 0) return h;
  throw error(errc::not_a_group, "element has no inverse");
}

}  // namespace

std::uint64_t commuting_pairs_mod_conj(const CayleyTable& t) {
  validate_group(t);
  const int n = t.order;
  auto mul = [&](int a, int b) { return t.table[static_cast<size_t>(a)][static_cast<size_t>(b)]; };
  std::vector<int> inv(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g) inv[static_cast<size_t>(g)] = group_inverse(t, g);

  std::set<std::pair<int, int>> remaining;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == mul(b, a)) remaining.insert({a, b});

  std::uint64_t orbits = 0;
  while (!remaining.empty()) {
    ++orbits;
    std::vector<std::pair<int, int>> stack{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      for (int g = 0; g < n; ++g) {
        std::pair<int, int> im{mul(mul(g, a), inv[static_cast<size_t>(g)]),
                               mul(mul(g, b), inv[static_cast<size_t>(g)])};
        auto it = remaining.find(im);
        if (it != remaining.end()) {
          remaining.erase(it);
          stack.push_back(im);
        }
      }
    }
  }
  return orbits;
}

namespace {

// One column of a product of single-factor matrices weighted by a sparse
// coefficient tensor, computed by direct digit manipulation.
struct BruteLeg {
  int edge;
  const Mat* mat_for_index;  // base of a family indexed by the tensor slot
};

Vec apply_brute(const std::vector<std::pair<std::vector<int>, cplx>>& coeffs,
                const std::vector<int>& leg_edges, const std::vector<const std::vector<Mat>*>& fams,
                int n, int num_edges, std::uint64_t basis_state) {
  const auto total = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), num_edges) + 0.5);
  Vec out = Vec::Zero(static_cast<Eigen::Index>(total));
  std::vector<std::uint64_t> strides(static_cast<size_t>(num_edges));
  std::uint64_t s = 1;
  for (int e = num_edges - 1; e >= 0; --e) {
    strides[static_cast<size_t>(e)] = s;
    s *= static_cast<std::uint64_t>(n);
  }
  for (const auto& [idx, c] : coeffs) {
    // Current sparse column after the legs applied so far.
    std::vector<std::pair<std::uint64_t, cplx>> cur{{basis_state, c}};
    for (size_t l = 0; l < idx.size(); ++l) {
      const Mat& m = (*fams[l])[static_cast<size_t>(idx[l])];
      const std::uint64_t stride = strides[static_cast<size_t>(leg_edges[l])];
      std::vector<std::pair<std::uint64_t, cplx>> next;
      for (const auto& [state, amp] : cur) {
        const int digit = static_cast<int>((state / stride) % static_cast<std::uint64_t>(n));
        const std::uint64_t base = state - static_cast<std::uint64_t>(digit) * stride;
        for (int row = 0; row < n; ++row) {
          const cplx mv = m(row, digit);
          if (mv != cplx(0.0)) next.push_back({base + static_cast<std::uint64_t>(row) * stride, amp * mv});
        }
      }
      cur = std::move(next);
    }
    for (const auto& [state, amp] : cur) out(static_cast<Eigen::Index>(state)) += amp;
  }
  return out;
}

}  // namespace

std::uint64_t brute_ground_dim(const HopfAlgebra& h, const CellDecomposition& c) {
  const int n = h.dim;
  const int E = c.num_edges();
  std::uint64_t total = 1;
  for (int e = 0; e < E; ++e) {
    require(total <= kBruteCap / static_cast<std::uint64_t>(n), errc::too_large,
            "state space too large for the brute-force oracle");
    total *= static_cast<std::uint64_t>(n);
  }

  const HopfAlgebra rbar = dual_hopf(h);
  const Vec haar = haar_integral(h).element;
  const Vec haar_bar = haar_integral(rbar).element;

  std::vector<Mat> lmul, rmul, dlft, drgt;
  for (int k = 0; k < n; ++k) {
    lmul.push_back(h.left_mult(h.basis_vector(k)));
    rmul.push_back(h.right_mult_s(h.basis_vector(k)));
    dlft.push_back(h.dual_left_action(rbar.basis_vector(k)));
    drgt.push_back(h.dual_right_action(rbar.basis_vector(k)));
  }

  struct OpSpec {
    std::vector<std::pair<std::vector<int>, cplx>> coeffs;
    std::vector<int> leg_edges;
    std::vector<const std::vector<Mat>*> fams;
  };
  std::vector<OpSpec> ops;
  for (const auto& orbit : c.vertices) {
    OpSpec spec;
    spec.coeffs = h.iterated_coproduct_sparse(haar, static_cast<int>(orbit.size())).entries;
    int d = orbit[0];
    for (size_t i = 0; i < orbit.size(); ++i) {
      d = c.vertex_rot[static_cast<size_t>(d)];
      spec.leg_edges.push_back(c.edge_of(d));
      spec.fams.push_back(c.is_positive(d) ? &lmul : &rmul);
    }
    ops.push_back(std::move(spec));
  }
  for (const auto& orbit : c.faces) {
    OpSpec spec;
    spec.coeffs = h.iterated_dual_coproduct_sparse(haar_bar, static_cast<int>(orbit.size())).entries;
    int d = orbit[0];
    for (size_t i = 0; i < orbit.size(); ++i) {
      spec.leg_edges.push_back(c.edge_of(d));
      spec.fams.push_back(c.is_positive(d) ? &drgt : &dlft);
      d = c.face_perm[static_cast<size_t>(d)];
    }
    ops.push_back(std::move(spec));
  }

  const auto dim = static_cast<Eigen::Index>(total);
  Mat ham = Mat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (const OpSpec& spec : ops) {
      ham(col, col) += cplx(1.0);
      ham.col(col) -= apply_brute(spec.coeffs, spec.leg_edges, spec.fams, n, E,
                                  static_cast<std::uint64_t>(col));
    }
  }

  if ((ham - ham.adjoint()).cwiseAbs().maxCoeff() < 1e-10) {
    Eigen::SelfAdjointEigenSolver<Mat> es(ham);
    std::uint64_t kernel = 0;
    for (Eigen::Index i = 0; i < dim; ++i)
      if (std::abs(es.eigenvalues()(i)) < 1e-8) ++kernel;
    return kernel;
  }
  Eigen::ColPivHouseholderQR<Mat> qr(ham);
  qr.setThreshold(1e-8);
  return total - static_cast<std::uint64_t>(qr.rank());
}

Vec haar_formula_oracle(const std::string& flavor, const CayleyTable& t) {
  validate_group(t);
  const int n = t.order;
  if (flavor == "group") {
    return Vec::Constant(n, cplx(1.0 / n));
  }
  if (flavor == "function") {
    Vec out = Vec::Zero(n);
    out(0) = cplx(1.0);  // delta at the identity
    return out;
  }
  if (flavor == "dual-of-group") {
    // Normalized trace of the left regular representation, per dual basis
    // element <. , e_g>.
    HopfAlgebra cg = group_algebra(t);
    Vec out = Vec::Zero(n);
    for (int g = 0; g < n; ++g)
      out(g) = cg.left_mult(cg.basis_vector(g)).trace() / cplx(static_cast<double>(n));
    return out;
  }
  throw error(errc::unsupported_flavor, "no closed-form Haar for flavor: " + flavor);
}

}  // namespace hopflattice

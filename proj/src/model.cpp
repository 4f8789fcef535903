#include "hopflattice/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/QR>

#include "hopflattice/double.hpp"

namespace hopflattice {

namespace {

constexpr std::uint64_t kDenseRankCap = 2048;
constexpr std::uint64_t kExhaustivePairingCap = 4096;

double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

Vec random_probe(std::uint64_t size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Vec w(static_cast<Eigen::Index>(size));
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = cplx(unif(rng), unif(rng));
  return w;
}

}  // namespace

TensorSpace make_space(std::vector<int> dims) {
  TensorSpace sp;
  sp.total = 1;
  for (int d : dims) {
    require(d >= 1, errc::invalid_argument, "factor dimension must be positive");
    require(sp.total <= (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(d), errc::too_large,
            "state space exceeds the 64-bit index range");
    sp.total *= static_cast<std::uint64_t>(d);
  }
  sp.strides = strides_of(dims);
  sp.dims = std::move(dims);
  return sp;
}

LatticeModel make_model(const HopfAlgebra& h, const CellDecomposition& c) {
  LatticeModel m;
  m.algebra = h;
  m.rbar = dual_hopf(h);
  m.cells = c;
  m.space = make_space(std::vector<int>(static_cast<size_t>(c.num_edges()), h.dim));
  m.acts = regular_actions(h);
  return m;
}

StateMap apply_local(const TensorSpace& sp, const LocalOperator& op, const StateMap& in) {
  StateMap out;
  for (const auto& [idx, c] : op.coeffs.entries) {
    StateMap tmp = in;
    for (size_t l = 0; l < op.legs.size(); ++l) {
      const auto& leg = op.legs[l];
      tmp = apply_factor(tmp, (*leg.family)[static_cast<size_t>(idx[l])],
                         sp.strides[static_cast<size_t>(leg.factor)],
                         sp.dims[static_cast<size_t>(leg.factor)]);
      if (tmp.empty()) break;
    }
    for (const auto& [key, amp] : tmp) out[key] += c * amp;
  }
  return out;
}

Vec apply_local_dense(const TensorSpace& sp, const LocalOperator& op, const Vec& in) {
  Vec out = Vec::Zero(in.size());
  for (const auto& [idx, c] : op.coeffs.entries) {
    Vec tmp = in;
    for (size_t l = 0; l < op.legs.size(); ++l) {
      const auto& leg = op.legs[l];
      apply_factor_dense(tmp, (*leg.family)[static_cast<size_t>(idx[l])],
                         sp.strides[static_cast<size_t>(leg.factor)],
                         sp.dims[static_cast<size_t>(leg.factor)]);
    }
    out += c * tmp;
  }
  return out;
}

Mat to_matrix(const TensorSpace& sp, const LocalOperator& op) {
  require(sp.total <= 1 << 14, errc::too_large, "state space too large to materialize");
  const auto n = static_cast<Eigen::Index>(sp.total);
  Mat out = Mat::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    StateMap in{{static_cast<std::uint64_t>(col), cplx(1.0)}};
    StateMap res = apply_local(sp, op, in);
    for (const auto& [key, amp] : res) out(static_cast<Eigen::Index>(key), col) += amp;
  }
  return out;
}

std::vector<std::pair<int, bool>> vertex_leg_edges(const CellDecomposition& c, const Site& s) {
  validate_site(c, s);
  const int deg = static_cast<int>(c.vertices[static_cast<size_t>(s.vertex)].size());
  std::vector<std::pair<int, bool>> out;
  int d = s.anchor_dart;
  for (int i = 0; i < deg; ++i) {
    d = c.vertex_rot[static_cast<size_t>(d)];
    out.push_back({c.edge_of(d), c.is_positive(d)});
  }
  return out;
}

std::vector<std::pair<int, bool>> face_leg_edges(const CellDecomposition& c, const Site& s) {
  validate_site(c, s);
  const int deg = static_cast<int>(c.faces[static_cast<size_t>(s.face)].size());
  std::vector<std::pair<int, bool>> out;
  int d = s.anchor_dart;
  for (int i = 0; i < deg; ++i) {
    out.push_back({c.edge_of(d), !c.is_positive(d)});
    d = c.face_perm[static_cast<size_t>(d)];
  }
  return out;
}

LocalOperator vertex_operator(const LatticeModel& m, const Site& s, const Vec& a,
                              int factor_offset) {
  auto edges = vertex_leg_edges(m.cells, s);
  LocalOperator op;
  op.coeffs = m.algebra.iterated_coproduct_sparse(a, static_cast<int>(edges.size()));
  for (const auto& [edge, outgoing] : edges)
    op.legs.push_back({edge + factor_offset, outgoing ? &m.acts.left : &m.acts.right});
  return op;
}

LocalOperator plaquette_operator(const LatticeModel& m, const Site& s, const Vec& alpha,
                                 int factor_offset) {
  auto edges = face_leg_edges(m.cells, s);
  LocalOperator op;
  op.coeffs = m.algebra.iterated_dual_coproduct_sparse(alpha, static_cast<int>(edges.size()));
  for (const auto& [edge, clockwise] : edges)
    op.legs.push_back({edge + factor_offset, clockwise ? &m.acts.dual_left : &m.acts.dual_right});
  return op;
}

HaarProjectors haar_projectors(const LatticeModel& m) {
  HaarProjectors out;
  const Vec h = haar_integral(m.algebra).element;
  const Vec hbar = haar_integral(m.rbar).element;
  for (const auto& orbit : m.cells.vertices)
    out.a.push_back(vertex_operator(m, make_site(m.cells, orbit[0]), h));
  for (const auto& orbit : m.cells.faces)
    out.b.push_back(plaquette_operator(m, make_site(m.cells, orbit[0]), hbar));
  return out;
}

double anchor_independence_residual(const LatticeModel& m, std::uint64_t seed, int probes) {
  const Vec h = haar_integral(m.algebra).element;
  const Vec hbar = haar_integral(m.rbar).element;
  std::mt19937_64 rng(seed);
  double res = 0.0;
  for (int t = 0; t < probes; ++t) {
    Vec w = random_probe(m.space.total, rng);
    for (const auto& orbit : m.cells.vertices) {
      if (orbit.size() < 2) continue;
      Vec ref = apply_local_dense(m.space, vertex_operator(m, make_site(m.cells, orbit[0]), h), w);
      for (size_t k = 1; k < orbit.size(); ++k) {
        Vec alt = apply_local_dense(m.space, vertex_operator(m, make_site(m.cells, orbit[k]), h), w);
        res = std::max(res, max_abs(Vec(ref - alt)));
      }
    }
    for (const auto& orbit : m.cells.faces) {
      if (orbit.size() < 2) continue;
      Vec ref =
          apply_local_dense(m.space, plaquette_operator(m, make_site(m.cells, orbit[0]), hbar), w);
      for (size_t k = 1; k < orbit.size(); ++k) {
        Vec alt =
            apply_local_dense(m.space, plaquette_operator(m, make_site(m.cells, orbit[k]), hbar), w);
        res = std::max(res, max_abs(Vec(ref - alt)));
      }
    }
  }
  return res;
}

double site_double_action(const LatticeModel& m, const Site& s, std::uint64_t seed, int probes) {
  const int n = m.algebra.dim;
  const int N = n * n;
  DoubleAlgebra d = drinfeld_double(m.algebra);

  std::vector<LocalOperator> p_ops, q_ops;
  for (int a = 0; a < n; ++a)
    p_ops.push_back(vertex_operator(m, s, m.algebra.basis_vector(a)));
  for (int b = 0; b < n; ++b)
    q_ops.push_back(plaquette_operator(m, s, m.rbar.basis_vector(b)));

  std::mt19937_64 rng(seed);
  double res = 0.0;
  for (int t = 0; t < probes; ++t) {
    Vec w = random_probe(m.space.total, rng);
    // rho_{(a,b)} = p_a q_b applied to w, for every basis element of D(R).
    std::vector<Vec> rho_w(static_cast<size_t>(N));
    for (int b = 0; b < n; ++b) {
      Vec qw = apply_local_dense(m.space, q_ops[static_cast<size_t>(b)], w);
      for (int a = 0; a < n; ++a)
        rho_w[static_cast<size_t>(a * n + b)] =
            apply_local_dense(m.space, p_ops[static_cast<size_t>(a)], qw);
    }
    for (int j = 0; j < N; ++j) {
      // q_b(rho_j w) reused across all a for the right-hand side.
      std::vector<Vec> q_rho(static_cast<size_t>(n));
      for (int b = 0; b < n; ++b)
        q_rho[static_cast<size_t>(b)] = apply_local_dense(m.space, q_ops[static_cast<size_t>(b)], rho_w[static_cast<size_t>(j)]);
      for (int i = 0; i < N; ++i) {
        Vec rhs = apply_local_dense(m.space, p_ops[static_cast<size_t>(i / n)],
                                    q_rho[static_cast<size_t>(i % n)]);
        Vec lhs = Vec::Zero(rhs.size());
        for (int k = 0; k < N; ++k) {
          const cplx c = d.hopf.mul(k, static_cast<Eigen::Index>(i) * N + j);
          if (c != cplx(0.0)) lhs += c * rho_w[static_cast<size_t>(k)];
        }
        res = std::max(res, max_abs(Vec(lhs - rhs)));
      }
    }
  }
  return res;
}

double duality_check(const LatticeModel& m, const Site& s, std::uint64_t seed) {
  LatticeModel md = make_model(m.rbar, dual_decomposition(m.cells));
  // The dual site sits at (face, vertex); its anchor is the reverse of the
  // next dart counterclockwise around the vertex, which lies in the face's
  // boundary orbit and in the dual face that corresponds to the vertex.
  const int dual_anchor = m.cells.edge_pair[static_cast<size_t>(
      m.cells.vertex_rot[static_cast<size_t>(s.anchor_dart)])];
  Site ds = make_site(md.cells, dual_anchor);
  const int n = m.algebra.dim;
  double res = 0.0;

  auto compare = [&](const LocalOperator& lhs_op, const LocalOperator& rhs_op) {
    // <e_y, L e_x> = <R e_y, e_x> over the coordinate pairing.
    if (m.space.total <= kExhaustivePairingCap) {
      Mat l = to_matrix(m.space, lhs_op);
      Mat r = to_matrix(md.space, rhs_op);
      res = std::max(res, (l - r.transpose()).cwiseAbs().maxCoeff());
      return;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, m.space.total - 1);
    for (int t = 0; t < 64; ++t) {
      const std::uint64_t x = pick(rng);
      StateMap lx = apply_local(m.space, lhs_op, StateMap{{x, cplx(1.0)}});
      StateMap checked = lx;
      for (int extra = 0; extra < 4; ++extra) checked[pick(rng)] += cplx(0.0);
      for (const auto& [y, amp] : checked) {
        StateMap ry = apply_local(md.space, rhs_op, StateMap{{y, cplx(1.0)}});
        auto it = ry.find(x);
        const cplx rv = it == ry.end() ? cplx(0.0) : it->second;
        auto lt = lx.find(y);
        const cplx lv = lt == lx.end() ? cplx(0.0) : lt->second;
        res = std::max(res, std::abs(lv - rv));
      }
    }
  };

  for (int b = 0; b < n; ++b) {
    Vec alpha = m.rbar.basis_vector(b);
    compare(plaquette_operator(m, s, alpha), vertex_operator(md, ds, m.rbar.s(alpha)));
  }
  for (int a = 0; a < n; ++a)
    compare(vertex_operator(m, s, m.algebra.basis_vector(a)),
            plaquette_operator(md, ds, m.algebra.basis_vector(a)));
  return res;
}

double orientation_reversal_consistency(const LatticeModel& m, int edge, std::uint64_t seed,
                                        int probes) {
  require(edge >= 0 && edge < m.cells.num_edges(), errc::invalid_argument, "edge out of range");
  CellDecomposition flipped = m.cells;
  flipped.positive_dart[static_cast<size_t>(edge)] ^= 1;
  LatticeModel m2 = make_model(m.algebra, flipped);

  const std::uint64_t stride = m.space.strides[static_cast<size_t>(edge)];
  const int dim = m.algebra.dim;
  auto conj = [&](Vec v) {
    apply_factor_dense(v, m.algebra.antipode, stride, dim);
    return v;
  };

  HaarProjectors hp1 = haar_projectors(m);
  HaarProjectors hp2 = haar_projectors(m2);
  std::mt19937_64 rng(seed);
  double res = 0.0;
  for (int t = 0; t < probes; ++t) {
    Vec w = random_probe(m.space.total, rng);
    for (size_t i = 0; i < hp1.a.size(); ++i) {
      Vec a1 = apply_local_dense(m.space, hp1.a[i], w);
      Vec a2 = conj(apply_local_dense(m2.space, hp2.a[i], conj(w)));
      res = std::max(res, max_abs(Vec(a1 - a2)));
    }
    for (size_t i = 0; i < hp1.b.size(); ++i) {
      Vec b1 = apply_local_dense(m.space, hp1.b[i], w);
      Vec b2 = conj(apply_local_dense(m2.space, hp2.b[i], conj(w)));
      res = std::max(res, max_abs(Vec(b1 - b2)));
    }
  }
  return res;
}

std::uint64_t projector_product_trace(const TensorSpace& sp,
                                      const std::vector<const LocalOperator*>& ops) {
  double trace_re = 0.0, trace_im = 0.0;
  for (std::uint64_t state = 0; state < sp.total; ++state) {
    StateMap v{{state, cplx(1.0)}};
    bool dead = false;
    for (const LocalOperator* op : ops) {
      v = apply_local(sp, *op, v);
      prune(v);
      if (v.empty()) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    auto it = v.find(state);
    if (it != v.end()) {
      trace_re += it->second.real();
      trace_im += it->second.imag();
    }
  }
  const double rounded = std::round(trace_re);
  require(std::abs(trace_re - rounded) < 1e-6 && std::abs(trace_im) < 1e-6 && rounded >= 0.0,
          errc::non_integer_trace,
          "projector trace " + std::to_string(trace_re) + " is not a non-negative integer");
  return static_cast<std::uint64_t>(rounded);
}

namespace {

std::uint64_t fixed_space_dim(const LatticeModel& m, const std::vector<const LocalOperator*>& ops) {
  std::uint64_t dim = projector_product_trace(m.space, ops);
  if (m.space.total <= kDenseRankCap) {
    Mat p = Mat::Identity(static_cast<Eigen::Index>(m.space.total),
                          static_cast<Eigen::Index>(m.space.total));
    for (const LocalOperator* op : ops) p = to_matrix(m.space, *op) * p;
    Eigen::ColPivHouseholderQR<Mat> qr(p);
    qr.setThreshold(1e-8);
    require(static_cast<std::uint64_t>(qr.rank()) == dim, errc::non_integer_trace,
            "trace and dense rank disagree on the fixed-space dimension");
  }
  return dim;
}

}  // namespace

std::uint64_t ground_space_dim(const LatticeModel& m) {
  HaarProjectors hp = haar_projectors(m);
  std::vector<const LocalOperator*> ops;
  for (const auto& b : hp.b) ops.push_back(&b);
  for (const auto& a : hp.a) ops.push_back(&a);
  return fixed_space_dim(m, ops);
}

std::uint64_t excitation_space_dim(const LatticeModel& m, const std::vector<Site>& sites) {
  require(disjoint_sites(m.cells, sites), errc::sites_not_disjoint, "sites are not disjoint");
  HaarProjectors hp = haar_projectors(m);
  std::vector<const LocalOperator*> ops;
  for (size_t p = 0; p < hp.b.size(); ++p) {
    bool skip = false;
    for (const Site& s : sites) skip = skip || s.face == static_cast<int>(p);
    if (!skip) ops.push_back(&hp.b[p]);
  }
  for (size_t v = 0; v < hp.a.size(); ++v) {
    bool skip = false;
    for (const Site& s : sites) skip = skip || s.vertex == static_cast<int>(v);
    if (!skip) ops.push_back(&hp.a[v]);
  }
  return fixed_space_dim(m, ops);
}

}  // namespace hopflattice

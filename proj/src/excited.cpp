#include "hopflattice/excited.hpp"

#include <algorithm>
#include <cmath>

namespace hopflattice {

namespace {

Mat embedded_action(const ModuleRep& y, const Mat& factor, int col) {
  Mat out = Mat::Zero(y.dim, y.dim);
  for (Eigen::Index k = 0; k < factor.rows(); ++k) {
    const cplx c = factor(k, col);
    if (c != cplx(0.0)) out += c * y.rho[static_cast<size_t>(k)];
  }
  return out;
}

}  // namespace

LabeledModel make_labeled_model(const HopfAlgebra& h, const CellDecomposition& c,
                                const std::vector<Site>& sites,
                                const std::vector<ModuleRep>& labels, double morphism_tol) {
  require(sites.size() == labels.size(), errc::invalid_argument,
          "one label per site is required");
  require(disjoint_sites(c, sites), errc::sites_not_disjoint, "sites are not disjoint");

  LabeledModel lm;
  lm.base = make_model(h, c);
  lm.dbl = drinfeld_double(h);
  lm.sites = sites;
  lm.labels = labels;
  lm.factor_offset = static_cast<int>(sites.size());

  const int N = lm.dbl.hopf.dim;
  std::vector<int> dims;
  for (const ModuleRep& y : labels) {
    require(static_cast<int>(y.rho.size()) == N && y.dim > 0, errc::dimension_mismatch,
            "label is not a family of matrices over the double's basis");
    const double res = algebra_morphism_residual(lm.dbl.hopf, y.rho);
    require(res < morphism_tol, errc::not_a_morphism,
            "label morphism residual " + std::to_string(res));
    dims.push_back(y.dim);
  }
  for (int e = 0; e < c.num_edges(); ++e) dims.push_back(h.dim);
  lm.space = make_space(std::move(dims));

  for (const ModuleRep& y : labels) {
    std::vector<Mat> fr, fbar;
    for (int a = 0; a < h.dim; ++a) fr.push_back(embedded_action(y, lm.dbl.factor_r, a));
    for (int b = 0; b < h.dim; ++b) fbar.push_back(embedded_action(y, lm.dbl.factor_rbar, b));
    lm.label_r.push_back(std::move(fr));
    lm.label_rbar.push_back(std::move(fbar));
  }

  lm.site_of_vertex.assign(static_cast<size_t>(c.num_vertices()), -1);
  lm.site_of_face.assign(static_cast<size_t>(c.num_faces()), -1);
  for (size_t i = 0; i < sites.size(); ++i) {
    lm.site_of_vertex[static_cast<size_t>(sites[i].vertex)] = static_cast<int>(i);
    lm.site_of_face[static_cast<size_t>(sites[i].face)] = static_cast<int>(i);
  }
  return lm;
}

LocalOperator tilde_vertex_operator(const LabeledModel& lm, int vertex, const Vec& a) {
  const CellDecomposition& c = lm.base.cells;
  const int site = lm.site_of_vertex[static_cast<size_t>(vertex)];
  if (site < 0) {
    Site s = make_site(c, c.vertices[static_cast<size_t>(vertex)][0]);
    return vertex_operator(lm.base, s, a, lm.factor_offset);
  }
  const Site& s = lm.sites[static_cast<size_t>(site)];
  auto edges = vertex_leg_edges(c, s);
  LocalOperator op;
  op.coeffs = lm.base.algebra.iterated_coproduct_sparse(a, static_cast<int>(edges.size()) + 1);
  op.legs.push_back({site, &lm.label_r[static_cast<size_t>(site)]});
  for (const auto& [edge, outgoing] : edges)
    op.legs.push_back(
        {edge + lm.factor_offset, outgoing ? &lm.base.acts.left : &lm.base.acts.right});
  return op;
}

LocalOperator tilde_plaquette_operator(const LabeledModel& lm, int face, const Vec& alpha) {
  const CellDecomposition& c = lm.base.cells;
  const int site = lm.site_of_face[static_cast<size_t>(face)];
  if (site < 0) {
    Site s = make_site(c, c.faces[static_cast<size_t>(face)][0]);
    return plaquette_operator(lm.base, s, alpha, lm.factor_offset);
  }
  const Site& s = lm.sites[static_cast<size_t>(site)];
  auto edges = face_leg_edges(c, s);
  LocalOperator op;
  op.coeffs =
      lm.base.algebra.iterated_dual_coproduct_sparse(alpha, static_cast<int>(edges.size()) + 1);
  for (const auto& [edge, clockwise] : edges)
    op.legs.push_back({edge + lm.factor_offset,
                       clockwise ? &lm.base.acts.dual_left : &lm.base.acts.dual_right});
  op.legs.push_back({site, &lm.label_rbar[static_cast<size_t>(site)]});
  return op;
}

HaarProjectors tilde_haar_projectors(const LabeledModel& lm) {
  HaarProjectors out;
  const Vec h = haar_integral(lm.base.algebra).element;
  const Vec hbar = haar_integral(lm.base.rbar).element;
  for (int v = 0; v < lm.base.cells.num_vertices(); ++v)
    out.a.push_back(tilde_vertex_operator(lm, v, h));
  for (int p = 0; p < lm.base.cells.num_faces(); ++p)
    out.b.push_back(tilde_plaquette_operator(lm, p, hbar));
  return out;
}

std::uint64_t protected_dim_route_a(const LabeledModel& lm) {
  HaarProjectors hp = tilde_haar_projectors(lm);
  std::vector<const LocalOperator*> ops;
  for (const auto& b : hp.b) ops.push_back(&b);
  for (const auto& a : hp.a) ops.push_back(&a);
  return projector_product_trace(lm.space, ops);
}

std::vector<int> dual_block_table(const DoubleAlgebra& d, const WedderburnData& wd,
                                  const std::vector<ModuleRep>& modules) {
  const int N = d.hopf.dim;
  const int blocks = static_cast<int>(modules.size());
  require(blocks == static_cast<int>(wd.idempotents.size()), errc::dimension_mismatch,
          "need one module per block");

  Mat chars = Mat::Zero(blocks, N);
  for (int k = 0; k < blocks; ++k)
    for (int p = 0; p < N; ++p) chars(k, p) = modules[static_cast<size_t>(k)].rho[static_cast<size_t>(p)].trace();

  const Vec hd = haar_integral(d.hopf).element;
  const Vec dh = d.hopf.comultiply(hd);
  Mat cm = Mat::Zero(N, N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) cm(p, q) = dh(static_cast<Eigen::Index>(p) * N + q);

  // inv(k, j) = dim of the invariant subspace of Y_k (x) Y_j.
  Mat inv = chars * cm * chars.transpose();
  std::vector<int> dual(static_cast<size_t>(blocks), -1);
  for (int k = 0; k < blocks; ++k) {
    for (int j = 0; j < blocks; ++j) {
      const double v = std::abs(inv(k, j));
      if (v > 0.5) {
        require(std::abs(inv(k, j) - cplx(1.0)) < 1e-6 && dual[static_cast<size_t>(k)] == -1,
                errc::mismatch, "dual block identification is ambiguous");
        dual[static_cast<size_t>(k)] = j;
      } else {
        require(v < 1e-6, errc::mismatch, "non-integer invariant dimension");
      }
    }
    require(dual[static_cast<size_t>(k)] != -1, errc::mismatch, "block has no dual partner");
  }
  for (int k = 0; k < blocks; ++k) {
    require(dual[static_cast<size_t>(dual[static_cast<size_t>(k)])] == k, errc::mismatch,
            "dual pairing is not an involution");
    require(wd.block_dims[static_cast<size_t>(k)] ==
                wd.block_dims[static_cast<size_t>(dual[static_cast<size_t>(k)])],
            errc::mismatch, "dual blocks have different dimensions");
  }
  return dual;
}

DoubleBlocks double_blocks(const HopfAlgebra& h, std::uint64_t seed) {
  DoubleBlocks db;
  db.dbl = drinfeld_double(h);
  db.wd = wedderburn(db.dbl.hopf, seed);
  for (size_t k = 0; k < db.wd.idempotents.size(); ++k)
    db.modules.push_back(extract_block_module(db.dbl.hopf, db.wd, static_cast<int>(k), seed));
  db.dual = dual_block_table(db.dbl, db.wd, db.modules);
  return db;
}

namespace {

// sum_{a,b} e(a*n+b) A_s^{x_a} B_s^{e^b}: the site image of a central
// idempotent of D(R), applied term by term grouped on the plaquette part.
struct SiteIdempotent {
  struct Group {
    LocalOperator q;
    std::vector<std::pair<cplx, LocalOperator>> ps;
  };
  std::vector<Group> groups;

  StateMap apply(const TensorSpace& sp, const StateMap& in) const {
    StateMap out;
    for (const Group& g : groups) {
      StateMap qv = apply_local(sp, g.q, in);
      if (qv.empty()) continue;
      for (const auto& [coeff, p] : g.ps) {
        StateMap pv = apply_local(sp, p, qv);
        for (const auto& [key, amp] : pv) out[key] += coeff * amp;
      }
    }
    return out;
  }
};

SiteIdempotent site_idempotent(const LatticeModel& m, const Site& s, const Vec& e) {
  const int n = m.algebra.dim;
  SiteIdempotent out;
  for (int b = 0; b < n; ++b) {
    SiteIdempotent::Group g;
    for (int a = 0; a < n; ++a) {
      const cplx c = e(static_cast<Eigen::Index>(a) * n + b);
      if (std::abs(c) < 1e-14) continue;
      g.ps.push_back({c, vertex_operator(m, s, m.algebra.basis_vector(a))});
    }
    if (g.ps.empty()) continue;
    g.q = plaquette_operator(m, s, m.rbar.basis_vector(b));
    out.groups.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::uint64_t protected_dim_route_b(const LatticeModel& m, const DoubleBlocks& db,
                                    const std::vector<Site>& sites,
                                    const std::vector<int>& blocks) {
  require(sites.size() == blocks.size(), errc::invalid_argument, "one block per site");
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

  std::uint64_t dim_product = 1;
  std::vector<SiteIdempotent> projectors;
  for (size_t i = 0; i < sites.size(); ++i) {
    const int block = blocks[i];
    require(block >= 0 && block < static_cast<int>(db.wd.idempotents.size()),
            errc::invalid_argument, "block index out of range");
    const int dual = db.dual[static_cast<size_t>(block)];
    projectors.push_back(site_idempotent(m, sites[i], db.wd.idempotents[static_cast<size_t>(dual)]));
    dim_product *= static_cast<std::uint64_t>(db.wd.block_dims[static_cast<size_t>(block)]);
  }

  double trace_re = 0.0, trace_im = 0.0;
  for (std::uint64_t state = 0; state < m.space.total; ++state) {
    StateMap v{{state, cplx(1.0)}};
    bool dead = false;
    for (const LocalOperator* op : ops) {
      v = apply_local(m.space, *op, v);
      prune(v);
      if (v.empty()) {
        dead = true;
        break;
      }
    }
    if (!dead) {
      for (const SiteIdempotent& proj : projectors) {
        v = proj.apply(m.space, v);
        prune(v);
        if (v.empty()) {
          dead = true;
          break;
        }
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
          "isotypic trace " + std::to_string(trace_re) + " is not a non-negative integer");
  const auto rank = static_cast<std::uint64_t>(rounded);
  require(rank % dim_product == 0, errc::non_integer_multiplicity,
          "isotypic rank is not divisible by the label dimensions");
  return rank / dim_product;
}

ProtectedSpace protected_space(const DoubleBlocks& db, const LatticeModel& m,
                               const std::vector<Site>& sites, const std::vector<int>& blocks) {
  std::vector<ModuleRep> labels;
  for (int b : blocks) {
    require(b >= 0 && b < static_cast<int>(db.modules.size()), errc::invalid_argument,
            "block index out of range");
    labels.push_back(db.modules[static_cast<size_t>(b)]);
  }
  LabeledModel lm = make_labeled_model(m.algebra, m.cells, sites, labels);
  ProtectedSpace out;
  out.labels = blocks;
  out.route_a_dim = protected_dim_route_a(lm);
  out.route_b_dim = protected_dim_route_b(m, db, sites, blocks);
  require(out.route_a_dim == out.route_b_dim, errc::mismatch,
          "protected dimension routes disagree: " + std::to_string(out.route_a_dim) + " vs " +
              std::to_string(out.route_b_dim));
  out.dim = out.route_a_dim;
  return out;
}

ProtectedSpace protected_space(const HopfAlgebra& h, const CellDecomposition& c,
                               const std::vector<Site>& sites, const std::vector<int>& blocks,
                               std::uint64_t seed) {
  DoubleBlocks db = double_blocks(h, seed);
  LatticeModel m = make_model(h, c);
  return protected_space(db, m, sites, blocks);
}

Mat haar_smearing_map(const DoubleAlgebra& d, const ModuleRep& y) {
  const int n = d.n;
  const Vec hbar = haar_integral(d.rbar).element;
  const Vec c = d.rbar.comultiply(hbar);
  Mat out = Mat::Zero(y.dim, static_cast<Eigen::Index>(y.dim) * n);
  for (int r = 0; r < n; ++r) {
    Mat mr = Mat::Zero(y.dim, y.dim);
    for (int q = 0; q < n; ++q) {
      const cplx cq = c(static_cast<Eigen::Index>(r) * n + q);
      if (cq != cplx(0.0)) mr += cq * embedded_action(y, d.factor_rbar, q);
    }
    for (int yi = 0; yi < y.dim; ++yi)
      out.col(static_cast<Eigen::Index>(yi) * n + r) = mr.col(yi);
  }
  return out;
}

double haar_half_braiding_check(const LabeledModel& lm, int site_index) {
  require(site_index >= 0 && site_index < static_cast<int>(lm.sites.size()), errc::invalid_argument,
          "site index out of range");
  const HopfAlgebra& rbar = lm.base.rbar;
  const int n = lm.base.algebra.dim;
  const Vec hbar = haar_integral(rbar).element;
  const Vec c = rbar.comultiply(hbar);

  double res = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      res = std::max(res, std::abs(c(static_cast<Eigen::Index>(p) * n + q) -
                                   c(static_cast<Eigen::Index>(q) * n + p)));

  const Site& s = lm.sites[static_cast<size_t>(site_index)];
  Mat lhs = to_matrix(lm.space, tilde_plaquette_operator(lm, s.face, hbar));

  Mat rhs = Mat::Zero(lhs.rows(), lhs.cols());
  std::vector<Mat> label_mats, edge_mats;
  for (int k = 0; k < n; ++k) {
    LocalOperator lk;
    lk.legs.push_back({site_index, &lm.label_rbar[static_cast<size_t>(site_index)]});
    lk.coeffs.entries.push_back({{k}, cplx(1.0)});
    label_mats.push_back(to_matrix(lm.space, lk));
    edge_mats.push_back(
        to_matrix(lm.space, plaquette_operator(lm.base, s, rbar.basis_vector(k), lm.factor_offset)));
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const cplx cq = c(static_cast<Eigen::Index>(p) * n + q);
      if (cq != cplx(0.0))
        rhs += cq * label_mats[static_cast<size_t>(q)] * edge_mats[static_cast<size_t>(p)];
    }
  res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
  return res;
}

}  // namespace hopflattice

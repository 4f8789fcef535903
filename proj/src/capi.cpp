#include "hopflattice.h"

#include <chrono>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopflattice/double.hpp"
#include "hopflattice/excited.hpp"
#include "hopflattice/hopf.hpp"
#include "hopflattice/model.hpp"
#include "hopflattice/oracles.hpp"
#include "hopflattice/rep.hpp"
#include "hopflattice/specparse.hpp"

using nlohmann::json;
namespace hl = hopflattice;

struct hl_algebra {
  hl::HopfAlgebra h;
  std::string spec;
};

struct hl_surface {
  hl::CellDecomposition c;
  std::string spec;
};

namespace {

thread_local std::string g_last_error = "";

char* dup_json(const json& j, char** out) {
  const std::string s = j.dump(2);
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  *out = p;
  return p;
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return HL_OK;
  } catch (const hl::error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HL_PANIC;
  }
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

json axiom_json(const hl::AxiomReport& r) {
  return json{{"associativity", r.associativity},
              {"coassociativity", r.coassociativity},
              {"unit", r.unit_axiom},
              {"counit", r.counit_axiom},
              {"antipode", r.antipode_axiom},
              {"comul_morphism", r.comul_morphism},
              {"counit_morphism", r.counit_morphism},
              {"antipode_squared", r.antipode_squared},
              {"max", r.max_residual()}};
}

double haar_projector_commutators(const hl::LatticeModel& m, std::uint64_t seed) {
  hl::HaarProjectors hp = hl::haar_projectors(m);
  std::vector<const hl::LocalOperator*> ops;
  for (const auto& a : hp.a) ops.push_back(&a);
  for (const auto& b : hp.b) ops.push_back(&b);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  hl::Vec w(static_cast<Eigen::Index>(m.space.total));
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = hl::cplx(unif(rng), unif(rng));
  double res = 0.0;
  std::vector<hl::Vec> applied;
  for (const auto* op : ops) applied.push_back(hl::apply_local_dense(m.space, *op, w));
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j) {
      hl::Vec ij = hl::apply_local_dense(m.space, *ops[i], applied[j]);
      hl::Vec ji = hl::apply_local_dense(m.space, *ops[j], applied[i]);
      res = std::max(res, (ij - ji).cwiseAbs().maxCoeff());
    }
  return res;
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "1.0.0"; }

const char* hl_last_error(void) { return g_last_error.c_str(); }

void hl_string_free(char* s) { delete[] s; }

int hl_algebra_create(const char* spec, hl_algebra** out) {
  return guarded([&] {
    hl::require(spec != nullptr && out != nullptr, hl::errc::invalid_argument, "null argument");
    auto* a = new hl_algebra{hl::parse_algebra(spec), spec};
    *out = a;
  });
}

void hl_algebra_free(hl_algebra* a) { delete a; }

int hl_surface_create(const char* spec, hl_surface** out) {
  return guarded([&] {
    hl::require(spec != nullptr && out != nullptr, hl::errc::invalid_argument, "null argument");
    auto* s = new hl_surface{hl::parse_surface(spec), spec};
    *out = s;
  });
}

void hl_surface_free(hl_surface* s) { delete s; }

int hl_algebra_info(const hl_algebra* a, char** json_out) {
  return guarded([&] {
    hl::require(a != nullptr && json_out != nullptr, hl::errc::invalid_argument, "null argument");
    json j{{"spec", a->spec},
           {"dim", a->h.dim},
           {"basis", a->h.basis_labels},
           {"axiom_residuals", axiom_json(hl::verify_hopf_axioms(a->h))}};
    dup_json(j, json_out);
  });
}

int hl_wedderburn(const hl_algebra* a, uint64_t seed, char** json_out) {
  return guarded([&] {
    hl::require(a != nullptr && json_out != nullptr, hl::errc::invalid_argument, "null argument");
    hl::WedderburnData wd = hl::wedderburn(a->h, seed);
    json blocks = json::array();
    for (int d : wd.block_dims) blocks.push_back(json{{"dim", d}});
    json j{{"spec", a->spec},
           {"dim", a->h.dim},
           {"blocks", blocks},
           {"trivial_block", wd.trivial_index},
           {"sum_of_squares", hl::global_dim_squared(wd)}};
    dup_json(j, json_out);
  });
}

int hl_double_report(const hl_algebra* a, uint64_t seed, char** json_out) {
  return guarded([&] {
    hl::require(a != nullptr && json_out != nullptr, hl::errc::invalid_argument, "null argument");
    Timer t;
    hl::DoubleAlgebra d = hl::drinfeld_double(a->h);
    hl::Vec hd = hl::double_haar(d, hl::haar_integral(d.base), hl::haar_integral(d.rbar));
    const double haar_res = (hd - hl::haar_integral(d.hopf).element).cwiseAbs().maxCoeff();
    double quasi_res = 0.0;
    hl::r_matrix(d, 1e-10, &quasi_res);
    hl::WedderburnData wd = hl::wedderburn(d.hopf, seed);
    json j{{"spec", a->spec},
           {"dim", d.hopf.dim},
           {"blocks", static_cast<int>(wd.block_dims.size())},
           {"haar_residual", haar_res},
           {"quasitriangularity_residual", quasi_res},
           {"half_braiding_residual", hl::half_braiding_residual(d)},
           {"elapsed_ms", t.ms()}};
    dup_json(j, json_out);
  });
}

int hl_ground_dim(const hl_algebra* a, const hl_surface* s, char** json_out) {
  return guarded([&] {
    hl::require(a != nullptr && s != nullptr && json_out != nullptr, hl::errc::invalid_argument,
                "null argument");
    Timer t;
    hl::LatticeModel m = hl::make_model(a->h, s->c);
    const std::uint64_t dim = hl::ground_space_dim(m);
    json j{{"algebra", a->spec},
           {"surface", s->spec},
           {"state_dim", m.space.total},
           {"ground_dim", dim},
           {"elapsed_ms", t.ms()}};
    dup_json(j, json_out);
  });
}

int hl_verify(const hl_algebra* a, const hl_surface* s, const char* suite, uint64_t seed,
              double tol_axiom, double tol_op, char** json_out) {
  return guarded([&] {
    hl::require(a != nullptr && suite != nullptr && json_out != nullptr,
                hl::errc::invalid_argument, "null argument");
    hl::require(tol_axiom > 0 && tol_op > 0, hl::errc::invalid_argument,
                "tolerances must be positive");
    Timer t;
    const std::string which = suite;
    json residuals;
    double worst = 0.0;
    double tol = tol_op;
    if (which == "axioms") {
      hl::AxiomReport r = hl::verify_hopf_axioms(a->h);
      residuals = axiom_json(r);
      worst = r.max_residual();
      tol = tol_axiom;
    } else {
      hl::require(s != nullptr, hl::errc::invalid_argument, "suite needs a surface");
      hl::LatticeModel m = hl::make_model(a->h, s->c);
      if (which == "commutation") {
        residuals["haar_commutators"] = haar_projector_commutators(m, seed);
        residuals["anchor_independence"] = hl::anchor_independence_residual(m, seed);
        residuals["site_double_action"] = hl::site_double_action(m, hl::make_site(m.cells, 0), seed);
      } else if (which == "duality") {
        residuals["duality"] = hl::duality_check(m, hl::make_site(m.cells, 0), seed);
      } else if (which == "orientation") {
        double r = 0.0;
        for (int e = 0; e < m.cells.num_edges(); ++e)
          r = std::max(r, hl::orientation_reversal_consistency(m, e, seed));
        residuals["orientation_reversal"] = r;
      } else {
        throw hl::error(hl::errc::invalid_argument, "unknown suite: " + which);
      }
      for (const auto& [key, val] : residuals.items()) worst = std::max(worst, val.get<double>());
    }
    json j{{"suite", which},
           {"algebra", a->spec},
           {"surface", s ? json(s->spec) : json(nullptr)},
           {"seed", seed},
           {"residuals", residuals},
           {"tolerance", tol},
           {"pass", worst < tol},
           {"elapsed_ms", t.ms()}};
    dup_json(j, json_out);
  });
}

int hl_protected(const hl_algebra* a, const hl_surface* s, const char* sites_spec,
                 const char* labels_spec, uint64_t seed, char** json_out) {
  return guarded([&] {
    hl::require(a != nullptr && s != nullptr && sites_spec != nullptr && json_out != nullptr,
                hl::errc::invalid_argument, "null argument");
    Timer t;
    hl::LatticeModel m = hl::make_model(a->h, s->c);
    std::vector<hl::Site> sites = hl::parse_sites(sites_spec, s->c);
    std::vector<int> fixed = hl::parse_labels(labels_spec ? labels_spec : "all");
    hl::DoubleBlocks db = hl::double_blocks(a->h, seed);
    const int nblocks = static_cast<int>(db.modules.size());

    std::vector<std::vector<int>> tuples;
    if (!fixed.empty()) {
      hl::require(fixed.size() == sites.size(), hl::errc::invalid_argument,
                  "one label per site is required");
      tuples.push_back(fixed);
    } else {
      tuples.push_back({});
      for (size_t i = 0; i < sites.size(); ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& tup : tuples)
          for (int b = 0; b < nblocks; ++b) {
            auto t2 = tup;
            t2.push_back(b);
            next.push_back(std::move(t2));
          }
        tuples = std::move(next);
      }
    }

    const std::uint64_t l_dim = hl::excitation_space_dim(m, sites);
    json out_tuples = json::array();
    std::uint64_t weighted_sum = 0;
    for (const auto& tup : tuples) {
      hl::ProtectedSpace ps = hl::protected_space(db, m, sites, tup);
      std::uint64_t weight = 1;
      for (int b : tup) weight *= static_cast<std::uint64_t>(db.wd.block_dims[static_cast<size_t>(b)]);
      weighted_sum += weight * ps.dim;
      out_tuples.push_back(json{{"labels", tup},
                                {"dim_M", ps.dim},
                                {"route_a", ps.route_a_dim},
                                {"route_b", ps.route_b_dim}});
    }

    json sites_json = json::array();
    for (const auto& site : sites)
      sites_json.push_back(
          json{{"vertex", site.vertex}, {"face", site.face}, {"anchor_dart", site.anchor_dart}});
    json j{{"algebra", a->spec},
           {"surface", s->spec},
           {"sites", sites_json},
           {"blocks", nblocks},
           {"tuples", out_tuples},
           {"L_dim", l_dim},
           {"consistency_ok", fixed.empty() ? json(weighted_sum == l_dim) : json(nullptr)},
           {"elapsed_ms", t.ms()}};
    dup_json(j, json_out);
  });
}

int hl_oracle(const char* name, const hl_algebra* a, const hl_surface* s, char** json_out) {
  return guarded([&] {
    hl::require(name != nullptr && a != nullptr && json_out != nullptr,
                hl::errc::invalid_argument, "null argument");
    const std::string which = name;
    json j{{"name", which}, {"algebra", a->spec}};
    if (which == "commuting-pairs") {
      hl::require(a->spec.rfind("group:", 0) == 0, hl::errc::unsupported_flavor,
                  "commuting-pairs wants a group: algebra");
      hl::CayleyTable t = hl::parse_group(a->spec.substr(6));
      const std::uint64_t computed = hl::commuting_pairs_mod_conj(t);
      hl::LatticeModel m = hl::make_model(a->h, hl::build_standard("torus:square-1v"));
      const std::uint64_t engine = hl::ground_space_dim(m);
      j["computed"] = computed;
      j["engine"] = engine;
      j["match"] = computed == engine;
    } else if (which == "brute-ground-dim") {
      hl::require(s != nullptr, hl::errc::invalid_argument, "oracle needs a surface");
      j["surface"] = s->spec;
      const std::uint64_t computed = hl::brute_ground_dim(a->h, s->c);
      const std::uint64_t engine = hl::ground_space_dim(hl::make_model(a->h, s->c));
      j["computed"] = computed;
      j["engine"] = engine;
      j["match"] = computed == engine;
    } else if (which == "haar-formula") {
      std::string flavor, group;
      if (a->spec.rfind("group:", 0) == 0) {
        flavor = "group";
        group = a->spec.substr(6);
      } else if (a->spec.rfind("function:", 0) == 0) {
        flavor = "function";
        group = a->spec.substr(9);
      } else if (a->spec.rfind("dual:group:", 0) == 0) {
        flavor = "dual-of-group";
        group = a->spec.substr(11);
      } else {
        throw hl::error(hl::errc::unsupported_flavor,
                        "no closed-form Haar for algebra " + a->spec);
      }
      hl::Vec closed = hl::haar_formula_oracle(flavor, hl::parse_group(group));
      hl::Vec solved = hl::haar_integral(a->h).element;
      const double residual = (closed - solved).cwiseAbs().maxCoeff();
      j["flavor"] = flavor;
      j["residual"] = residual;
      j["match"] = residual < 1e-12;
    } else {
      throw hl::error(hl::errc::invalid_argument, "unknown oracle: " + which);
    }
    dup_json(j, json_out);
  });
}

}  // extern "C"

#include "hopflattice/specparse.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hopflattice/double.hpp"

namespace hopflattice {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::io_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw error(errc::io_error, path + ": " + e.what());
  }
  return j;
}

cplx parse_entry(const json& j) {
  if (j.is_array()) {
    require(j.size() == 2 && j[0].is_number() && j[1].is_number(), errc::io_error,
            "complex entries must be [re, im]");
    return cplx(j[0].get<double>(), j[1].get<double>());
  }
  require(j.is_number(), errc::io_error, "matrix entries must be numbers or [re, im]");
  return cplx(j.get<double>());
}

HopfAlgebra parse_raw(const std::string& path) {
  json j = load_json(path);
  HopfAlgebra h;
  h.dim = j.at("dim").get<int>();
  require(h.dim > 0, errc::invalid_argument, "dim must be positive");
  const int n = h.dim;
  h.mul = Mat::Zero(n, static_cast<Eigen::Index>(n) * n);
  h.comul = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
  h.unit = Vec::Zero(n);
  h.counit = Vec::Zero(n);
  h.antipode = Mat::Zero(n, n);

  const json& mul = j.at("mul");  // mul[k][i][j] = coeff of e_k in e_i e_j
  require(static_cast<int>(mul.size()) == n, errc::io_error, "mul must have dim rows");
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        h.mul(k, static_cast<Eigen::Index>(i) * n + jj) = parse_entry(mul[k][i][jj]);
  const json& cm = j.at("comul");  // comul[i][j][k] = coeff of e_i (x) e_j in Delta(e_k)
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        h.comul(static_cast<Eigen::Index>(i) * n + jj, k) = parse_entry(cm[i][jj][k]);
  for (int k = 0; k < n; ++k) {
    h.unit(k) = parse_entry(j.at("unit")[k]);
    h.counit(k) = parse_entry(j.at("counit")[k]);
  }
  const json& ant = j.at("antipode");  // antipode[i][k] = coeff of e_i in S(e_k)
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) h.antipode(i, k) = parse_entry(ant[i][k]);
  h.name = "raw:" + path;
  for (int k = 0; k < n; ++k) h.basis_labels.push_back("e" + std::to_string(k));

  AxiomReport rep = verify_hopf_axioms(h);
  require(rep.max_residual() < 1e-9, errc::construction_failure,
          "raw structure constants violate the Hopf axioms, residual " +
              std::to_string(rep.max_residual()));
  return h;
}

CayleyTable load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::io_error, "cannot open " + path);
  CayleyTable t;
  require(static_cast<bool>(in >> t.order) && t.order > 0, errc::io_error,
          "Cayley file must start with the group order");
  t.table.assign(static_cast<size_t>(t.order), std::vector<int>(static_cast<size_t>(t.order)));
  for (int g = 0; g < t.order; ++g)
    for (int h = 0; h < t.order; ++h)
      require(static_cast<bool>(in >> t.table[static_cast<size_t>(g)][static_cast<size_t>(h)]),
              errc::io_error, "truncated Cayley table");
  for (int g = 0; g < t.order; ++g) t.labels.push_back("g" + std::to_string(g));
  validate_group(t);
  return t;
}

}  // namespace

CayleyTable parse_group(const std::string& name_or_file) {
  if (name_or_file == "S3") return symmetric_group_s3();
  if (name_or_file.size() >= 2 && name_or_file[0] == 'Z') {
    char* end = nullptr;
    const long k = std::strtol(name_or_file.c_str() + 1, &end, 10);
    if (end && *end == '\0' && k >= 1) return cyclic_group(static_cast<int>(k));
  }
  return load_cayley_file(name_or_file);
}

HopfAlgebra parse_algebra(const std::string& spec) {
  const auto colon = spec.find(':');
  require(colon != std::string::npos, errc::invalid_argument,
          "algebra spec needs a constructor prefix: " + spec);
  const std::string head = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (head == "group") return group_algebra(parse_group(rest));
  if (head == "function") return function_algebra(parse_group(rest));
  if (head == "dual") return dual_hopf(parse_algebra(rest));
  if (head == "double") {
    HopfAlgebra h = drinfeld_double(parse_algebra(rest)).hopf;
    h.name = "double:" + rest;
    return h;
  }
  if (head == "raw") return parse_raw(rest);
  throw error(errc::invalid_argument, "unknown algebra constructor: " + head);
}

CellDecomposition parse_surface(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    json j = load_json(spec.substr(5));
    return make_cells(j.at("edge_pair").get<std::vector<int>>(),
                      j.at("vertex_rot").get<std::vector<int>>(),
                      j.at("positive_dart").get<std::vector<int>>());
  }
  return build_standard(spec);
}

std::vector<Site> parse_sites(const std::string& spec, const CellDecomposition& c) {
  std::vector<Site> out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const long d = std::strtol(tok.c_str(), &end, 10);
    require(end && *end == '\0', errc::invalid_argument, "bad site anchor dart: " + tok);
    out.push_back(make_site(c, static_cast<int>(d)));
  }
  return out;
}

std::vector<int> parse_labels(const std::string& spec) {
  std::vector<int> out;
  if (spec.empty() || spec == "all") return out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const long b = std::strtol(tok.c_str(), &end, 10);
    require(end && *end == '\0' && b >= 0, errc::invalid_argument, "bad label block: " + tok);
    out.push_back(static_cast<int>(b));
  }
  return out;
}

}  // namespace hopflattice

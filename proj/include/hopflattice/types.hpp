#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hopflattice {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Error codes shared with the C API (see include/hopflattice.h).
enum class errc : int {
  invalid_argument = 2,
  not_a_group = 3,
  dimension_mismatch = 4,
  not_semisimple = 5,
  no_solution = 6,
  normalization_failure = 7,
  construction_failure = 8,
  randomization_exhausted = 9,
  not_a_morphism = 10,
  unknown_surface = 11,
  invalid_site = 12,
  sites_not_disjoint = 13,
  non_integer_trace = 14,
  non_integer_multiplicity = 15,
  quasitriangularity_failure = 16,
  mismatch = 17,
  too_large = 18,
  unsupported_flavor = 19,
  io_error = 20,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) throw error(code, msg);
}

}  // namespace hopflattice

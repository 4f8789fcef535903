#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopflattice/types.hpp"

namespace hopflattice {

// Sparse vector in a tensor-product space, keyed by flat row-major index.
using StateMap = std::unordered_map<std::uint64_t, cplx>;

// Row-major strides for a list of factor dimensions.
std::vector<std::uint64_t> strides_of(const std::vector<int>& dims);

inline int factor_digit(std::uint64_t idx, std::uint64_t stride, int dim) {
  return static_cast<int>((idx / stride) % static_cast<std::uint64_t>(dim));
}

// Applies a square matrix to one tensor factor of a sparse state.
// Skips exact zeros of the matrix; accumulates into a fresh map.
StateMap apply_factor(const StateMap& in, const Mat& m, std::uint64_t stride, int dim);

// Same on a dense flat vector.
void apply_factor_dense(Vec& v, const Mat& m, std::uint64_t stride, int dim);

// Drops entries with |amplitude| below eps * max(1, max |amplitude|).
void prune(StateMap& s, double eps = 1e-14);

// A sparse multi-index tensor: list of (index tuple, coefficient).
struct SparseTensor {
  std::vector<std::pair<std::vector<int>, cplx>> entries;
};

}  // namespace hopflattice

#include "hopflattice/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace hopflattice {

std::vector<std::uint64_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::uint64_t> s(dims.size());
  std::uint64_t acc = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    s[static_cast<size_t>(i)] = acc;
    acc *= static_cast<std::uint64_t>(dims[static_cast<size_t>(i)]);
  }
  return s;
}

StateMap apply_factor(const StateMap& in, const Mat& m, std::uint64_t stride, int dim) {
  StateMap out;
  out.reserve(in.size() * 2);
  const auto d = static_cast<std::uint64_t>(dim);
  for (const auto& [idx, amp] : in) {
    const int col = factor_digit(idx, stride, dim);
    const std::uint64_t base = idx - static_cast<std::uint64_t>(col) * stride;
    for (int row = 0; row < dim; ++row) {
      const cplx c = m(row, col);
      if (c == cplx(0.0)) continue;
      out[base + static_cast<std::uint64_t>(row) * stride] += c * amp;
    }
    (void)d;
  }
  return out;
}

void apply_factor_dense(Vec& v, const Mat& m, std::uint64_t stride, int dim) {
  const auto n = static_cast<std::uint64_t>(v.size());
  const std::uint64_t block = stride * static_cast<std::uint64_t>(dim);
  Vec tmp(dim);
  for (std::uint64_t outer = 0; outer < n; outer += block) {
    for (std::uint64_t inner = 0; inner < stride; ++inner) {
      for (int k = 0; k < dim; ++k)
        tmp(k) = v(static_cast<Eigen::Index>(outer + inner + static_cast<std::uint64_t>(k) * stride));
      Vec res = m * tmp;
      for (int k = 0; k < dim; ++k)
        v(static_cast<Eigen::Index>(outer + inner + static_cast<std::uint64_t>(k) * stride)) = res(k);
    }
  }
}

void prune(StateMap& s, double eps) {
  double mx = 1.0;
  for (const auto& [idx, amp] : s) mx = std::max(mx, std::abs(amp));
  const double cut = eps * mx;
  for (auto it = s.begin(); it != s.end();) {
    if (std::abs(it->second) < cut)
      it = s.erase(it);
    else
      ++it;
  }
}

}  // namespace hopflattice

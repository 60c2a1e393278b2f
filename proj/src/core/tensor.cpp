#include "core/tensor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "core/checked.hpp"

namespace daa {

std::size_t cell_count(int dims, int side) {
  if (dims < 1) throw std::invalid_argument("tensor needs at least one axis");
  if (side < 1) throw std::invalid_argument("tensor side must be positive");
  std::int64_t n = 1;
  for (int i = 0; i < dims; ++i) n = detail::checked_mul(n, side);
  return static_cast<std::size_t>(n);
}

IntTensor::IntTensor(int dims, int side, std::vector<std::int64_t> data)
    : dims_(dims), side_(side), data_(std::move(data)) {
  const std::size_t expected = cell_count(dims, side);
  if (data_.size() != expected)
    throw std::invalid_argument("tensor data length " + std::to_string(data_.size()) +
                                " does not match side^dims = " + std::to_string(expected));
}

IntTensor IntTensor::ones(int dims, int side) { return filled(dims, side, 1); }

IntTensor IntTensor::filled(int dims, int side, std::int64_t value) {
  return IntTensor(dims, side, std::vector<std::int64_t>(cell_count(dims, side), value));
}

std::int64_t IntTensor::at(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != dims_)
    throw std::invalid_argument("index rank does not match tensor rank");
  std::size_t flat = 0;
  for (int a = 0; a < dims_; ++a) {
    if (index[a] < 0 || index[a] >= side_) throw std::out_of_range("tensor index out of range");
    flat = flat * static_cast<std::size_t>(side_) + static_cast<std::size_t>(index[a]);
  }
  return data_[flat];
}

IndexPermutation::IndexPermutation(std::vector<int> map) : map_(std::move(map)) {
  if (map_.empty()) throw std::invalid_argument("permutation must be non-empty");
  std::vector<char> seen(map_.size(), 0);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation map is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

IndexPermutation IndexPermutation::identity(int size) {
  std::vector<int> map(static_cast<std::size_t>(size));
  std::iota(map.begin(), map.end(), 0);
  return IndexPermutation(std::move(map));
}

IntTensor kron(const IntTensor& x, const IntTensor& y) {
  if (x.dims() != y.dims())
    throw std::invalid_argument("kron: operands must have the same number of axes");
  const int d = x.dims();
  const int sx = x.side();
  const int sy = y.side();
  const std::int64_t side64 = detail::checked_mul(sx, sy);
  if (side64 > std::numeric_limits<int>::max()) throw std::overflow_error("kron: output side too large");
  const int side = static_cast<int>(side64);

  std::vector<std::int64_t> out(cell_count(d, side));
  std::vector<int> digit(static_cast<std::size_t>(d));
  for (std::size_t f = 0; f < out.size(); ++f) {
    std::size_t rem = f;
    for (int a = d - 1; a >= 0; --a) {
      digit[static_cast<std::size_t>(a)] = static_cast<int>(rem % static_cast<std::size_t>(side));
      rem /= static_cast<std::size_t>(side);
    }
    std::size_t qf = 0, rf = 0;
    for (int a = 0; a < d; ++a) {
      qf = qf * static_cast<std::size_t>(sx) + static_cast<std::size_t>(digit[static_cast<std::size_t>(a)] / sy);
      rf = rf * static_cast<std::size_t>(sy) + static_cast<std::size_t>(digit[static_cast<std::size_t>(a)] % sy);
    }
    out[f] = detail::checked_mul(x[qf], y[rf]);
  }
  return IntTensor(d, side, std::move(out));
}

IndexPermutation shuffle_permutation(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("shuffle_permutation: group sizes must be positive");
  const std::int64_t size64 = detail::checked_mul(m, n);
  if (size64 > std::numeric_limits<int>::max())
    throw std::overflow_error("shuffle_permutation: index range too large");
  std::vector<int> map(static_cast<std::size_t>(size64));
  for (int r = 0; r < n; ++r)
    for (int q = 0; q < m; ++q) map[static_cast<std::size_t>(r * m + q)] = q * n + r;
  return IndexPermutation(std::move(map));
}

IntTensor conjugate(const IntTensor& t, const IndexPermutation& sigma) {
  if (sigma.size() != t.side())
    throw std::invalid_argument("conjugate: permutation size must match tensor side");
  const int d = t.dims();
  const int n = t.side();
  std::vector<std::int64_t> out(t.size());
  std::vector<int> digit(static_cast<std::size_t>(d));
  for (std::size_t f = 0; f < out.size(); ++f) {
    std::size_t rem = f;
    for (int a = d - 1; a >= 0; --a) {
      digit[static_cast<std::size_t>(a)] = static_cast<int>(rem % static_cast<std::size_t>(n));
      rem /= static_cast<std::size_t>(n);
    }
    std::size_t src = 0;
    for (int a = 0; a < d; ++a)
      src = src * static_cast<std::size_t>(n) + static_cast<std::size_t>(sigma(digit[static_cast<std::size_t>(a)]));
    out[f] = t[src];
  }
  return IntTensor(d, n, std::move(out));
}

std::vector<std::vector<std::int64_t>> line_sums(const IntTensor& t) {
  const int d = t.dims();
  const int n = t.side();
  const std::size_t lines = t.size() / static_cast<std::size_t>(n);
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(d),
                                             std::vector<std::int64_t>(lines, 0));
  std::vector<int> digit(static_cast<std::size_t>(d));
  for (std::size_t f = 0; f < t.size(); ++f) {
    std::size_t rem = f;
    for (int a = d - 1; a >= 0; --a) {
      digit[static_cast<std::size_t>(a)] = static_cast<int>(rem % static_cast<std::size_t>(n));
      rem /= static_cast<std::size_t>(n);
    }
    for (int axis = 0; axis < d; ++axis) {
      std::size_t line = 0;
      for (int a = 0; a < d; ++a)
        if (a != axis) line = line * static_cast<std::size_t>(n) + static_cast<std::size_t>(digit[static_cast<std::size_t>(a)]);
      auto& slot = out[static_cast<std::size_t>(axis)][line];
      slot = detail::checked_add(slot, t[f]);
    }
  }
  return out;
}

IntTensor add(const IntTensor& x, const IntTensor& y) {
  if (x.dims() != y.dims() || x.side() != y.side())
    throw std::invalid_argument("add: shape mismatch");
  std::vector<std::int64_t> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::checked_add(x[i], y[i]);
  return IntTensor(x.dims(), x.side(), std::move(out));
}

IntTensor scale(const IntTensor& x, std::int64_t c) {
  std::vector<std::int64_t> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::checked_mul(x[i], c);
  return IntTensor(x.dims(), x.side(), std::move(out));
}

}  // namespace daa

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace daa {

/// Hypercubic integer tensor: `dims` axes, each of length `side`, row-major
/// flat storage (axis 0 slowest, so a D=2 tensor prints exactly like the
/// matrix it holds). Rectangular shapes are rejected at construction.
class IntTensor {
public:
  IntTensor(int dims, int side, std::vector<std::int64_t> data);

  static IntTensor ones(int dims, int side);
  static IntTensor filled(int dims, int side, std::int64_t value);

  [[nodiscard]] int dims() const noexcept { return dims_; }
  [[nodiscard]] int side() const noexcept { return side_; }
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] std::span<const std::int64_t> data() const noexcept { return data_; }

  [[nodiscard]] std::int64_t operator[](std::size_t flat) const { return data_[flat]; }
  [[nodiscard]] std::int64_t at(std::span<const int> index) const;

  friend bool operator==(const IntTensor&, const IntTensor&) = default;

private:
  int dims_;
  int side_;
  std::vector<std::int64_t> data_;
};

/// Bijection on {0,…,size−1}; map[i] is the image of index i.
class IndexPermutation {
public:
  explicit IndexPermutation(std::vector<int> map);
  static IndexPermutation identity(int size);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(map_.size()); }
  [[nodiscard]] int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] std::span<const int> map() const noexcept { return map_; }

private:
  std::vector<int> map_;
};

/// Number of cells of a hypercube with the given shape; throws std::overflow_error
/// if side^dims does not fit in size_t (or int64).
std::size_t cell_count(int dims, int side);

/// Kronecker product of two tensors with the same number of axes. Along every
/// axis the output index factors as i = q·y.side + r and the value is
/// x[q…]·y[r…]; for D=2 this is the ordinary matrix Kronecker product.
IntTensor kron(const IntTensor& x, const IntTensor& y);

/// Perfect multiway shuffle σ(r·m+q) = q·n+r on {0,…,mn−1}: splits the index
/// sequence into m groups of n and interleaves them, one entry from each group
/// in turn.
IndexPermutation shuffle_permutation(int m, int n);

/// Applies σ along every axis at once: result[i₁,…,i_D] = t[σ(i₁),…,σ(i_D)].
IntTensor conjugate(const IntTensor& t, const IndexPermutation& sigma);

/// Per-axis line sums: result[axis] holds the side^(D−1) sums taken parallel to
/// that axis, indexed row-major by the remaining coordinates.
std::vector<std::vector<std::int64_t>> line_sums(const IntTensor& t);

/// Elementwise sum / integer multiple, with 64-bit overflow checks.
IntTensor add(const IntTensor& x, const IntTensor& y);
IntTensor scale(const IntTensor& x, std::int64_t c);

}  // namespace daa

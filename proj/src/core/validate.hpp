#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/tensor.hpp"

namespace daa {

enum class Property { FullCover, SemiMagic, Magic, Latin, DiagonalLatin, Pandiagonal };

const char* property_name(Property p);

/// Outcome of one predicate. A failing report always carries a witness naming
/// the first violated line or element; `common_sum` is filled whenever the
/// property implies one shared line sum.
struct PropertyReport {
  Property property;
  bool holds = false;
  std::string witness;
  std::optional<std::int64_t> common_sum;
};

/// S_{n,k} = n(n^k − 1)/2, the line sum of a full-cover class-k object of
/// order n (k=1 Latin, k=2 magic square, k=3 magic cube, …).
std::int64_t magic_sum(std::int64_t n, std::int64_t k);

/// Element multiset must be exactly {0,…,n^k−1}, each value n^(D−k) times.
/// Requires 1 ≤ k ≤ D.
PropertyReport check_full_cover(const IntTensor& t, int k);

/// Every axis-parallel line (all axes) sums to one common value.
PropertyReport check_semi_magic(const IntTensor& t);

/// Semi-magic and all 2^(D−1) main space diagonals share the common sum.
PropertyReport check_magic(const IntTensor& t);

/// Every axis-parallel line is a permutation of 0..n−1; with `diagonal` set,
/// all main space diagonals must be permutations as well.
PropertyReport check_latin(const IntTensor& t, bool diagonal);

/// D=2 only: all 2n broken (wrap-around) diagonals sum to the common line sum.
PropertyReport check_pandiagonal(const IntTensor& m);

}  // namespace daa

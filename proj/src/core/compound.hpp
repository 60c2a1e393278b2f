#pragma once

#include <cstdint>
#include <string>

#include "core/tensor.hpp"

namespace daa {

/// The four weighted Kronecker-sum constructions plus the GAPDA form.
/// Aggregated keeps consecutive integers grouped inside subblocks; Dispersed
/// spreads them across blocks; the Reverse variants swap the Kronecker factor
/// order and are perfect-shuffle conjugates of the forward ones.
enum class Variant { Aggregated, Dispersed, ReverseAggregated, ReverseDispersed, Gapda };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);  // throws std::invalid_argument

/// How a compound was built, so spectral predictions can be replayed.
struct CompoundRecipe {
  Variant variant = Variant::Aggregated;
  int k = 1;  // class parameter; unused for Gapda
  int m = 0;  // order of seed A
  int n = 0;  // order of seed B
  std::string seed_a;
  std::string seed_b;
};

/// Builds the order-mn compound of two same-rank seeds:
///   Aggregated          n^k·(A⊗E_n) + (E_m⊗B)
///   Dispersed           (A⊗E_n) + m^k·(E_m⊗B)
///   ReverseAggregated   n^k·(E_n⊗A) + (B⊗E_m)
///   ReverseDispersed    (E_n⊗A) + m^k·(B⊗E_m)
///   Gapda               (A⊗E_n) + (E_m⊗B)
IntTensor compound(const IntTensor& a, const IntTensor& b, int k, Variant variant);

/// GAPDA compounding: every block is B shifted by one element of A. The scale
/// factors of the ISDA forms are absorbed into the seed elements.
IntTensor compound_gapda(const IntTensor& a, const IntTensor& b);

/// S_{C,k} = n^(k+1)·S_{m,k} + m·S_{n,k} = mn((mn)^k − 1)/2. Both closed forms
/// are evaluated and must agree.
std::int64_t compound_linesum(std::int64_t m, std::int64_t n, std::int64_t k);

}  // namespace daa

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "core/compound.hpp"
#include "core/poly.hpp"
#include "core/tensor.hpp"
#include "core/validate.hpp"

namespace daa {

/// Exact characteristic polynomial det(λI − M) over the integers
/// (Faddeev–LeVerrier with provably exact divisions). Monic, degree = order.
IntPoly charpoly(const IntTensor& m);

/// Exact integer Gramian MᵀM. Throws std::overflow_error if an entry leaves
/// the 64-bit range (the spectral paths below compute their Gramians in
/// arbitrary precision and have no such limit).
IntTensor gramian(const IntTensor& m);

/// Characteristic polynomial of MᵀM, computed entirely in arbitrary
/// precision; its roots are the squared singular values.
IntPoly gramian_charpoly(const IntTensor& m);

/// Rank over the rationals via fraction-free (Bareiss) elimination.
int rank_exact(const IntTensor& m);

/// Clan index R = Σ_{i≥2} σ_i⁴, computed exactly as trace((MᵀM)²) − S⁴ where
/// S is the common line sum (the dominant singular value of a non-negative
/// semi-magic matrix). Throws std::domain_error unless the input is
/// semi-magic with non-negative elements.
mpz_class r_index(const IntTensor& m);

/// Predicted characteristic polynomial of a compound built from seeds with
/// charpolys pa (degree m), pb (degree n) and line sums sa, sb:
///   λ^((m−1)(n−1)) · (λ − S) · scale_roots(pb/(λ−sb), c_b) · scale_roots(pa/(λ−sa), c_a)
/// with (c_b, c_a, S) = (m, n^(k+1), n^(k+1)·sa + m·sb) aggregated,
/// (m^(k+1), n, n·sa + m^(k+1)·sb) dispersed, (m, n, n·sa + m·sb) GAPDA;
/// reverse variants predict identically to their forward forms. For
/// full-cover class-k seeds the dominant S equals S_{mn,k}.
IntPoly predict_charpoly(const IntPoly& pa, const IntPoly& pb, std::int64_t sa, std::int64_t sb,
                         int m, int n, int k, Variant variant);

/// Same construction applied to the Gramian charpolys (squared-singular-value
/// polynomials): scale factors squared, dominant factor (λ − S²).
IntPoly predict_gramian_charpoly(const IntPoly& ga, const IntPoly& gb, std::int64_t sa,
                                 std::int64_t sb, int m, int n, int k, Variant variant);

struct PredictionVerdict {
  bool eigen_match = false;
  bool sv_match = false;
};

/// Exact polynomial-identity check that `c` has the spectra the recipe
/// predicts from seeds `a` and `b` (eigenvalues via charpoly, singular values
/// via the Gramian charpoly).
PredictionVerdict verify_prediction(const IntTensor& c, const IntTensor& a, const IntTensor& b,
                                    const CompoundRecipe& recipe);

/// Randomized exact check of the annihilation identities: for zero-sum w, v
///   (A⊗E_n)(e_m⊗w) = 0   and   (E_m⊗B)(v⊗e_n) = 0.
bool annihilation_check(const IntTensor& a, const IntTensor& b, int trials, std::uint64_t seed);

/// Splits a monic polynomial into non-negative integer roots (descending,
/// zeros included). Returns nullopt when the polynomial does not factor that
/// way, or when the root bound exceeds the scan limit.
std::optional<std::vector<mpz_class>> integer_roots(const IntPoly& p);

/// Everything the analyzer reports for one square.
struct SpectralReport {
  int order = 0;
  std::optional<std::int64_t> line_sum;  // present iff semi-magic
  int rank = 0;
  IntPoly charpoly;
  IntPoly gramian_charpoly;
  std::optional<std::vector<mpz_class>> sv_squares;  // when the Gramian charpoly splits
  std::optional<mpz_class> r_index;                  // present iff semi-magic and non-negative
  std::optional<PredictionVerdict> verdict;
};

SpectralReport make_spectral_report(const IntTensor& m);

}  // namespace daa

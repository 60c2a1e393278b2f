#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace daa {

/// Integer-coefficient polynomial with arbitrary-precision coefficients,
/// stored ascending by degree and kept trimmed (no leading zeros). The zero
/// polynomial has degree −1. All arithmetic is exact.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<std::int64_t> coeffs);

  /// x^power (monic monomial).
  static IntPoly monomial(int power);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  [[nodiscard]] const mpz_class& coeff(int i) const;
  [[nodiscard]] const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] mpz_class operator()(const mpz_class& x) const;

  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator+(const IntPoly& rhs) const;

  /// Multiplies by x^power (shifts coefficients up).
  [[nodiscard]] IntPoly shifted(int power) const;

  [[nodiscard]] std::string str(const std::string& var = "x") const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  std::vector<mpz_class> coeffs_;
};

/// Monic polynomial whose roots are c times the roots of p (coefficient
/// a_i ↦ a_i·c^(deg−i)). Requires p monic and c ≠ 0.
IntPoly scale_roots(const IntPoly& p, const mpz_class& c);

/// Exact quotient p / (x − root); throws std::domain_error if the remainder
/// is not zero, i.e. root is not an exact root of p.
IntPoly divide_by_linear(const IntPoly& p, const mpz_class& root);

}  // namespace daa

#include "core/poly.hpp"

#include <stdexcept>

namespace daa {
namespace {

void trim(std::vector<mpz_class>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

IntPoly::IntPoly(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.emplace_back(static_cast<long>(c));
  trim(coeffs_);
}

IntPoly IntPoly::monomial(int power) {
  if (power < 0) throw std::invalid_argument("monomial power must be non-negative");
  std::vector<mpz_class> c(static_cast<std::size_t>(power) + 1, 0);
  c.back() = 1;
  return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(int i) const {
  static const mpz_class zero = 0;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int power) const {
  if (power < 0) throw std::invalid_argument("shift power must be non-negative");
  if (is_zero()) return IntPoly();
  std::vector<mpz_class> out(static_cast<std::size_t>(power), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly scale_roots(const IntPoly& p, const mpz_class& c) {
  if (!p.is_monic()) throw std::invalid_argument("scale_roots: polynomial must be monic");
  if (c == 0) throw std::invalid_argument("scale_roots: scale factor must be non-zero");
  const int deg = p.degree();
  std::vector<mpz_class> out(static_cast<std::size_t>(deg) + 1);
  mpz_class power = 1;
  for (int i = deg; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = p.coeff(i) * power;
    power *= c;
  }
  return IntPoly(std::move(out));
}

IntPoly divide_by_linear(const IntPoly& p, const mpz_class& root) {
  if (p.degree() < 1) throw std::domain_error("divide_by_linear: polynomial degree must be >= 1");
  std::vector<mpz_class> quotient(static_cast<std::size_t>(p.degree()));
  mpz_class carry = 0;
  for (int i = p.degree(); i > 0; --i) {
    carry = carry * root + p.coeff(i);
    quotient[static_cast<std::size_t>(i - 1)] = carry;
  }
  const mpz_class remainder = carry * root + p.coeff(0);
  if (remainder != 0)
    throw std::domain_error("divide_by_linear: " + root.get_str() +
                            " is not a root (remainder " + remainder.get_str() + ")");
  return IntPoly(std::move(quotient));
}

}  // namespace daa

#include "core/compound.hpp"

#include <stdexcept>

#include "core/checked.hpp"
#include "core/validate.hpp"

namespace daa {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Aggregated: return "aggregated";
    case Variant::Dispersed: return "dispersed";
    case Variant::ReverseAggregated: return "rev-aggregated";
    case Variant::ReverseDispersed: return "rev-dispersed";
    case Variant::Gapda: return "gapda";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "aggregated") return Variant::Aggregated;
  if (name == "dispersed") return Variant::Dispersed;
  if (name == "rev-aggregated") return Variant::ReverseAggregated;
  if (name == "rev-dispersed") return Variant::ReverseDispersed;
  if (name == "gapda") return Variant::Gapda;
  throw std::invalid_argument("unknown variant '" + name +
                              "' (expected aggregated, dispersed, rev-aggregated, "
                              "rev-dispersed or gapda)");
}

IntTensor compound(const IntTensor& a, const IntTensor& b, int k, Variant variant) {
  if (a.dims() != b.dims())
    throw std::invalid_argument("compound: seeds must have the same number of axes");
  if (variant != Variant::Gapda && k < 1)
    throw std::invalid_argument("compound: class parameter k must be >= 1");
  const int d = a.dims();
  const IntTensor em = IntTensor::ones(d, a.side());
  const IntTensor en = IntTensor::ones(d, b.side());
  switch (variant) {
    case Variant::Aggregated:
      return add(scale(kron(a, en), detail::checked_pow(b.side(), k)), kron(em, b));
    case Variant::Dispersed:
      return add(kron(a, en), scale(kron(em, b), detail::checked_pow(a.side(), k)));
    case Variant::ReverseAggregated:
      return add(scale(kron(en, a), detail::checked_pow(b.side(), k)), kron(b, em));
    case Variant::ReverseDispersed:
      return add(kron(en, a), scale(kron(b, em), detail::checked_pow(a.side(), k)));
    case Variant::Gapda:
      return add(kron(a, en), kron(em, b));
  }
  throw std::logic_error("compound: unreachable");
}

IntTensor compound_gapda(const IntTensor& a, const IntTensor& b) {
  return compound(a, b, 1, Variant::Gapda);
}

std::int64_t compound_linesum(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 1 || n < 1 || k < 1)
    throw std::invalid_argument("compound_linesum: m, n and k must be positive");
  const std::int64_t weighted = detail::checked_add(
      detail::checked_mul(detail::checked_pow(n, k + 1), magic_sum(m, k)),
      detail::checked_mul(m, magic_sum(n, k)));
  const std::int64_t direct = magic_sum(detail::checked_mul(m, n), k);
  if (weighted != direct) throw std::logic_error("compound_linesum: closed forms disagree");
  return direct;
}

}  // namespace daa

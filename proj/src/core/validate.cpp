#include "core/validate.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "core/checked.hpp"

namespace daa {
namespace {

std::string axis_line_name(int axis, std::size_t line) {
  return "axis-" + std::to_string(axis) + " line " + std::to_string(line);
}

// The 2^(D−1) main space diagonals: axis 0 always runs forward, every other
// axis independently forward or backward. Returns flat index paths plus a
// human-readable name per diagonal.
std::vector<std::pair<std::string, std::vector<std::size_t>>> main_diagonals(int dims, int side) {
  std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
  const int combos = 1 << (dims - 1);
  for (int mask = 0; mask < combos; ++mask) {
    std::vector<std::size_t> path;
    path.reserve(static_cast<std::size_t>(side));
    for (int t = 0; t < side; ++t) {
      std::size_t flat = 0;
      for (int a = 0; a < dims; ++a) {
        const bool backward = a > 0 && ((mask >> (a - 1)) & 1);
        const int coord = backward ? side - 1 - t : t;
        flat = flat * static_cast<std::size_t>(side) + static_cast<std::size_t>(coord);
      }
      path.push_back(flat);
    }
    std::string name;
    if (dims == 2) {
      name = mask == 0 ? "main diagonal" : "antidiagonal";
    } else {
      name = "space diagonal +";
      for (int a = 1; a < dims; ++a) name += ((mask >> (a - 1)) & 1) ? '-' : '+';
    }
    out.emplace_back(std::move(name), std::move(path));
  }
  return out;
}

std::int64_t path_sum(const IntTensor& t, const std::vector<std::size_t>& path) {
  std::int64_t s = 0;
  for (std::size_t f : path) s = detail::checked_add(s, t[f]);
  return s;
}

// Checks that `values` is a permutation of 0..n−1; empty string when it is.
std::string permutation_violation(const IntTensor& t, const std::vector<std::size_t>& path) {
  const int n = t.side();
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (std::size_t f : path) {
    const std::int64_t v = t[f];
    if (v < 0 || v >= n)
      return "value " + std::to_string(v) + " outside 0.." + std::to_string(n - 1);
    if (++count[static_cast<std::size_t>(v)] > 1) return "value " + std::to_string(v) + " repeats";
  }
  return {};
}

}  // namespace

const char* property_name(Property p) {
  switch (p) {
    case Property::FullCover: return "fullcover";
    case Property::SemiMagic: return "semimagic";
    case Property::Magic: return "magic";
    case Property::Latin: return "latin";
    case Property::DiagonalLatin: return "diagonal-latin";
    case Property::Pandiagonal: return "pandiagonal";
  }
  return "?";
}

std::int64_t magic_sum(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("magic_sum: order and class must be positive");
  // n and n^k − 1 have opposite parity, so the product is always even.
  const std::int64_t nk = detail::checked_pow(n, k);
  const std::int64_t prod = detail::checked_mul(n, nk - 1);
  return prod / 2;
}

PropertyReport check_full_cover(const IntTensor& t, int k) {
  if (k < 1 || k > t.dims())
    throw std::invalid_argument("check_full_cover: class parameter must satisfy 1 <= k <= dims");
  PropertyReport report{Property::FullCover, true, {}, std::nullopt};
  const std::size_t symbols = cell_count(k, t.side());
  const std::size_t copies = t.size() / symbols;
  std::vector<std::size_t> count(symbols, 0);
  for (std::int64_t v : t.data()) {
    if (v < 0 || static_cast<std::size_t>(v) >= symbols) {
      report.holds = false;
      report.witness = "element " + std::to_string(v) + " outside 0.." + std::to_string(symbols - 1);
      return report;
    }
    ++count[static_cast<std::size_t>(v)];
  }
  for (std::size_t v = 0; v < symbols; ++v) {
    if (count[v] != copies) {
      report.holds = false;
      report.witness = "value " + std::to_string(v) + " appears " + std::to_string(count[v]) +
                       " times, expected " + std::to_string(copies);
      return report;
    }
  }
  return report;
}

PropertyReport check_semi_magic(const IntTensor& t) {
  PropertyReport report{Property::SemiMagic, true, {}, std::nullopt};
  const auto sums = line_sums(t);
  const std::int64_t expected = sums[0][0];
  for (std::size_t axis = 0; axis < sums.size(); ++axis) {
    for (std::size_t line = 0; line < sums[axis].size(); ++line) {
      if (sums[axis][line] != expected) {
        report.holds = false;
        report.witness = axis_line_name(static_cast<int>(axis), line) + " sums to " +
                         std::to_string(sums[axis][line]) + ", expected " + std::to_string(expected);
        return report;
      }
    }
  }
  report.common_sum = expected;
  return report;
}

PropertyReport check_magic(const IntTensor& t) {
  PropertyReport report = check_semi_magic(t);
  report.property = Property::Magic;
  if (!report.holds) return report;
  const std::int64_t expected = *report.common_sum;
  for (const auto& [name, path] : main_diagonals(t.dims(), t.side())) {
    const std::int64_t s = path_sum(t, path);
    if (s != expected) {
      report.holds = false;
      report.common_sum.reset();
      report.witness = name + " sums to " + std::to_string(s) + ", expected " + std::to_string(expected);
      return report;
    }
  }
  return report;
}

PropertyReport check_latin(const IntTensor& t, bool diagonal) {
  PropertyReport report{diagonal ? Property::DiagonalLatin : Property::Latin, true, {}, std::nullopt};
  const int d = t.dims();
  const int n = t.side();
  const std::size_t lines = t.size() / static_cast<std::size_t>(n);
  std::vector<int> digit(static_cast<std::size_t>(d));
  std::vector<std::size_t> path(static_cast<std::size_t>(n));
  for (int axis = 0; axis < d; ++axis) {
    std::size_t stride = 1;
    for (int a = axis + 1; a < d; ++a) stride *= static_cast<std::size_t>(n);
    for (std::size_t line = 0; line < lines; ++line) {
      // Rebuild the base flat index from the line id (coordinates of the
      // non-axis dimensions, row-major).
      std::size_t rem = line;
      for (int a = d - 1; a >= 0; --a) {
        if (a == axis) { digit[static_cast<std::size_t>(a)] = 0; continue; }
        digit[static_cast<std::size_t>(a)] = static_cast<int>(rem % static_cast<std::size_t>(n));
        rem /= static_cast<std::size_t>(n);
      }
      std::size_t base = 0;
      for (int a = 0; a < d; ++a)
        base = base * static_cast<std::size_t>(n) + static_cast<std::size_t>(digit[static_cast<std::size_t>(a)]);
      for (int i = 0; i < n; ++i) path[static_cast<std::size_t>(i)] = base + static_cast<std::size_t>(i) * stride;
      if (auto violation = permutation_violation(t, path); !violation.empty()) {
        report.holds = false;
        report.witness = axis_line_name(axis, line) + ": " + violation;
        return report;
      }
    }
  }
  if (diagonal) {
    for (const auto& [name, diag] : main_diagonals(d, n)) {
      if (auto violation = permutation_violation(t, diag); !violation.empty()) {
        report.holds = false;
        report.witness = name + ": " + violation;
        return report;
      }
    }
  }
  report.common_sum = static_cast<std::int64_t>(n) * (n - 1) / 2;
  return report;
}

PropertyReport check_pandiagonal(const IntTensor& m) {
  if (m.dims() != 2) throw std::invalid_argument("check_pandiagonal: input must be 2-D");
  PropertyReport report = check_semi_magic(m);
  report.property = Property::Pandiagonal;
  if (!report.holds) {
    report.witness = "no common line sum: " + report.witness;
    return report;
  }
  const int n = m.side();
  const std::int64_t expected = *report.common_sum;
  for (int offset = 0; offset < n; ++offset) {
    std::int64_t down_right = 0, down_left = 0;
    for (int i = 0; i < n; ++i) {
      down_right = detail::checked_add(down_right, m[static_cast<std::size_t>(i) * n + (i + offset) % n]);
      down_left = detail::checked_add(down_left, m[static_cast<std::size_t>(i) * n + ((offset - i) % n + n) % n]);
    }
    if (down_right != expected || down_left != expected) {
      const bool right = down_right != expected;
      report.holds = false;
      report.common_sum.reset();
      report.witness = std::string("broken diagonal (offset ") + std::to_string(offset) +
                       (right ? ", down-right)" : ", down-left)") + " sums to " +
                       std::to_string(right ? down_right : down_left) + ", expected " +
                       std::to_string(expected);
      return report;
    }
  }
  return report;
}

}  // namespace daa

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core/tensor.hpp"

namespace daa {

class UnknownNameError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A generalized arithmetic progression used as a GAPDA element set:
/// distinct non-negative integers, strictly increasing, starting at 0.
struct GapSequence {
  std::vector<std::int64_t> values;

  explicit GapSequence(std::vector<std::int64_t> v);
  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const GapSequence&, const GapSequence&) = default;
};

/// One catalog pair for a composite order N = |first|·|second|.
struct GapPairEntry {
  GapSequence first;
  GapSequence second;
};

struct GapTableRow {
  int order;           // N
  int compound_count;  // C_mn = 2 × pairs (forward + reverse per pair)
  std::vector<GapPairEntry> pairs;
};

/// True iff the sumset {a+b} has |ga|·|gb| distinct values equal to
/// {0,…,|ga|·|gb|−1}, i.e. the pair gives complete cover for order N.
bool check_cover_pair(const GapSequence& ga, const GapSequence& gb);

/// Substitutes gaps[rank] for each element of `base`, keeping its structure.
/// `base` must be a rank array: every value in 0..|gaps|−1, each appearing
/// equally often.
IntTensor pattern_map(const IntTensor& base, const GapSequence& gaps);

/// The built-in catalog of cover pairs for composite orders 4..16.
const std::vector<GapTableRow>& gap_table();

struct FixtureEntry {
  std::string name;
  IntTensor tensor;
  std::string provenance;
};

/// Named library of historical squares, Latin seeds and their compounds.
/// Lookup is case-insensitive; unknown names raise UnknownNameError listing
/// the available fixtures.
const FixtureEntry& fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// The six basic order-9 compound magic squares in standard form: the
/// aggregated and dispersed self-compounds of the order-3 square, then the
/// Koo-Soo-Ryak GAPDA compound and its perfect shuffle, then the remaining
/// GAPDA compound and its shuffle. All are magic with line sum 360 and full
/// cover 0..80.
std::array<IntTensor, 6> frierson_six();

}  // namespace daa

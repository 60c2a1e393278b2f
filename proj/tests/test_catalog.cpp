#include "core/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/compound.hpp"
#include "core/spectra.hpp"
#include "core/validate.hpp"
#include "doctest.h"

using daa::GapSequence;
using daa::IntTensor;

namespace {
const IntTensor& fx(const char* name) { return daa::fixture(name).tensor; }
GapSequence seq(std::vector<std::int64_t> v) { return GapSequence(std::move(v)); }
}  // namespace

TEST_CASE("gap sequence invariants") {
  CHECK_THROWS_AS(seq({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(seq({0, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(seq({}), std::invalid_argument);
}

TEST_CASE("cover pairs") {
  CHECK(daa::check_cover_pair(seq({0, 1, 2}), seq({0, 3})));
  CHECK_FALSE(daa::check_cover_pair(seq({0, 1}), seq({0, 1})));

  // The two order-9 magic GAPs cover 0..80; cross-check the sumset by hand.
  const auto ga = seq({0, 1, 2, 9, 10, 11, 18, 19, 20});
  const auto gb = seq({0, 3, 6, 27, 30, 33, 54, 57, 60});
  CHECK(daa::check_cover_pair(ga, gb));
  std::vector<std::int64_t> sums;
  for (auto a : ga.values)
    for (auto b : gb.values) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  CHECK(sums.front() == 0);
  CHECK(sums.back() == 80);
  CHECK(std::adjacent_find(sums.begin(), sums.end()) == sums.end());
}

TEST_CASE("pattern map") {
  const IntTensor& m3 = fx("lo_shu");
  CHECK(daa::pattern_map(m3, seq({0, 1, 2, 9, 10, 11, 18, 19, 20})) == fx("k0"));
  CHECK(daa::pattern_map(m3, seq({0, 3, 6, 27, 30, 33, 54, 57, 60})) == fx("k1"));
  CHECK(daa::pattern_map(m3, seq({0, 1, 2, 3, 4, 5, 6, 7, 8})) == m3);

  // Block offsets of the second Frierson GAPDA pair.
  CHECK(daa::pattern_map(m3, seq({0, 3, 6, 9, 12, 15, 18, 21, 24})) == fx("cb1"));
  CHECK(daa::pattern_map(m3, seq({0, 1, 2, 27, 28, 29, 54, 55, 56})) == fx("cb0"));

  // Latin base: each rank appears side times.
  CHECK(daa::pattern_map(fx("l3"), seq({0, 2, 4})) ==
        IntTensor(2, 3, {0, 2, 4, 2, 4, 0, 4, 0, 2}));

  CHECK_THROWS_AS(daa::pattern_map(m3, seq({0, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(daa::pattern_map(fx("k0"), seq({0, 1, 2, 3, 4, 5, 6, 7, 8})),
                  std::invalid_argument);
}

TEST_CASE("pattern map of an arithmetic progression stays magic") {
  const IntTensor& m3 = fx("lo_shu");
  for (std::int64_t step : {1, 2, 3, 7}) {
    std::vector<std::int64_t> ap;
    for (std::int64_t i = 0; i < 9; ++i) ap.push_back(i * step);
    CHECK(daa::check_magic(daa::pattern_map(m3, seq(std::move(ap)))).holds);
  }
  for (const char* name : {"k0", "k1", "cb0", "cb1"}) CHECK(daa::check_magic(fx(name)).holds);
}

TEST_CASE("gap table contents") {
  const auto& table = daa::gap_table();
  REQUIRE(table.size() == 9);

  std::vector<int> orders;
  for (const auto& row : table) orders.push_back(row.order);
  CHECK(orders == std::vector<int>{4, 6, 8, 9, 10, 12, 14, 15, 16});

  for (const auto& row : table) {
    CHECK(row.compound_count == 2 * static_cast<int>(row.pairs.size()));
    for (const auto& pair : row.pairs) {
      CHECK(static_cast<int>(pair.first.size() * pair.second.size()) == row.order);
      CHECK(daa::check_cover_pair(pair.first, pair.second));
    }
  }

  const auto& row12 = table[5];
  REQUIRE(row12.order == 12);
  CHECK(row12.compound_count == 8);
  REQUIRE(row12.pairs.size() == 4);
  CHECK(row12.pairs[2].first == seq({0, 1, 2, 3}));
  CHECK(row12.pairs[2].second == seq({0, 4, 8}));

  const auto& row9 = table[3];
  REQUIRE(row9.order == 9);
  CHECK(row9.compound_count == 2);
  REQUIRE(row9.pairs.size() == 1);
  CHECK(row9.pairs[0].first == seq({0, 1, 2}));
  CHECK(row9.pairs[0].second == seq({0, 3, 6}));

  const auto& row16 = table[8];
  REQUIRE(row16.order == 16);
  CHECK(row16.compound_count == 10);
  CHECK(row16.pairs.size() == 5);
}

TEST_CASE("every catalog pair yields a full-cover compound Latin square") {
  auto cyclic = [](int s) {
    std::vector<std::int64_t> data;
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) data.push_back((i + j) % s);
    return IntTensor(2, s, std::move(data));
  };
  for (const auto& row : daa::gap_table()) {
    for (const auto& pair : row.pairs) {
      const IntTensor block = daa::pattern_map(cyclic(static_cast<int>(pair.second.size())),
                                               pair.second);
      const IntTensor inner = daa::pattern_map(cyclic(static_cast<int>(pair.first.size())),
                                               pair.first);
      const IntTensor c = daa::compound_gapda(block, inner);
      CHECK(c.side() == row.order);
      CHECK(daa::check_latin(c, false).holds);
      CHECK(daa::check_full_cover(c, 1).holds);
      // the reverse order is a perfect shuffle, Latin as well
      const IntTensor r = daa::compound_gapda(inner, block);
      CHECK(daa::check_latin(r, false).holds);
    }
  }
}

TEST_CASE("fixture lookup") {
  CHECK(fx("lo_shu") == IntTensor(2, 3, {3, 8, 1, 2, 4, 6, 7, 0, 5}));
  CHECK(fx("m4") == IntTensor(2, 4, {4, 3, 15, 8, 10, 13, 1, 6, 9, 14, 2, 5, 7, 0, 12, 11}));
  CHECK(fx("LO_SHU") == fx("lo_shu"));
  CHECK(daa::fixture("ksr").provenance.find("Koo-Soo-Ryak") != std::string::npos);
  CHECK(daa::fixture_names().size() == 19);
  try {
    daa::fixture("nope");
    FAIL("expected UnknownNameError");
  } catch (const daa::UnknownNameError& e) {
    CHECK(std::string(e.what()).find("lo_shu") != std::string::npos);
  }
}

TEST_CASE("fixtures pass their recorded property profiles") {
  for (const char* name : {"lo_shu", "m4", "arabic", "yh", "ksr", "cb"}) {
    CHECK(daa::check_magic(fx(name)).holds);
    CHECK(daa::check_full_cover(fx(name), 2).holds);
  }
  for (const char* name : {"k0", "k1", "cb0", "cb1"}) {
    CHECK(daa::check_magic(fx(name)).holds);
    CHECK_FALSE(daa::check_full_cover(fx(name), 2).holds);
  }
  for (const char* name : {"l2", "l3", "l6a", "l6d", "l6ar", "l6dr", "latin_cube",
                           "latin_cube_agg", "latin_cube_disp"}) {
    CHECK(daa::check_latin(fx(name), false).holds);
    CHECK(daa::check_full_cover(fx(name), 1).holds);
  }
}

TEST_CASE("frierson six") {
  const auto six = daa::frierson_six();
  CHECK(six[0] == fx("arabic"));
  CHECK(six[1] == fx("yh"));
  CHECK(six[2] == fx("ksr"));
  CHECK(six[4] == fx("cb"));
  for (const auto& square : six) {
    const auto report = daa::check_magic(square);
    REQUIRE(report.holds);
    CHECK(report.common_sum == 360);
    CHECK(daa::check_full_cover(square, 2).holds);
  }

  std::vector<mpz_class> r_values;
  for (const auto& square : six) r_values.push_back(daa::r_index(square));
  std::sort(r_values.begin(), r_values.end());
  const std::vector<mpz_class> expected{797281056, 797281056, 842630688,
                                        842630688, 1301165856, 1301165856};
  CHECK(r_values == expected);
}

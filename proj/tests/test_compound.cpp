#include "core/compound.hpp"

#include <random>
#include <stdexcept>

#include "core/catalog.hpp"
#include "core/validate.hpp"
#include "doctest.h"
#include "oracles.hpp"

using daa::IntTensor;
using daa::Variant;

namespace {
const IntTensor& fx(const char* name) { return daa::fixture(name).tensor; }
}  // namespace

TEST_CASE("compounding reproduces the historical fixtures") {
  const IntTensor& m3 = fx("lo_shu");
  CHECK(compound(m3, m3, 2, Variant::Aggregated) == fx("arabic"));
  CHECK(compound(m3, m3, 2, Variant::Dispersed) == fx("yh"));

  const IntTensor& l2 = fx("l2");
  const IntTensor& l3 = fx("l3");
  CHECK(compound(l2, l3, 1, Variant::Aggregated) == fx("l6a"));
  CHECK(compound(l2, l3, 1, Variant::Dispersed) == fx("l6d"));
  CHECK(compound(l2, l3, 1, Variant::ReverseAggregated) == fx("l6ar"));
  CHECK(compound(l2, l3, 1, Variant::ReverseDispersed) == fx("l6dr"));

  const IntTensor& cube = fx("latin_cube");
  CHECK(compound(cube, cube, 1, Variant::Aggregated) == fx("latin_cube_agg"));
  CHECK(compound(cube, cube, 1, Variant::Dispersed) == fx("latin_cube_disp"));
}

TEST_CASE("gapda compounding") {
  CHECK(daa::compound_gapda(fx("k1"), fx("k0")) == fx("ksr"));
  CHECK(daa::compound_gapda(fx("cb1"), fx("cb0")) == fx("cb"));

  // m=1 identity seed
  const IntTensor zero(2, 1, {0});
  CHECK(daa::compound_gapda(zero, fx("l3")) == fx("l3"));

  CHECK_THROWS_AS(daa::compound_gapda(fx("l2"), fx("latin_cube")), std::invalid_argument);
}

TEST_CASE("the order-12 aggregated compound matches its printed form") {
  const IntTensor expected(2, 12, {39, 44, 37, 30, 35, 28, 138, 143, 136, 75, 80, 73,
                                   38, 40, 42, 29, 31, 33, 137, 139, 141, 74, 76, 78,
                                   43, 36, 41, 34, 27, 32, 142, 135, 140, 79, 72, 77,
                                   93, 98, 91, 120, 125, 118, 12, 17, 10, 57, 62, 55,
                                   92, 94, 96, 119, 121, 123, 11, 13, 15, 56, 58, 60,
                                   97, 90, 95, 124, 117, 122, 16, 9, 14, 61, 54, 59,
                                   84, 89, 82, 129, 134, 127, 21, 26, 19, 48, 53, 46,
                                   83, 85, 87, 128, 130, 132, 20, 22, 24, 47, 49, 51,
                                   88, 81, 86, 133, 126, 131, 25, 18, 23, 52, 45, 50,
                                   66, 71, 64, 3, 8, 1, 111, 116, 109, 102, 107, 100,
                                   65, 67, 69, 2, 4, 6, 110, 112, 114, 101, 103, 105,
                                   70, 63, 68, 7, 0, 5, 115, 108, 113, 106, 99, 104});
  CHECK(compound(fx("m4"), fx("lo_shu"), 2, Variant::Aggregated) == expected);
}

TEST_CASE("compound line sum closed forms") {
  CHECK(daa::compound_linesum(3, 3, 2) == 360);
  CHECK(daa::compound_linesum(2, 3, 1) == 15);
  CHECK(daa::compound_linesum(4, 3, 2) == 858);
  for (std::int64_t m = 1; m <= 12; ++m)
    for (std::int64_t n = 1; n <= 12; ++n)
      for (std::int64_t k = 1; k <= 3; ++k)
        CHECK(daa::compound_linesum(m, n, k) == daa::magic_sum(m * n, k));
  CHECK_THROWS_AS(daa::compound_linesum(0, 3, 1), std::invalid_argument);
}

TEST_CASE("every line of an ISDA compound sums to the compound line sum") {
  struct Pair { const char* a; const char* b; int k; };
  for (const auto& [a, b, k] : {Pair{"l2", "l3", 1}, Pair{"lo_shu", "lo_shu", 2}, Pair{"m4", "lo_shu", 2}}) {
    const std::int64_t expected = daa::compound_linesum(fx(a).side(), fx(b).side(), k);
    for (Variant v : {Variant::Aggregated, Variant::Dispersed, Variant::ReverseAggregated,
                      Variant::ReverseDispersed}) {
      const auto report = daa::check_semi_magic(compound(fx(a), fx(b), k, v));
      REQUIRE(report.holds);
      CHECK(report.common_sum == expected);
    }
  }
}

TEST_CASE("full cover propagates through every ISDA variant") {
  struct Pair { const char* a; const char* b; int k; };
  for (const auto& [a, b, k] : {Pair{"l2", "l3", 1}, Pair{"lo_shu", "lo_shu", 2}, Pair{"m4", "lo_shu", 2}}) {
    for (Variant v : {Variant::Aggregated, Variant::Dispersed, Variant::ReverseAggregated,
                      Variant::ReverseDispersed})
      CHECK(daa::check_full_cover(compound(fx(a), fx(b), k, v), k).holds);
  }
}

TEST_CASE("reverse variants are shuffle conjugates of the forward ones") {
  std::mt19937_64 rng(31);
  struct Pair { const char* a; const char* b; int k; };
  for (const auto& [a, b, k] : {Pair{"l2", "l3", 1}, Pair{"lo_shu", "lo_shu", 2}, Pair{"m4", "lo_shu", 2}}) {
    const IntTensor& ta = fx(a);
    const IntTensor& tb = fx(b);
    const auto sigma = daa::shuffle_permutation(ta.side(), tb.side());
    CHECK(compound(ta, tb, k, Variant::ReverseAggregated) ==
          conjugate(compound(ta, tb, k, Variant::Aggregated), sigma));
    CHECK(compound(ta, tb, k, Variant::ReverseDispersed) ==
          conjugate(compound(ta, tb, k, Variant::Dispersed), sigma));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const IntTensor x = oracle::random_tensor(2, 2 + static_cast<int>(rng() % 3), -6, 6, rng);
    const IntTensor y = oracle::random_tensor(2, 2 + static_cast<int>(rng() % 3), -6, 6, rng);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto sigma = daa::shuffle_permutation(x.side(), y.side());
    CHECK(compound(x, y, k, Variant::ReverseAggregated) ==
          conjugate(compound(x, y, k, Variant::Aggregated), sigma));
    CHECK(compound(x, y, k, Variant::ReverseDispersed) ==
          conjugate(compound(x, y, k, Variant::Dispersed), sigma));
  }
}

TEST_CASE("identical seeds collapse the quartet") {
  for (const char* name : {"l2", "l3", "lo_shu"}) {
    const IntTensor& a = fx(name);
    const int k = name == std::string("lo_shu") ? 2 : 1;
    CHECK(compound(a, a, k, Variant::ReverseAggregated) == compound(a, a, k, Variant::Dispersed));
    CHECK(compound(a, a, k, Variant::ReverseDispersed) == compound(a, a, k, Variant::Aggregated));
  }
  // The dispersed self-compound of L_2, as displayed (rank-3 square).
  CHECK(compound(fx("l2"), fx("l2"), 1, Variant::Dispersed) ==
        IntTensor(2, 4, {0, 2, 1, 3,
                         2, 0, 3, 1,
                         1, 3, 0, 2,
                         3, 1, 2, 0}));
}

TEST_CASE("latin propagates through k=1 compounds") {
  std::mt19937_64 rng(37);
  const IntTensor& l2 = fx("l2");
  const IntTensor& l3 = fx("l3");
  for (int trial = 0; trial < 10; ++trial) {
    const IntTensor a = oracle::permute_rows_cols(l2, oracle::random_permutation(2, rng),
                                                  oracle::random_permutation(2, rng));
    const IntTensor b = oracle::permute_rows_cols(l3, oracle::random_permutation(3, rng),
                                                  oracle::random_permutation(3, rng));
    REQUIRE(daa::check_latin(a, false).holds);
    REQUIRE(daa::check_latin(b, false).holds);
    for (Variant v : {Variant::Aggregated, Variant::Dispersed, Variant::ReverseAggregated,
                      Variant::ReverseDispersed})
      CHECK(daa::check_latin(compound(a, b, 1, v), false).holds);
  }
}

TEST_CASE("magic propagates through k=2 compounds of magic seeds") {
  // The dihedral symmetries keep a square magic; use a few of them as seeds.
  auto rotate = [](const IntTensor& t) {
    const int n = t.side();
    std::vector<std::int64_t> out(t.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(i) * n + j] = t[static_cast<std::size_t>(n - 1 - j) * n + i];
    return IntTensor(2, n, std::move(out));
  };
  const IntTensor m3 = fx("lo_shu");
  const IntTensor m4 = fx("m4");
  const IntTensor seeds_a[] = {m3, rotate(m3), rotate(rotate(m3))};
  const IntTensor seeds_b[] = {m4, rotate(m4)};
  for (const auto& a : seeds_a)
    for (const auto& b : seeds_b) {
      REQUIRE(daa::check_magic(a).holds);
      REQUIRE(daa::check_magic(b).holds);
      for (Variant v : {Variant::Aggregated, Variant::Dispersed, Variant::ReverseAggregated,
                        Variant::ReverseDispersed})
        CHECK(daa::check_magic(compound(a, b, 2, v)).holds);
    }
}

TEST_CASE("gapda dominant combination equals the compound line sum") {
  const std::int64_t sa = line_sums(fx("k1"))[0][0];
  const std::int64_t sb = line_sums(fx("k0"))[0][0];
  CHECK(3 * sa + 3 * sb == daa::compound_linesum(3, 3, 2));
}

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::Aggregated, Variant::Dispersed, Variant::ReverseAggregated,
                    Variant::ReverseDispersed, Variant::Gapda})
    CHECK(daa::variant_from_name(daa::variant_name(v)) == v);
  CHECK_THROWS_AS(daa::variant_from_name("scattered"), std::invalid_argument);
}

#include "core/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "core/compound.hpp"

namespace daa {

GapSequence::GapSequence(std::vector<std::int64_t> v) : values(std::move(v)) {
  if (values.empty()) throw std::invalid_argument("gap sequence must be non-empty");
  if (values.front() != 0) throw std::invalid_argument("gap sequence must start at 0");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1])
      throw std::invalid_argument("gap sequence must be strictly increasing");
}

bool check_cover_pair(const GapSequence& ga, const GapSequence& gb) {
  std::vector<std::int64_t> sums;
  sums.reserve(ga.size() * gb.size());
  for (std::int64_t a : ga.values)
    for (std::int64_t b : gb.values) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (sums[i] != static_cast<std::int64_t>(i)) return false;
  return true;
}

IntTensor pattern_map(const IntTensor& base, const GapSequence& gaps) {
  const auto count = static_cast<std::int64_t>(gaps.size());
  if (base.size() % gaps.size() != 0)
    throw std::invalid_argument("pattern_map: gap count must divide the cell count");
  const std::size_t copies = base.size() / gaps.size();
  std::vector<std::size_t> seen(gaps.size(), 0);
  for (std::int64_t v : base.data()) {
    if (v < 0 || v >= count)
      throw std::invalid_argument("pattern_map: base element " + std::to_string(v) +
                                  " is not a rank in 0.." + std::to_string(count - 1));
    ++seen[static_cast<std::size_t>(v)];
  }
  for (std::size_t r = 0; r < gaps.size(); ++r)
    if (seen[r] != copies)
      throw std::invalid_argument("pattern_map: rank " + std::to_string(r) + " appears " +
                                  std::to_string(seen[r]) + " times, expected " +
                                  std::to_string(copies));
  std::vector<std::int64_t> out(base.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = gaps.values[static_cast<std::size_t>(base[i])];
  return IntTensor(base.dims(), base.side(), std::move(out));
}

namespace {

GapSequence seq(std::initializer_list<std::int64_t> v) { return GapSequence(std::vector<std::int64_t>(v)); }

std::vector<GapTableRow> build_gap_table() {
  std::vector<GapTableRow> rows;
  rows.push_back({4, 2, {{seq({0, 1}), seq({0, 2})}}});
  rows.push_back({6, 4, {{seq({0, 1, 2}), seq({0, 3})}, {seq({0, 2, 4}), seq({0, 1})}}});
  rows.push_back({8, 4, {{seq({0, 1, 2, 3}), seq({0, 4})}, {seq({0, 2, 4, 6}), seq({0, 1})}}});
  rows.push_back({9, 2, {{seq({0, 1, 2}), seq({0, 3, 6})}}});
  rows.push_back({10, 4, {{seq({0, 1, 2, 3, 4}), seq({0, 5})}, {seq({0, 2, 4, 6, 8}), seq({0, 1})}}});
  rows.push_back({12, 8,
                  {{seq({0, 1, 2, 3, 4, 5}), seq({0, 6})},
                   {seq({0, 2, 4, 6, 8, 10}), seq({0, 1})},
                   {seq({0, 1, 2, 3}), seq({0, 4, 8})},
                   {seq({0, 3, 6, 9}), seq({0, 1, 2})}}});
  rows.push_back({14, 4,
                  {{seq({0, 1, 2, 3, 4, 5, 6}), seq({0, 7})},
                   {seq({0, 2, 4, 6, 8, 10, 12}), seq({0, 1})}}});
  rows.push_back({15, 4,
                  {{seq({0, 1, 2, 3, 4}), seq({0, 5, 10})},
                   {seq({0, 3, 6, 9, 12}), seq({0, 1, 2})}}});
  rows.push_back({16, 10,
                  {{seq({0, 1, 2, 3, 4, 5, 6, 7}), seq({0, 8})},
                   {seq({0, 2, 4, 6, 8, 10, 12, 14}), seq({0, 1})},
                   {seq({0, 4, 8, 12}), seq({0, 1, 2, 3})},
                   {seq({0, 2, 8, 10}), seq({0, 1, 4, 5})},
                   {seq({0, 1, 8, 9}), seq({0, 2, 4, 6})}}});
  return rows;
}

IntTensor mat(int side, std::vector<std::int64_t> data) { return IntTensor(2, side, std::move(data)); }

std::vector<FixtureEntry> build_fixtures() {
  std::vector<FixtureEntry> fx;

  fx.push_back({"lo_shu",
                mat(3, {3, 8, 1,
                        2, 4, 6,
                        7, 0, 5}),
                "the unique order-3 magic square (Lo Shu), written over 0..8"});
  fx.push_back({"m4",
                mat(4, {4, 3, 15, 8,
                        10, 13, 1, 6,
                        9, 14, 2, 5,
                        7, 0, 12, 11}),
                "order-4 magic square with a single non-zero eigenvalue (rank 3)"});
  fx.push_back({"l2",
                mat(2, {0, 1,
                        1, 0}),
                "order-2 Latin square over {0,1}"});
  fx.push_back({"l3",
                mat(3, {0, 1, 2,
                        1, 2, 0,
                        2, 0, 1}),
                "cyclic order-3 Latin square"});
  fx.push_back({"l6a",
                mat(6, {0, 1, 2, 3, 4, 5,
                        1, 2, 0, 4, 5, 3,
                        2, 0, 1, 5, 3, 4,
                        3, 4, 5, 0, 1, 2,
                        4, 5, 3, 1, 2, 0,
                        5, 3, 4, 2, 0, 1}),
                "aggregated order-6 compound Latin square of seeds l2, l3"});
  fx.push_back({"l6d",
                mat(6, {0, 2, 4, 1, 3, 5,
                        2, 4, 0, 3, 5, 1,
                        4, 0, 2, 5, 1, 3,
                        1, 3, 5, 0, 2, 4,
                        3, 5, 1, 2, 4, 0,
                        5, 1, 3, 4, 0, 2}),
                "dispersed order-6 compound Latin square of seeds l2, l3"});
  fx.push_back({"l6ar",
                mat(6, {0, 3, 1, 4, 2, 5,
                        3, 0, 4, 1, 5, 2,
                        1, 4, 2, 5, 0, 3,
                        4, 1, 5, 2, 3, 0,
                        2, 5, 0, 3, 1, 4,
                        5, 2, 3, 0, 4, 1}),
                "reverse-aggregated order-6 compound; perfect shuffle of l6a"});
  fx.push_back({"l6dr",
                mat(6, {0, 1, 2, 3, 4, 5,
                        1, 0, 3, 2, 5, 4,
                        2, 3, 4, 5, 0, 1,
                        3, 2, 5, 4, 1, 0,
                        4, 5, 0, 1, 2, 3,
                        5, 4, 1, 0, 3, 2}),
                "reverse-dispersed order-6 compound; perfect shuffle of l6d"});
  fx.push_back({"arabic",
                mat(9, {30, 35, 28, 75, 80, 73, 12, 17, 10,
                        29, 31, 33, 74, 76, 78, 11, 13, 15,
                        34, 27, 32, 79, 72, 77, 16, 9, 14,
                        21, 26, 19, 39, 44, 37, 57, 62, 55,
                        20, 22, 24, 38, 40, 42, 56, 58, 60,
                        25, 18, 23, 43, 36, 41, 61, 54, 59,
                        66, 71, 64, 3, 8, 1, 48, 53, 46,
                        65, 67, 69, 2, 4, 6, 47, 49, 51,
                        70, 63, 68, 7, 0, 5, 52, 45, 50}),
                "aggregated order-9 compound magic square; earliest examples pre-1000 CE"});
  fx.push_back({"yh",
                mat(9, {30, 75, 12, 35, 80, 17, 28, 73, 10,
                        21, 39, 57, 26, 44, 62, 19, 37, 55,
                        66, 3, 48, 71, 8, 53, 64, 1, 46,
                        29, 74, 11, 31, 76, 13, 33, 78, 15,
                        20, 38, 56, 22, 40, 58, 24, 42, 60,
                        65, 2, 47, 67, 4, 49, 69, 6, 51,
                        34, 79, 16, 27, 72, 9, 32, 77, 14,
                        25, 43, 61, 18, 36, 54, 23, 41, 59,
                        70, 7, 52, 63, 0, 45, 68, 5, 50}),
                "dispersed order-9 compound magic square (Yang Hui, 1275 CE)"});
  fx.push_back({"ksr",
                mat(9, {36, 47, 28, 69, 80, 61, 12, 23, 4,
                        29, 37, 45, 62, 70, 78, 5, 13, 21,
                        46, 27, 38, 79, 60, 71, 22, 3, 14,
                        15, 26, 7, 39, 50, 31, 63, 74, 55,
                        8, 16, 24, 32, 40, 48, 56, 64, 72,
                        25, 6, 17, 49, 30, 41, 73, 54, 65,
                        66, 77, 58, 9, 20, 1, 42, 53, 34,
                        59, 67, 75, 2, 10, 18, 35, 43, 51,
                        76, 57, 68, 19, 0, 11, 52, 33, 44}),
                "Koo-Soo-Ryak square (Choi Seok-Jeong, 1645-1715); GAPDA compound of k1, k0"});
  fx.push_back({"k0",
                mat(3, {9, 20, 1,
                        2, 10, 18,
                        19, 0, 11}),
                "GAPDA seed {0,1,2,9,10,11,18,19,20} in Lo Shu arrangement"});
  fx.push_back({"k1",
                mat(3, {27, 60, 3,
                        6, 30, 54,
                        57, 0, 33}),
                "GAPDA seed {0,3,6,27,30,33,54,57,60} in Lo Shu arrangement"});
  fx.push_back({"cb",
                mat(9, {36, 65, 10, 51, 80, 25, 30, 59, 4,
                        11, 37, 63, 26, 52, 78, 5, 31, 57,
                        64, 9, 38, 79, 24, 53, 58, 3, 32,
                        33, 62, 7, 39, 68, 13, 45, 74, 19,
                        8, 34, 60, 14, 40, 66, 20, 46, 72,
                        61, 6, 35, 67, 12, 41, 73, 18, 47,
                        48, 77, 22, 27, 56, 1, 42, 71, 16,
                        23, 49, 75, 2, 28, 54, 17, 43, 69,
                        76, 21, 50, 55, 0, 29, 70, 15, 44}),
                "Frierson's order-9 compound; GAPDA compound of cb1, cb0"});
  fx.push_back({"cb0",
                mat(3, {27, 56, 1,
                        2, 28, 54,
                        55, 0, 29}),
                "GAPDA seed {0,1,2,27,28,29,54,55,56} in Lo Shu arrangement"});
  fx.push_back({"cb1",
                mat(3, {9, 24, 3,
                        6, 12, 18,
                        21, 0, 15}),
                "GAPDA seed {0,3,6,9,12,15,18,21,24} in Lo Shu arrangement"});
  fx.push_back({"latin_cube",
                IntTensor(3, 2, {0, 1,
                                 1, 0,

                                 1, 0,
                                 0, 1}),
                "order-2 Latin cube seed (two layers)"});
  fx.push_back({"latin_cube_agg",
                IntTensor(3, 4, {0, 1, 2, 3,
                                 1, 0, 3, 2,
                                 2, 3, 0, 1,
                                 3, 2, 1, 0,

                                 1, 0, 3, 2,
                                 0, 1, 2, 3,
                                 3, 2, 1, 0,
                                 2, 3, 0, 1,

                                 2, 3, 0, 1,
                                 3, 2, 1, 0,
                                 0, 1, 2, 3,
                                 1, 0, 3, 2,

                                 3, 2, 1, 0,
                                 2, 3, 0, 1,
                                 1, 0, 3, 2,
                                 0, 1, 2, 3}),
                "aggregated order-4 compound Latin cube (latin_cube with itself)"});
  fx.push_back({"latin_cube_disp",
                IntTensor(3, 4, {0, 2, 1, 3,
                                 2, 0, 3, 1,
                                 1, 3, 0, 2,
                                 3, 1, 2, 0,

                                 2, 0, 3, 1,
                                 0, 2, 1, 3,
                                 3, 1, 2, 0,
                                 1, 3, 0, 2,

                                 1, 3, 0, 2,
                                 3, 1, 2, 0,
                                 0, 2, 1, 3,
                                 2, 0, 3, 1,

                                 3, 1, 2, 0,
                                 1, 3, 0, 2,
                                 2, 0, 3, 1,
                                 0, 2, 1, 3}),
                "dispersed order-4 compound Latin cube (latin_cube with itself)"});
  return fx;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

const std::vector<FixtureEntry>& all_fixtures() {
  static const std::vector<FixtureEntry> fx = build_fixtures();
  return fx;
}

}  // namespace

const std::vector<GapTableRow>& gap_table() {
  static const std::vector<GapTableRow> table = build_gap_table();
  return table;
}

const FixtureEntry& fixture(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& entry : all_fixtures())
    if (entry.name == key) return entry;
  std::string msg = "unknown fixture '" + std::string(name) + "'; available:";
  for (const auto& entry : all_fixtures()) msg += " " + entry.name;
  throw UnknownNameError(msg);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  names.reserve(all_fixtures().size());
  for (const auto& entry : all_fixtures()) names.push_back(entry.name);
  return names;
}

std::array<IntTensor, 6> frierson_six() {
  const IntTensor& m3 = fixture("lo_shu").tensor;
  const IntTensor& k0 = fixture("k0").tensor;
  const IntTensor& k1 = fixture("k1").tensor;
  const IntTensor& cb0 = fixture("cb0").tensor;
  const IntTensor& cb1 = fixture("cb1").tensor;
  const IndexPermutation sigma = shuffle_permutation(3, 3);

  IntTensor ca = compound(m3, m3, 2, Variant::Aggregated);
  IntTensor cd = compound(m3, m3, 2, Variant::Dispersed);
  IntTensor cc = compound_gapda(k1, k0);
  IntTensor cc_shuffled = conjugate(cc, sigma);
  IntTensor cb = compound_gapda(cb1, cb0);
  IntTensor cb_shuffled = conjugate(cb, sigma);
  return {std::move(ca), std::move(cd),          std::move(cc),
          std::move(cc_shuffled), std::move(cb), std::move(cb_shuffled)};
}

}  // namespace daa

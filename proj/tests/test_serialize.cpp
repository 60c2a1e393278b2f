#include "core/serialize.hpp"

#include "core/catalog.hpp"
#include "doctest.h"

using daa::IntTensor;
using daa::TensorDocument;

namespace {
const IntTensor& fx(const char* name) { return daa::fixture(name).tensor; }
}  // namespace

TEST_CASE("json round trip over the fixture library") {
  for (const auto& name : daa::fixture_names()) {
    const IntTensor& t = fx(name.c_str());
    const auto back = daa::from_json(daa::to_json({t, name, std::nullopt}));
    CHECK(back.tensor == t);
    CHECK(back.name == name);
    CHECK_FALSE(back.recipe.has_value());
  }
}

TEST_CASE("json recipe echo round trip") {
  daa::CompoundRecipe recipe;
  recipe.variant = daa::Variant::ReverseDispersed;
  recipe.k = 2;
  recipe.m = 3;
  recipe.n = 3;
  recipe.seed_a = "lo_shu";
  recipe.seed_b = "lo_shu";
  const auto back = daa::from_json(daa::to_json({fx("yh"), std::nullopt, recipe}));
  REQUIRE(back.recipe.has_value());
  CHECK(back.recipe->variant == daa::Variant::ReverseDispersed);
  CHECK(back.recipe->k == 2);
  CHECK(back.recipe->m == 3);
  CHECK(back.recipe->seed_a == "lo_shu");
}

TEST_CASE("text round trip") {
  for (const char* name : {"lo_shu", "ksr", "latin_cube", "latin_cube_agg"}) {
    const IntTensor& t = fx(name);
    CHECK(daa::from_text(daa::to_text(t)) == t);
  }
  CHECK(daa::to_text(fx("lo_shu")) == "3 8 1\n2 4 6\n7 0 5\n");
}

TEST_CASE("text parsing tolerates padding and CR line endings") {
  CHECK(daa::from_text("  3 8 1 \r\n2 4 6\r\n7 0 5\r\n\n") == fx("lo_shu"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(daa::from_json("not json"), daa::ParseError);
  CHECK_THROWS_AS(daa::from_json("{\"dims\":2,\"side\":2}"), daa::ParseError);
  CHECK_THROWS_AS(daa::from_json("{\"dims\":2,\"side\":2,\"data\":[1,2,3]}"), std::exception);
  CHECK_THROWS_AS(daa::from_json("{\"dims\":2,\"side\":1,\"data\":[1.5]}"), daa::ParseError);
  CHECK_THROWS_AS(daa::from_text("1 2 3\n4 5 6\n"), daa::ParseError);  // not square
  CHECK_THROWS_AS(daa::from_text("1 2\n3\n"), daa::ParseError);        // ragged
  CHECK_THROWS_AS(daa::from_text("1 x\n3 4\n"), daa::ParseError);      // bad token
  CHECK_THROWS_AS(daa::from_text("  \n \n"), daa::ParseError);         // empty
  // two layers of a would-be cube need side 2, not 3 rows
  CHECK_THROWS_AS(daa::from_text("1 2 3\n4 5 6\n7 8 9\n\n1 2 3\n4 5 6\n7 8 9\n"),
                  daa::ParseError);
  CHECK_THROWS_AS(daa::to_text(IntTensor(4, 2, std::vector<std::int64_t>(16, 0))),
                  std::invalid_argument);
}

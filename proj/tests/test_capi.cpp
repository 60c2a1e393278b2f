// Exercises the shared-library surface the way an external consumer would:
// opaque handles, status codes, and decimal strings only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <vector>

#include "daa/daa.h"
#include "doctest.h"

namespace {

struct Tensor {
  daa_tensor* t = nullptr;
  ~Tensor() { daa_tensor_free(t); }
};

struct Poly {
  daa_poly* p = nullptr;
  ~Poly() { daa_poly_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  daa_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("tensor lifecycle and errors") {
  const int64_t lo_shu[] = {3, 8, 1, 2, 4, 6, 7, 0, 5};
  Tensor t;
  REQUIRE(daa_tensor_create(2, 3, lo_shu, 9, &t.t) == DAA_OK);
  CHECK(daa_tensor_dims(t.t) == 2);
  CHECK(daa_tensor_side(t.t) == 3);
  CHECK(daa_tensor_count(t.t) == 9);

  int64_t buf[9];
  REQUIRE(daa_tensor_copy_data(t.t, buf, 9) == DAA_OK);
  CHECK(std::memcmp(buf, lo_shu, sizeof lo_shu) == 0);
  CHECK(daa_tensor_copy_data(t.t, buf, 4) == DAA_ERR_BUFFER_TOO_SMALL);

  daa_tensor* bad = nullptr;
  CHECK(daa_tensor_create(2, 3, lo_shu, 8, &bad) == DAA_ERR_INVALID_ARGUMENT);
  CHECK(std::string(daa_last_error()).find("does not match") != std::string::npos);
  CHECK(daa_tensor_create(2, 3, nullptr, 9, &bad) == DAA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("fixtures and compounding through the C surface") {
  Tensor m3, arabic, built;
  REQUIRE(daa_fixture("lo_shu", &m3.t) == DAA_OK);
  REQUIRE(daa_fixture("arabic", &arabic.t) == DAA_OK);
  REQUIRE(daa_compound(m3.t, m3.t, 2, DAA_VARIANT_AGGREGATED, &built.t) == DAA_OK);
  CHECK(daa_tensor_equal(built.t, arabic.t) == 1);

  Tensor k0, k1, ksr, gap;
  REQUIRE(daa_fixture("k0", &k0.t) == DAA_OK);
  REQUIRE(daa_fixture("k1", &k1.t) == DAA_OK);
  REQUIRE(daa_fixture("ksr", &ksr.t) == DAA_OK);
  REQUIRE(daa_compound(k1.t, k0.t, 0, DAA_VARIANT_GAPDA, &gap.t) == DAA_OK);
  CHECK(daa_tensor_equal(gap.t, ksr.t) == 1);

  daa_tensor* missing = nullptr;
  CHECK(daa_fixture("nope", &missing) == DAA_ERR_UNKNOWN_NAME);
  CHECK(std::string(daa_last_error()).find("lo_shu") != std::string::npos);

  char* prov = nullptr;
  REQUIRE(daa_fixture_provenance("yh", &prov) == DAA_OK);
  CHECK(take(prov).find("Yang Hui") != std::string::npos);
  CHECK(daa_fixture_count() >= 14);
}

TEST_CASE("shuffle duality via the C surface") {
  Tensor arabic, yh, shuffled;
  REQUIRE(daa_fixture("arabic", &arabic.t) == DAA_OK);
  REQUIRE(daa_fixture("yh", &yh.t) == DAA_OK);
  REQUIRE(daa_shuffle(arabic.t, 3, &shuffled.t) == DAA_OK);
  CHECK(daa_tensor_equal(shuffled.t, yh.t) == 1);

  daa_tensor* bad = nullptr;
  CHECK(daa_shuffle(arabic.t, 2, &bad) == DAA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("checks, sums, and witnesses") {
  Tensor ksr;
  REQUIRE(daa_fixture("ksr", &ksr.t) == DAA_OK);
  int holds = 0;
  char* witness = nullptr;
  REQUIRE(daa_check(ksr.t, DAA_PROP_MAGIC, 0, &holds, &witness) == DAA_OK);
  CHECK(holds == 1);
  CHECK(take(witness).empty());

  Tensor l3;
  REQUIRE(daa_fixture("l3", &l3.t) == DAA_OK);
  REQUIRE(daa_check(l3.t, DAA_PROP_MAGIC, 0, &holds, &witness) == DAA_OK);
  CHECK(holds == 0);
  CHECK_FALSE(take(witness).empty());

  int64_t sum = 0;
  REQUIRE(daa_line_sum(ksr.t, &sum) == DAA_OK);
  CHECK(sum == 360);
  int64_t sums[9];
  REQUIRE(daa_line_sums(ksr.t, 1, sums, 9) == DAA_OK);
  for (int i = 0; i < 9; ++i) CHECK(sums[i] == 360);

  int64_t magic = 0;
  REQUIRE(daa_magic_sum(9, 2, &magic) == DAA_OK);
  CHECK(magic == 360);
  int64_t cls = 0;
  REQUIRE(daa_compound_line_sum(4, 3, 2, &cls) == DAA_OK);
  CHECK(cls == 858);

  const int64_t ga[] = {0, 1, 2};
  const int64_t gb[] = {0, 3};
  int covers = 0;
  REQUIRE(daa_check_cover_pair(ga, 3, gb, 2, &covers) == DAA_OK);
  CHECK(covers == 1);
}

TEST_CASE("spectra through the C surface") {
  Tensor l6a;
  REQUIRE(daa_fixture("l6a", &l6a.t) == DAA_OK);

  int rank = 0;
  REQUIRE(daa_rank(l6a.t, &rank) == DAA_OK);
  CHECK(rank == 4);

  char* r = nullptr;
  REQUIRE(daa_r_index(l6a.t, &r) == DAA_OK);
  CHECK(take(r) == "6849");

  Poly cp;
  REQUIRE(daa_charpoly(l6a.t, &cp.p) == DAA_OK);
  CHECK(daa_poly_degree(cp.p) == 6);
  char* c0 = nullptr;
  REQUIRE(daa_poly_coeff(cp.p, 2, &c0) == DAA_OK);
  CHECK(take(c0) == "1620");

  Poly gp;
  REQUIRE(daa_gramian_charpoly(l6a.t, &gp.p) == DAA_OK);
  int64_t roots[6];
  size_t count = 0;
  int splits = 0;
  REQUIRE(daa_poly_integer_roots(gp.p, roots, 6, &count, &splits) == DAA_OK);
  REQUIRE(splits == 1);
  REQUIRE(count == 6);
  const int64_t expected[] = {225, 81, 12, 12, 0, 0};
  for (int i = 0; i < 6; ++i) CHECK(roots[i] == expected[i]);

  Tensor l2, l3;
  REQUIRE(daa_fixture("l2", &l2.t) == DAA_OK);
  REQUIRE(daa_fixture("l3", &l3.t) == DAA_OK);
  int eigen = 0, sv = 0;
  REQUIRE(daa_verify_prediction(l6a.t, l2.t, l3.t, 1, DAA_VARIANT_AGGREGATED, &eigen, &sv) ==
          DAA_OK);
  CHECK(eigen == 1);
  CHECK(sv == 1);

  int annihilated = 0;
  REQUIRE(daa_annihilation_check(l2.t, l3.t, 50, 77, &annihilated) == DAA_OK);
  CHECK(annihilated == 1);

  // poly helpers
  Poly scaled, divided;
  REQUIRE(daa_poly_divide_by_linear(cp.p, 15, &divided.p) == DAA_OK);
  CHECK(daa_poly_degree(divided.p) == 5);
  REQUIRE(daa_poly_scale_roots(divided.p, 2, &scaled.p) == DAA_OK);
  daa_poly* err = nullptr;
  CHECK(daa_poly_divide_by_linear(cp.p, 14, &err) == DAA_ERR_PRECONDITION);
}

TEST_CASE("gap table through the C surface") {
  CHECK(daa_gap_table_size() == 9);
  int order = 0, compounds = 0;
  size_t pairs = 0;
  REQUIRE(daa_gap_table_row(5, &order, &compounds, &pairs) == DAA_OK);
  CHECK(order == 12);
  CHECK(compounds == 8);
  CHECK(pairs == 4);
  int64_t buf[8];
  size_t len = 0;
  REQUIRE(daa_gap_table_pair(5, 2, 1, buf, 8, &len) == DAA_OK);
  REQUIRE(len == 3);
  CHECK(buf[0] == 0);
  CHECK(buf[1] == 4);
  CHECK(buf[2] == 8);
}

TEST_CASE("frierson six through the C surface") {
  daa_tensor* six[6] = {};
  REQUIRE(daa_frierson_six(six) == DAA_OK);
  Tensor ksr;
  REQUIRE(daa_fixture("ksr", &ksr.t) == DAA_OK);
  CHECK(daa_tensor_equal(six[2], ksr.t) == 1);
  for (auto* t : six) daa_tensor_free(t);
}

TEST_CASE("serialization through the C surface") {
  Tensor yh;
  REQUIRE(daa_fixture("yh", &yh.t) == DAA_OK);
  daa_recipe recipe{};
  recipe.variant = DAA_VARIANT_DISPERSED;
  recipe.k = 2;
  recipe.m = 3;
  recipe.n = 3;
  std::snprintf(recipe.seed_a, sizeof(recipe.seed_a), "lo_shu");
  std::snprintf(recipe.seed_b, sizeof(recipe.seed_b), "lo_shu");

  char* json = nullptr;
  REQUIRE(daa_tensor_to_json(yh.t, "yh", &recipe, &json) == DAA_OK);
  const std::string doc = take(json);

  Tensor back;
  daa_recipe parsed{};
  int has_recipe = 0;
  REQUIRE(daa_tensor_from_json(doc.c_str(), &back.t, &parsed, &has_recipe) == DAA_OK);
  CHECK(daa_tensor_equal(back.t, yh.t) == 1);
  REQUIRE(has_recipe == 1);
  CHECK(parsed.variant == DAA_VARIANT_DISPERSED);
  CHECK(std::string(parsed.seed_a) == "lo_shu");

  char* text = nullptr;
  REQUIRE(daa_tensor_to_text(yh.t, &text) == DAA_OK);
  Tensor back2;
  const std::string plain = take(text);
  REQUIRE(daa_tensor_from_text(plain.c_str(), &back2.t) == DAA_OK);
  CHECK(daa_tensor_equal(back2.t, yh.t) == 1);

  daa_tensor* bad = nullptr;
  CHECK(daa_tensor_from_json("{]", &bad, nullptr, nullptr) == DAA_ERR_PARSE);
  CHECK(daa_tensor_from_text("1 2 3\n4 5\n", &bad) == DAA_ERR_PARSE);

  daa_variant v;
  REQUIRE(daa_variant_from_name("rev-aggregated", &v) == DAA_OK);
  CHECK(v == DAA_VARIANT_REV_AGGREGATED);
  CHECK(std::string(daa_variant_name(v)) == "rev-aggregated");
  CHECK(daa_variant_from_name("bogus", &v) == DAA_ERR_INVALID_ARGUMENT);
}

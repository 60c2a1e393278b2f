#include "daa/daa.h"

#include <cstring>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "core/catalog.hpp"
#include "core/compound.hpp"
#include "core/poly.hpp"
#include "core/serialize.hpp"
#include "core/spectra.hpp"
#include "core/tensor.hpp"
#include "core/validate.hpp"

struct daa_tensor {
  daa::IntTensor value;
};

struct daa_poly {
  daa::IntPoly value;
};

namespace {

thread_local std::string g_last_error;

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
daa_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return DAA_OK;
  } catch (const BufferTooSmall& e) {
    g_last_error = e.what();
    return DAA_ERR_BUFFER_TOO_SMALL;
  } catch (const daa::UnknownNameError& e) {
    g_last_error = e.what();
    return DAA_ERR_UNKNOWN_NAME;
  } catch (const daa::ParseError& e) {
    g_last_error = e.what();
    return DAA_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DAA_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return DAA_ERR_PRECONDITION;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return DAA_ERR_OVERFLOW;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return DAA_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DAA_ERR_NO_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DAA_ERR_INTERNAL;
  }
}

daa_status fail(daa_status code, const char* message) noexcept {
  g_last_error = message;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

daa::Variant to_variant(daa_variant v) {
  switch (v) {
    case DAA_VARIANT_AGGREGATED: return daa::Variant::Aggregated;
    case DAA_VARIANT_DISPERSED: return daa::Variant::Dispersed;
    case DAA_VARIANT_REV_AGGREGATED: return daa::Variant::ReverseAggregated;
    case DAA_VARIANT_REV_DISPERSED: return daa::Variant::ReverseDispersed;
    case DAA_VARIANT_GAPDA: return daa::Variant::Gapda;
  }
  throw std::invalid_argument("unknown variant code");
}

daa_variant from_variant(daa::Variant v) {
  switch (v) {
    case daa::Variant::Aggregated: return DAA_VARIANT_AGGREGATED;
    case daa::Variant::Dispersed: return DAA_VARIANT_DISPERSED;
    case daa::Variant::ReverseAggregated: return DAA_VARIANT_REV_AGGREGATED;
    case daa::Variant::ReverseDispersed: return DAA_VARIANT_REV_DISPERSED;
    case daa::Variant::Gapda: return DAA_VARIANT_GAPDA;
  }
  throw std::logic_error("unknown variant");
}

daa::Property to_property(daa_property p) {
  switch (p) {
    case DAA_PROP_FULL_COVER: return daa::Property::FullCover;
    case DAA_PROP_SEMI_MAGIC: return daa::Property::SemiMagic;
    case DAA_PROP_MAGIC: return daa::Property::Magic;
    case DAA_PROP_LATIN: return daa::Property::Latin;
    case DAA_PROP_DIAGONAL_LATIN: return daa::Property::DiagonalLatin;
    case DAA_PROP_PANDIAGONAL: return daa::Property::Pandiagonal;
  }
  throw std::invalid_argument("unknown property code");
}

void copy_seed_name(char (&dst)[128], const std::string& src) {
  const std::size_t n = std::min(src.size(), sizeof(dst) - 1);
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

}  // namespace

extern "C" {

const char* daa_version(void) { return "1.0.0"; }

const char* daa_status_name(daa_status status) {
  switch (status) {
    case DAA_OK: return "ok";
    case DAA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DAA_ERR_PRECONDITION: return "precondition not met";
    case DAA_ERR_OVERFLOW: return "overflow";
    case DAA_ERR_PARSE: return "parse error";
    case DAA_ERR_UNKNOWN_NAME: return "unknown name";
    case DAA_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case DAA_ERR_NO_MEMORY: return "out of memory";
    case DAA_ERR_INTERNAL: return "internal error";
  }
  return "?";
}

const char* daa_last_error(void) { return g_last_error.c_str(); }

void daa_string_free(char* s) { delete[] s; }

daa_status daa_tensor_create(int dims, int side, const int64_t* data, size_t count,
                             daa_tensor** out) {
  if (!data || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    *out = new daa_tensor{daa::IntTensor(dims, side, std::vector<std::int64_t>(data, data + count))};
  });
}

daa_status daa_tensor_ones(int dims, int side, daa_tensor** out) {
  if (!out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = new daa_tensor{daa::IntTensor::ones(dims, side)}; });
}

void daa_tensor_free(daa_tensor* t) { delete t; }

int daa_tensor_dims(const daa_tensor* t) { return t ? t->value.dims() : 0; }

int daa_tensor_side(const daa_tensor* t) { return t ? t->value.side() : 0; }

size_t daa_tensor_count(const daa_tensor* t) { return t ? t->value.size() : 0; }

daa_status daa_tensor_copy_data(const daa_tensor* t, int64_t* buf, size_t count) {
  if (!t || !buf) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  if (count < t->value.size()) return fail(DAA_ERR_BUFFER_TOO_SMALL, "data buffer too small");
  std::memcpy(buf, t->value.data().data(), t->value.size() * sizeof(int64_t));
  return DAA_OK;
}

int daa_tensor_equal(const daa_tensor* a, const daa_tensor* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

daa_status daa_kron(const daa_tensor* x, const daa_tensor* y, daa_tensor** out) {
  if (!x || !y || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = new daa_tensor{daa::kron(x->value, y->value)}; });
}

daa_status daa_compound(const daa_tensor* a, const daa_tensor* b, int k, daa_variant v,
                        daa_tensor** out) {
  if (!a || !b || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = new daa_tensor{daa::compound(a->value, b->value, k, to_variant(v))}; });
}

daa_status daa_shuffle(const daa_tensor* t, int group_size, daa_tensor** out) {
  if (!t || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    if (group_size < 1 || t->value.side() % group_size != 0)
      throw std::invalid_argument("side " + std::to_string(t->value.side()) +
                                  " is not divisible by group size " + std::to_string(group_size));
    const auto sigma = daa::shuffle_permutation(group_size, t->value.side() / group_size);
    *out = new daa_tensor{daa::conjugate(t->value, sigma)};
  });
}

daa_status daa_pattern_map(const daa_tensor* base, const int64_t* gaps, size_t count,
                           daa_tensor** out) {
  if (!base || !gaps || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    daa::GapSequence seq(std::vector<std::int64_t>(gaps, gaps + count));
    *out = new daa_tensor{daa::pattern_map(base->value, seq)};
  });
}

daa_status daa_magic_sum(int64_t n, int64_t k, int64_t* out) {
  if (!out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = daa::magic_sum(n, k); });
}

daa_status daa_compound_line_sum(int64_t m, int64_t n, int64_t k, int64_t* out) {
  if (!out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = daa::compound_linesum(m, n, k); });
}

daa_status daa_line_sum(const daa_tensor* t, int64_t* out) {
  if (!t || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    const auto report = daa::check_semi_magic(t->value);
    if (!report.holds) throw std::domain_error("no common line sum: " + report.witness);
    *out = *report.common_sum;
  });
}

daa_status daa_line_sums(const daa_tensor* t, int axis, int64_t* buf, size_t count) {
  if (!t || !buf) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  if (axis < 0 || axis >= t->value.dims()) return fail(DAA_ERR_INVALID_ARGUMENT, "axis out of range");
  if (count < t->value.size() / static_cast<std::size_t>(t->value.side()))
    return fail(DAA_ERR_BUFFER_TOO_SMALL, "line sum buffer too small");
  return wrap([&] {
    const auto sums = daa::line_sums(t->value);
    const auto& axis_sums = sums[static_cast<std::size_t>(axis)];
    std::memcpy(buf, axis_sums.data(), axis_sums.size() * sizeof(int64_t));
  });
}

daa_status daa_check(const daa_tensor* t, daa_property property, int k, int* holds,
                     char** witness) {
  if (!t || !holds) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    daa::PropertyReport report;
    switch (to_property(property)) {
      case daa::Property::FullCover: report = daa::check_full_cover(t->value, k); break;
      case daa::Property::SemiMagic: report = daa::check_semi_magic(t->value); break;
      case daa::Property::Magic: report = daa::check_magic(t->value); break;
      case daa::Property::Latin: report = daa::check_latin(t->value, false); break;
      case daa::Property::DiagonalLatin: report = daa::check_latin(t->value, true); break;
      case daa::Property::Pandiagonal: report = daa::check_pandiagonal(t->value); break;
    }
    *holds = report.holds ? 1 : 0;
    if (witness) *witness = dup_string(report.witness);
  });
}

daa_status daa_check_cover_pair(const int64_t* ga, size_t na, const int64_t* gb, size_t nb,
                                int* covers) {
  if (!ga || !gb || !covers) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    daa::GapSequence a(std::vector<std::int64_t>(ga, ga + na));
    daa::GapSequence b(std::vector<std::int64_t>(gb, gb + nb));
    *covers = daa::check_cover_pair(a, b) ? 1 : 0;
  });
}

size_t daa_fixture_count(void) {
  return daa::fixture_names().size();
}

const char* daa_fixture_name(size_t index) {
  static thread_local std::string holder;
  const auto names = daa::fixture_names();
  if (index >= names.size()) return nullptr;
  holder = names[index];
  return holder.c_str();
}

daa_status daa_fixture(const char* name, daa_tensor** out) {
  if (!name || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = new daa_tensor{daa::fixture(name).tensor}; });
}

daa_status daa_fixture_provenance(const char* name, char** out) {
  if (!name || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = dup_string(daa::fixture(name).provenance); });
}

daa_status daa_frierson_six(daa_tensor* out[6]) {
  if (!out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    auto six = daa::frierson_six();
    for (std::size_t i = 0; i < six.size(); ++i) out[i] = new daa_tensor{std::move(six[i])};
  });
}

size_t daa_gap_table_size(void) { return daa::gap_table().size(); }

daa_status daa_gap_table_row(size_t index, int* order, int* compound_count, size_t* pair_count) {
  const auto& table = daa::gap_table();
  if (index >= table.size()) return fail(DAA_ERR_INVALID_ARGUMENT, "gap table index out of range");
  if (order) *order = table[index].order;
  if (compound_count) *compound_count = table[index].compound_count;
  if (pair_count) *pair_count = table[index].pairs.size();
  return DAA_OK;
}

daa_status daa_gap_table_pair(size_t index, size_t pair, int which, int64_t* buf, size_t cap,
                              size_t* len) {
  if (!buf || !len) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  const auto& table = daa::gap_table();
  if (index >= table.size()) return fail(DAA_ERR_INVALID_ARGUMENT, "gap table index out of range");
  if (pair >= table[index].pairs.size())
    return fail(DAA_ERR_INVALID_ARGUMENT, "gap pair index out of range");
  if (which != 0 && which != 1) return fail(DAA_ERR_INVALID_ARGUMENT, "which must be 0 or 1");
  const auto& seq =
      which == 0 ? table[index].pairs[pair].first.values : table[index].pairs[pair].second.values;
  if (cap < seq.size()) return fail(DAA_ERR_BUFFER_TOO_SMALL, "gap buffer too small");
  std::memcpy(buf, seq.data(), seq.size() * sizeof(int64_t));
  *len = seq.size();
  return DAA_OK;
}

daa_status daa_charpoly(const daa_tensor* m, daa_poly** out) {
  if (!m || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = new daa_poly{daa::charpoly(m->value)}; });
}

daa_status daa_gramian(const daa_tensor* m, daa_tensor** out) {
  if (!m || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = new daa_tensor{daa::gramian(m->value)}; });
}

daa_status daa_gramian_charpoly(const daa_tensor* m, daa_poly** out) {
  if (!m || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = new daa_poly{daa::gramian_charpoly(m->value)}; });
}

daa_status daa_rank(const daa_tensor* m, int* rank) {
  if (!m || !rank) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *rank = daa::rank_exact(m->value); });
}

daa_status daa_r_index(const daa_tensor* m, char** decimal) {
  if (!m || !decimal) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *decimal = dup_string(daa::r_index(m->value).get_str()); });
}

void daa_poly_free(daa_poly* p) { delete p; }

int daa_poly_degree(const daa_poly* p) { return p ? p->value.degree() : -1; }

daa_status daa_poly_coeff(const daa_poly* p, int i, char** decimal) {
  if (!p || !decimal) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *decimal = dup_string(p->value.coeff(i).get_str()); });
}

int daa_poly_equal(const daa_poly* a, const daa_poly* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

daa_status daa_poly_to_string(const daa_poly* p, char** out) {
  if (!p || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = dup_string(p->value.str()); });
}

daa_status daa_poly_scale_roots(const daa_poly* p, int64_t c, daa_poly** out) {
  if (!p || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    *out = new daa_poly{daa::scale_roots(p->value, mpz_class(static_cast<long>(c)))};
  });
}

daa_status daa_poly_divide_by_linear(const daa_poly* p, int64_t root, daa_poly** out) {
  if (!p || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    *out = new daa_poly{daa::divide_by_linear(p->value, mpz_class(static_cast<long>(root)))};
  });
}

daa_status daa_poly_integer_roots(const daa_poly* p, int64_t* roots, size_t cap, size_t* count,
                                  int* splits) {
  if (!p || !splits) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    const auto found = daa::integer_roots(p->value);
    if (!found) {
      *splits = 0;
      if (count) *count = 0;
      return;
    }
    if (!roots || !count) throw std::invalid_argument("null roots buffer");
    if (cap < found->size()) throw BufferTooSmall("roots buffer too small");
    for (std::size_t i = 0; i < found->size(); ++i) {
      if (!(*found)[i].fits_slong_p())
        throw std::overflow_error("root exceeds the 64-bit output range");
      roots[i] = static_cast<int64_t>((*found)[i].get_si());
    }
    *count = found->size();
    *splits = 1;
  });
}

daa_status daa_predict_charpoly(const daa_poly* pa, const daa_poly* pb, int64_t sa, int64_t sb,
                                int m, int n, int k, daa_variant v, daa_poly** out) {
  if (!pa || !pb || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    *out = new daa_poly{daa::predict_charpoly(pa->value, pb->value, sa, sb, m, n, k, to_variant(v))};
  });
}

daa_status daa_predict_gramian_charpoly(const daa_poly* ga, const daa_poly* gb, int64_t sa,
                                        int64_t sb, int m, int n, int k, daa_variant v,
                                        daa_poly** out) {
  if (!ga || !gb || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    *out = new daa_poly{
        daa::predict_gramian_charpoly(ga->value, gb->value, sa, sb, m, n, k, to_variant(v))};
  });
}

daa_status daa_verify_prediction(const daa_tensor* c, const daa_tensor* a, const daa_tensor* b,
                                 int k, daa_variant v, int* eigen_match, int* sv_match) {
  if (!c || !a || !b || !eigen_match || !sv_match)
    return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    daa::CompoundRecipe recipe;
    recipe.variant = to_variant(v);
    recipe.k = k;
    recipe.m = a->value.side();
    recipe.n = b->value.side();
    const auto verdict = daa::verify_prediction(c->value, a->value, b->value, recipe);
    *eigen_match = verdict.eigen_match ? 1 : 0;
    *sv_match = verdict.sv_match ? 1 : 0;
  });
}

daa_status daa_annihilation_check(const daa_tensor* a, const daa_tensor* b, int trials,
                                  uint64_t seed, int* all_annihilated) {
  if (!a || !b || !all_annihilated) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    *all_annihilated = daa::annihilation_check(a->value, b->value, trials, seed) ? 1 : 0;
  });
}

daa_status daa_tensor_to_json(const daa_tensor* t, const char* name, const daa_recipe* recipe,
                              char** out) {
  if (!t || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    daa::TensorDocument doc{t->value, std::nullopt, std::nullopt};
    if (name) doc.name = std::string(name);
    if (recipe) {
      daa::CompoundRecipe r;
      r.variant = to_variant(recipe->variant);
      r.k = recipe->k;
      r.m = recipe->m;
      r.n = recipe->n;
      r.seed_a = recipe->seed_a;
      r.seed_b = recipe->seed_b;
      doc.recipe = std::move(r);
    }
    *out = dup_string(daa::to_json(doc));
  });
}

daa_status daa_tensor_from_json(const char* text, daa_tensor** out, daa_recipe* recipe,
                                int* has_recipe) {
  if (!text || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] {
    auto doc = daa::from_json(text);
    if (has_recipe) *has_recipe = doc.recipe.has_value() ? 1 : 0;
    if (recipe && doc.recipe) {
      recipe->variant = from_variant(doc.recipe->variant);
      recipe->k = doc.recipe->k;
      recipe->m = doc.recipe->m;
      recipe->n = doc.recipe->n;
      copy_seed_name(recipe->seed_a, doc.recipe->seed_a);
      copy_seed_name(recipe->seed_b, doc.recipe->seed_b);
    }
    *out = new daa_tensor{std::move(doc.tensor)};
  });
}

daa_status daa_tensor_to_text(const daa_tensor* t, char** out) {
  if (!t || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = dup_string(daa::to_text(t->value)); });
}

daa_status daa_tensor_from_text(const char* text, daa_tensor** out) {
  if (!text || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = new daa_tensor{daa::from_text(text)}; });
}

const char* daa_variant_name(daa_variant v) {
  switch (v) {
    case DAA_VARIANT_AGGREGATED: return "aggregated";
    case DAA_VARIANT_DISPERSED: return "dispersed";
    case DAA_VARIANT_REV_AGGREGATED: return "rev-aggregated";
    case DAA_VARIANT_REV_DISPERSED: return "rev-dispersed";
    case DAA_VARIANT_GAPDA: return "gapda";
  }
  return "?";
}

daa_status daa_variant_from_name(const char* name, daa_variant* out) {
  if (!name || !out) return fail(DAA_ERR_INVALID_ARGUMENT, "null argument");
  return wrap([&] { *out = from_variant(daa::variant_from_name(name)); });
}

}  // extern "C"

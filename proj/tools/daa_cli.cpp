// Command-line front end for the daa shared library. Everything here goes
// through the public C API in daa/daa.h; the binary carries no copy of the
// core logic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "daa/daa.h"

namespace {

struct Exit {
  int code;
  std::string message;  // printed to stderr when non-empty
};

using TensorPtr = std::unique_ptr<daa_tensor, decltype(&daa_tensor_free)>;
using PolyPtr = std::unique_ptr<daa_poly, decltype(&daa_poly_free)>;

TensorPtr own(daa_tensor* t) { return TensorPtr(t, &daa_tensor_free); }
PolyPtr own(daa_poly* p) { return PolyPtr(p, &daa_poly_free); }

std::string take_string(char* s) {
  std::string out = s ? s : "";
  daa_string_free(s);
  return out;
}

void require_ok(daa_status status, int exit_code = 2) {
  if (status != DAA_OK) throw Exit{exit_code, std::string("error: ") + daa_last_error()};
}

bool has_json_extension(const std::string& path) {
  const auto dot = path.rfind('.');
  return dot != std::string::npos && path.substr(dot) == ".json";
}

struct LoadedTensor {
  TensorPtr tensor{nullptr, &daa_tensor_free};
  std::string origin;  // fixture name or path, for messages
  bool has_recipe = false;
  daa_recipe recipe{};
};

// Inputs resolve fixture-name-first, then as a filesystem path; files are
// parsed as the structured document when the extension is .json, as plain
// text otherwise.
LoadedTensor load_tensor(const std::string& arg) {
  LoadedTensor loaded;
  loaded.origin = arg;

  daa_tensor* t = nullptr;
  if (daa_fixture(arg.c_str(), &t) == DAA_OK) {
    loaded.tensor = own(t);
    return loaded;
  }

  std::ifstream in(arg, std::ios::binary);
  if (!in)
    throw Exit{2, "error: '" + arg + "' is neither a fixture name nor a readable file"};
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  if (has_json_extension(arg)) {
    int has_recipe = 0;
    require_ok(daa_tensor_from_json(text.c_str(), &t, &loaded.recipe, &has_recipe));
    loaded.has_recipe = has_recipe != 0;
  } else {
    require_ok(daa_tensor_from_text(text.c_str(), &t));
  }
  loaded.tensor = own(t);
  return loaded;
}

void write_tensor(const daa_tensor* t, const std::string& out_path, const char* name,
                  const daa_recipe* recipe) {
  char* text = nullptr;
  if (out_path.empty() || has_json_extension(out_path)) {
    require_ok(daa_tensor_to_json(t, name, recipe, &text));
  } else {
    require_ok(daa_tensor_to_text(t, &text));
  }
  const std::string payload = take_string(text);
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Exit{2, "error: cannot write '" + out_path + "'"};
  out << payload;
}

daa_variant parse_variant(const std::string& name) {
  daa_variant v;
  require_ok(daa_variant_from_name(name.c_str(), &v));
  return v;
}

bool property_holds(const daa_tensor* t, daa_property property, int k, std::string* witness) {
  int holds = 0;
  char* w = nullptr;
  require_ok(daa_check(t, property, k, &holds, witness ? &w : nullptr));
  if (witness) *witness = take_string(w);
  return holds != 0;
}

std::string poly_pretty(const daa_poly* p) {
  char* s = nullptr;
  require_ok(daa_poly_to_string(p, &s));
  return take_string(s);
}

std::string poly_coeff_list(const daa_poly* p) {
  std::string out = "[";
  for (int i = 0; i <= daa_poly_degree(p); ++i) {
    char* c = nullptr;
    require_ok(daa_poly_coeff(p, i, &c));
    if (i > 0) out += ", ";
    out += take_string(c);
  }
  return out + "]";
}

// Presentation-only approximate roots (Durand–Kerner on the exact
// coefficients); carries no verification weight.
std::vector<std::complex<double>> approx_roots(const daa_poly* p) {
  const int deg = daa_poly_degree(p);
  std::vector<double> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) {
    char* s = nullptr;
    require_ok(daa_poly_coeff(p, i, &s));
    c[static_cast<std::size_t>(i)] = std::strtod(take_string(s).c_str(), nullptr);
  }
  for (auto& v : c) v /= c.back();
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(deg));
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> power(1.0, 0.0);
  for (auto& r : roots) {
    power *= seed;
    r = power;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = deg; i >= 0; --i) acc = acc * x + c[static_cast<std::size_t>(i)];
    return acc;
  };
  for (int iter = 0; iter < 300; ++iter) {
    double shift = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (std::size_t j = 0; j < roots.size(); ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const auto delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-12) break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return std::abs(a) > std::abs(b); });
  return roots;
}

std::string format_complex(std::complex<double> z) {
  char buf[64];
  if (std::abs(z.imag()) < 1e-6) {
    std::snprintf(buf, sizeof(buf), "%.4f", z.real());
  } else {
    std::snprintf(buf, sizeof(buf), "%.4f%+.4fi", z.real(), z.imag());
  }
  return buf;
}

// ---- gen ------------------------------------------------------------------

int infer_k(const daa_tensor* a, const daa_tensor* b, daa_variant variant) {
  const int dims = daa_tensor_dims(a);
  if (property_holds(a, DAA_PROP_FULL_COVER, dims, nullptr) &&
      property_holds(b, DAA_PROP_FULL_COVER, dims, nullptr))
    return dims;
  if (property_holds(a, DAA_PROP_LATIN, 0, nullptr) && property_holds(b, DAA_PROP_LATIN, 0, nullptr))
    return 1;
  if (variant == DAA_VARIANT_GAPDA) return 1;  // unused by the construction
  throw Exit{1,
             "error: cannot infer the class parameter (seeds are neither full-cover magic nor "
             "Latin); pass --k explicitly"};
}

int cmd_gen(const std::string& seed_a, const std::string& seed_b, const std::string& variant_name,
            std::optional<int> k_flag, const std::string& out_path) {
  const daa_variant variant = parse_variant(variant_name);
  LoadedTensor a = load_tensor(seed_a);
  LoadedTensor b = load_tensor(seed_b);
  if (daa_tensor_dims(a.tensor.get()) != daa_tensor_dims(b.tensor.get()))
    throw Exit{2, "error: seeds must have the same number of axes"};

  const int k = k_flag ? *k_flag : infer_k(a.tensor.get(), b.tensor.get(), variant);

  if (variant != DAA_VARIANT_GAPDA) {
    for (const auto* seed : {&a, &b}) {
      std::string witness;
      if (!property_holds(seed->tensor.get(), DAA_PROP_FULL_COVER, k, &witness))
        throw Exit{1, "error: seed '" + seed->origin + "' fails full cover for k=" +
                          std::to_string(k) + ": " + witness};
    }
  }

  daa_tensor* c = nullptr;
  require_ok(daa_compound(a.tensor.get(), b.tensor.get(), k, variant, &c));
  TensorPtr compound = own(c);

  daa_recipe recipe{};
  recipe.variant = variant;
  recipe.k = k;
  recipe.m = daa_tensor_side(a.tensor.get());
  recipe.n = daa_tensor_side(b.tensor.get());
  std::snprintf(recipe.seed_a, sizeof(recipe.seed_a), "%s", seed_a.c_str());
  std::snprintf(recipe.seed_b, sizeof(recipe.seed_b), "%s", seed_b.c_str());

  write_tensor(compound.get(), out_path, nullptr, &recipe);
  return 0;
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const std::string& input, const std::string& expect_variant,
                const std::string& seed_a, const std::string& seed_b, std::optional<int> k_flag,
                bool approx) {
  LoadedTensor loaded = load_tensor(input);
  const daa_tensor* t = loaded.tensor.get();

  if (daa_tensor_dims(t) != 2)
    throw Exit{2, "error: spectral analysis requires a 2-D input (got " +
                      std::to_string(daa_tensor_dims(t)) + " axes)"};

  std::cout << "input: " << loaded.origin << "\n";
  std::cout << "order: " << daa_tensor_side(t) << "\n";

  int64_t line_sum = 0;
  if (daa_line_sum(t, &line_sum) != DAA_OK)
    throw Exit{2, std::string("error: ") + daa_last_error() + " (R index undefined)"};
  std::cout << "line sum: " << line_sum << "\n";

  int rank = 0;
  require_ok(daa_rank(t, &rank));
  std::cout << "rank: " << rank << "\n";

  daa_poly* cp_raw = nullptr;
  require_ok(daa_charpoly(t, &cp_raw));
  PolyPtr cp = own(cp_raw);
  std::cout << "charpoly: " << poly_pretty(cp.get()) << "\n";
  std::cout << "charpoly coefficients (ascending): " << poly_coeff_list(cp.get()) << "\n";

  daa_poly* gp_raw = nullptr;
  require_ok(daa_gramian_charpoly(t, &gp_raw));
  PolyPtr gp = own(gp_raw);
  std::cout << "gramian charpoly: " << poly_pretty(gp.get()) << "\n";

  std::vector<int64_t> roots(static_cast<std::size_t>(daa_poly_degree(gp.get())) + 1);
  size_t root_count = 0;
  int splits = 0;
  require_ok(daa_poly_integer_roots(gp.get(), roots.data(), roots.size(), &root_count, &splits));
  if (splits) {
    std::cout << "sigma^2:";
    for (size_t i = 0; i < root_count; ++i) std::cout << " " << roots[i];
    std::cout << "\n";
  } else {
    std::cout << "sigma^2: gramian charpoly does not split over the integers\n";
  }

  char* r_str = nullptr;
  require_ok(daa_r_index(t, &r_str));
  std::cout << "R index: " << take_string(r_str) << "\n";

  if (approx) {
    std::cout << "eigenvalues (approx):";
    for (const auto& root : approx_roots(cp.get())) std::cout << " " << format_complex(root);
    std::cout << "\n";
  }

  // Prediction verdicts: explicit flags win over a recipe embedded in the
  // input document.
  std::optional<daa_recipe> expected;
  if (!expect_variant.empty()) {
    daa_recipe r{};
    r.variant = parse_variant(expect_variant);
    r.k = k_flag.value_or(loaded.has_recipe ? loaded.recipe.k : 1);
    std::snprintf(r.seed_a, sizeof(r.seed_a), "%s",
                  !seed_a.empty() ? seed_a.c_str() : (loaded.has_recipe ? loaded.recipe.seed_a : ""));
    std::snprintf(r.seed_b, sizeof(r.seed_b), "%s",
                  !seed_b.empty() ? seed_b.c_str() : (loaded.has_recipe ? loaded.recipe.seed_b : ""));
    expected = r;
  } else if (loaded.has_recipe) {
    expected = loaded.recipe;
    if (k_flag) expected->k = *k_flag;
    if (!seed_a.empty()) std::snprintf(expected->seed_a, sizeof(expected->seed_a), "%s", seed_a.c_str());
    if (!seed_b.empty()) std::snprintf(expected->seed_b, sizeof(expected->seed_b), "%s", seed_b.c_str());
  }

  if (!expected) return 0;
  if (expected->seed_a[0] == '\0' || expected->seed_b[0] == '\0')
    throw Exit{2, "error: prediction check needs seed references (--seed-a/--seed-b)"};

  LoadedTensor a = load_tensor(expected->seed_a);
  LoadedTensor b = load_tensor(expected->seed_b);
  int eigen_match = 0, sv_match = 0;
  require_ok(daa_verify_prediction(t, a.tensor.get(), b.tensor.get(), expected->k,
                                   expected->variant, &eigen_match, &sv_match));
  std::cout << "prediction (" << daa_variant_name(expected->variant) << ", k=" << expected->k
            << ", seeds " << expected->seed_a << "," << expected->seed_b << "):"
            << " eigenvalues " << (eigen_match ? "match" : "MISMATCH") << ", singular values "
            << (sv_match ? "match" : "MISMATCH") << "\n";
  return (eigen_match && sv_match) ? 0 : 1;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& input, const std::string& property_name,
               std::optional<int> k_flag) {
  LoadedTensor loaded = load_tensor(input);
  daa_property property;
  if (property_name == "semimagic") property = DAA_PROP_SEMI_MAGIC;
  else if (property_name == "magic") property = DAA_PROP_MAGIC;
  else if (property_name == "latin") property = DAA_PROP_LATIN;
  else if (property_name == "diagonal-latin") property = DAA_PROP_DIAGONAL_LATIN;
  else if (property_name == "fullcover") property = DAA_PROP_FULL_COVER;
  else if (property_name == "pandiagonal") property = DAA_PROP_PANDIAGONAL;
  else
    throw Exit{2, "error: unknown property '" + property_name +
                      "' (semimagic|magic|latin|diagonal-latin|fullcover|pandiagonal)"};

  const int k = k_flag.value_or(daa_tensor_dims(loaded.tensor.get()));
  std::string witness;
  if (property_holds(loaded.tensor.get(), property, k, &witness)) {
    std::cout << loaded.origin << ": " << property_name << " holds\n";
    return 0;
  }
  std::cout << loaded.origin << ": " << property_name << " fails: " << witness << "\n";
  return 1;
}

// ---- catalog ---------------------------------------------------------------

std::string gap_sequence_str(size_t row, size_t pair, int which) {
  int64_t buf[32];
  size_t len = 0;
  require_ok(daa_gap_table_pair(row, pair, which, buf, 32, &len));
  std::string out = "{";
  for (size_t i = 0; i < len; ++i) {
    if (i > 0) out += ",";
    out += std::to_string(buf[i]);
  }
  return out + "}";
}

int cmd_catalog(std::optional<int> order, const std::string& dump,
                const std::string& format) {
  if (!dump.empty()) {
    daa_tensor* t = nullptr;
    require_ok(daa_fixture(dump.c_str(), &t));
    TensorPtr tensor = own(t);
    char* text = nullptr;
    if (format == "json") {
      require_ok(daa_tensor_to_json(tensor.get(), dump.c_str(), nullptr, &text));
    } else {
      require_ok(daa_tensor_to_text(tensor.get(), &text));
    }
    std::cout << take_string(text);
    return 0;
  }

  if (!order) {
    std::cout << "fixtures:\n";
    for (size_t i = 0; i < daa_fixture_count(); ++i) {
      const char* name = daa_fixture_name(i);
      daa_tensor* t = nullptr;
      require_ok(daa_fixture(name, &t));
      TensorPtr tensor = own(t);
      char* prov = nullptr;
      require_ok(daa_fixture_provenance(name, &prov));
      std::printf("  %-16s %d-D side %-3d %s\n", name, daa_tensor_dims(tensor.get()),
                  daa_tensor_side(tensor.get()), take_string(prov).c_str());
    }
    std::cout << "\ngap cover pairs (Latin, k=1):\n";
  }

  bool any = false;
  for (size_t row = 0; row < daa_gap_table_size(); ++row) {
    int n = 0, compounds = 0;
    size_t pairs = 0;
    require_ok(daa_gap_table_row(row, &n, &compounds, &pairs));
    if (order && *order != n) continue;
    any = true;
    std::cout << "  N=" << n << "  compounds C_mn=" << compounds << "  pairs=" << pairs << "\n";
    for (size_t p = 0; p < pairs; ++p)
      std::cout << "    " << gap_sequence_str(row, p, 0) << " with " << gap_sequence_str(row, p, 1)
                << "\n";
  }
  if (order && !any) std::cout << "no entries for order " << *order << "\n";
  return 0;
}

// ---- shuffle ---------------------------------------------------------------

int cmd_shuffle(const std::string& input, int group_size, const std::string& out_path) {
  LoadedTensor loaded = load_tensor(input);
  daa_tensor* shuffled = nullptr;
  require_ok(daa_shuffle(loaded.tensor.get(), group_size, &shuffled));
  TensorPtr result = own(shuffled);
  write_tensor(result.get(), out_path, nullptr, nullptr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact compound doubly-affine arrays: construction, validation and spectra"};
  app.set_version_flag("--version", std::string(daa_version()));
  app.require_subcommand(1);

  // gen
  std::string gen_a, gen_b, gen_variant, gen_out;
  int gen_k = -1;
  auto* gen = app.add_subcommand("gen", "compound two seed arrays");
  gen->add_option("seed-a", gen_a, "first seed (fixture name or file)")->required();
  gen->add_option("seed-b", gen_b, "second seed (fixture name or file)")->required();
  gen->add_option("--variant", gen_variant,
                  "aggregated|dispersed|rev-aggregated|rev-dispersed|gapda")
      ->required();
  gen->add_option("--k", gen_k, "class parameter (default: inferred from the seeds)");
  gen->add_option("-o,--out", gen_out, "output file (.json structured, otherwise text; default stdout)");

  // analyze
  std::string an_input, an_variant, an_seed_a, an_seed_b;
  int an_k = -1;
  bool an_approx = false;
  auto* analyze = app.add_subcommand("analyze", "exact spectral report");
  analyze->add_option("input", an_input, "tensor (fixture name or file)")->required();
  analyze->add_option("--expect-variant", an_variant, "verify the spectra a recipe predicts");
  analyze->add_option("--seed-a", an_seed_a, "seed A reference for the prediction check");
  analyze->add_option("--seed-b", an_seed_b, "seed B reference for the prediction check");
  analyze->add_option("--k", an_k, "class parameter for the prediction check");
  analyze->add_flag("--approx", an_approx, "also print floating-point eigenvalue approximations");

  // verify
  std::string ver_input, ver_property;
  int ver_k = -1;
  auto* verify = app.add_subcommand("verify", "check one doubly-affine property");
  verify->add_option("input", ver_input, "tensor (fixture name or file)")->required();
  verify->add_option("--property", ver_property,
                     "semimagic|magic|latin|diagonal-latin|fullcover|pandiagonal")
      ->required();
  verify->add_option("--k", ver_k, "class parameter for fullcover (default: dims)");

  // catalog
  int cat_order = -1;
  std::string cat_dump, cat_format = "text";
  auto* catalog = app.add_subcommand("catalog", "list fixtures and the GAP cover-pair table");
  catalog->add_option("--order", cat_order, "show only gap pairs for this order");
  catalog->add_option("--dump", cat_dump, "print one fixture and exit");
  catalog->add_option("--format", cat_format, "dump format: text|json");

  // shuffle
  std::string sh_input, sh_out;
  int sh_m = 0;
  auto* shuffle = app.add_subcommand("shuffle", "conjugate by a perfect multiway shuffle");
  shuffle->add_option("input", sh_input, "tensor (fixture name or file)")->required();
  shuffle->add_option("--m", sh_m, "group size (side must be divisible by it)")->required();
  shuffle->add_option("-o,--out", sh_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (gen->parsed())
      return cmd_gen(gen_a, gen_b, gen_variant,
                     gen->count("--k") ? std::optional<int>(gen_k) : std::nullopt, gen_out);
    if (analyze->parsed())
      return cmd_analyze(an_input, an_variant, an_seed_a, an_seed_b,
                         analyze->count("--k") ? std::optional<int>(an_k) : std::nullopt, an_approx);
    if (verify->parsed())
      return cmd_verify(ver_input, ver_property,
                        verify->count("--k") ? std::optional<int>(ver_k) : std::nullopt);
    if (catalog->parsed())
      return cmd_catalog(catalog->count("--order") ? std::optional<int>(cat_order) : std::nullopt,
                         cat_dump, cat_format);
    if (shuffle->parsed()) return cmd_shuffle(sh_input, sh_m, sh_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Exit& e) {
    if (!e.message.empty()) std::cerr << e.message << "\n";
    return e.code;
  }
  return 2;
}

#include "core/serialize.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace daa {
namespace {

using nlohmann::json;

std::int64_t json_int(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw ParseError(where + ": value exceeds the signed 64-bit range");
    return static_cast<std::int64_t>(u);
  }
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

std::string to_json(const TensorDocument& doc) {
  json j;
  j["dims"] = doc.tensor.dims();
  j["side"] = doc.tensor.side();
  j["data"] = std::vector<std::int64_t>(doc.tensor.data().begin(), doc.tensor.data().end());
  if (doc.name) j["name"] = *doc.name;
  if (doc.recipe) {
    json r;
    r["variant"] = variant_name(doc.recipe->variant);
    r["k"] = doc.recipe->k;
    r["m"] = doc.recipe->m;
    r["n"] = doc.recipe->n;
    if (!doc.recipe->seed_a.empty()) r["seed_a"] = doc.recipe->seed_a;
    if (!doc.recipe->seed_b.empty()) r["seed_b"] = doc.recipe->seed_b;
    j["recipe"] = std::move(r);
  }
  return j.dump(2) + "\n";
}

TensorDocument from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("tensor document must be a JSON object");
  if (!j.contains("dims") || !j.contains("side") || !j.contains("data"))
    throw ParseError("tensor document needs 'dims', 'side' and 'data'");

  const auto dims = json_int(j["dims"], "dims");
  const auto side = json_int(j["side"], "side");
  if (dims < 1 || dims > 16 || side < 1)
    throw ParseError("tensor document has an invalid shape");
  if (!j["data"].is_array()) throw ParseError("'data' must be an array of integers");
  std::vector<std::int64_t> data;
  data.reserve(j["data"].size());
  for (const auto& el : j["data"]) data.push_back(json_int(el, "data"));

  TensorDocument doc{IntTensor(static_cast<int>(dims), static_cast<int>(side), std::move(data)),
                     std::nullopt, std::nullopt};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("recipe")) {
    const json& r = j["recipe"];
    if (!r.is_object() || !r.contains("variant")) throw ParseError("'recipe' must name a variant");
    CompoundRecipe recipe;
    try {
      recipe.variant = variant_from_name(r["variant"].get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("recipe: ") + e.what());
    }
    recipe.k = r.contains("k") ? static_cast<int>(json_int(r["k"], "recipe.k")) : 1;
    recipe.m = r.contains("m") ? static_cast<int>(json_int(r["m"], "recipe.m")) : 0;
    recipe.n = r.contains("n") ? static_cast<int>(json_int(r["n"], "recipe.n")) : 0;
    if (r.contains("seed_a")) recipe.seed_a = r["seed_a"].get<std::string>();
    if (r.contains("seed_b")) recipe.seed_b = r["seed_b"].get<std::string>();
    doc.recipe = std::move(recipe);
  }
  return doc;
}

std::string to_text(const IntTensor& t) {
  if (t.dims() != 2 && t.dims() != 3)
    throw std::invalid_argument("plain-text format covers 2-D and 3-D tensors; use the structured format");
  const int n = t.side();
  std::ostringstream out;
  const std::size_t layer_cells = static_cast<std::size_t>(n) * n;
  const int layers = t.dims() == 3 ? n : 1;
  for (int l = 0; l < layers; ++l) {
    if (l > 0) out << '\n';
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j > 0) out << ' ';
        out << t[static_cast<std::size_t>(l) * layer_cells + static_cast<std::size_t>(i) * n + j];
      }
      out << '\n';
    }
  }
  return out.str();
}

IntTensor from_text(std::string_view text) {
  std::vector<std::vector<std::vector<std::int64_t>>> layers(1);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<std::int64_t> row;
    std::string tok;
    while (tokens >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad integer token '" + tok + "'");
      }
    }
    if (row.empty()) {
      if (!layers.back().empty()) layers.emplace_back();
    } else {
      layers.back().push_back(std::move(row));
    }
  }
  if (layers.back().empty()) layers.pop_back();
  if (layers.empty()) throw ParseError("empty tensor text");

  const std::size_t rows = layers.front().size();
  for (const auto& layer : layers) {
    if (layer.size() != rows) throw ParseError("layers have differing row counts");
    for (const auto& row : layer)
      if (row.size() != layers.front().front().size()) throw ParseError("ragged rows in tensor text");
  }
  const std::size_t cols = layers.front().front().size();
  if (rows != cols) throw ParseError("tensor text must be square (rows == columns)");
  const int dims = layers.size() > 1 ? 3 : 2;
  if (dims == 3 && layers.size() != rows)
    throw ParseError("3-D tensor text needs as many layers as rows");

  std::vector<std::int64_t> data;
  data.reserve(layers.size() * rows * cols);
  for (const auto& layer : layers)
    for (const auto& row : layer) data.insert(data.end(), row.begin(), row.end());
  return IntTensor(dims, static_cast<int>(rows), std::move(data));
}

}  // namespace daa

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "core/compound.hpp"
#include "core/tensor.hpp"

namespace daa {

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk form of a tensor: the canonical structured document carries the
/// shape, the flat row-major data, and optionally a name and the recipe that
/// produced a compound.
struct TensorDocument {
  IntTensor tensor;
  std::optional<std::string> name;
  std::optional<CompoundRecipe> recipe;
};

std::string to_json(const TensorDocument& doc);
TensorDocument from_json(std::string_view text);

/// Plain-text form: whitespace-separated rows for D=2, blank-line-separated
/// layers for D=3. Other ranks must use the structured format.
std::string to_text(const IntTensor& t);
IntTensor from_text(std::string_view text);

}  // namespace daa

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "etalehom/abelian_group.hpp"
#include "etalehom/homogeneous.hpp"

namespace etalehom::cli {

/// A schema violation, located by JSON pointer ("/embedding/sa_map").
struct SchemaError {
  std::string pointer;
  std::string message;

  std::string to_string() const { return pointer + ": " + message; }
};

/// A validated input document. A missing subgroup means H = {1}; a missing
/// embedding section is only allowed together with a missing subgroup.
struct InputDocument {
  EmbeddingData embedding;
  bool has_subgroup = false;
};

struct ParseOutcome {
  std::optional<InputDocument> document;
  std::vector<SchemaError> errors;

  bool ok() const { return document.has_value(); }
};

/// Parses and validates the JSON input schema:
///
///   { "characteristic": 0,
///     "group":    { "sc_rank", "cochar_rank", "coroot_embedding",
///                   "abelian_dim", "unipotent_dim", "cartan_type"? },
///     "subgroup": { ...same..., "component_group_order" },
///     "embedding": { "sc_map", "sa_map" } }
///
/// Integers are JSON numbers or decimal strings; matrices are arrays of rows.
ParseOutcome parse_input(const std::string& text);

/// Serializes an embedding back into the input schema.
nlohmann::json document_to_json(const EmbeddingData& e);

/// Arbitrary-precision integer as a JSON number when it fits in 53 bits,
/// otherwise as a decimal string.
nlohmann::json integer_to_json(const Integer& x);
nlohmann::json matrix_to_json(const IntMatrix& m);

/// { free_rank, invariant_factors, twist, completion }.
nlohmann::json group_to_json(const FgAbGroup& g);
/// Inverse of group_to_json; throws ValidationError on malformed input.
FgAbGroup group_from_json(const nlohmann::json& j);

}  // namespace etalehom::cli

#pragma once

// JSON documents for nets, patterns, congruences and scalar fields.  Each document
// carries a schema name, a format version, the grid size and one dense row-major
// array per field.  Doubles are written as shortest round-trip decimals; NaN is
// written as null.

#include <string>
#include <variant>

#include "lnet/lift.hpp"
#include "lnet/packing.hpp"

namespace lnet {

inline constexpr int kFormatVersion = 1;

struct ScalarField {
  VertexField<double> values;
  std::string label;  // e.g. the formula that produced it
};

using Document = std::variant<ContactCongruence, CirclePattern, CyclePattern, IncircularNet, ConicalNet, ScalarField>;

// "congruence", "circle_pattern", "cycle_pattern", "incircular_net", "conical_net",
// "scalar_field".
std::string schema_of(const Document& doc);

std::string to_json(const Document& doc);
// Throws ParseError, SchemaMismatch or VersionMismatch.
Document from_json(const std::string& text);

void save(const Document& doc, const std::string& path);
Document load(const std::string& path);

// Loads and checks the alternative; SchemaMismatch otherwise.
template <class T>
T load_as(const std::string& path) {
  Document doc = load(path);
  if (!std::holds_alternative<T>(doc)) {
    throw Error(ErrorKind::SchemaMismatch, path + " holds a " + schema_of(doc));
  }
  return std::get<T>(std::move(doc));
}

}  // namespace lnet

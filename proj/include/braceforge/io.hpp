#pragma once

#include <string>
#include <vector>

#include "braceforge/action.hpp"
#include "braceforge/brace.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/extension.hpp"
#include "json.hpp"

namespace braceforge {

using json = nlohmann::json;

/// Malformed JSON: wrong keys, shapes, or value ranges. `field` is a
/// slash-separated path into the document.
class SchemaError : public InputError {
 public:
  SchemaError(std::string path, std::string field, const std::string& what);
  const std::string& path() const { return path_; }
  const std::string& field() const { return field_; }

 private:
  std::string path_;
  std::string field_;
};

/// Notes produced while loading (identity relabeling).
using Warnings = std::vector<std::string>;

json to_json(const FiniteGroup& g);
json to_json(const SkewBrace& b);
json to_json(const ActionTriple& t);
json to_json(const Triplet& t);
json to_json(const Extension& e);

// Readers check the schema, then run the matching validator. Tables whose
// identity is not 0 are relabeled by swapping it with 0, with a warning.
FiniteGroup group_from_json(const json& j, Warnings* warnings = nullptr,
                            const std::string& path = "");
SkewBrace brace_from_json(const json& j, Warnings* warnings = nullptr, const std::string& path = "");
/// Shape only: equal lengths, every entry a permutation of one degree.
ActionTriple triple_from_json(const json& j, const std::string& path = "");
Triplet triplet_from_json(const json& j, const std::string& path = "");
Extension extension_from_json(const json& j, Warnings* warnings = nullptr,
                              const std::string& path = "");

/// Parses a file; I/O and syntax errors become SchemaError.
json read_json(const std::string& path);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);
void write_json(const std::string& path, const json& j);

enum class EntryKind { Group, Brace, Triple, Triplet, Extension };

std::string to_string(EntryKind k);

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::Brace;
  json payload;
  std::string provenance;  // example id, "derived" or "trivial"
};

/// Accepts either an entry envelope {kind, name, payload, provenance} or a
/// bare payload whose kind is read off its keys. The payload is validated.
CatalogEntry load(const std::string& path, Warnings* warnings = nullptr);
CatalogEntry entry_from_json(const json& j, const std::string& path = "",
                             Warnings* warnings = nullptr);
json to_json(const CatalogEntry& e);
void save(const CatalogEntry& e, const std::string& path);

inline constexpr int kReportSchemaVersion = 1;

/// {"schema_version", "command", "result"}.
json report(const std::string& command, json result);

}  // namespace braceforge

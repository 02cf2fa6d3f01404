#pragma once

// JSON form of a labeled set:
//   {"format_version": 1,
//    "family": {"kind": "NS", "exponent": 1},
//    "universe": ["x1", "x2"],
//    "components": [[0.8, 0.3, 0.5], [0.9, 0.2, 0.6]]}
// Pair families store [T, F]; the others [T, I, F].

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "neutro/labeled_set.hpp"

namespace neutro {

inline constexpr int kDocumentFormatVersion = 1;

struct ElementSetDocument {
  FamilySpec family = FamilySpec::ns();
  std::vector<std::string> universe;
  std::vector<std::vector<double>> components;
};

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

inline FamilySpec family_from_json(const nlohmann::json& j) {
  if (j.is_string()) return FamilySpec(parse_family_kind(j.get<std::string>()));
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("\"family\" must be a name or {\"kind\": ..., "
                     "\"exponent\": ...}");
  }
  double exponent = 1.0;
  if (j.contains("exponent")) {
    if (!j["exponent"].is_number()) {
      throw ParseError("\"family.exponent\" must be a number");
    }
    exponent = j["exponent"].get<double>();
  }
  const auto kind = parse_family_kind(j["kind"].get<std::string>());
  // Families without a free exponent ignore whatever was written.
  return FamilySpec(kind, exponent);
}

}  // namespace detail

/// Reads the document structure. Syntax errors carry the line number,
/// structural errors the element name or index. Does not check the family
/// constraint; see load_document.
inline ElementSetDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " +
                     std::to_string(detail::line_of_offset(text, e.byte)) +
                     ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");

  if (!j.contains("format_version") || !j["format_version"].is_number_integer()) {
    throw ParseError("missing integer \"format_version\"");
  }
  if (j["format_version"].get<int>() != kDocumentFormatVersion) {
    throw ParseError("unsupported format_version " +
                     j["format_version"].dump());
  }

  ElementSetDocument doc;
  if (!j.contains("family")) throw ParseError("missing \"family\"");
  doc.family = detail::family_from_json(j["family"]);

  if (!j.contains("universe") || !j["universe"].is_array()) {
    throw ParseError("\"universe\" must be an array of names");
  }
  for (const auto& name : j["universe"]) {
    if (!name.is_string()) {
      throw ParseError("universe entry " + name.dump() + " is not a string");
    }
    doc.universe.push_back(name.get<std::string>());
  }
  if (doc.universe.empty()) throw UsageError("universe is empty");

  if (!j.contains("components") || !j["components"].is_array()) {
    throw ParseError("\"components\" must be an array of arrays");
  }
  const auto& comps = j["components"];
  if (comps.size() != doc.universe.size()) {
    throw ParseError("universe has " + std::to_string(doc.universe.size()) +
                     " names but components has " +
                     std::to_string(comps.size()) + " entries");
  }
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const std::string where =
        "element '" + doc.universe[k] + "' (index " + std::to_string(k) + ")";
    if (!comps[k].is_array()) {
      throw ParseError(where + ": components must be an array");
    }
    std::vector<double> row;
    for (const auto& v : comps[k]) {
      if (!v.is_number()) {
        throw ParseError(where + ": component " + v.dump() +
                         " is not a number");
      }
      row.push_back(v.get<double>());
    }
    doc.components.push_back(std::move(row));
  }
  return doc;
}

/// One report per element, checked against fam.
inline std::vector<ValidationReport> validate_document(
    const ElementSetDocument& doc, const FamilySpec& fam) {
  std::vector<ValidationReport> out;
  out.reserve(doc.components.size());
  for (const auto& row : doc.components) {
    out.push_back(validate_components(row, fam));
  }
  return out;
}

/// parse_document plus a check of every element against the declared family.
inline ElementSetDocument load_document(std::string_view text) {
  auto doc = parse_document(text);
  const auto reports = validate_document(doc, doc.family);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (!reports[k].valid) {
      throw ConstraintError("element '" + doc.universe[k] +
                            "': " + reports[k].diagnostics);
    }
  }
  return doc;
}

/// Triplet view of a document. IFS pairs gain the remainder 1 - T - F as
/// their indeterminacy; other pair families have no triplet form.
inline LabeledSet to_labeled_set(const ElementSetDocument& doc) {
  std::vector<Triplet> elems;
  for (std::size_t k = 0; k < doc.components.size(); ++k) {
    const auto& c = doc.components[k];
    try {
      if (c.size() == 3) {
        elems.emplace_back(c[0], c[1], c[2]);
      } else if (c.size() == 2 && doc.family.kind() == FamilyKind::IFS) {
        elems.emplace_back(c[0], std::max(0.0, 1.0 - c[0] - c[1]), c[1]);
      } else {
        throw UsageError("needs three components (T, I, F)");
      }
    } catch (const Error& e) {
      throw UsageError("element '" + doc.universe[k] + "': " + e.what());
    }
  }
  return LabeledSet(doc.universe, std::move(elems), doc.family);
}

inline ElementSetDocument to_document(const LabeledSet& s) {
  ElementSetDocument doc;
  doc.family = s.family();
  doc.universe = s.universe();
  for (const auto& x : s.elements()) doc.components.push_back({x.t, x.i, x.f});
  return doc;
}

inline nlohmann::json family_to_json(const FamilySpec& fam) {
  return {{"kind", std::string(to_string(fam.kind()))},
          {"exponent", fam.exponent()}};
}

inline nlohmann::json to_json(const ElementSetDocument& doc) {
  nlohmann::json j;
  j["format_version"] = kDocumentFormatVersion;
  j["family"] = family_to_json(doc.family);
  j["universe"] = doc.universe;
  j["components"] = doc.components;
  return j;
}

/// Pretty-printed with shortest round-trip doubles, so reloading preserves
/// every component bit for bit.
inline std::string emit_document(const ElementSetDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

}  // namespace neutro

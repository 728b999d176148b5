#pragma once

#include "tagset/line.hpp"
#include "tagset/sets.hpp"
#include "tagset/trajectory.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace tagset {

enum class DocumentKind { finite_set, line_set, trajectory };

std::string to_string(DocumentKind kind);

// A named, self-describing input file: one tagged object per document.
// Rationals travel as strings ("p" or "p/q") so exactness survives JSON.
struct Document {
  std::string name;
  std::string description; // empty means absent
  std::variant<FiniteTaggedSet, TaggedLineSet, Trajectory> body;

  DocumentKind kind() const { return static_cast<DocumentKind>(body.index()); }

  friend bool operator==(const Document& a, const Document& b) {
    return a.name == b.name && a.description == b.description && a.body == b.body;
  }
};

// Throws ParseError on malformed JSON (with line/column) and on documents
// that fail validation (format version, kind, domain invariants).
Document parse_document(std::string_view text);

// Canonical serialization: fixed key order, two-space indent, trailing
// newline, rationals in lowest terms. parse_document round-trips it and
// canonical files round-trip byte for byte.
std::string serialize_document(const Document& doc);

// Reads and parses a file; unreadable paths raise Error.
Document load_document(const std::string& path);

} // namespace tagset

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qpw/act.hpp"
#include "qpw/event.hpp"
#include "qpw/plausibility.hpp"
#include "qpw/preference.hpp"

namespace qpw {

enum class DocumentMode { Explicit, Expectation, Hyperreal, Ranked, EventRelation };

std::string_view mode_name(DocumentMode mode);

// A parsed workbench document: a preference structure for every mode except
// event_relation, which carries an event relation instead.
struct WorkbenchDocument {
  DocumentMode mode;
  StateSpace space;
  ConsequenceScale scale;
  std::optional<ConditionalPreferenceStructure> structure;
  std::optional<EventRelation> relation;
};

// Throws ParseError whose location is a JSON pointer into the document, or
// a byte offset for malformed JSON text. Floating-point numbers are
// rejected anywhere in the document.
WorkbenchDocument parse_document(std::string_view text);

// Lowercase hex SHA-256 of the raw bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace qpw

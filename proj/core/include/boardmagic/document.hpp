#pragma once

#include <string>
#include <vector>

#include "boardmagic/board.hpp"
#include "boardmagic/errors.hpp"

namespace boardmagic {

inline constexpr int kDocumentSchemaVersion = 1;

/// Serializes a design as a pretty-printed JSON document with an explicit
/// schema_version and row-major matrices.
std::string to_document(const Design& d);

/// Parses a document. Malformed text throws DocumentParseError; documents
/// that parse but violate the design invariants throw InvalidDesign with a
/// field-precise message.
Design from_document(const std::string& text);

}  // namespace boardmagic

#pragma once

#include <string>

#include "thrackle/drawing.hpp"

namespace thrackle {

/// Deterministic JSON text for a document. Numbers carry 17 significant
/// digits, so values survive a round trip bit for bit; serializing the same
/// document twice yields identical bytes.
std::string serialize(const DrawingDocument& doc);

/// Parses and validates document text, rebuilding the drawing's arcs.
/// Throws ParseError (with line and field where known) on malformed input.
DrawingDocument deserialize(const std::string& text);

}  // namespace thrackle

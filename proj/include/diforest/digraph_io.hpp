#pragma once

#include <string>

#include "diforest/multidigraph.hpp"

namespace diforest {

/// Line-oriented text format:
///   # comment
///   vertex <id>
///   edge <edge-id> <source-id> <target-id>
/// Identifiers are arbitrary non-whitespace tokens. Duplicate edge ids and
/// loops are rejected with a ParseError carrying the line number.
Multidigraph parse_digraph(const std::string& text);

Multidigraph load_digraph(const std::string& path);

std::string render_digraph(const Multidigraph& d);

void save_digraph(const Multidigraph& d, const std::string& path);

} // namespace diforest

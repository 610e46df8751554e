#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "eigenport/graph.hpp"

namespace eigenport {

/// Parses `u v [length]` lines ('#' starts a comment). Node count is one
/// more than the largest id seen in either input. An edge without an
/// explicit length takes the Euclidean distance between its endpoints when
/// coordinates are supplied, and 1 otherwise.
///
/// `coords_text` holds `id x y [z]` lines and must cover every node.
/// Throws ParseError (with line number) for malformed lines and FormatError
/// for structurally invalid graphs.
Graph parse_edge_list(std::string_view edges_text,
                      std::optional<std::string_view> coords_text = std::nullopt);

enum class SwcLengths { kCoordinates, kUnit };

/// Parses a 7-column SWC morphology (`id type x y z radius parent`).
/// Sample ids are compacted to 0-based indices in first-seen order; every
/// non-root sample contributes an edge to its parent.
Graph parse_swc(std::string_view text, SwcLengths lengths = SwcLengths::kCoordinates);

/// Inverse of parse_edge_list: one `u v length` line per edge, lengths
/// with 17 significant digits.
std::string write_edge_list(const Graph& g);

/// `id x y [z]` lines for a graph with coordinates; empty otherwise.
std::string write_coords(const Graph& g);

}  // namespace eigenport

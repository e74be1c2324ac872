#pragma once

#include "tonelab/graph.hpp"
#include "tonelab/random.hpp"
#include "tonelab/tone.hpp"

#include <iosfwd>
#include <string>

// Text formats. All readers throw FormatError with a line number.
//
// Edge list:   "n m", then m lines "u v" (0-based). '#' starts a comment.
// Coloring:    "t k n", then n lines "v: c1 c2 ... ct", colors strictly
//              increasing and 1-based.
// Degrees:     one non-negative integer per line.

namespace tonelab {

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const MultiGraph& g);

/// Every vertex must appear exactly once. Colors above k are accepted here
/// and reported by verify as a PaletteMismatch.
ToneColoring read_coloring(std::istream& in);

/// Throws PartialColoring if a vertex is unlabeled.
void write_coloring(std::ostream& out, const ToneColoring& coloring);

DegreeSequence read_degrees(std::istream& in);

Graph load_edge_list(const std::string& path);
ToneColoring load_coloring(const std::string& path);

}  // namespace tonelab

#pragma once

#include <string>

#include "zcol/coloring.hpp"
#include "zcol/diagram.hpp"

namespace zcol {

// Deterministic SVG drawing of a braid closure: one column per letter, strand
// rows top to bottom, under-strand gaps at crossings, nested closure rails on
// the right and left, strokes colored by palette index, and integer color
// labels at the left ends. The coloring is validated before any drawing; the
// output contains no timestamps, so identical inputs give identical bytes.
std::string render_svg(const Diagram& d, const BigVec& colors);

// render_svg written to `path`; IoFailure when the file cannot be written.
void write_svg(const Diagram& d, const BigVec& colors, const std::string& path);

}  // namespace zcol

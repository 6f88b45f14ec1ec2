#pragma once

#include <string>

#include "semitoric/io.hpp"

namespace semitoric {

/// Static rendering options. Cut glyphs are dashed vertical half-lines from
/// the mark (or the chord midpoint when unmarked) toward the upper boundary
/// for sign +1 and the lower boundary for sign -1.
struct RenderSpec {
    int width = 480;
    int height = 360;
    bool show_cuts = true;
    bool show_marks = true;
    bool show_indices = true;
};

/// Deterministic SVG of a polygon payload: identical input bytes produce
/// identical output bytes. All viewport mapping is exact; coordinates are
/// emitted with two fixed decimals.
std::string render_svg(const PolygonPayload& payload, const RenderSpec& spec);

}  // namespace semitoric

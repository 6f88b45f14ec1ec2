#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "semitoric/equivalence.hpp"
#include "semitoric/weighted_polygon.hpp"

namespace semitoric {

/// JSON syntax error with 1-based position in the input text.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg), line(line_), column(column_) {}
    int line = 0;
    int column = 0;
};

/// Polygon file payload: a weighted polygon, optionally pondered by
/// twisting indices and/or marked (one mark height per cut; the mark's x is
/// its cut line).
struct PolygonPayload {
    WeightedPolygon weighted;
    std::optional<std::vector<std::int64_t>> twisting;
    std::optional<std::vector<Rational>> mark_heights;

    PonderedWeightedPolygon pondered() const;
    MarkedWeightedPolygon marked() const;
    /// Re-runs the typed constructors on the optional parts.
    void validate() const;
};

/// Self-describing file container. format_version "1" is the only
/// recognized version.
struct InvariantFile {
    std::string format_version;
    std::map<std::string, std::string> metadata;
    std::variant<PolygonPayload, InvariantList> content;
};

/// Parses and validates a container. Throws ParseError on malformed JSON
/// and std::invalid_argument when structure or a type invariant is violated.
InvariantFile parse_file(const std::string& text);
InvariantFile load_file(const std::string& path);

/// Canonical serialization: sorted keys, two-space indent, rationals as
/// strings, trailing newline. Deterministic for equal values.
std::string serialize_file(const InvariantFile& file);
void save_file(const InvariantFile& file, const std::string& path);

/// Piecewise-affine map wire form: {"shear": k, "cuts": [[lambda, n], ...]}.
std::string serialize_map(const PiecewiseAffineMap& map);
PiecewiseAffineMap parse_map(const std::string& text);

/// Columnar period samples: one "z1 z2 tau1 tau2" line per sample, decimal,
/// blank lines and #-comments ignored. An empty sample set is a parse error.
std::vector<PeriodSample> parse_period_samples(const std::string& text);
std::vector<PeriodSample> load_period_samples(const std::string& path);

/// JSON report of a series recovery run: the closedness check plus, when it
/// passed, the recovered series, fit residual and recorded 2*pi multiple.
std::string serialize_recovery(const ClosednessReport& closedness, const SeriesFit* fit);

}  // namespace semitoric

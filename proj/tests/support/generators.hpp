#pragma once

#include <random>

#include "semitoric/equivalence.hpp"
#include "semitoric/weighted_polygon.hpp"

namespace semitoric::testsupport {

using Rng = std::mt19937_64;

struct WeightedOptions {
    std::size_t min_complexity = 0;
    std::size_t max_complexity = 3;
    int max_denominator = 12;
};

/// Random weighted polygon whose whole orbit stays inside the convex class:
/// both boundary chains carry an integer slope change of at least 1 at every
/// interior breakpoint, and cut lines sit on breakpoints. Vertex coordinates
/// have denominators at most max_denominator.
WeightedPolygon random_weighted_polygon(Rng& rng, const WeightedOptions& opts = {});

GroupElement random_group_element(Rng& rng, std::size_t complexity, std::int64_t max_shear = 3);

/// Marks each cut at a random interior fraction of its chord.
MarkedWeightedPolygon with_random_marks(Rng& rng, const WeightedPolygon& w);

PonderedWeightedPolygon with_random_indices(Rng& rng, const WeightedPolygon& w,
                                            std::int64_t max_index = 3);

FormalSeries2 random_series(Rng& rng, int degree = 4);

/// Random full invariant list with complexity in [min_complexity, 3]; the
/// twisting representative is a random orbit translate of the polygon one.
InvariantList random_invariant_list(Rng& rng, std::size_t min_complexity = 1);

/// A valid weighted polygon provably outside w's orbit (vertical translate,
/// sign flip with unchanged polygon, or an extra cut at a fresh line).
WeightedPolygon perturb_out_of_orbit(Rng& rng, const WeightedPolygon& w);

}  // namespace semitoric::testsupport

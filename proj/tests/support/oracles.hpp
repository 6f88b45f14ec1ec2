#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "semitoric/equivalence.hpp"
#include "semitoric/series.hpp"
#include "semitoric/weighted_polygon.hpp"

namespace semitoric::testsupport {

/// Independent chord oracle: intersects the vertical line with every edge
/// segment of the raw cycle and takes min/max. Does not share code with
/// ConvexPolygon::vertical_chord.
std::optional<std::pair<Rational, Rational>> chord_oracle(const std::vector<Point2>& cycle,
                                                          const Rational& lambda);

/// Exact membership of a point on the polygon's boundary.
bool on_boundary(const ConvexPolygon& p, const Point2& q);

/// Exhaustive orbit decision: every sign pattern crossed with every shear
/// |k| <= max_shear, each candidate verified exactly.
std::optional<GroupElement> oracle_orbits_equal(const WeightedPolygon& w1,
                                                const WeightedPolygon& w2,
                                                std::int64_t max_shear);

std::optional<GroupElement> oracle_pondered_orbits_equal(const PonderedWeightedPolygon& p1,
                                                         const PonderedWeightedPolygon& p2,
                                                         std::int64_t max_shear);

/// Planted polynomial with zero constant term, evaluated exactly in double
/// precision; the ground truth for series-recovery round trips.
struct PlantedPolynomial {
    std::map<std::pair<int, int>, double> coeffs;

    double d1(double z1, double z2) const;  // partial derivative in z1
    double d2(double z1, double z2) const;  // partial derivative in z2
};

/// Period samples on the annulus r_max/10 <= |z| <= r_max of a square grid
/// with the given step, generated so that regularization reproduces the
/// planted gradient: tau1 = dS/dz1 - Re ln z, tau2 = dS/dz2 + Im ln z
/// (+ 2*pi*extra_multiple).
std::vector<PeriodSample> plant_samples(const PlantedPolynomial& s, double r_max, double step,
                                        std::int64_t extra_multiple = 0,
                                        AngleWindow window = AngleWindow::zero_to_two_pi);

}  // namespace semitoric::testsupport

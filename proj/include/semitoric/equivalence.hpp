#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitoric/series.hpp"
#include "semitoric/weighted_polygon.hpp"

namespace semitoric {

/// Which group the orbit decision quotients by: the sign-flip and shear
/// group alone, or additionally vertical translations.
enum class CompareMode {
    exact_group,
    modulo_vertical_translation,
};

/// Constructive certificate that two representatives lie in one orbit.
/// vertical_offset is zero unless the translation mode found the witness.
struct OrbitWitness {
    GroupElement element;
    bool verified = false;
    Rational vertical_offset = Rational(0);
};

/// The unique shear k (if any) such that acting on w1 with the sign change
/// toward target_signs and T^k maps w1's polygon onto w2's. Solved from the
/// lower-boundary identity at two abscissae left of the first cut, then
/// verified exactly. Throws std::domain_error when complexities or cut
/// lambdas differ.
std::optional<std::int64_t> solve_shear(const WeightedPolygon& w1, const WeightedPolygon& w2,
                                        const std::vector<int>& target_signs);

/// Decides whether w1 and w2 lie in the same orbit; a returned witness is
/// always verified (applying it to w1 reproduces w2 exactly).
std::optional<OrbitWitness> orbits_equal(const WeightedPolygon& w1, const WeightedPolygon& w2,
                                         CompareMode mode = CompareMode::exact_group);

/// As orbits_equal, with the extra constraint that the witness shear k also
/// carries the twisting indices of p1 onto those of p2.
std::optional<OrbitWitness> pondered_orbits_equal(const PonderedWeightedPolygon& p1,
                                                  const PonderedWeightedPolygon& p2,
                                                  CompareMode mode = CompareMode::exact_group);

/// The group element act()-ing w onto its canonical form: flips every sign
/// to +1, then shears so the first lower-boundary edge has slope in [0, 1).
GroupElement canonicalizing_element(const WeightedPolygon& w);

/// The distinguished orbit representative: all signs +1 and the shear
/// normalized so the first lower-boundary edge has slope in [0, 1).
/// Idempotent; constant on orbits; distinct orbits get distinct forms.
WeightedPolygon canonical_form(const WeightedPolygon& w);

/// The full list of invariants: count of focus-focus values, Taylor series
/// tuple, polygon-orbit representative, heights tuple, and twisting-index
/// orbit representative. All tuples are ordered by increasing cut lambda.
class InvariantList {
public:
    InvariantList(std::vector<FormalSeries2> taylor, WeightedPolygon polygon_orbit,
                  std::vector<Rational> heights, PonderedWeightedPolygon twisting_orbit);

    std::size_t m_f() const { return polygon_orbit_.complexity(); }
    const std::vector<FormalSeries2>& taylor() const { return taylor_; }
    const WeightedPolygon& polygon_orbit() const { return polygon_orbit_; }
    const std::vector<Rational>& heights() const { return heights_; }
    const PonderedWeightedPolygon& twisting_orbit() const { return twisting_orbit_; }

private:
    std::vector<FormalSeries2> taylor_;
    WeightedPolygon polygon_orbit_;
    std::vector<Rational> heights_;
    PonderedWeightedPolygon twisting_orbit_;
};

struct ItemReport {
    std::string item;   // "(i)" .. "(v)"
    std::string name;
    bool equal = false;
    std::string detail;
};

struct CompareReport {
    bool equal = false;
    std::vector<ItemReport> items;
    std::string first_failure;  // empty when equal
};

/// Item-by-item equality of two invariant lists: counts, Taylor tuples up
/// to truncation_degree (within taylor_tolerance per coefficient), polygon
/// orbits, heights (exact), twisting-index orbits.
CompareReport invariant_lists_equal(const InvariantList& a, const InvariantList& b,
                                    int truncation_degree, double taylor_tolerance = 0.0,
                                    CompareMode mode = CompareMode::exact_group);

}  // namespace semitoric

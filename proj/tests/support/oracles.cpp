#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace semitoric::testsupport {

std::optional<std::pair<Rational, Rational>> chord_oracle(const std::vector<Point2>& cycle,
                                                          const Rational& lambda) {
    std::optional<Rational> lo, hi;
    auto note = [&](const Rational& y) {
        if (!lo || y < *lo) lo = y;
        if (!hi || y > *hi) hi = y;
    };
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point2& a = cycle[i];
        const Point2& b = cycle[(i + 1) % cycle.size()];
        if (a.x == b.x) {
            if (a.x == lambda) {
                note(a.y);
                note(b.y);
            }
            continue;
        }
        const Rational t = (lambda - a.x) / (b.x - a.x);
        if (Rational(0) <= t && t <= Rational(1)) note(a.y + (b.y - a.y) * t);
    }
    if (!lo) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

bool on_boundary(const ConvexPolygon& p, const Point2& q) {
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        const Rational cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
        if (!cross.is_zero()) continue;
        const Rational dot = (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
        const Rational len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        if (Rational(0) <= dot && dot <= len2) return true;
    }
    return false;
}

std::optional<GroupElement> oracle_orbits_equal(const WeightedPolygon& w1,
                                                const WeightedPolygon& w2,
                                                std::int64_t max_shear) {
    if (w1.complexity() != w2.complexity() || w1.lambdas() != w2.lambdas()) return std::nullopt;
    const std::size_t s = w1.complexity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        GroupElement g = GroupElement::identity(s);
        for (std::size_t i = 0; i < s; ++i) {
            if (mask & (std::uint64_t{1} << (s - 1 - i))) g.sign_flips[i] = -1;
        }
        for (std::int64_t k = -max_shear; k <= max_shear; ++k) {
            g.shear_k = k;
            try {
                if (act(g, w1) == w2) return g;
            } catch (const NonconvexImageError&) {
                break;  // nonconvexity comes from the flips, not the shear
            }
        }
    }
    return std::nullopt;
}

std::optional<GroupElement> oracle_pondered_orbits_equal(const PonderedWeightedPolygon& p1,
                                                         const PonderedWeightedPolygon& p2,
                                                         std::int64_t max_shear) {
    if (p1.base().complexity() != p2.base().complexity() ||
        p1.base().lambdas() != p2.base().lambdas())
        return std::nullopt;
    const std::size_t s = p1.base().complexity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        GroupElement g = GroupElement::identity(s);
        for (std::size_t i = 0; i < s; ++i) {
            if (mask & (std::uint64_t{1} << (s - 1 - i))) g.sign_flips[i] = -1;
        }
        for (std::int64_t k = -max_shear; k <= max_shear; ++k) {
            g.shear_k = k;
            try {
                if (act_pondered(g, p1) == p2) return g;
            } catch (const NonconvexImageError&) {
                break;
            }
        }
    }
    return std::nullopt;
}

double PlantedPolynomial::d1(double z1, double z2) const {
    double out = 0.0;
    for (const auto& [key, c] : coeffs) {
        const auto [i, j] = key;
        if (i == 0) continue;
        out += c * static_cast<double>(i) * std::pow(z1, i - 1) * std::pow(z2, j);
    }
    return out;
}

double PlantedPolynomial::d2(double z1, double z2) const {
    double out = 0.0;
    for (const auto& [key, c] : coeffs) {
        const auto [i, j] = key;
        if (j == 0) continue;
        out += c * static_cast<double>(j) * std::pow(z1, i) * std::pow(z2, j - 1);
    }
    return out;
}

std::vector<PeriodSample> plant_samples(const PlantedPolynomial& s, double r_max, double step,
                                        std::int64_t extra_multiple, AngleWindow window) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double r_min = r_max / 10.0;
    const auto n = static_cast<std::int64_t>(std::llround(r_max / step));
    std::vector<PeriodSample> samples;
    for (std::int64_t iy = -n; iy <= n; ++iy) {
        for (std::int64_t ix = -n; ix <= n; ++ix) {
            const double z1 = static_cast<double>(ix) * step;
            const double z2 = static_cast<double>(iy) * step;
            const double r = std::hypot(z1, z2);
            if (r < r_min || r > r_max) continue;
            double theta = std::atan2(z2, z1);
            switch (window) {
                case AngleWindow::zero_to_two_pi:
                    if (theta < 0.0) theta += two_pi;
                    break;
                case AngleWindow::pi_to_three_pi:
                    if (theta < std::numbers::pi) theta += two_pi;
                    break;
            }
            PeriodSample sample;
            sample.z1 = z1;
            sample.z2 = z2;
            sample.tau1 = s.d1(z1, z2) - std::log(r);
            sample.tau2 = s.d2(z1, z2) + theta + two_pi * static_cast<double>(extra_multiple);
            samples.push_back(sample);
        }
    }
    return samples;
}

}  // namespace semitoric::testsupport

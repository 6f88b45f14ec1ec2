#include "semitoric/render.hpp"

#include <sstream>
#include <stdexcept>

namespace semitoric {

namespace {

// Fixed-point decimal with two digits, rounded half away from zero. Exact
// integer arithmetic keeps the output independent of the platform.
std::string px(const Rational& r) {
    const Rational scaled = r * Rational(100);
    const Rational half(1, 2);
    const std::int64_t q = scaled.sign() >= 0 ? (scaled + half).floor_int64()
                                              : -((-scaled + half).floor_int64());
    const std::int64_t a = q < 0 ? -q : q;
    std::string digits = std::to_string(a);
    if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
    digits.insert(digits.size() - 2, ".");
    return (q < 0 ? "-" : "") + digits;
}

struct Viewport {
    Rational scale;
    Rational ox, oy;
    Rational bx0, by0;
    int height = 0;

    Rational x(const Rational& v) const { return ox + scale * (v - bx0); }
    Rational y(const Rational& v) const { return Rational(height) - oy - scale * (v - by0); }
};

}  // namespace

std::string render_svg(const PolygonPayload& payload, const RenderSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0)
        throw std::invalid_argument("render dimensions must be positive");

    const ConvexPolygon& delta = payload.weighted.delta();
    Rational bx0 = delta.vertices().front().x, bx1 = bx0;
    Rational by0 = delta.vertices().front().y, by1 = by0;
    for (const Point2& p : delta.vertices()) {
        if (p.x < bx0) bx0 = p.x;
        if (p.x > bx1) bx1 = p.x;
        if (p.y < by0) by0 = p.y;
        if (p.y > by1) by1 = p.y;
    }
    const Rational bw = bx1 - bx0, bh = by1 - by0;

    // 5% margin on every side, uniform scale.
    const Rational usable_w = Rational(spec.width) * Rational(9, 10);
    const Rational usable_h = Rational(spec.height) * Rational(9, 10);
    const Rational sx = usable_w / bw, sy = usable_h / bh;
    Viewport vp;
    vp.scale = sx < sy ? sx : sy;
    vp.ox = (Rational(spec.width) - vp.scale * bw) / Rational(2);
    vp.oy = (Rational(spec.height) - vp.scale * bh) / Rational(2);
    vp.bx0 = bx0;
    vp.by0 = by0;
    vp.height = spec.height;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    svg << "  <path d=\"";
    const auto& verts = delta.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        svg << (i == 0 ? "M " : " L ") << px(vp.x(verts[i].x)) << " " << px(vp.y(verts[i].y));
    }
    svg << " Z\" fill=\"#eef3fa\" stroke=\"#27415e\" stroke-width=\"1.5\"/>\n";

    for (std::size_t i = 0; i < payload.weighted.complexity(); ++i) {
        const Cut& cut = payload.weighted.cuts()[i];
        const Rational lo = delta.lower_boundary(cut.lambda);
        const Rational hi = delta.upper_boundary(cut.lambda);
        const Rational base_y = payload.mark_heights ? (*payload.mark_heights)[i]
                                                     : (lo + hi) / Rational(2);
        const Rational tip_y = cut.epsilon > 0 ? hi : lo;

        if (spec.show_cuts) {
            svg << "  <line x1=\"" << px(vp.x(cut.lambda)) << "\" y1=\"" << px(vp.y(base_y))
                << "\" x2=\"" << px(vp.x(cut.lambda)) << "\" y2=\"" << px(vp.y(tip_y))
                << "\" stroke=\"#b2412f\" stroke-width=\"1.2\" stroke-dasharray=\"5 4\"/>\n";
        }
        if (spec.show_marks && payload.mark_heights) {
            svg << "  <circle cx=\"" << px(vp.x(cut.lambda)) << "\" cy=\"" << px(vp.y(base_y))
                << "\" r=\"3\" fill=\"#b2412f\"/>\n";
        }
        if (spec.show_indices && payload.twisting) {
            svg << "  <text x=\"" << px(vp.x(cut.lambda) + Rational(5)) << "\" y=\""
                << px(vp.y(base_y) - Rational(5))
                << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#1a1a1a\">k="
                << (*payload.twisting)[i] << "</text>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace semitoric

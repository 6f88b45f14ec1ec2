#include "semitoric/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace semitoric {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& require(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_string())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::int64_t require_int(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

const json& require_array(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_array())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be an array");
    return v;
}

Rational rational_from(const json& v, const char* what) {
    if (!v.is_string())
        throw std::invalid_argument(std::string(what) + " must be a rational string");
    return Rational::parse(v.get<std::string>());
}

json point_to_json(const Point2& p) { return json::array({p.x.str(), p.y.str()}); }

Point2 point_from_json(const json& v) {
    if (!v.is_array() || v.size() != 2)
        throw std::invalid_argument("a point must be a two-element array");
    return Point2{rational_from(v[0], "point coordinate"), rational_from(v[1], "point coordinate")};
}

json weighted_to_json(const WeightedPolygon& w,
                      const std::optional<std::vector<std::int64_t>>& twisting,
                      const std::optional<std::vector<Rational>>& marks) {
    json verts = json::array();
    for (const Point2& p : w.delta().vertices()) verts.push_back(point_to_json(p));
    json cuts = json::array();
    for (std::size_t i = 0; i < w.complexity(); ++i) {
        json cut = {{"lambda", w.cuts()[i].lambda.str()}, {"epsilon", w.cuts()[i].epsilon}};
        if (twisting) cut["k"] = (*twisting)[i];
        if (marks) cut["mark_y"] = (*marks)[i].str();
        cuts.push_back(cut);
    }
    return json{{"polygon", verts}, {"cuts", cuts}};
}

struct ParsedWeighted {
    WeightedPolygon weighted;
    std::optional<std::vector<std::int64_t>> twisting;
    std::optional<std::vector<Rational>> marks;
};

ParsedWeighted weighted_from_json(const json& j) {
    const json& verts = require_array(j, "polygon");
    std::vector<Point2> points;
    for (const json& v : verts) points.push_back(point_from_json(v));

    const json& cuts_json = require_array(j, "cuts");
    std::vector<Cut> cuts;
    std::vector<std::int64_t> twisting;
    std::vector<Rational> marks;
    std::size_t with_k = 0, with_mark = 0;
    for (const json& c : cuts_json) {
        if (!c.is_object()) throw std::invalid_argument("each cut must be an object");
        Cut cut;
        cut.lambda = rational_from(require(c, "lambda"), "cut lambda");
        const json& eps = require(c, "epsilon");
        if (!eps.is_number_integer())
            throw std::invalid_argument("field \"epsilon\" must be an integer");
        cut.epsilon = eps.get<int>();
        cuts.push_back(cut);
        if (c.contains("k")) {
            const json& k = c["k"];
            if (!k.is_number_integer())
                throw std::invalid_argument("field \"k\" must be an integer");
            twisting.push_back(k.get<std::int64_t>());
            ++with_k;
        }
        if (c.contains("mark_y")) {
            marks.push_back(rational_from(c["mark_y"], "mark_y"));
            ++with_mark;
        }
    }
    if (with_k != 0 && with_k != cuts.size())
        throw std::invalid_argument("either every cut carries a twisting index \"k\" or none");
    if (with_mark != 0 && with_mark != cuts.size())
        throw std::invalid_argument("either every cut carries a \"mark_y\" or none");

    ParsedWeighted out{WeightedPolygon(ConvexPolygon(std::move(points)), std::move(cuts)),
                       std::nullopt, std::nullopt};
    if (with_k) out.twisting = std::move(twisting);
    if (with_mark) out.marks = std::move(marks);
    return out;
}

json series_to_json(const FormalSeries2& s) {
    json coeffs = json::array();
    for (const auto& [key, value] : s.coefficients()) {
        coeffs.push_back(json{{"i", key.first}, {"j", key.second}, {"value", value}});
    }
    return json{{"degree", s.degree()}, {"coeffs", coeffs}};
}

FormalSeries2 series_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("a series must be an object");
    const auto degree = static_cast<int>(require_int(j, "degree"));
    const json& coeffs_json = require_array(j, "coeffs");
    std::map<FormalSeries2::Key, double> coeffs;
    for (const json& c : coeffs_json) {
        if (!c.is_object()) throw std::invalid_argument("each series coefficient must be an object");
        const int i = static_cast<int>(require_int(c, "i"));
        const int jj = static_cast<int>(require_int(c, "j"));
        const json& value = require(c, "value");
        if (!value.is_number())
            throw std::invalid_argument("field \"value\" must be a number");
        if (!coeffs.emplace(FormalSeries2::Key{i, jj}, value.get<double>()).second)
            throw std::invalid_argument("duplicate series coefficient");
    }
    return FormalSeries2(degree, std::move(coeffs));
}

json invariant_list_to_json(const InvariantList& list) {
    json taylor = json::array();
    for (const FormalSeries2& s : list.taylor()) taylor.push_back(series_to_json(s));
    json heights = json::array();
    for (const Rational& h : list.heights()) heights.push_back(h.str());
    return json{{"type", "invariant_list"},
                {"m_f", list.m_f()},
                {"taylor", taylor},
                {"polygon_orbit", weighted_to_json(list.polygon_orbit(), std::nullopt,
                                                   std::nullopt)},
                {"heights", heights},
                {"twisting_orbit",
                 weighted_to_json(list.twisting_orbit().base(), list.twisting_orbit().indices(),
                                  std::nullopt)}};
}

InvariantList invariant_list_from_json(const json& j) {
    const auto mf = require_int(j, "m_f");

    std::vector<FormalSeries2> taylor;
    for (const json& s : require_array(j, "taylor")) taylor.push_back(series_from_json(s));

    ParsedWeighted polygon = weighted_from_json(require(j, "polygon_orbit"));
    if (polygon.twisting || polygon.marks)
        throw std::invalid_argument("polygon_orbit must not carry \"k\" or \"mark_y\" fields");

    std::vector<Rational> heights;
    for (const json& h : require_array(j, "heights")) heights.push_back(rational_from(h, "height"));

    ParsedWeighted twisting = weighted_from_json(require(j, "twisting_orbit"));
    if (!twisting.twisting)
        throw std::invalid_argument("twisting_orbit must carry a twisting index \"k\" per cut");

    if (mf < 0 || static_cast<std::size_t>(mf) != polygon.weighted.complexity())
        throw std::invalid_argument("m_f does not match the number of cut lines");

    return InvariantList(std::move(taylor), std::move(polygon.weighted), std::move(heights),
                         PonderedWeightedPolygon(std::move(twisting.weighted),
                                                 std::move(*twisting.twisting)));
}

}  // namespace

PonderedWeightedPolygon PolygonPayload::pondered() const {
    if (!twisting)
        throw std::invalid_argument("polygon file carries no twisting indices");
    return PonderedWeightedPolygon(weighted, *twisting);
}

MarkedWeightedPolygon PolygonPayload::marked() const {
    if (!mark_heights)
        throw std::invalid_argument("polygon file carries no marked points");
    std::vector<Point2> marks;
    marks.reserve(mark_heights->size());
    for (std::size_t i = 0; i < mark_heights->size(); ++i)
        marks.push_back(Point2{weighted.cuts()[i].lambda, (*mark_heights)[i]});
    return MarkedWeightedPolygon(weighted, std::move(marks));
}

void PolygonPayload::validate() const {
    if (twisting) (void)pondered();
    if (mark_heights) (void)marked();
}

InvariantFile parse_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        throw ParseError(e.what(), line, col);
    }
    if (!j.is_object())
        throw std::invalid_argument("top-level JSON value must be an object");

    const std::string version = require_string(j, "format_version");
    if (version != "1")
        throw std::invalid_argument("unrecognized format_version \"" + version + "\"");

    std::map<std::string, std::string> metadata;
    if (j.contains("metadata")) {
        const json& meta = j["metadata"];
        if (!meta.is_object())
            throw std::invalid_argument("field \"metadata\" must be an object");
        for (const auto& [key, value] : meta.items()) {
            if (!value.is_string())
                throw std::invalid_argument("metadata values must be strings");
            metadata.emplace(key, value.get<std::string>());
        }
    }

    const json& content = require(j, "content");
    if (!content.is_object())
        throw std::invalid_argument("field \"content\" must be an object");
    const std::string type = require_string(content, "type");
    if (type == "polygon") {
        ParsedWeighted parsed = weighted_from_json(content);
        PolygonPayload payload{std::move(parsed.weighted), std::move(parsed.twisting),
                               std::move(parsed.marks)};
        payload.validate();
        return InvariantFile{version, std::move(metadata), std::move(payload)};
    }
    if (type == "invariant_list") {
        return InvariantFile{version, std::move(metadata), invariant_list_from_json(content)};
    }
    throw std::invalid_argument("unrecognized content type \"" + type + "\"");
}

InvariantFile load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_file(buffer.str());
}

std::string serialize_file(const InvariantFile& file) {
    json j;
    j["format_version"] = file.format_version;
    if (!file.metadata.empty()) {
        json meta = json::object();
        for (const auto& [key, value] : file.metadata) meta[key] = value;
        j["metadata"] = meta;
    }
    if (const auto* payload = std::get_if<PolygonPayload>(&file.content)) {
        json content = weighted_to_json(payload->weighted, payload->twisting,
                                        payload->mark_heights);
        content["type"] = "polygon";
        j["content"] = content;
    } else {
        j["content"] = invariant_list_to_json(std::get<InvariantList>(file.content));
    }
    return j.dump(2) + "\n";
}

void save_file(const InvariantFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
    out << serialize_file(file);
}

std::string serialize_map(const PiecewiseAffineMap& map) {
    json cuts = json::array();
    for (const CutShear& c : map.cuts()) cuts.push_back(json::array({c.lambda.str(), c.n}));
    return json{{"shear", map.shear_k()}, {"cuts", cuts}}.dump();
}

PiecewiseAffineMap parse_map(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        throw ParseError(e.what(), line, col);
    }
    const std::int64_t shear = require_int(j, "shear");
    std::vector<CutShear> cuts;
    for (const json& c : require_array(j, "cuts")) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("each map cut must be a [lambda, n] pair");
        if (!c[1].is_number_integer())
            throw std::invalid_argument("cut multiplicity must be an integer");
        cuts.push_back(CutShear{rational_from(c[0], "cut lambda"), c[1].get<std::int64_t>()});
    }
    return PiecewiseAffineMap(shear, std::move(cuts));
}

std::vector<PeriodSample> parse_period_samples(const std::string& text) {
    std::vector<PeriodSample> samples;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        PeriodSample s;
        if (fields >> s.z1) {
            if (!(fields >> s.z2 >> s.tau1 >> s.tau2))
                throw ParseError("expected four decimal fields \"z1 z2 tau1 tau2\"", lineno, 1);
            double extra;
            if (fields >> extra)
                throw ParseError("unexpected extra field on sample line", lineno, 1);
            samples.push_back(s);
        } else {
            fields.clear();
            std::string word;
            if (fields >> word)
                throw ParseError("expected four decimal fields \"z1 z2 tau1 tau2\"", lineno, 1);
        }
    }
    if (samples.empty()) throw ParseError("sample file contains no samples", 1, 1);
    return samples;
}

std::vector<PeriodSample> load_period_samples(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_period_samples(buffer.str());
}

std::string serialize_recovery(const ClosednessReport& closedness, const SeriesFit* fit) {
    json j;
    j["closedness"] = json{{"max_residual", closedness.max_residual},
                           {"tolerance", closedness.tolerance},
                           {"pass", closedness.pass},
                           {"stencils", closedness.stencils},
                           {"step_x", closedness.step_x},
                           {"step_y", closedness.step_y}};
    if (fit) {
        j["series"] = series_to_json(fit->series);
        j["residual_rms"] = fit->residual_rms;
        j["two_pi_multiple"] = fit->two_pi_multiple;
    }
    return j.dump(2) + "\n";
}

}  // namespace semitoric

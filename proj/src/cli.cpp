#include "semitoric/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "semitoric/equivalence.hpp"
#include "semitoric/io.hpp"
#include "semitoric/series.hpp"

namespace semitoric::cli {

namespace {

std::optional<InvariantFile> try_load(const std::string& path, std::ostream& err, int& code) {
    try {
        return load_file(path);
    } catch (const ParseError& e) {
        err << path << ":" << e.line << ":" << e.column << ": parse error: " << e.what() << "\n";
        code = kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << path << ": invalid: " << e.what() << "\n";
        code = kExitInvalid;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        code = kExitUsage;
    }
    return std::nullopt;
}

std::optional<GroupElement> build_element(const ActOptions& options, std::size_t complexity,
                                          std::ostream& err) {
    GroupElement g = GroupElement::identity(complexity);
    for (std::size_t j : options.flips) {
        if (j < 1 || j > complexity) {
            err << "cut index " << j << " out of range 1.." << complexity << "\n";
            return std::nullopt;
        }
        g.sign_flips[j - 1] *= -1;
    }
    g.shear_k = options.shear;
    return g;
}

PolygonPayload apply_element(const GroupElement& g, const PolygonPayload& payload) {
    PolygonPayload moved{act(g, payload.weighted), std::nullopt, std::nullopt};
    if (payload.twisting) moved.twisting = act_pondered(g, payload.pondered()).indices();
    if (payload.mark_heights) {
        std::vector<Rational> heights;
        for (const Point2& m : act_marked(g, payload.marked()).marks()) heights.push_back(m.y);
        moved.mark_heights = std::move(heights);
    }
    moved.validate();
    return moved;
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    if (!try_load(path, err, code)) return code;
    out << path << ": valid\n";
    return kExitOk;
}

int cmd_act(const std::string& path, const ActOptions& options, std::ostream& out,
            std::ostream& err) {
    int code = kExitOk;
    auto file = try_load(path, err, code);
    if (!file) return code;

    try {
        if (const auto* payload = std::get_if<PolygonPayload>(&file->content)) {
            const auto g = build_element(options, payload->weighted.complexity(), err);
            if (!g) return kExitUsage;
            out << serialize_file(
                InvariantFile{file->format_version, file->metadata, apply_element(*g, *payload)});
        } else {
            const auto& list = std::get<InvariantList>(file->content);
            const auto g = build_element(options, list.m_f(), err);
            if (!g) return kExitUsage;
            InvariantList moved(list.taylor(), act(*g, list.polygon_orbit()), list.heights(),
                                act_pondered(*g, list.twisting_orbit()));
            out << serialize_file(
                InvariantFile{file->format_version, file->metadata, std::move(moved)});
        }
    } catch (const NonconvexImageError& e) {
        err << "act failed: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const CompareOptions& options, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    auto file_a = try_load(path_a, err, code);
    if (!file_a) return code;
    auto file_b = try_load(path_b, err, code);
    if (!file_b) return code;

    const auto* list_a = std::get_if<InvariantList>(&file_a->content);
    const auto* list_b = std::get_if<InvariantList>(&file_b->content);
    if (!list_a || !list_b) {
        err << "compare expects two invariant-list files\n";
        return kExitUsage;
    }

    CompareReport report;
    try {
        report = invariant_lists_equal(*list_a, *list_b, options.degree, options.taylor_tolerance,
                                       options.modulo_vertical_translation
                                           ? CompareMode::modulo_vertical_translation
                                           : CompareMode::exact_group);
    } catch (const std::domain_error& e) {
        err << "compare failed: " << e.what() << "\n";
        return kExitUsage;
    }

    for (const ItemReport& item : report.items) {
        out << std::left << std::setw(6) << item.item << std::setw(31) << item.name
            << (item.equal ? "PASS" : "FAIL") << "  " << item.detail << "\n";
    }
    if (report.equal) {
        out << "result: EQUAL\n";
        return kExitOk;
    }
    out << "result: NOT EQUAL (first failing item " << report.first_failure << ")\n";
    return kExitInvalid;
}

int cmd_render(const std::string& path, const RenderSpec& spec,
               const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    auto file = try_load(path, err, code);
    if (!file) return code;

    const auto* payload = std::get_if<PolygonPayload>(&file->content);
    if (!payload) {
        err << "render expects a polygon file\n";
        return kExitUsage;
    }

    std::string svg;
    try {
        svg = render_svg(*payload, spec);
    } catch (const std::invalid_argument& e) {
        err << "render failed: " << e.what() << "\n";
        return kExitUsage;
    }

    if (out_path) {
        std::ofstream file_out(*out_path, std::ios::binary);
        if (!file_out) {
            err << "error: cannot open \"" << *out_path << "\" for writing\n";
            return kExitUsage;
        }
        file_out << svg;
    } else {
        out << svg;
    }
    return kExitOk;
}

int cmd_recover_taylor(const std::string& samples_path, const RecoverOptions& options,
                       std::ostream& out, std::ostream& err) {
    std::vector<PeriodSample> samples;
    try {
        samples = load_period_samples(samples_path);
    } catch (const ParseError& e) {
        err << samples_path << ":" << e.line << ":" << e.column << ": parse error: " << e.what()
            << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const SigmaField field = regularize(
            samples, options.shifted_branch ? AngleWindow::pi_to_three_pi
                                            : AngleWindow::zero_to_two_pi);
        const LatticeIndex lattice = build_lattice(field);
        const double h = std::max(lattice.hx, lattice.hy);
        const double tolerance = options.closedness_tolerance.value_or(10.0 * h * h);
        const ClosednessReport closedness = check_closed(field, tolerance);
        if (!closedness.pass) {
            out << serialize_recovery(closedness, nullptr);
            err << "closedness check failed: max residual " << closedness.max_residual
                << " exceeds tolerance " << closedness.tolerance << "\n";
            return kExitInvalid;
        }
        const SeriesFit fit = recover_series(field, options.degree);
        out << serialize_recovery(closedness, &fit);
    } catch (const ConditioningError& e) {
        err << "recover-taylor failed: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        err << "recover-taylor failed: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_canonical(const std::string& path, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    auto file = try_load(path, err, code);
    if (!file) return code;

    const auto* payload = std::get_if<PolygonPayload>(&file->content);
    if (!payload) {
        err << "canonical expects a polygon file\n";
        return kExitUsage;
    }
    try {
        const GroupElement g = canonicalizing_element(payload->weighted);
        out << serialize_file(
            InvariantFile{file->format_version, file->metadata, apply_element(g, *payload)});
    } catch (const NonconvexImageError& e) {
        err << "canonical failed: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

namespace {

// SEMITORIC_TRUNCATION_DEGREE overrides the built-in default degree 4; an
// explicit --degree flag wins over both.
std::optional<int> default_degree(std::ostream& err) {
    const char* env = std::getenv("SEMITORIC_TRUNCATION_DEGREE");
    if (!env || !*env) return 4;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1 || value > 64) {
        err << "SEMITORIC_TRUNCATION_DEGREE must be a small positive integer, got \"" << env
            << "\"\n";
        return std::nullopt;
    }
    return static_cast<int>(value);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const std::optional<int> degree_default = default_degree(err);
    if (!degree_default) return kExitUsage;

    CLI::App app{"Exact invariants of semitoric systems: weighted polygons, group actions, "
                 "orbit comparison, and Taylor-series recovery from period samples"};
    app.require_subcommand(1);

    std::string path, path_b, samples_path;
    std::string render_out;
    ActOptions act_options;
    CompareOptions compare_options;
    compare_options.degree = *degree_default;
    RecoverOptions recover_options;
    recover_options.degree = *degree_default;
    RenderSpec spec;
    bool no_cuts = false, no_marks = false, no_indices = false;
    double closedness_tolerance = 0.0;

    CLI::App* validate = app.add_subcommand("validate", "Check every invariant of a file");
    validate->add_option("path", path, "input file")->required();

    CLI::App* act_cmd = app.add_subcommand("act", "Apply a group element and print the result");
    act_cmd->add_option("path", path, "input file")->required();
    act_cmd->add_option("--flip", act_options.flips, "1-based cut index to sign-flip (repeatable)");
    act_cmd->add_option("--shear", act_options.shear, "shear exponent k");

    CLI::App* compare = app.add_subcommand("compare", "Decide equality of two invariant lists");
    compare->add_option("path_a", path, "first invariant-list file")->required();
    compare->add_option("path_b", path_b, "second invariant-list file")->required();
    compare->add_option("--degree", compare_options.degree,
                        "Taylor comparison degree (default 4 or "
                        "SEMITORIC_TRUNCATION_DEGREE)");
    compare->add_option("--tolerance", compare_options.taylor_tolerance,
                        "per-coefficient Taylor tolerance (default 0, exact)");
    compare->add_flag("--modulo-vertical-translation",
                      compare_options.modulo_vertical_translation,
                      "additionally quotient polygon orbits by vertical translations");

    CLI::App* render = app.add_subcommand("render", "Emit a deterministic SVG of a polygon file");
    render->add_option("path", path, "input polygon file")->required();
    render->add_option("--out", render_out, "output SVG path (default: stdout)");
    render->add_option("--width", spec.width, "canvas width in pixels");
    render->add_option("--height", spec.height, "canvas height in pixels");
    render->add_flag("--no-cuts", no_cuts, "hide cut half-lines");
    render->add_flag("--no-marks", no_marks, "hide marked points");
    render->add_flag("--no-indices", no_indices, "hide twisting-index labels");

    CLI::App* recover = app.add_subcommand(
        "recover-taylor", "Recover the Taylor series from columnar period samples");
    recover->add_option("samples", samples_path, "columnar sample file (z1 z2 tau1 tau2)")
        ->required();
    recover->add_option("--degree", recover_options.degree,
                        "series truncation degree (default 4 or SEMITORIC_TRUNCATION_DEGREE)");
    recover->add_flag("--shifted-branch", recover_options.shifted_branch,
                      "measure angles in [pi, 3*pi) instead of [0, 2*pi)");
    CLI::Option* tol_option = recover->add_option(
        "--closedness-tolerance", closedness_tolerance,
        "max curl residual accepted (default: 10 * h^2 for grid step h)");

    CLI::App* canonical =
        app.add_subcommand("canonical", "Print the canonical orbit representative");
    canonical->add_option("path", path, "input polygon file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (validate->parsed()) return cmd_validate(path, out, err);
    if (act_cmd->parsed()) return cmd_act(path, act_options, out, err);
    if (compare->parsed()) return cmd_compare(path, path_b, compare_options, out, err);
    if (render->parsed()) {
        spec.show_cuts = !no_cuts;
        spec.show_marks = !no_marks;
        spec.show_indices = !no_indices;
        return cmd_render(path, spec,
                          render_out.empty() ? std::nullopt
                                             : std::optional<std::string>(render_out),
                          out, err);
    }
    if (recover->parsed()) {
        if (tol_option->count() > 0) recover_options.closedness_tolerance = closedness_tolerance;
        return cmd_recover_taylor(samples_path, recover_options, out, err);
    }
    if (canonical->parsed()) return cmd_canonical(path, out, err);
    err << "no command given\n";
    return kExitUsage;
}

}  // namespace semitoric::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semitoric/render.hpp"

namespace semitoric::cli {

// Exit codes: 0 equal/valid, 1 unequal/invalid, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

struct ActOptions {
    std::vector<std::size_t> flips;  // 1-based cut indices, toggled
    std::int64_t shear = 0;
};

struct CompareOptions {
    int degree = 4;
    double taylor_tolerance = 0.0;
    bool modulo_vertical_translation = false;
};

struct RecoverOptions {
    int degree = 4;
    bool shifted_branch = false;  // angles in [pi, 3*pi) instead of [0, 2*pi)
    std::optional<double> closedness_tolerance;  // default: 10 * h^2
};

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_act(const std::string& path, const ActOptions& options, std::ostream& out,
            std::ostream& err);
int cmd_compare(const std::string& path_a, const std::string& path_b,
                const CompareOptions& options, std::ostream& out, std::ostream& err);
int cmd_render(const std::string& path, const RenderSpec& spec,
               const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err);
int cmd_recover_taylor(const std::string& samples_path, const RecoverOptions& options,
                       std::ostream& out, std::ostream& err);
int cmd_canonical(const std::string& path, std::ostream& out, std::ostream& err);

/// argv dispatcher behind the semitoric binary.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semitoric::cli

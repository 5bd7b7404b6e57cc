#ifndef RICBOUND_CONFIG_HPP
#define RICBOUND_CONFIG_HPP

#include "ricbound/manifold.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace ricbound {

struct SweepSpec {
    int factor_index = 0;
    std::string field; // "rho" or "scalar"
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
};

enum class OutputFormat { Text, Csv };

struct RunConfig {
    ProductSpec manifold;
    int grid_resolution = 8192;
    std::optional<SweepSpec> sweep;
    OutputFormat format = OutputFormat::Text;
    unsigned seed = 1;
};

/// Malformed configuration; `line` is 1-based (0 when not line-specific).
struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_no, const std::string& msg)
        : std::runtime_error(line_no > 0
                                 ? "line " + std::to_string(line_no) + ": " + msg
                                 : msg),
          line(line_no) {}
};

/// Line-oriented config format:
///   # comment
///   manifold <name>
///   kahler true|false
///   factor einstein dim=<int> scalar=<float>
///   factor torus_rev rho=<float>
///   grid <int>
///   sweep <factor-index>.<field> <from> <to> <steps>
/// Unknown keys are errors; factor indices are 0-based.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

} // namespace ricbound

#endif

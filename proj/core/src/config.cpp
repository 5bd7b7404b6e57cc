#include "ricbound/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ricbound {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

double parse_double(const std::string& tok, int line) {
    double v = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw ConfigError(line, "bad numeric literal '" + tok + "'");
    return v;
}

int parse_int(const std::string& tok, int line) {
    int v = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw ConfigError(line, "bad integer literal '" + tok + "'");
    return v;
}

// Splits "key=value" and checks the key.
std::string kv_value(const std::string& tok, const std::string& key, int line) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key)
        throw ConfigError(line, "expected '" + key + "=<value>', got '" + tok + "'");
    return tok.substr(eq + 1);
}

} // namespace

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    bool have_manifold = false;
    bool have_kahler = false;
    bool have_grid = false;
    int sweep_line = 0;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto toks = split(line);
        const std::string& key = toks[0];

        if (key == "manifold") {
            if (have_manifold)
                throw ConfigError(line_no, "duplicate manifold name");
            if (toks.size() != 2)
                throw ConfigError(line_no, "expected 'manifold <name>'");
            cfg.manifold.name = toks[1];
            have_manifold = true;
        } else if (key == "kahler") {
            if (have_kahler) throw ConfigError(line_no, "duplicate kahler flag");
            if (toks.size() != 2 || (toks[1] != "true" && toks[1] != "false"))
                throw ConfigError(line_no, "expected 'kahler true|false'");
            cfg.manifold.kahler = toks[1] == "true";
            have_kahler = true;
        } else if (key == "factor") {
            if (toks.size() < 2)
                throw ConfigError(line_no, "expected a factor kind");
            if (toks[1] == "einstein") {
                if (toks.size() != 4)
                    throw ConfigError(line_no,
                                      "expected 'factor einstein dim=<int> scalar=<float>'");
                EinsteinFactor f;
                f.dim = parse_int(kv_value(toks[2], "dim", line_no), line_no);
                f.scalar = parse_double(kv_value(toks[3], "scalar", line_no), line_no);
                if (f.dim < 1)
                    throw ConfigError(line_no, "factor dimension must be >= 1");
                if (f.dim == 1 && f.scalar != 0.0)
                    throw ConfigError(line_no,
                                      "a 1-dimensional factor must be flat (scalar=0)");
                cfg.manifold.factors.emplace_back(f);
            } else if (toks[1] == "torus_rev") {
                if (toks.size() != 3)
                    throw ConfigError(line_no, "expected 'factor torus_rev rho=<float>'");
                TorusRevFactor f;
                f.rho = parse_double(kv_value(toks[2], "rho", line_no), line_no);
                if (!(f.rho > 0.0))
                    throw ConfigError(line_no, "rho must be positive");
                cfg.manifold.factors.emplace_back(f);
            } else {
                throw ConfigError(line_no, "unknown factor kind '" + toks[1] + "'");
            }
        } else if (key == "grid") {
            if (have_grid) throw ConfigError(line_no, "duplicate grid setting");
            if (toks.size() != 2)
                throw ConfigError(line_no, "expected 'grid <int>'");
            cfg.grid_resolution = parse_int(toks[1], line_no);
            if (cfg.grid_resolution < 64)
                throw ConfigError(line_no, "grid resolution must be >= 64");
            have_grid = true;
        } else if (key == "sweep") {
            if (cfg.sweep) throw ConfigError(line_no, "duplicate sweep block");
            if (toks.size() != 5)
                throw ConfigError(
                    line_no, "expected 'sweep <factor-index>.<field> <from> <to> <steps>'");
            const auto dot = toks[1].find('.');
            if (dot == std::string::npos)
                throw ConfigError(line_no, "sweep parameter must be <factor-index>.<field>");
            SweepSpec sw;
            sw.factor_index = parse_int(toks[1].substr(0, dot), line_no);
            sw.field = toks[1].substr(dot + 1);
            sw.from = parse_double(toks[2], line_no);
            sw.to = parse_double(toks[3], line_no);
            sw.steps = parse_int(toks[4], line_no);
            if (sw.steps < 2)
                throw ConfigError(line_no, "sweep needs at least 2 steps");
            if (!(sw.from < sw.to))
                throw ConfigError(line_no, "sweep range must satisfy from < to");
            cfg.sweep = sw;
            sweep_line = line_no;
        } else {
            throw ConfigError(line_no, "unknown key '" + key + "'");
        }
    }
    if (!have_manifold)
        throw ConfigError(0, "missing 'manifold <name>' line");
    if (cfg.manifold.factors.empty())
        throw ConfigError(0, "at least one factor line is required");
    if (cfg.manifold.dim() > 12)
        throw ConfigError(0, "total dimension exceeds 12");
    try {
        cfg.manifold.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(0, e.what());
    }
    if (cfg.sweep) {
        const auto& sw = *cfg.sweep;
        if (sw.factor_index < 0 ||
            sw.factor_index >= static_cast<int>(cfg.manifold.factors.size()))
            throw ConfigError(sweep_line, "sweep factor index out of range");
        const auto& f = cfg.manifold.factors[sw.factor_index];
        const bool torus = std::holds_alternative<TorusRevFactor>(f);
        if (torus && sw.field != "rho")
            throw ConfigError(sweep_line, "torus_rev factors only expose the field 'rho'");
        if (!torus && sw.field != "scalar")
            throw ConfigError(sweep_line, "einstein factors only expose the field 'scalar'");
        if (torus && !(sw.from > 0.0))
            throw ConfigError(sweep_line, "swept rho values must stay positive");
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    return parse_config(in);
}

} // namespace ricbound

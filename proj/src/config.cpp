// Plain-text pipeline configuration:
//
//   # comment
//   probe = 9,15            (width,length; repeat once per probe)
//   orientations = 18
//   k = auto                (or a non-negative integer)
//   threshold_fraction = 0.12
//   center_intensity = 10
//   side_intensity = 0
//   M = 256
//   zoi_floor = 20
//   zoi_close_radius = 3
//
// Keys are case-sensitive; unknown keys are rejected. When no `probe` line
// is present the default probe set is used.

#include "lmm/error.hpp"
#include "lmm/vessel.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lmm::vessel {
namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + v + "'");
    }
}

long long parse_int(const std::string& v, int line) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("line " + std::to_string(line) + ": expected an integer, got '" + v + "'");
    return out;
}

}  // namespace

PipelineConfig parse_config(std::istream& in) {
    PipelineConfig cfg = PipelineConfig::defaults();
    cfg.probes.clear();
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        raw = trim(raw);
        if (raw.empty()) continue;
        const auto eq = raw.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line) + ": expected key = value");
        const std::string key = trim(raw.substr(0, eq));
        const std::string value = trim(raw.substr(eq + 1));
        if (key == "probe") {
            const auto comma = value.find(',');
            if (comma == std::string::npos)
                throw ConfigError("line " + std::to_string(line) + ": probe expects width,length");
            cfg.probes.push_back({static_cast<int>(parse_int(trim(value.substr(0, comma)), line)),
                                  static_cast<int>(parse_int(trim(value.substr(comma + 1)), line))});
        } else if (key == "orientations") {
            cfg.orientations = static_cast<int>(parse_int(value, line));
        } else if (key == "k") {
            if (value == "auto") {
                cfg.k.reset();
            } else {
                const long long k = parse_int(value, line);
                if (k < 0) throw ConfigError("line " + std::to_string(line) + ": k must be >= 0");
                cfg.k = static_cast<std::size_t>(k);
            }
        } else if (key == "threshold_fraction") {
            cfg.threshold_fraction = parse_double(value, line);
        } else if (key == "center_intensity") {
            cfg.center_intensity = parse_double(value, line);
        } else if (key == "side_intensity") {
            cfg.side_intensity = parse_double(value, line);
        } else if (key == "M") {
            cfg.M = parse_double(value, line);
        } else if (key == "zoi_floor") {
            cfg.zoi_floor = parse_double(value, line);
        } else if (key == "zoi_close_radius") {
            cfg.zoi_close_radius = static_cast<int>(parse_int(value, line));
        } else {
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    if (cfg.probes.empty()) cfg.probes = PipelineConfig::defaults().probes;
    cfg.validate();
    return cfg;
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    return parse_config(in);
}

std::string format_config(const PipelineConfig& c) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& p : c.probes) out << "probe = " << p.width << ',' << p.length << '\n';
    out << "orientations = " << c.orientations << '\n';
    if (c.k)
        out << "k = " << *c.k << '\n';
    else
        out << "k = auto\n";
    out << "threshold_fraction = " << c.threshold_fraction << '\n'
        << "center_intensity = " << c.center_intensity << '\n'
        << "side_intensity = " << c.side_intensity << '\n'
        << "M = " << c.M << '\n'
        << "zoi_floor = " << c.zoi_floor << '\n'
        << "zoi_close_radius = " << c.zoi_close_radius << '\n';
    return out.str();
}

}  // namespace lmm::vessel

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "stagxx/cli.hpp"

namespace stagxx::cli {

namespace {

namespace pt = boost::property_tree;

constexpr std::array<std::pair<AxisParam, std::string_view>, 4> kAxisNames{{
    {AxisParam::B, "B"},
    {AxisParam::b, "b"},
    {AxisParam::j, "j"},
    {AxisParam::T, "T"},
}};

double parse_double(std::string_view text, const std::string& what) {
    std::string s(text);
    boost::trim(s);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
        throw ValidationError(what + ": '" + s + "' is not a finite number");
    }
    return v;
}

int parse_int(std::string_view text, const std::string& what) {
    std::string s(text);
    boost::trim(s);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ValidationError(what + ": '" + s + "' is not an integer");
    }
    return v;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"model", {"J", "j", "B", "b"}},
        {"thermal", {"T"}},
        {"sweep", {"x", "y", "quantities", "workers"}},
        {"quadrature", {"abs_tol", "rel_tol", "max_subdivisions"}},
    };
    return keys;
}

}  // namespace

std::string_view name(AxisParam a) noexcept {
    for (const auto& [k, v] : kAxisNames) {
        if (k == a) return v;
    }
    return "?";
}

std::optional<AxisParam> axis_from_name(std::string_view s) {
    for (const auto& [k, v] : kAxisNames) {
        if (v == s) return k;
    }
    return std::nullopt;
}

double Axis::at(int i) const noexcept {
    if (i == steps - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

Axis parse_axis(std::string_view text) {
    std::vector<std::string> parts;
    boost::split(parts, text, [](char c) { return c == ','; });
    if (parts.size() != 4) {
        throw ValidationError("axis '" + std::string(text) + "' must read name,start,stop,steps");
    }
    boost::trim(parts[0]);
    const auto param = axis_from_name(parts[0]);
    if (!param) throw ValidationError("axis parameter '" + parts[0] + "' is not one of B, b, j, T");
    Axis a;
    a.param = *param;
    a.start = parse_double(parts[1], "axis start");
    a.stop = parse_double(parts[2], "axis stop");
    a.steps = parse_int(parts[3], "axis steps");
    return a;
}

void SweepSpec::validate() const {
    for (const Axis* a : {&x, &y}) {
        if (a->steps < 2) throw ValidationError("axis " + std::string(name(a->param)) + ": steps must be at least 2");
        if (a->param == AxisParam::T && (a->start < 0.0 || a->stop < 0.0)) {
            throw ValidationError("axis T: temperatures must be non-negative");
        }
    }
    if (x.param == y.param) throw ValidationError("x and y axes must name different parameters");
    if (quantities.empty()) throw ValidationError("at least one quantity is required");
    if (!(temperature >= 0.0)) throw ValidationError("thermal.T must be non-negative");
    const bool t_axis = x.param == AxisParam::T || y.param == AxisParam::T;
    for (Quantity q : quantities) {
        if (!zero_temperature_only(q)) continue;
        if (t_axis) {
            throw ValidationError("quantity '" + std::string(name(q)) + "' is defined only at T = 0 and cannot be swept over T");
        }
        if (temperature > 0.0) {
            throw ValidationError("quantity '" + std::string(name(q)) + "' is defined only at T = 0 but thermal.T > 0");
        }
    }
    if (!(quad.abs_tol > 0.0) || !(quad.rel_tol > 0.0)) throw ValidationError("quadrature tolerances must be positive");
    if (quad.max_subdivisions < 0) throw ValidationError("quadrature.max_subdivisions must be non-negative");
    if (workers < 0) throw ValidationError("sweep.workers must be non-negative");
}

SweepSpec parse_config(std::istream& in, const std::string& source) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ValidationError(source + ":" + std::to_string(e.line()) + ": " + e.message());
    }

    for (const auto& [section, body] : tree) {
        const auto it = known_keys().find(section);
        if (body.empty() && !body.data().empty()) {
            throw ValidationError(source + ": key '" + section + "' must sit inside a [section]");
        }
        if (it == known_keys().end()) throw ValidationError(source + ": unknown section [" + section + "]");
        for (const auto& [key, value] : body) {
            if (!it->second.contains(key)) {
                throw ValidationError(source + ": unknown key '" + key + "' in [" + section + "]");
            }
        }
    }

    auto get = [&](const std::string& path) -> std::optional<std::string> {
        if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return *v;
        return std::nullopt;
    };
    auto num = [&](const std::string& path, double fallback) {
        const auto v = get(path);
        return v ? parse_double(*v, source + ": " + path) : fallback;
    };

    SweepSpec spec;
    try {
        spec.params = ChainParams(num("model.J", 1.0), num("model.j", 0.0), num("model.B", 0.0), num("model.b", 0.0));
    } catch (const ValidationError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ValidationError(source + ": " + e.what());
    }
    spec.temperature = num("thermal.T", 0.0);
    if (auto v = get("sweep.x")) spec.x = parse_axis(*v);
    if (auto v = get("sweep.y")) spec.y = parse_axis(*v);
    if (auto v = get("sweep.quantities")) spec.quantities = parse_quantities(*v);
    if (auto v = get("sweep.workers")) spec.workers = parse_int(*v, source + ": sweep.workers");
    spec.quad.abs_tol = num("quadrature.abs_tol", spec.quad.abs_tol);
    spec.quad.rel_tol = num("quadrature.rel_tol", spec.quad.rel_tol);
    if (auto v = get("quadrature.max_subdivisions")) {
        spec.quad.max_subdivisions = parse_int(*v, source + ": quadrature.max_subdivisions");
    }
    spec.validate();
    return spec;
}

SweepSpec load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file " + path.string());
    return parse_config(in, path.string());
}

}  // namespace stagxx::cli

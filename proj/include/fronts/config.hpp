#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fronts/errors.hpp"
#include "fronts/model.hpp"

namespace fronts {

enum class Scheme { WBImplicit, WBExplicit, OS, ZeroWaveImplicit, ZeroWaveExplicit };
enum class InitialData { Sigmoid, ExactPushedFront, FromFile };

/// One experiment: model, scheme, discretization, outputs. Produced by
/// parse_config (plain "key = value" text) or by a preset.
struct ExperimentConfig {
    ReactionModel model = ReactionModel::fkpp();
    Scheme scheme = Scheme::WBImplicit;
    double x_min = 0.0;
    double x_max = 3080.0;
    double dx = 0.5;
    double t_end = 1500.0;
    std::optional<double> dt_cap;  // default depends on the scheme
    double cfl_safety = 1.0;
    double sigma_floor = 1e-6;
    double record_cadence = 1.0;
    double level_c = 0.5;
    InitialData initial = InitialData::Sigmoid;
    std::string initial_file;
    double left_state = 1.0;
    double right_state = 0.0;
    std::string output_dir = "out";
    bool same_dt = false;     // impose the parabolic time step on every scheme
    long budget = 0;          // max step count, 0 = unlimited

    /// Effective time-step cap: explicit caps at dx, OS at the paper's
    /// 0.05, implicit WB/0-wave at dx.
    double effective_dt_cap() const {
        if (dt_cap) return *dt_cap;
        return scheme == Scheme::OS ? 0.05 : dx;
    }
};

inline std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::WBImplicit: return "wb_implicit";
        case Scheme::WBExplicit: return "wb_explicit";
        case Scheme::OS: return "os";
        case Scheme::ZeroWaveImplicit: return "zero_wave_implicit";
        case Scheme::ZeroWaveExplicit: return "zero_wave_explicit";
    }
    return "?";
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& value, int line) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw config_error("line " + std::to_string(line) + ": not a number: '" + value + "'");
    return v;
}

inline bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw config_error("line " + std::to_string(line) + ": not a boolean: '" + value + "'");
}

}  // namespace detail

/// Parses "key = value" text, one assignment per line, '#' comments.
/// Unknown keys and invariant violations are rejected with the line
/// number of the offending assignment.
inline ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::map<std::string, int> seen_line;  // key -> line, for invariant messages
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool model_is_cubic = false;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string stripped = detail::trim(raw);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(line) + ": expected key = value");
        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string value = detail::trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error("line " + std::to_string(line) + ": expected key = value");
        seen_line[key] = line;

        if (key == "model") {
            if (value == "fkpp") {
                cfg.model.kind = ReactionKind::FKPP;
            } else if (value == "cubic") {
                cfg.model.kind = ReactionKind::Cubic;
                model_is_cubic = true;
                if (cfg.model.a == 0.0) cfg.model.a = 1.0;
            } else {
                throw config_error("line " + std::to_string(line) + ": unknown model '" +
                                   value + "' (fkpp|cubic)");
            }
        } else if (key == "a") {
            cfg.model.a = detail::parse_number(value, line);
        } else if (key == "scheme") {
            if (value == "wb_implicit") cfg.scheme = Scheme::WBImplicit;
            else if (value == "wb_explicit") cfg.scheme = Scheme::WBExplicit;
            else if (value == "os") cfg.scheme = Scheme::OS;
            else if (value == "zero_wave_implicit") cfg.scheme = Scheme::ZeroWaveImplicit;
            else if (value == "zero_wave_explicit") cfg.scheme = Scheme::ZeroWaveExplicit;
            else
                throw config_error("line " + std::to_string(line) + ": unknown scheme '" +
                                   value + "'");
        } else if (key == "x_min") {
            cfg.x_min = detail::parse_number(value, line);
        } else if (key == "x_max") {
            cfg.x_max = detail::parse_number(value, line);
        } else if (key == "dx") {
            cfg.dx = detail::parse_number(value, line);
        } else if (key == "t_end") {
            cfg.t_end = detail::parse_number(value, line);
        } else if (key == "dt_cap") {
            cfg.dt_cap = detail::parse_number(value, line);
        } else if (key == "cfl_safety") {
            cfg.cfl_safety = detail::parse_number(value, line);
        } else if (key == "sigma_floor") {
            cfg.sigma_floor = detail::parse_number(value, line);
        } else if (key == "record_cadence") {
            cfg.record_cadence = detail::parse_number(value, line);
        } else if (key == "level_c") {
            cfg.level_c = detail::parse_number(value, line);
        } else if (key == "initial") {
            if (value == "sigmoid") cfg.initial = InitialData::Sigmoid;
            else if (value == "exact_pushed_front") cfg.initial = InitialData::ExactPushedFront;
            else if (value == "from_file") cfg.initial = InitialData::FromFile;
            else
                throw config_error("line " + std::to_string(line) + ": unknown initial '" +
                                   value + "'");
        } else if (key == "initial_file") {
            cfg.initial_file = value;
        } else if (key == "left_state") {
            cfg.left_state = detail::parse_number(value, line);
        } else if (key == "right_state") {
            cfg.right_state = detail::parse_number(value, line);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "same_dt") {
            cfg.same_dt = detail::parse_bool(value, line);
        } else if (key == "budget") {
            cfg.budget = static_cast<long>(detail::parse_number(value, line));
        } else {
            throw config_error("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }

    auto fail = [&](const std::string& key, const std::string& msg) {
        const auto it = seen_line.find(key);
        const std::string where =
            it == seen_line.end() ? "config" : "line " + std::to_string(it->second);
        throw config_error(where + ": " + msg);
    };
    if (!(cfg.dx > 0.0)) fail("dx", "dx must be > 0");
    if (!(cfg.x_max > cfg.x_min)) fail("x_max", "domain requires x_max > x_min");
    if (cfg.t_end < 0.0) fail("t_end", "t_end must be >= 0");
    if (cfg.dt_cap && !(*cfg.dt_cap > 0.0)) fail("dt_cap", "dt_cap must be > 0");
    if (!(cfg.cfl_safety > 0.0) || cfg.cfl_safety > 1.0)
        fail("cfl_safety", "cfl_safety must lie in (0, 1]");
    if (!(cfg.sigma_floor > 0.0)) fail("sigma_floor", "sigma_floor must be > 0");
    if (!(cfg.record_cadence > 0.0)) fail("record_cadence", "record_cadence must be > 0");
    if (!(cfg.level_c > 0.0 && cfg.level_c < 1.0)) fail("level_c", "level_c must lie in (0, 1)");
    if (cfg.model.kind == ReactionKind::Cubic && cfg.model.a < 0.0)
        fail("a", "cubic coefficient a must be >= 0");
    if (cfg.initial == InitialData::ExactPushedFront &&
        !(cfg.model.kind == ReactionKind::Cubic && cfg.model.a > 2.0))
        fail("initial", "exact_pushed_front initial data requires the cubic model with a > 2");
    if (cfg.initial == InitialData::FromFile && cfg.initial_file.empty())
        fail("initial", "initial = from_file requires initial_file");
    if (cfg.left_state == cfg.right_state)
        fail("left_state", "left_state and right_state must differ");
    if (cfg.budget < 0) fail("budget", "budget must be >= 0");
    (void)model_is_cubic;
    return cfg;
}

/// Options shared by every preset expansion.
struct PresetOptions {
    std::optional<double> dx;        // restrict the sweep to one spacing
    std::optional<double> t_end;
    std::optional<Scheme> scheme;
    long budget = 0;
    bool same_dt = false;
    long max_cells = 120000;         // trims the fine end of the sweep
    std::string out_root = "out";
};

/// Expands one named experiment family into its mesh sweep. Every preset
/// uses the sigmoid initial datum, t_end = 1500 and the spacing sweep
/// 2^-1 .. 2^-6 (trimmed by max_cells). OS and 0-wave runs at the
/// coarsest spacing get the doubled domain to keep boundary effects out.
inline std::vector<ExperimentConfig> make_preset(const std::string& name,
                                                 const PresetOptions& opt = {}) {
    ReactionModel model;
    if (name == "fkpp_speed" || name == "fkpp_bramson") {
        model = ReactionModel::fkpp();
    } else if (name == "cubic_pulled") {
        model = ReactionModel::cubic(1.0);
    } else if (name == "cubic_pushmi_pullyu") {
        model = ReactionModel::cubic(2.0);
    } else if (name == "cubic_pushed") {
        model = ReactionModel::cubic(3.0);
    } else {
        throw config_error("unknown preset '" + name + "'");
    }

    std::vector<double> sweep;
    if (opt.dx) {
        sweep.push_back(*opt.dx);
    } else {
        for (int k = 1; k <= 6; ++k) sweep.push_back(std::ldexp(1.0, -k));
    }

    const Scheme scheme = opt.scheme.value_or(Scheme::WBImplicit);
    const double t_end = opt.t_end.value_or(1500.0);
    std::vector<ExperimentConfig> configs;
    for (const double dx : sweep) {
        ExperimentConfig cfg;
        cfg.model = model;
        cfg.scheme = scheme;
        cfg.x_min = 0.0;
        cfg.x_max = 3080.0;
        const bool reference_scheme = scheme == Scheme::OS ||
                                      scheme == Scheme::ZeroWaveImplicit ||
                                      scheme == Scheme::ZeroWaveExplicit;
        if (reference_scheme && dx >= 0.5) cfg.x_max = 6080.0;
        cfg.dx = dx;
        cfg.t_end = t_end;
        cfg.same_dt = opt.same_dt;
        cfg.budget = opt.budget;
        if (cfg.x_max - cfg.x_min < minimal_wave_speed(model) * t_end)
            throw config_error("preset '" + name + "': domain shorter than sigma* * t_end");
        const long cells = static_cast<long>(std::llround((cfg.x_max - cfg.x_min) / dx)) + 1;
        if (opt.max_cells > 0 && cells > opt.max_cells) continue;
        std::ostringstream dir;
        dir << opt.out_root << "/" << name << "/" << scheme_name(scheme) << "_dx_" << dx;
        cfg.output_dir = dir.str();
        configs.push_back(cfg);
    }
    if (configs.empty())
        throw config_error("preset '" + name + "': every sweep entry exceeds max_cells");
    return configs;
}

}  // namespace fronts

#ifndef ATOMPOT_CONFIG_HPP
#define ATOMPOT_CONFIG_HPP

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "atompot/analysis.hpp"
#include "atompot/constants.hpp"
#include "atompot/core.hpp"
#include "atompot/material.hpp"

namespace atompot {

class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Flat mirror of the config file. Use atom()/surface()/laser()/plan() to
/// obtain validated domain objects.
struct ScenarioConfig {
    // [atom]
    double omega10 = 0.0;
    double dipole = 0.0;
    // [surface]
    std::string surface_model = "perfect_mirror";
    double eps = 0.0;
    double omega0 = 0.0;
    double omegaP = 0.0;
    double gamma = 0.0;
    double q = 0.0;
    int sign = 1;
    // [laser]
    double detuning = 0.0;
    std::string field = "uniform";
    double intensity = 0.0;
    double c0 = 0.0;
    double power = 0.0;
    double z0 = 0.0;
    double theta = 0.0;
    double waist_x = 0.0; // recorded metadata only
    double waist_y = 0.0;
    // [sweep]
    double z_min = 50e-9;
    double z_max = 2e-6;
    std::size_t z_points = 512;
    std::string grid = "log";
    std::vector<double> powers{};
    std::string mode = "nonretarded";
    // [output]
    std::string out_path = "curve.csv";
    std::string unit = "J";

    AtomSpecies atom() const {
        AtomSpecies a{omega10, dipole, {}};
        validate(a);
        return a;
    }

    SurfaceModel surface() const {
        SurfaceModel s;
        if (surface_model == "perfect_mirror")
            s = PerfectMirror{};
        else if (surface_model == "constant_eps")
            s = ConstantEps{eps};
        else if (surface_model == "drude_lorentz")
            s = DrudeLorentz{omega0, omegaP, gamma};
        else if (surface_model == "plasmon_direct")
            s = PlasmonDirect{q, sign};
        else
            throw std::invalid_argument("ScenarioConfig: unknown surface model '" +
                                        surface_model + "'");
        validate(s);
        return s;
    }

    LaserSpec laser() const {
        LaserSpec l{detuning, UniformField{intensity}, theta};
        if (field == "evanescent")
            l.field = EvanescentField{c0, power, z0};
        else if (field != "uniform")
            throw std::invalid_argument("ScenarioConfig: unknown field model '" + field + "'");
        validate(l);
        return l;
    }

    SweepPlan plan() const {
        SweepPlan p{z_min, z_max, z_points,
                    grid == "linear" ? GridKind::linear : GridKind::logarithmic, powers,
                    mode == "full" ? EvalMode::full : EvalMode::nonretarded};
        if (grid != "linear" && grid != "log")
            throw std::invalid_argument("ScenarioConfig: grid must be 'linear' or 'log'");
        if (mode != "full" && mode != "nonretarded")
            throw std::invalid_argument("ScenarioConfig: mode must be 'nonretarded' or 'full'");
        if (unit != "J" && unit != "hbar_delta")
            throw std::invalid_argument("ScenarioConfig: unit must be 'J' or 'hbar_delta'");
        validate(p);
        return p;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& text, std::size_t line, std::size_t col) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value '" + text + "'", line, col);
    }
}

inline std::vector<double> parse_double_list(const std::string& text, std::size_t line,
                                             std::size_t col) {
    std::vector<double> out;
    std::string t = trim(text);
    if (t.empty())
        return out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(trim(item), line, col));
    return out;
}

} // namespace detail

/// Parse the INI-style scenario dialect: [section] blocks of key = value
/// lines, '#' comments, unknown sections and keys rejected with location.
inline ScenarioConfig parse_config(std::istream& in) {
    static const std::map<std::string, std::set<std::string>> schema = {
        {"atom", {"omega10", "dipole"}},
        {"surface", {"model", "eps", "omega0", "omegaP", "gamma", "q", "sign"}},
        {"laser",
         {"detuning", "field", "intensity", "c0", "power", "z0", "theta", "waist_x", "waist_y"}},
        {"sweep", {"z_min", "z_max", "z_points", "grid", "powers", "mode"}},
        {"output", {"path", "unit"}}};

    ScenarioConfig cfg;
    std::string raw;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string text = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty())
            continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                throw ConfigError("unterminated section header", lineno, 1);
            section = detail::trim(text.substr(1, text.size() - 2));
            if (schema.find(section) == schema.end())
                throw ConfigError("unknown section '" + section + "'", lineno, 1);
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", lineno, 1);
        const std::string key = detail::trim(text.substr(0, eq));
        const std::string value = detail::trim(text.substr(eq + 1));
        const std::size_t col = raw.find(key) + 1;
        if (section.empty())
            throw ConfigError("key '" + key + "' outside any section", lineno, col);
        const auto& allowed = schema.at(section);
        if (allowed.find(key) == allowed.end())
            throw ConfigError("unknown key '" + key + "' in section [" + section + "]", lineno,
                              col);
        auto num = [&]() { return detail::parse_double(value, lineno, col); };
        if (section == "atom") {
            if (key == "omega10")
                cfg.omega10 = num();
            else
                cfg.dipole = num();
        } else if (section == "surface") {
            if (key == "model")
                cfg.surface_model = value;
            else if (key == "eps")
                cfg.eps = num();
            else if (key == "omega0")
                cfg.omega0 = num();
            else if (key == "omegaP")
                cfg.omegaP = num();
            else if (key == "gamma")
                cfg.gamma = num();
            else if (key == "q")
                cfg.q = num();
            else
                cfg.sign = static_cast<int>(num());
        } else if (section == "laser") {
            if (key == "detuning")
                cfg.detuning = num();
            else if (key == "field")
                cfg.field = value;
            else if (key == "intensity")
                cfg.intensity = num();
            else if (key == "c0")
                cfg.c0 = num();
            else if (key == "power")
                cfg.power = num();
            else if (key == "z0")
                cfg.z0 = num();
            else if (key == "theta")
                cfg.theta = num();
            else if (key == "waist_x")
                cfg.waist_x = num();
            else
                cfg.waist_y = num();
        } else if (section == "sweep") {
            if (key == "z_min")
                cfg.z_min = num();
            else if (key == "z_max")
                cfg.z_max = num();
            else if (key == "z_points")
                cfg.z_points = static_cast<std::size_t>(num());
            else if (key == "grid")
                cfg.grid = value;
            else if (key == "powers")
                cfg.powers = detail::parse_double_list(value, lineno, col);
            else
                cfg.mode = value;
        } else { // output
            if (key == "path")
                cfg.out_path = value;
            else
                cfg.unit = value;
        }
    }
    return cfg;
}

inline ScenarioConfig parse_config_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_config(ss);
}

/// Canonical serialization; parse_config(serialize_config(cfg)) reproduces
/// cfg field for field.
inline std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "[atom]\n";
    out << "omega10 = " << cfg.omega10 << "\n";
    out << "dipole = " << cfg.dipole << "\n";
    out << "\n[surface]\n";
    out << "model = " << cfg.surface_model << "\n";
    if (cfg.surface_model == "constant_eps")
        out << "eps = " << cfg.eps << "\n";
    if (cfg.surface_model == "drude_lorentz") {
        out << "omega0 = " << cfg.omega0 << "\n";
        out << "omegaP = " << cfg.omegaP << "\n";
        out << "gamma = " << cfg.gamma << "\n";
    }
    if (cfg.surface_model == "plasmon_direct") {
        out << "q = " << cfg.q << "\n";
        out << "sign = " << cfg.sign << "\n";
    }
    out << "\n[laser]\n";
    out << "detuning = " << cfg.detuning << "\n";
    out << "field = " << cfg.field << "\n";
    if (cfg.field == "uniform") {
        out << "intensity = " << cfg.intensity << "\n";
    } else {
        out << "c0 = " << cfg.c0 << "\n";
        out << "power = " << cfg.power << "\n";
        out << "z0 = " << cfg.z0 << "\n";
    }
    out << "theta = " << cfg.theta << "\n";
    if (cfg.waist_x != 0.0)
        out << "waist_x = " << cfg.waist_x << "\n";
    if (cfg.waist_y != 0.0)
        out << "waist_y = " << cfg.waist_y << "\n";
    out << "\n[sweep]\n";
    out << "z_min = " << cfg.z_min << "\n";
    out << "z_max = " << cfg.z_max << "\n";
    out << "z_points = " << cfg.z_points << "\n";
    out << "grid = " << cfg.grid << "\n";
    if (!cfg.powers.empty()) {
        out << "powers = ";
        for (std::size_t i = 0; i < cfg.powers.size(); ++i)
            out << (i ? ", " : "") << cfg.powers[i];
        out << "\n";
    }
    out << "mode = " << cfg.mode << "\n";
    out << "\n[output]\n";
    out << "path = " << cfg.out_path << "\n";
    out << "unit = " << cfg.unit << "\n";
    return out.str();
}

// The built-in reference scenarios. Every constant appears exactly once, here.

inline ScenarioConfig preset_fig2() {
    ScenarioConfig cfg;
    cfg.omega10 = 2.37e15;
    cfg.dipole = 2.53e-29;
    cfg.surface_model = "perfect_mirror";
    cfg.detuning = 2.0 * constants::pi * 1e8;
    cfg.field = "uniform";
    cfg.intensity = 5e4; // 5 W/cm^2
    cfg.theta = constants::pi / 2.0;
    cfg.z_min = 50e-9;
    cfg.z_max = 2e-6;
    cfg.z_points = 512;
    cfg.grid = "log";
    cfg.mode = "full";
    cfg.out_path = "fig2.csv";
    return cfg;
}

inline ScenarioConfig preset_fig3() {
    ScenarioConfig cfg;
    cfg.omega10 = 2.37e15;
    cfg.dipole = 2.53e-29;
    cfg.surface_model = "plasmon_direct";
    cfg.q = 60.0;
    cfg.sign = 1;
    cfg.detuning = 2.0 * constants::pi * 1e8;
    cfg.field = "evanescent";
    cfg.c0 = 4.51e-23;
    cfg.power = 39e-6;
    cfg.z0 = 430e-9;
    cfg.theta = constants::pi / 2.0;
    cfg.waist_x = 170e-6;
    cfg.waist_y = 227e-6;
    cfg.z_min = 50e-9;
    cfg.z_max = 2e-6;
    cfg.z_points = 512;
    cfg.grid = "log";
    cfg.mode = "nonretarded";
    cfg.out_path = "fig3.csv";
    return cfg;
}

inline ScenarioConfig preset_fig4() {
    ScenarioConfig cfg = preset_fig3();
    // the sweep window reaches past 2 um so the shallow outer minima of the
    // total potential stay inside the scanned range
    cfg.z_max = 5e-6;
    cfg.powers = {10e-6, 39e-6, 100e-6, 400e-6};
    cfg.out_path = "fig4.csv";
    return cfg;
}

inline ScenarioConfig preset_by_name(const std::string& name) {
    if (name == "fig2")
        return preset_fig2();
    if (name == "fig3")
        return preset_fig3();
    if (name == "fig4")
        return preset_fig4();
    throw std::invalid_argument("unknown preset '" + name + "' (expected fig2, fig3 or fig4)");
}

} // namespace atompot

#endif

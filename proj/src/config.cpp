#include "dsweep/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dsweep {

namespace {

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
    }
    if (pos != value.size()) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw std::invalid_argument("config: expected integer for " + key + ": '" + value + "'");
    }
    return static_cast<int>(v);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<std::string>& RunConfig::known_keys() {
    static const std::vector<std::string> keys = {
        "design.N",        "design.M",        "design.n",          "sweep.f_start",
        "sweep.f_end",     "sweep.duration",  "sweep.amplitude",   "refocus_T",
        "scale.peak_khz",  "grid.min",        "grid.max",          "grid.points",
        "mode",            "max_phase_step",  "ideal.alpha_per_omega",
        "ideal.beta_per_omega", "threads",    "out_dir",           "verify.inject_u0",
    };
    return keys;
}

void RunConfig::apply(const std::string& key, const std::string& value) {
    if (key == "design.N") N = parse_int(key, value);
    else if (key == "design.M") M = parse_int(key, value);
    else if (key == "design.n") n_blocks = parse_int(key, value);
    else if (key == "sweep.f_start") sweep_f_start = parse_double(key, value);
    else if (key == "sweep.f_end") sweep_f_end = parse_double(key, value);
    else if (key == "sweep.duration") sweep_duration = parse_double(key, value);
    else if (key == "sweep.amplitude") sweep_amplitude = value;
    else if (key == "refocus_T") refocus = value;
    else if (key == "scale.peak_khz") peak_khz = parse_double(key, value);
    else if (key == "grid.min") grid_min = parse_double(key, value);
    else if (key == "grid.max") grid_max = parse_double(key, value);
    else if (key == "grid.points") grid_points = parse_int(key, value);
    else if (key == "mode") mode = value;
    else if (key == "max_phase_step") max_phase_step = parse_double(key, value);
    else if (key == "ideal.alpha_per_omega") ideal_alpha_per_omega = parse_double(key, value);
    else if (key == "ideal.beta_per_omega") ideal_beta_per_omega = parse_double(key, value);
    else if (key == "threads") threads = parse_int(key, value);
    else if (key == "out_dir") out_dir = value;
    else if (key == "verify.inject_u0") verify_inject_u0 = parse_double(key, value);
    else {
        std::string msg = "config: unknown key '" + key + "'; known keys:";
        for (const auto& k : known_keys()) msg += " " + k;
        throw std::invalid_argument(msg);
    }
}

void RunConfig::apply_assignment(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
        throw std::invalid_argument("config: expected key=value, got '" + kv + "'");
    }
    apply(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
}

void RunConfig::load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("config: cannot open file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        try {
            apply_assignment(t);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void RunConfig::validate() const {
    validate_design(design());          // covers N, M, n and theta consistency
    validate_chirp(chirp());            // covers sweep fields, amplitude policy
    (void)refocus_policy();
    (void)grid().offsets();
    if (!(peak_khz > 0.0) || !std::isfinite(peak_khz)) {
        throw std::invalid_argument("config: scale.peak_khz must be positive");
    }
    if (mode != "ideal" && mode != "integrated") {
        throw std::invalid_argument("config: mode must be 'ideal' or 'integrated'");
    }
    if (!(max_phase_step > 0.0) || !std::isfinite(max_phase_step)) {
        throw std::invalid_argument("config: max_phase_step must be positive");
    }
    if (threads < 0) throw std::invalid_argument("config: threads must be nonnegative");
    if (!std::isfinite(ideal_alpha_per_omega) || !std::isfinite(ideal_beta_per_omega)) {
        throw std::invalid_argument("config: non-finite ideal-inversion angle slope");
    }
}

DesignParams RunConfig::design() const { return make_design(N, M, n_blocks); }

double RunConfig::chirp_amplitude() const {
    if (sweep_amplitude == "peak") return 1.0 / (2.0 * n_blocks);
    return parse_double("sweep.amplitude", sweep_amplitude);
}

ChirpSpec RunConfig::chirp() const {
    ChirpSpec c;
    c.f_start = sweep_f_start;
    c.f_end = sweep_f_end;
    c.duration = sweep_duration;
    c.amplitude = chirp_amplitude();
    validate_chirp(c);
    return c;
}

RefocusPolicy RunConfig::refocus_policy() const {
    if (refocus == "waveform") return RefocusPolicy::waveform_duration();
    if (refocus == "nominal") return RefocusPolicy::nominal();
    return RefocusPolicy::custom(parse_double("refocus_T", refocus));
}

OffsetGrid RunConfig::grid() const { return OffsetGrid{grid_min, grid_max, grid_points}; }

SimMode RunConfig::sim_mode() const {
    SimMode m;
    m.ideal = (mode == "ideal");
    m.max_phase_step = max_phase_step;
    if (ideal_alpha_per_omega != 0.0 || ideal_beta_per_omega != 0.0) {
        m.inversion = IdealInversionSpec::linear(ideal_alpha_per_omega, ideal_beta_per_omega);
    }
    return m;
}

UnitScale RunConfig::scale_for(const PulseSequence& s) const {
    UnitScale u;
    u.peak_khz = peak_khz;
    u.peak_amplitude = s.peak_amplitude;
    return u;
}

}  // namespace dsweep

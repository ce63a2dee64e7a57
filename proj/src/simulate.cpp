#include "dsweep/simulate.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "dsweep/fourier.hpp"
#include "dsweep/version.hpp"

namespace dsweep {

using nlohmann::json;

std::vector<double> OffsetGrid::offsets() const {
    if (points < 2) throw std::invalid_argument("offset grid: need at least 2 points");
    if (!(min < max)) throw std::invalid_argument("offset grid: min must be below max");
    std::vector<double> w(points);
    const double step = (max - min) / (points - 1);
    for (int i = 0; i < points; ++i) w[i] = min + i * step;
    return w;
}

SimMode SimMode::integrated_sweeps(double max_phase_step) {
    SimMode m;
    m.ideal = false;
    m.max_phase_step = max_phase_step;
    return m;
}

double OffsetProfile::min_minus_y(double lim) const {
    double v = 1.0;
    for (const auto& r : rows) {
        if (std::abs(r.offset) <= lim + 1e-12) v = std::min(v, -r.y);
    }
    return v;
}

double OffsetProfile::min_z(double lim) const {
    double v = 1.0;
    for (const auto& r : rows) {
        if (std::abs(r.offset) <= lim + 1e-12) v = std::min(v, r.z);
    }
    return v;
}

Su2 sequence_propagator(const PulseSequence& s, double offset, const SimMode& mode) {
    Su2 u = Su2::identity();
    for (const Segment& seg : s.segments) {
        Su2 step;
        switch (seg.kind) {
            case SegmentKind::constant_rf:
                step = prop_const(offset, seg.amplitude, seg.phase, seg.duration);
                break;
            case SegmentKind::delay:
                step = prop_const(offset, 0.0, 0.0, seg.duration);
                break;
            case SegmentKind::chirp:
                step = mode.ideal ? ideal_inversion(mode.inversion, offset)
                                  : chirp_propagator(seg.chirp, offset, mode.max_phase_step);
                break;
            default:
                throw std::invalid_argument("unknown segment kind");
        }
        u = step * u;
    }
    return u;
}

namespace {

OffsetProfile run_profile(const PulseSequence& s, const OffsetGrid& grid, const SimMode& mode,
                          int threads, const Spinor& initial, const char* initial_name) {
    const std::vector<double> offsets = grid.offsets();
    OffsetProfile p;
    p.rows.resize(offsets.size());
    p.label = s.label;
    p.initial_state = initial_name;
    p.mode = mode.name();
    p.max_phase_step = mode.max_phase_step;

    auto eval = [&](std::size_t i) {
        const double w = offsets[i];
        const Su2 u = sequence_propagator(s, w, mode);
        const BlochVector b = to_bloch(apply(u, initial));
        p.rows[i] = ProfileRow{w, b.x, b.y, b.z};
    };

    unsigned want = threads > 0 ? static_cast<unsigned>(threads)
                                : std::max(1u, std::thread::hardware_concurrency());
    want = std::min<unsigned>(want, offsets.size());
    if (want <= 1) {
        for (std::size_t i = 0; i < offsets.size(); ++i) eval(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(want);
        for (unsigned t = 0; t < want; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < offsets.size();
                     i = next.fetch_add(1)) {
                    eval(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    double defect = 0.0;
    for (const auto& r : p.rows) {
        defect = std::max(defect,
                          std::abs(std::sqrt(r.x * r.x + r.y * r.y + r.z * r.z) - 1.0));
    }
    p.max_norm_defect = defect;
    return p;
}

void require_bare_waveform(const PulseSequence& s) {
    if (!s.design) throw std::invalid_argument("expected a designed waveform");
    if (s.segments.empty() || s.total_duration() <= 0.0) {
        throw std::invalid_argument("expected a waveform of positive duration");
    }
    const double dt = s.design->dt();
    for (const auto& seg : s.segments) {
        if (seg.kind != SegmentKind::constant_rf) {
            throw std::invalid_argument("expected a bare waveform with no sweeps");
        }
        if (std::abs(seg.duration - dt) > 1e-12) {
            throw std::invalid_argument("waveform slices do not match the design dt");
        }
    }
}

}  // namespace

OffsetProfile excitation_profile(const PulseSequence& s, const OffsetGrid& grid,
                                 const SimMode& mode, int threads) {
    return run_profile(s, grid, mode, threads, spinor_plus_z(), "+z");
}

OffsetProfile rotation_profile(const PulseSequence& s, const OffsetGrid& grid,
                               const SimMode& mode, int threads) {
    return run_profile(s, grid, mode, threads, spinor_plus_y(), "+y");
}

DephasedReport dephased_state_check(const PulseSequence& s, const OffsetGrid& grid) {
    require_bare_waveform(s);
    const double T = s.total_duration();
    const SimMode mode;  // waveform only; chirps rejected above
    DephasedReport rep;
    for (double w : grid.offsets()) {
        const Su2 u = sequence_propagator(s, w, mode);
        const BlochVector b = to_bloch(apply(u, spinor_plus_z()));
        const double r = 1.0 / std::sqrt(2.0);
        const Spinor predicted{{r * std::cos(-w * T / 2.0), r * std::sin(-w * T / 2.0)},
                               {0.0, -r}};
        const BlochVector bp = to_bloch(predicted);
        const double dev = 1.0 - (b.x * bp.x + b.y * bp.y + b.z * bp.z);
        rep.rows.push_back({w, dev, b.z});
        rep.max_deviation = std::max(rep.max_deviation, dev);
    }
    return rep;
}

Su2 approx_waveform_propagator(double theta, double T, double offset) {
    return z_rotation(offset * T) * prop_const(0.0, theta, -offset * T / 2.0, 1.0);
}

std::vector<ApproxErrorRow> approximation_error(const PulseSequence& s, const OffsetGrid& grid) {
    require_bare_waveform(s);
    const CoefficientSet c = coefficients(*s.design);
    const double T = s.total_duration();
    const SimMode mode;
    std::vector<ApproxErrorRow> rows;
    for (double w : grid.offsets()) {
        const Su2 exact = sequence_propagator(s, w, mode);
        const Su2 approx = approx_waveform_propagator(series_value(c, *s.design, w), T, w);
        rows.push_back({w, distance_up_to_phase(exact, approx)});
    }
    return rows;
}

void write_profile_csv(const OffsetProfile& p, const UnitScale& u, std::ostream& os) {
    os << "offset_norm,offset_khz,x,y,z\n";
    char line[192];
    for (const auto& r : p.rows) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.offset,
                      u.khz_of(r.offset), r.x, r.y, r.z);
        os << line;
    }
}

// ---- canonical presets --------------------------------------------------

namespace {

struct Preset {
    const char* name;
    const char* family;  // design | excitation | rotation | hard
    int n_blocks;
    double sweep_duration;
    bool ideal;
};

constexpr Preset kPresets[] = {
    {"fig2_left", "design", 1, 0.0, true},
    {"fig2_right", "excitation", 1, 300.0, true},
    {"fig3a", "excitation", 1, 300.0, false},
    {"fig3b", "excitation", 2, 1000.0, false},
    {"fig3c", "excitation", 3, 2000.0, false},
    {"fig4a", "rotation", 1, 1000.0, false},
    {"fig4b", "rotation", 2, 1200.0, false},
    {"fig4c", "rotation", 3, 2400.0, false},
    {"hard90", "hard", 1, 0.0, true},
};

const Preset* find_preset(const std::string& name) {
    for (const Preset& p : kPresets) {
        if (name == p.name) return &p;
    }
    return nullptr;
}

json grid_to_json(const OffsetGrid& g) {
    return json{{"min", g.min}, {"max", g.max}, {"points", g.points}};
}

json scale_to_json(const UnitScale& u) {
    return json{{"peak_khz", u.peak_khz}, {"peak_amplitude", u.peak_amplitude}};
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << text;
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const Preset& p : kPresets) v.emplace_back(p.name);
        return v;
    }();
    return names;
}

ChirpSpec standard_sweep(const std::string& family, int n_blocks) {
    for (const Preset& p : kPresets) {
        if (family == p.family && n_blocks == p.n_blocks && p.sweep_duration > 0.0 &&
            !(family == "excitation" && p.ideal)) {
            ChirpSpec c;
            c.f_start = -5.0;
            c.f_end = 5.0;
            c.duration = p.sweep_duration;
            c.amplitude = 1.0 / (2.0 * n_blocks);
            return c;
        }
    }
    throw std::invalid_argument("no standard sweep for family '" + family + "' n=" +
                                std::to_string(n_blocks));
}

FigureResult figure_run(const std::string& name, const FigureOptions& opt) {
    const Preset* preset = find_preset(name);
    if (!preset) {
        std::string msg = "unknown figure name '" + name + "'; valid names:";
        for (const auto& n : figure_names()) msg += " " + n;
        throw std::invalid_argument(msg);
    }

    const std::string family = preset->family;
    const std::string mode_name =
        family == "design" ? "design" : (preset->ideal ? "ideal" : "integrated");
    const std::string stem = opt.out_dir + "/" + name + "_" + mode_name;
    FigureResult result;
    result.csv_path = stem + ".csv";
    result.manifest_path = stem + ".manifest.json";

    json manifest;
    manifest["figure"] = name;
    manifest["family"] = family;
    manifest["mode"] = mode_name;
    manifest["grid"] = grid_to_json(opt.grid);
    manifest["tool_version"] = kToolVersion;

    if (family == "design") {
        const DesignParams p = make_design(20, 10, preset->n_blocks);
        const CoefficientSet c = coefficients(p);
        const auto rows = design_report(c, p, opt.grid.offsets());
        std::ofstream os(result.csv_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open for writing: " + result.csv_path);
        write_design_report_csv(rows, os);

        manifest["design"] = {{"N", p.N}, {"M", p.M}, {"n_blocks", p.n_blocks},
                              {"theta_target", p.theta_target}};
        manifest["coefficients"] = c.u;
        write_text_file(result.manifest_path, manifest.dump(2) + "\n");
        return result;
    }

    PulseSequence seq;
    UnitScale scale;
    scale.peak_khz = opt.peak_khz;
    if (family == "hard") {
        seq = hard_pulse_sequence(0.5, M_PI / 2.0);
    } else {
        const DesignParams p = make_design(20, 10, preset->n_blocks);
        ChirpSpec sweep = standard_sweep(family, preset->n_blocks);
        seq = family == "excitation" ? excitation_sequence(p, sweep, opt.refocus)
                                     : rotation_sequence(p, sweep, opt.refocus);
        manifest["design"] = {{"N", p.N}, {"M", p.M}, {"n_blocks", p.n_blocks},
                              {"theta_target", p.theta_target}};
        manifest["chirp"] = {{"f_start", sweep.f_start},
                             {"f_end", sweep.f_end},
                             {"duration", sweep.duration},
                             {"amplitude", sweep.amplitude}};
        manifest["adiabaticity"] = json::parse(adiabaticity_to_json(adiabaticity_report(sweep)));
        manifest["refocus_T"] = {{"policy", opt.refocus.name()},
                                 {"T_units", opt.refocus.budget(p)}};
    }
    scale.peak_amplitude = seq.peak_amplitude;

    SimMode mode = preset->ideal ? SimMode::ideal_sweeps()
                                 : SimMode::integrated_sweeps(opt.max_phase_step);
    mode.max_phase_step = opt.max_phase_step;
    result.profile = family == "rotation"
                         ? rotation_profile(seq, opt.grid, mode, opt.threads)
                         : excitation_profile(seq, opt.grid, mode, opt.threads);

    std::ofstream os(result.csv_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + result.csv_path);
    write_profile_csv(result.profile, scale, os);

    manifest["label"] = seq.label;
    manifest["initial_state"] = result.profile.initial_state;
    manifest["max_phase_step"] = opt.max_phase_step;
    manifest["unit_scale"] = scale_to_json(scale);
    manifest["segment_counts"] = {{"constant_rf", seq.count(SegmentKind::constant_rf)},
                                  {"chirp", seq.count(SegmentKind::chirp)},
                                  {"delay", seq.count(SegmentKind::delay)}};
    manifest["peak_amplitude"] = seq.peak_amplitude;
    manifest["total_duration_units"] = seq.total_duration();
    manifest["physical_duration_ms"] = physical_duration_ms(seq, scale);
    const BandwidthKhz bw = bandwidth_physical(scale);
    manifest["bandwidth_khz"] = {bw.lo, bw.hi};
    manifest["max_norm_defect"] = result.profile.max_norm_defect;
    write_text_file(result.manifest_path, manifest.dump(2) + "\n");
    return result;
}

}  // namespace dsweep

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsweep/config.hpp"
#include "dsweep/fourier.hpp"
#include "dsweep/simulate.hpp"
#include "dsweep/verify.hpp"
#include "dsweep/version.hpp"

namespace {

using namespace dsweep;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;

void ensure_out_dir(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << text;
}

int cmd_design(const RunConfig& cfg) {
    cfg.validate();
    ensure_out_dir(cfg);
    const DesignParams p = cfg.design();
    const CoefficientSet c = coefficients(p);

    nlohmann::json j;
    j["design"] = {{"N", p.N}, {"M", p.M}, {"n_blocks", p.n_blocks},
                   {"theta_target", p.theta_target}};
    j["u"] = c.u;
    j["peak_amplitude"] = c.peak();
    j["waveform_duration_units"] = p.waveform_duration();
    j["tool_version"] = kToolVersion;
    char stem[64];
    std::snprintf(stem, sizeof(stem), "design_N%d_M%d_n%d", p.N, p.M, p.n_blocks);
    const std::string base = cfg.out_dir + "/" + stem;
    write_file(base + ".coefficients.json", j.dump(2) + "\n");

    const auto rows = design_report(c, p, cfg.grid().offsets());
    std::ofstream os(base + ".csv", std::ios::binary);
    write_design_report_csv(rows, os);
    std::cout << "wrote " << base << ".coefficients.json and " << base << ".csv\n";
    return kExitOk;
}

int cmd_profile(const RunConfig& cfg, const std::string& family) {
    cfg.validate();
    ensure_out_dir(cfg);

    PulseSequence seq;
    if (family == "hard") {
        seq = hard_pulse_sequence(cfg.chirp_amplitude(), M_PI / 2.0);
    } else if (family == "excitation") {
        seq = excitation_sequence(cfg.design(), cfg.chirp(), cfg.refocus_policy());
    } else if (family == "rotation") {
        seq = rotation_sequence(cfg.design(), cfg.chirp(), cfg.refocus_policy());
    } else {
        throw std::invalid_argument("profile: family must be excitation, rotation or hard");
    }

    const SimMode mode = cfg.sim_mode();
    const OffsetProfile prof = family == "rotation"
                                   ? rotation_profile(seq, cfg.grid(), mode, cfg.threads)
                                   : excitation_profile(seq, cfg.grid(), mode, cfg.threads);
    const UnitScale scale = cfg.scale_for(seq);

    const std::string stem = cfg.out_dir + "/" + seq.label + "_" + mode.name();
    {
        std::ofstream os(stem + ".csv", std::ios::binary);
        if (!os) throw std::runtime_error("cannot open for writing: " + stem + ".csv");
        write_profile_csv(prof, scale, os);
    }

    nlohmann::json manifest;
    manifest["label"] = seq.label;
    manifest["family"] = family;
    manifest["mode"] = mode.name();
    manifest["initial_state"] = prof.initial_state;
    manifest["max_phase_step"] = cfg.max_phase_step;
    manifest["grid"] = {{"min", cfg.grid_min}, {"max", cfg.grid_max}, {"points", cfg.grid_points}};
    manifest["unit_scale"] = {{"peak_khz", scale.peak_khz},
                              {"peak_amplitude", scale.peak_amplitude}};
    if (family != "hard") {
        const ChirpSpec sweep = cfg.chirp();
        const DesignParams p = cfg.design();
        manifest["design"] = {{"N", p.N}, {"M", p.M}, {"n_blocks", p.n_blocks},
                              {"theta_target", p.theta_target}};
        manifest["chirp"] = {{"f_start", sweep.f_start}, {"f_end", sweep.f_end},
                             {"duration", sweep.duration}, {"amplitude", sweep.amplitude}};
        manifest["adiabaticity"] =
            nlohmann::json::parse(adiabaticity_to_json(adiabaticity_report(sweep)));
        manifest["refocus_T"] = {{"policy", cfg.refocus_policy().name()},
                                 {"T_units", cfg.refocus_policy().budget(p)}};
    }
    manifest["segment_counts"] = {{"constant_rf", seq.count(SegmentKind::constant_rf)},
                                  {"chirp", seq.count(SegmentKind::chirp)},
                                  {"delay", seq.count(SegmentKind::delay)}};
    manifest["peak_amplitude"] = seq.peak_amplitude;
    manifest["total_duration_units"] = seq.total_duration();
    manifest["physical_duration_ms"] = physical_duration_ms(seq, scale);
    const BandwidthKhz bw = bandwidth_physical(scale);
    manifest["bandwidth_khz"] = {bw.lo, bw.hi};
    manifest["sequence"] = nlohmann::json::parse(sequence_to_json(seq));
    manifest["tool_version"] = kToolVersion;
    write_file(stem + ".manifest.json", manifest.dump(2) + "\n");

    std::cout << "wrote " << stem << ".csv and " << stem << ".manifest.json\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    cfg.validate();
    ensure_out_dir(cfg);
    const VerifyReport rep = run_verification(cfg);
    write_file(cfg.out_dir + "/verify_report.json", rep.to_json() + "\n");
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  value=" << c.value
                  << " threshold=" << c.threshold << "\n";
    }
    std::cout << "wrote " << cfg.out_dir << "/verify_report.json\n";
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_reproduce(const RunConfig& cfg, const std::string& figure) {
    cfg.validate();
    ensure_out_dir(cfg);
    FigureOptions opt;
    opt.grid = cfg.grid();
    opt.max_phase_step = cfg.max_phase_step;
    opt.threads = cfg.threads;
    opt.peak_khz = cfg.peak_khz;
    opt.refocus = cfg.refocus_policy();
    opt.out_dir = cfg.out_dir;
    const FigureResult res = figure_run(figure, opt);
    std::cout << "wrote " << res.csv_path << " and " << res.manifest_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Broadband excitation pulse design and spin-1/2 profile simulation"};
    app.set_version_flag("--version", dsweep::kToolVersion);
    app.require_subcommand(1);

    std::string config_file;
    std::vector<std::string> overrides;
    app.add_option("--config", config_file, "key=value configuration file");
    app.add_option("--set", overrides, "override a configuration key (key=value, repeatable)");

    auto* design = app.add_subcommand("design", "emit Fourier coefficients and the design report");
    auto* profile = app.add_subcommand("profile", "simulate a sequence over the offset grid");
    std::string family = "excitation";
    profile->add_option("--family", family, "excitation | rotation | hard");
    auto* verify = app.add_subcommand("verify", "run the invariant suite, write verify_report.json");
    auto* reproduce = app.add_subcommand("reproduce", "run a canonical preset by name");
    std::string figure;
    reproduce->add_option("figure", figure, "preset name (fig2_left .. fig4c, hard90)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        dsweep::RunConfig cfg;
        if (!config_file.empty()) cfg.load_file(config_file);
        for (const auto& kv : overrides) cfg.apply_assignment(kv);

        if (design->parsed()) return cmd_design(cfg);
        if (profile->parsed()) return cmd_profile(cfg, family);
        if (verify->parsed()) return cmd_verify(cfg);
        if (reproduce->parsed()) return cmd_reproduce(cfg, figure);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

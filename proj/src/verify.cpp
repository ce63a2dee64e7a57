#include "dsweep/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "json.hpp"

#include "dsweep/fourier.hpp"
#include "dsweep/simulate.hpp"
#include "dsweep/su2.hpp"
#include "dsweep/sweep.hpp"
#include "dsweep/version.hpp"

namespace dsweep {

using nlohmann::json;

bool VerifyReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::string VerifyReport::to_json() const {
    json j;
    j["tool_version"] = kToolVersion;
    j["all_pass"] = all_pass();
    json arr = json::array();
    for (const auto& c : checks) {
        json jc{{"name", c.name}, {"pass", c.pass}, {"value", c.value},
                {"threshold", c.threshold}};
        if (!c.detail.empty()) jc["detail"] = json::parse(c.detail, nullptr, false).is_discarded()
                                                  ? json(c.detail)
                                                  : json::parse(c.detail);
        arr.push_back(jc);
    }
    j["checks"] = arr;
    return j.dump(2);
}

namespace {

// Simpson integration of f over [a, b].
template <typename F>
double simpson(F f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

// Fourier analysis of the flat target (height theta on |x| <= pi/N, zero
// elsewhere on [-pi, pi]) by quadrature; independent of the closed form.
double quadrature_coefficient(int N, int k, double theta, double dt) {
    const double edge = M_PI / N;
    const double integral =
        simpson([&](double x) { return theta * std::cos(k * x); }, -edge, edge, 4096);
    const double a_k = integral / M_PI;
    return k == 0 ? a_k / (4.0 * dt) : a_k / (2.0 * dt);
}

CheckResult check_fourier_quadrature(const RunConfig& cfg) {
    CheckResult r;
    r.name = "fourier_quadrature_match";
    r.threshold = 1e-10;
    const std::pair<int, int> cases[] = {{20, 10}, {32, 16}, {64, 64}, {7, 3}};
    double worst = 0.0;
    for (auto [N, M] : cases) {
        const DesignParams p = make_design(N, M, 1);
        CoefficientSet c = coefficients(p);
        if (N == 20 && !std::isnan(cfg.verify_inject_u0)) {
            c.u[0] = cfg.verify_inject_u0;  // negative-control fault injection
        }
        for (int k = 0; k <= M; ++k) {
            const double q = quadrature_coefficient(N, k, p.theta_target, p.dt());
            worst = std::max(worst, std::abs(q - c.u[k]));
        }
    }
    r.value = worst;
    r.pass = worst < r.threshold;
    return r;
}

CheckResult check_refocusing_identity() {
    CheckResult r;
    r.name = "refocusing_identity_random";
    r.threshold = 1e-9;
    std::mt19937_64 rng(0x5eedf0cu);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> tau(0.0, 100.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = ang(rng), b = ang(rng), w = off(rng), t = tau(rng);
        IdealInversionSpec spec;
        spec.alpha_fn = [a](double) { return a; };
        spec.beta_fn = [b](double) { return b; };
        const Su2 d = double_sweep({spec, t}, w);
        worst = std::max(worst, distance_up_to_phase(d, z_rotation(-w * t)));
    }
    r.value = worst;
    r.pass = worst < r.threshold;
    return r;
}

CheckResult check_euler_roundtrip() {
    CheckResult r;
    r.name = "euler_roundtrip_random";
    r.threshold = 1e-9;
    std::mt19937_64 rng(0xe01e5u);
    std::uniform_real_distribution<double> off(-3.0, 3.0);
    std::uniform_real_distribution<double> amp(0.0, 3.0);
    std::uniform_real_distribution<double> ph(-M_PI, M_PI);
    std::uniform_real_distribution<double> dur(0.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Su2 u = prop_const(off(rng), amp(rng), ph(rng), dur(rng)) *
                      z_rotation(ph(rng)) * x_rotation(ph(rng));
        worst = std::max(worst, distance_up_to_phase(from_euler_zxz(euler_zxz(u)), u));
    }
    r.value = worst;
    r.pass = worst < r.threshold;
    return r;
}

CheckResult check_chirp_convergence(const RunConfig& cfg) {
    CheckResult r;
    r.name = "chirp_step_convergence";
    r.threshold = 1e-6;
    const ChirpSpec spec = cfg.chirp();
    const double h = cfg.max_phase_step;
    double worst = 0.0;
    for (double w : {-1.0, 0.3, 0.7}) {
        const Su2 a = chirp_propagator(spec, w, h);
        const Su2 b = chirp_propagator(spec, w, h / 2.0);
        worst = std::max(worst, distance_up_to_phase(a, b));
    }
    r.value = worst;
    r.pass = worst < r.threshold;
    return r;
}

CheckResult check_adiabaticity_rates(const RunConfig& cfg) {
    CheckResult r;
    r.name = "adiabaticity_rates";
    r.threshold = 0.0;
    struct Case {
        const char* family;
        int n;
        double expected_rate;
    };
    const Case cases[] = {{"excitation", 1, 1.0 / 30.0}, {"excitation", 2, 1.0 / 100.0},
                          {"excitation", 3, 1.0 / 200.0}, {"rotation", 1, 1.0 / 100.0},
                          {"rotation", 2, 1.0 / 120.0},   {"rotation", 3, 1.0 / 240.0}};
    double worst = 0.0;
    json detail = json::array();
    for (const Case& c : cases) {
        const ChirpSpec sweep = standard_sweep(c.family, c.n);
        const AdiabaticityReport rep = adiabaticity_report(sweep);
        worst = std::max(worst, std::abs(rep.sweep_rate - c.expected_rate));
        detail.push_back({{"family", c.family}, {"n", c.n}, {"sweep_rate", rep.sweep_rate},
                          {"amplitude_sq", rep.amplitude_sq}, {"ratio", rep.ratio}});
    }
    const AdiabaticityReport own = adiabaticity_report(cfg.chirp());
    detail.push_back({{"family", "configured"}, {"n", cfg.n_blocks},
                      {"sweep_rate", own.sweep_rate}, {"amplitude_sq", own.amplitude_sq},
                      {"ratio", own.ratio}});
    r.value = worst;
    r.pass = worst == 0.0;
    r.detail = detail.dump();
    return r;
}

CheckResult check_amplitude_limit() {
    CheckResult r;
    r.name = "amplitude_limit";
    r.threshold = 1e-9;
    double worst = -1.0;
    for (int n = 1; n <= 3; ++n) {
        const DesignParams p = make_design(20, 10, n);
        const PulseSequence exc = excitation_sequence(p, standard_sweep("excitation", n));
        const PulseSequence rot = rotation_sequence(p, standard_sweep("rotation", n));
        const double cap = 1.0 / (2.0 * n);
        worst = std::max(worst, exc.peak_amplitude - cap);
        worst = std::max(worst, rot.peak_amplitude - cap);
    }
    r.value = worst;  // peak excess over 1/(2n)
    r.pass = worst <= r.threshold;
    return r;
}

CheckResult check_bloch_norms(const RunConfig& cfg) {
    CheckResult r;
    r.name = "bloch_norms";
    r.threshold = 1e-9;
    const DesignParams p = cfg.design();
    const PulseSequence seq = excitation_sequence(p, cfg.chirp(), cfg.refocus_policy());
    const OffsetGrid small{-1.0, 1.0, 41};
    const OffsetProfile prof = excitation_profile(seq, small, SimMode::ideal_sweeps(), cfg.threads);
    const OffsetProfile hard = excitation_profile(hard_pulse_sequence(0.5, M_PI / 2.0), small,
                                                  SimMode::ideal_sweeps(), cfg.threads);
    r.value = std::max(prof.max_norm_defect, hard.max_norm_defect);
    r.pass = r.value < r.threshold;
    return r;
}

CheckResult check_duration_accounting() {
    CheckResult r;
    r.name = "duration_accounting_reference";
    r.threshold = 0.005;  // 0.5 percent, nominal policy
    struct Case {
        const char* family;
        int n;
        double reference_ms;
    };
    const Case cases[] = {{"excitation", 1, 5.5225}, {"excitation", 2, 16.79},
                          {"excitation", 3, 32.75},  {"rotation", 1, 32.83},
                          {"rotation", 2, 29.6462},  {"rotation", 3, 51.9267}};
    double worst_nominal = 0.0;
    json detail = json::array();
    for (const Case& c : cases) {
        const DesignParams p = make_design(20, 10, c.n);
        const ChirpSpec sweep = standard_sweep(c.family, c.n);
        json row{{"family", c.family}, {"n", c.n}, {"reference_ms", c.reference_ms}};
        for (const RefocusPolicy& pol :
             {RefocusPolicy::nominal(), RefocusPolicy::waveform_duration()}) {
            const PulseSequence s = std::string(c.family) == "excitation"
                                        ? excitation_sequence(p, sweep, pol)
                                        : rotation_sequence(p, sweep, pol);
            UnitScale u;
            u.peak_amplitude = s.peak_amplitude;
            const double ms = physical_duration_ms(s, u);
            const double rel = std::abs(ms - c.reference_ms) / c.reference_ms;
            row[pol.name() + "_ms"] = ms;
            row[pol.name() + "_rel_diff"] = rel;
            if (pol.kind == RefocusPolicy::Kind::Nominal) {
                worst_nominal = std::max(worst_nominal, rel);
            }
        }
        detail.push_back(row);
    }
    r.value = worst_nominal;
    r.pass = worst_nominal < r.threshold;
    r.detail = detail.dump();
    return r;
}

}  // namespace

VerifyReport run_verification(const RunConfig& cfg) {
    cfg.validate();
    VerifyReport rep;
    rep.checks.push_back(check_fourier_quadrature(cfg));
    rep.checks.push_back(check_refocusing_identity());
    rep.checks.push_back(check_euler_roundtrip());
    rep.checks.push_back(check_chirp_convergence(cfg));
    rep.checks.push_back(check_adiabaticity_rates(cfg));
    rep.checks.push_back(check_amplitude_limit());
    rep.checks.push_back(check_bloch_norms(cfg));
    rep.checks.push_back(check_duration_accounting());
    return rep;
}

}  // namespace dsweep

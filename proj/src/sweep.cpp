#include "dsweep/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace dsweep {

IdealInversionSpec IdealInversionSpec::linear(double alpha_per_omega, double beta_per_omega) {
    IdealInversionSpec s;
    s.alpha_fn = [alpha_per_omega](double w) { return alpha_per_omega * w; };
    s.beta_fn = [beta_per_omega](double w) { return beta_per_omega * w; };
    return s;
}

Su2 ideal_inversion(const IdealInversionSpec& spec, double offset) {
    return z_rotation(spec.alpha(offset)) * x_rotation(M_PI) * z_rotation(spec.beta(offset));
}

Su2 chirp_propagator(const ChirpSpec& spec, double offset, double max_phase_step) {
    validate_chirp(spec);
    if (!std::isfinite(offset)) throw std::invalid_argument("chirp: non-finite offset");
    if (!(max_phase_step > 0.0)) throw std::invalid_argument("chirp: max_phase_step must be positive");

    // Work in the frame co-rotating with the rf phase, where the generator is
    // (offset - freq(t)) Iz + A Ix; unwrap with z_rotation(phi(end)) at the end.
    const double max_detuning =
        std::max(std::abs(offset - spec.f_start), std::abs(offset - spec.f_end));
    const double budget = (max_detuning + spec.amplitude) * spec.duration;
    const auto steps = static_cast<long>(std::ceil(budget / max_phase_step));
    const long n = steps < 1 ? 1 : steps;
    const double dt = spec.duration / static_cast<double>(n);

    Su2 u = Su2::identity();
    for (long j = 0; j < n; ++j) {
        const double t_mid = (static_cast<double>(j) + 0.5) * dt;
        const double det = offset - spec.freq_at(t_mid);
        u = prop_const(det, spec.amplitude, 0.0, dt) * u;
    }
    return z_rotation(spec.phase_at(spec.duration)) * u;
}

double inversion_efficiency(const Su2& u) {
    return -(std::norm(u.m00) - std::norm(u.m10));
}

Su2 double_sweep(const DoubleSweepBlock& block, double offset, double max_phase_step) {
    if (!std::isfinite(block.delay) || block.delay < 0.0) {
        throw std::invalid_argument("double_sweep: invalid delay");
    }
    Su2 inv;
    if (const auto* chirp = std::get_if<ChirpSpec>(&block.inversion)) {
        inv = chirp_propagator(*chirp, offset, max_phase_step);
    } else {
        inv = ideal_inversion(std::get<IdealInversionSpec>(block.inversion), offset);
    }
    const Su2 free = z_rotation(offset * block.delay);
    return inv * free * inv;
}

AdiabaticityReport adiabaticity_report(const ChirpSpec& spec) {
    validate_chirp(spec);
    AdiabaticityReport r;
    r.sweep_rate = spec.sweep_rate();
    r.amplitude_sq = spec.amplitude * spec.amplitude;
    r.ratio = r.amplitude_sq / r.sweep_rate;
    return r;
}

std::string adiabaticity_to_json(const AdiabaticityReport& r) {
    nlohmann::json j{{"sweep_rate", r.sweep_rate},
                     {"amplitude_sq", r.amplitude_sq},
                     {"ratio", r.ratio}};
    return j.dump();
}

}  // namespace dsweep

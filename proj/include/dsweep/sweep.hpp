#pragma once

#include <functional>
#include <variant>

#include "dsweep/sequence.hpp"
#include "dsweep/su2.hpp"

namespace dsweep {

/// Idealized adiabatic inversion Rz(alpha(w)) * Rx(pi) * Rz(beta(w)). The
/// center rotation is pinned to pi so +z maps to -z for every offset; the
/// z-angle functions default to zero.
struct IdealInversionSpec {
    std::function<double(double)> alpha_fn;
    std::function<double(double)> beta_fn;

    double alpha(double offset) const { return alpha_fn ? alpha_fn(offset) : 0.0; }
    double beta(double offset) const { return beta_fn ? beta_fn(offset) : 0.0; }

    static IdealInversionSpec linear(double alpha_per_omega, double beta_per_omega);
};

Su2 ideal_inversion(const IdealInversionSpec& spec, double offset);

/// Propagator of a linear-frequency chirp at constant rf amplitude,
/// integrated in the fixed rotating frame. Substeps are sized so the total
/// phase advance (offset, detuning and rf area) per step stays below
/// max_phase_step; the rf detuning is sampled at substep midpoints.
Su2 chirp_propagator(const ChirpSpec& spec, double offset, double max_phase_step = 0.05);

/// -z component of U|+z>: +1 for a perfect inversion, -1 for identity.
double inversion_efficiency(const Su2& u);

/// Inversion, free delay, identical inversion: the refocusing block
/// Delta(w, tau). With an ideal inversion this equals z_rotation(-w*tau)
/// up to a global phase, independent of alpha and beta.
struct DoubleSweepBlock {
    std::variant<ChirpSpec, IdealInversionSpec> inversion;
    double delay = 0.0;
};

Su2 double_sweep(const DoubleSweepBlock& block, double offset, double max_phase_step = 0.05);

struct AdiabaticityReport {
    double sweep_rate = 0.0;
    double amplitude_sq = 0.0;
    double ratio = 0.0;  // amplitude^2 / sweep_rate
};

AdiabaticityReport adiabaticity_report(const ChirpSpec& spec);

std::string adiabaticity_to_json(const AdiabaticityReport& r);

}  // namespace dsweep

#pragma once

#include <string>
#include <vector>

#include "dsweep/compose.hpp"
#include "dsweep/sequence.hpp"
#include "dsweep/simulate.hpp"

namespace dsweep {

/// Flat key=value run configuration. Precedence: command line over file over
/// defaults. Unknown keys are rejected.
struct RunConfig {
    int N = 20;
    int M = 10;
    int n_blocks = 1;

    double sweep_f_start = -5.0;
    double sweep_f_end = 5.0;
    double sweep_duration = 300.0;
    std::string sweep_amplitude = "peak";  // "peak" (= 1/(2n)) or a number

    std::string refocus = "waveform";  // waveform | nominal | <number>

    double peak_khz = 10.0;

    double grid_min = -1.0;
    double grid_max = 1.0;
    int grid_points = 201;

    std::string mode = "ideal";  // ideal | integrated
    double max_phase_step = 0.05;
    double ideal_alpha_per_omega = 0.0;
    double ideal_beta_per_omega = 0.0;

    int threads = 0;  // 0 = hardware count
    std::string out_dir = ".";

    // fault injection for the verification suite's negative control;
    // NaN (default) = disabled
    double verify_inject_u0 = std::numeric_limits<double>::quiet_NaN();

    void apply(const std::string& key, const std::string& value);
    void apply_assignment(const std::string& key_eq_value);
    void load_file(const std::string& path);
    /// Throws std::invalid_argument on any physically inconsistent tuple.
    void validate() const;

    DesignParams design() const;
    ChirpSpec chirp() const;
    double chirp_amplitude() const;
    RefocusPolicy refocus_policy() const;
    OffsetGrid grid() const;
    SimMode sim_mode() const;
    UnitScale scale_for(const PulseSequence& s) const;

    static const std::vector<std::string>& known_keys();
};

}  // namespace dsweep

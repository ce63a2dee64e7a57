#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dsweep/compose.hpp"
#include "dsweep/sequence.hpp"
#include "dsweep/su2.hpp"
#include "dsweep/sweep.hpp"

namespace dsweep {

/// Uniform offset grid including both endpoints.
struct OffsetGrid {
    double min = -1.0;
    double max = 1.0;
    int points = 201;

    std::vector<double> offsets() const;
};

/// How chirp segments are propagated: as ideal Euler-form inversions or by
/// numerical integration of the sweep.
struct SimMode {
    bool ideal = true;
    IdealInversionSpec inversion{};  // ideal mode only; alpha = beta = 0 by default
    double max_phase_step = 0.05;

    const char* name() const { return ideal ? "ideal" : "integrated"; }

    static SimMode ideal_sweeps() { return SimMode{}; }
    static SimMode integrated_sweeps(double max_phase_step = 0.05);
};

struct ProfileRow {
    double offset = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct OffsetProfile {
    std::vector<ProfileRow> rows;
    std::string label;
    std::string initial_state;
    std::string mode;
    double max_phase_step = 0.0;
    double max_norm_defect = 0.0;  // max | |r| - 1 | over rows

    double min_minus_y(double abs_offset_limit) const;
    double min_z(double abs_offset_limit) const;
};

/// Time-ordered product over the segment list at one offset.
Su2 sequence_propagator(const PulseSequence& s, double offset, const SimMode& mode);

/// Propagated +z state per offset. threads = 0 picks the hardware count;
/// results are merged in offset order and do not depend on the thread count.
OffsetProfile excitation_profile(const PulseSequence& s, const OffsetGrid& grid,
                                 const SimMode& mode, int threads = 0);

/// Propagated +y state per offset.
OffsetProfile rotation_profile(const PulseSequence& s, const OffsetGrid& grid,
                               const SimMode& mode, int threads = 0);

struct DephasedRow {
    double offset = 0.0;
    double deviation = 0.0;  // 1 - dot(bloch(actual), bloch(predicted))
    double z = 0.0;
};

struct DephasedReport {
    std::vector<DephasedRow> rows;
    double max_deviation = 0.0;
};

/// Compare the propagated +z state of a bare waveform against the
/// dephased-equator prediction (1/sqrt2)(e^{-i w T/2}, -i), T the waveform
/// duration. Rejects sequences that are not pure dt = pi/N waveforms.
DephasedReport dephased_state_check(const PulseSequence& s, const OffsetGrid& grid);

/// Closed-form first-order propagator of the waveform at one offset:
/// e^{-i w T Iz} * exp(-i theta (cos(wT/2) Ix - sin(wT/2) Iy)).
Su2 approx_waveform_propagator(double theta, double T, double offset);

struct ApproxErrorRow {
    double offset = 0.0;
    double distance = 0.0;
};

/// distance_up_to_phase between the exact piecewise propagator of a bare
/// waveform and the closed-form propagator built from the design series.
std::vector<ApproxErrorRow> approximation_error(const PulseSequence& s, const OffsetGrid& grid);

/// CSV columns: offset_norm,offset_khz,x,y,z
void write_profile_csv(const OffsetProfile& p, const UnitScale& u, std::ostream& os);

// ---- canonical simulation presets -------------------------------------

struct FigureOptions {
    OffsetGrid grid{};
    double max_phase_step = 0.05;
    int threads = 0;
    double peak_khz = 10.0;
    RefocusPolicy refocus{};
    std::string out_dir = ".";
};

struct FigureResult {
    std::string csv_path;
    std::string manifest_path;
    OffsetProfile profile;  // empty for the design preset
};

const std::vector<std::string>& figure_names();

/// Run one named preset; writes <name>_<mode>.csv and
/// <name>_<mode>.manifest.json under out_dir.
FigureResult figure_run(const std::string& name, const FigureOptions& opt);

/// Standard chirp spec for a preset family ("excitation" or "rotation") and
/// block count: endpoints +-5, the canonical duration, amplitude 1/(2n).
ChirpSpec standard_sweep(const std::string& family, int n_blocks);

}  // namespace dsweep

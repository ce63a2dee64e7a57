#pragma once

#include <string>

#include "dsweep/fourier.hpp"
#include "dsweep/sequence.hpp"
#include "dsweep/sweep.hpp"

namespace dsweep {

/// Duration bookkeeping for the refocusing blocks. The budget T is the
/// waveform duration used in the delay accounting: Delta blocks carry delays
/// T and T/2, and the synthesized waveform block is emitted spanning T.
///
///  - WaveformDuration: T = (2M+2)*dt, the physical duration of the
///    dt = pi/N synthesis. The self-consistent choice; profiles refocus.
///  - Nominal: T = 2*M*pi. Reproduces the conventional published duration
///    totals for these sequences; the stretched slices no longer realize
///    the designed flip angles, so profiles under this policy are for
///    duration accounting, not for excitation quality.
///  - Custom: explicit T in normalized time units.
struct RefocusPolicy {
    enum class Kind { WaveformDuration, Nominal, Custom };
    Kind kind = Kind::WaveformDuration;
    double custom_T = 0.0;

    double budget(const DesignParams& p) const;
    std::string name() const;

    static RefocusPolicy waveform_duration() { return {}; }
    static RefocusPolicy nominal() { return {Kind::Nominal, 0.0}; }
    static RefocusPolicy custom(double T);
};

/// Physical unit anchoring: the sequence's normalized peak amplitude maps to
/// peak_khz. One normalized frequency unit is peak_khz/peak_amplitude kHz;
/// one time unit is 1/(2*pi*1000*peak_khz/peak_amplitude) seconds.
struct UnitScale {
    double peak_khz = 10.0;
    double peak_amplitude = 0.5;

    double khz_per_unit() const { return peak_khz / peak_amplitude; }
    double seconds_per_unit() const;
    double khz_of(double normalized) const { return normalized * khz_per_unit(); }
};

struct BandwidthKhz {
    double lo = 0.0;
    double hi = 0.0;
};

/// Physical band mapped from the normalized design band [-1, 1].
BandwidthKhz bandwidth_physical(const UnitScale& u);

/// Broadband excitation: waveform, then (n-1) times [double sweep with
/// delay T, waveform], closing with a double sweep with delay T/2. Every
/// chirp segment carries the given sweep spec.
PulseSequence excitation_sequence(const DesignParams& p, const ChirpSpec& sweep,
                                  const RefocusPolicy& policy = {});

/// Broadband pi/2 x-rotation: as excitation_sequence, with one extra double
/// sweep of delay T/2 acting first.
PulseSequence rotation_sequence(const DesignParams& p, const ChirpSpec& sweep,
                                const RefocusPolicy& policy = {});

/// Single constant x-phase slice of duration flip/amplitude.
PulseSequence hard_pulse_sequence(double amplitude, double flip);

double total_duration(const PulseSequence& s);
double physical_duration_ms(const PulseSequence& s, const UnitScale& u);

}  // namespace dsweep

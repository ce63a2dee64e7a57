#include "dsweep/compose.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dsweep {

double RefocusPolicy::budget(const DesignParams& p) const {
    switch (kind) {
        case Kind::WaveformDuration: return p.waveform_duration();
        case Kind::Nominal: return 2.0 * p.M * M_PI;
        case Kind::Custom: return custom_T;
    }
    return p.waveform_duration();
}

std::string RefocusPolicy::name() const {
    switch (kind) {
        case Kind::WaveformDuration: return "waveform";
        case Kind::Nominal: return "nominal";
        case Kind::Custom: {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "custom:%.17g", custom_T);
            return buf;
        }
    }
    return "waveform";
}

RefocusPolicy RefocusPolicy::custom(double T) {
    if (!std::isfinite(T) || T <= 0.0) {
        throw std::invalid_argument("refocus policy: custom T must be positive");
    }
    return {Kind::Custom, T};
}

double UnitScale::seconds_per_unit() const {
    return 1.0 / (2.0 * M_PI * 1000.0 * khz_per_unit());
}

BandwidthKhz bandwidth_physical(const UnitScale& u) {
    return {-u.khz_per_unit(), u.khz_per_unit()};
}

namespace {

// Waveform block spanning the policy budget T: identical amplitudes, slice
// duration T/(2M+2). Under the WaveformDuration policy this is exactly the
// dt = pi/N synthesis.
void append_waveform(PulseSequence& out, const CoefficientSet& c, const DesignParams& p,
                     double budget) {
    const double slice = budget / (2 * p.M + 2);
    for (int k = p.M; k >= 0; --k) {
        out.segments.push_back(Segment::constant_rf(c.u[k], 0.0, slice));
    }
    for (int k = 0; k <= p.M; ++k) {
        out.segments.push_back(Segment::constant_rf(c.u[k], 0.0, slice));
    }
}

void append_double_sweep(PulseSequence& out, const ChirpSpec& sweep, double delay) {
    out.segments.push_back(Segment::chirp_segment(sweep));
    out.segments.push_back(Segment::delay(delay));
    out.segments.push_back(Segment::chirp_segment(sweep));
}

std::string sequence_label(const char* family, const DesignParams& p, const ChirpSpec& sweep,
                           const RefocusPolicy& policy) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s_n%d_N%d_M%d_sweep%gto%gx%g_A%g_refocus-%s", family,
                  p.n_blocks, p.N, p.M, sweep.f_start, sweep.f_end, sweep.duration,
                  sweep.amplitude, policy.name().c_str());
    return buf;
}

}  // namespace

PulseSequence excitation_sequence(const DesignParams& p, const ChirpSpec& sweep,
                                  const RefocusPolicy& policy) {
    validate_design(p);
    validate_chirp(sweep);
    const CoefficientSet c = coefficients(p);
    const double T = policy.budget(p);

    PulseSequence s;
    s.design = p;
    append_waveform(s, c, p, T);
    for (int blk = 1; blk < p.n_blocks; ++blk) {
        append_double_sweep(s, sweep, T);
        append_waveform(s, c, p, T);
    }
    append_double_sweep(s, sweep, T / 2.0);
    s.peak_amplitude = s.max_segment_amplitude();
    s.label = sequence_label("excitation", p, sweep, policy);
    return s;
}

PulseSequence rotation_sequence(const DesignParams& p, const ChirpSpec& sweep,
                                const RefocusPolicy& policy) {
    validate_design(p);
    validate_chirp(sweep);
    const double T = policy.budget(p);

    PulseSequence inner = excitation_sequence(p, sweep, policy);
    PulseSequence s;
    s.design = p;
    append_double_sweep(s, sweep, T / 2.0);
    s.segments.insert(s.segments.end(), inner.segments.begin(), inner.segments.end());
    s.peak_amplitude = s.max_segment_amplitude();
    s.label = sequence_label("rotation", p, sweep, policy);
    return s;
}

PulseSequence hard_pulse_sequence(double amplitude, double flip) {
    if (!std::isfinite(amplitude) || amplitude <= 0.0) {
        throw std::invalid_argument("hard pulse: amplitude must be positive");
    }
    if (!std::isfinite(flip) || flip < 0.0) {
        throw std::invalid_argument("hard pulse: flip must be nonnegative");
    }
    PulseSequence s;
    s.segments.push_back(Segment::constant_rf(amplitude, 0.0, flip / amplitude));
    s.peak_amplitude = amplitude;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "hard_pulse_A%g_flip%g", amplitude, flip);
    s.label = buf;
    return s;
}

double total_duration(const PulseSequence& s) { return s.total_duration(); }

double physical_duration_ms(const PulseSequence& s, const UnitScale& u) {
    return s.total_duration() * u.seconds_per_unit() * 1e3;
}

}  // namespace dsweep

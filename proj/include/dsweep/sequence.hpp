#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dsweep {

/// Parameters of the Fourier flat-band design. Delta t = pi/N; the target
/// flip angle is pi/(2*n_blocks).
struct DesignParams {
    int N = 20;
    int M = 10;
    int n_blocks = 1;
    double theta_target = 0.0;  // radians; pi/(2*n_blocks) when consistent

    double dt() const;
    /// duration of the synthesized waveform, (2M+2)*dt
    double waveform_duration() const;
};

/// Throws std::invalid_argument if the parameter tuple is inconsistent
/// (M > N, nonpositive counts, theta != pi/(2 n)).
void validate_design(const DesignParams& p);

DesignParams make_design(int N, int M, int n_blocks);

/// Linear frequency sweep at constant rf amplitude. The instantaneous rf
/// frequency runs from f_start to f_end; accumulated rf phase is
/// phi(t) = f_start*t + (f_end - f_start)*t^2 / (2*duration).
struct ChirpSpec {
    double f_start = -5.0;
    double f_end = 5.0;
    double duration = 300.0;
    double amplitude = 0.5;

    double sweep_rate() const;        // |f_end - f_start| / duration
    double phase_at(double t) const;  // accumulated rf phase, phi(0) = 0
    double freq_at(double t) const;   // instantaneous frequency

    bool operator==(const ChirpSpec&) const = default;
};

void validate_chirp(const ChirpSpec& spec);

enum class SegmentKind { constant_rf, chirp, delay };

const char* to_string(SegmentKind k);

/// One time slice of the control schedule.
struct Segment {
    SegmentKind kind = SegmentKind::delay;
    double amplitude = 0.0;  // constant_rf only
    double phase = 0.0;      // constant_rf only
    double duration = 0.0;
    ChirpSpec chirp{};       // chirp only

    static Segment constant_rf(double amplitude, double phase, double duration);
    static Segment delay(double duration);
    static Segment chirp_segment(const ChirpSpec& spec);

    bool operator==(const Segment&) const = default;
};

/// Time-ordered control schedule; segments[0] acts first.
struct PulseSequence {
    std::vector<Segment> segments;
    std::optional<DesignParams> design;
    double peak_amplitude = 0.0;
    std::string label;

    double total_duration() const;
    std::size_t count(SegmentKind k) const;
    /// recomputed max amplitude over constant_rf and chirp segments
    double max_segment_amplitude() const;
};

/// JSON manifest of the schedule; from_json(to_json(s)) == s exactly.
std::string sequence_to_json(const PulseSequence& s);
PulseSequence sequence_from_json(const std::string& text);

/// Fixed-rate two-column amplitude/phase listing with a header carrying the
/// sample count and dwell. Samples are taken at slice midpoints.
void write_sampled_waveform(const PulseSequence& s, double dwell, std::ostream& os);

}  // namespace dsweep

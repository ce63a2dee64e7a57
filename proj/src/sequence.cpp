#include "dsweep/sequence.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace dsweep {

using nlohmann::json;

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("non-finite ") + what);
    }
}

}  // namespace

double DesignParams::dt() const { return M_PI / N; }

double DesignParams::waveform_duration() const { return (2 * M + 2) * dt(); }

void validate_design(const DesignParams& p) {
    if (p.N <= 0) throw std::invalid_argument("design: N must be positive");
    if (p.M <= 0) throw std::invalid_argument("design: M must be positive");
    if (p.M > p.N) throw std::invalid_argument("design: M must not exceed N");
    if (p.n_blocks <= 0) throw std::invalid_argument("design: n_blocks must be positive");
    require_finite(p.theta_target, "theta_target");
    const double expected = M_PI / (2.0 * p.n_blocks);
    if (std::abs(p.theta_target - expected) > 1e-12) {
        throw std::invalid_argument("design: theta_target must equal pi/(2*n_blocks)");
    }
}

DesignParams make_design(int N, int M, int n_blocks) {
    DesignParams p;
    p.N = N;
    p.M = M;
    p.n_blocks = n_blocks;
    p.theta_target = n_blocks > 0 ? M_PI / (2.0 * n_blocks) : 0.0;
    validate_design(p);
    return p;
}

double ChirpSpec::sweep_rate() const { return std::abs(f_end - f_start) / duration; }

double ChirpSpec::phase_at(double t) const {
    return f_start * t + (f_end - f_start) * t * t / (2.0 * duration);
}

double ChirpSpec::freq_at(double t) const {
    return f_start + (f_end - f_start) * t / duration;
}

void validate_chirp(const ChirpSpec& spec) {
    require_finite(spec.f_start, "chirp f_start");
    require_finite(spec.f_end, "chirp f_end");
    require_finite(spec.duration, "chirp duration");
    require_finite(spec.amplitude, "chirp amplitude");
    if (spec.duration <= 0.0) throw std::invalid_argument("chirp: duration must be positive");
    if (spec.f_end == spec.f_start) throw std::invalid_argument("chirp: sweep rate must be nonzero");
    if (spec.amplitude < 0.0) throw std::invalid_argument("chirp: negative amplitude");
}

const char* to_string(SegmentKind k) {
    switch (k) {
        case SegmentKind::constant_rf: return "constant_rf";
        case SegmentKind::chirp: return "chirp";
        case SegmentKind::delay: return "delay";
    }
    return "unknown";
}

Segment Segment::constant_rf(double amplitude, double phase, double duration) {
    require_finite(amplitude, "amplitude");
    require_finite(phase, "phase");
    require_finite(duration, "duration");
    if (duration < 0.0) throw std::invalid_argument("segment: negative duration");
    if (amplitude < 0.0) throw std::invalid_argument("segment: negative amplitude");
    Segment s;
    s.kind = SegmentKind::constant_rf;
    s.amplitude = amplitude;
    s.phase = phase;
    s.duration = duration;
    return s;
}

Segment Segment::delay(double duration) {
    require_finite(duration, "duration");
    if (duration < 0.0) throw std::invalid_argument("segment: negative duration");
    Segment s;
    s.kind = SegmentKind::delay;
    s.duration = duration;
    return s;
}

Segment Segment::chirp_segment(const ChirpSpec& spec) {
    validate_chirp(spec);
    Segment s;
    s.kind = SegmentKind::chirp;
    s.duration = spec.duration;
    s.chirp = spec;
    return s;
}

double PulseSequence::total_duration() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration;
    return t;
}

std::size_t PulseSequence::count(SegmentKind k) const {
    std::size_t n = 0;
    for (const auto& s : segments) {
        if (s.kind == k) ++n;
    }
    return n;
}

double PulseSequence::max_segment_amplitude() const {
    double a = 0.0;
    for (const auto& s : segments) {
        if (s.kind == SegmentKind::constant_rf) a = std::max(a, s.amplitude);
        if (s.kind == SegmentKind::chirp) a = std::max(a, s.chirp.amplitude);
    }
    return a;
}

namespace {

json segment_to_json(const Segment& s) {
    json j;
    j["kind"] = to_string(s.kind);
    j["duration"] = s.duration;
    switch (s.kind) {
        case SegmentKind::constant_rf:
            j["amplitude"] = s.amplitude;
            j["phase"] = s.phase;
            break;
        case SegmentKind::chirp:
            j["f_start"] = s.chirp.f_start;
            j["f_end"] = s.chirp.f_end;
            j["amplitude"] = s.chirp.amplitude;
            break;
        case SegmentKind::delay:
            break;
    }
    return j;
}

Segment segment_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant_rf") {
        return Segment::constant_rf(j.at("amplitude").get<double>(),
                                    j.at("phase").get<double>(),
                                    j.at("duration").get<double>());
    }
    if (kind == "delay") {
        return Segment::delay(j.at("duration").get<double>());
    }
    if (kind == "chirp") {
        ChirpSpec c;
        c.f_start = j.at("f_start").get<double>();
        c.f_end = j.at("f_end").get<double>();
        c.duration = j.at("duration").get<double>();
        c.amplitude = j.at("amplitude").get<double>();
        return Segment::chirp_segment(c);
    }
    throw std::invalid_argument("unknown segment kind: " + kind);
}

json design_to_json(const DesignParams& p) {
    return json{{"N", p.N}, {"M", p.M}, {"n_blocks", p.n_blocks},
                {"theta_target", p.theta_target}};
}

DesignParams design_from_json(const json& j) {
    DesignParams p;
    p.N = j.at("N").get<int>();
    p.M = j.at("M").get<int>();
    p.n_blocks = j.at("n_blocks").get<int>();
    p.theta_target = j.at("theta_target").get<double>();
    return p;
}

}  // namespace

std::string sequence_to_json(const PulseSequence& s) {
    json j;
    j["label"] = s.label;
    j["peak_amplitude"] = s.peak_amplitude;
    j["design"] = s.design ? design_to_json(*s.design) : json(nullptr);
    json segs = json::array();
    for (const auto& seg : s.segments) segs.push_back(segment_to_json(seg));
    j["segments"] = std::move(segs);
    return j.dump(2);
}

PulseSequence sequence_from_json(const std::string& text) {
    const json j = json::parse(text);
    PulseSequence s;
    s.label = j.at("label").get<std::string>();
    s.peak_amplitude = j.at("peak_amplitude").get<double>();
    if (!j.at("design").is_null()) s.design = design_from_json(j.at("design"));
    for (const auto& seg : j.at("segments")) s.segments.push_back(segment_from_json(seg));
    return s;
}

void write_sampled_waveform(const PulseSequence& s, double dwell, std::ostream& os) {
    if (!(dwell > 0.0) || !std::isfinite(dwell)) {
        throw std::invalid_argument("sampled waveform: dwell must be positive");
    }
    const double total = s.total_duration();
    const auto samples = static_cast<std::size_t>(std::ceil(total / dwell));
    char line[96];
    std::snprintf(line, sizeof(line), "# samples=%zu dwell=%.17g\n", samples, dwell);
    os << line << "# amplitude phase\n";
    std::size_t seg_idx = 0;
    double seg_start = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = (static_cast<double>(i) + 0.5) * dwell;
        while (seg_idx + 1 < s.segments.size() &&
               t >= seg_start + s.segments[seg_idx].duration) {
            seg_start += s.segments[seg_idx].duration;
            ++seg_idx;
        }
        double amp = 0.0;
        double phase = 0.0;
        if (seg_idx < s.segments.size()) {
            const Segment& seg = s.segments[seg_idx];
            const double local = t - seg_start;
            switch (seg.kind) {
                case SegmentKind::constant_rf:
                    amp = seg.amplitude;
                    phase = seg.phase;
                    break;
                case SegmentKind::chirp:
                    amp = seg.chirp.amplitude;
                    phase = seg.chirp.phase_at(local);
                    break;
                case SegmentKind::delay:
                    break;
            }
        }
        std::snprintf(line, sizeof(line), "%.17g %.17g\n", amp, phase);
        os << line;
    }
}

}  // namespace dsweep

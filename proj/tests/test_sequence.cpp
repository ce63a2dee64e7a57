#include <sstream>

#include "doctest.h"

#include "dsweep/compose.hpp"
#include "dsweep/sequence.hpp"

using namespace dsweep;

TEST_CASE("segment constructors validate") {
    CHECK_THROWS_AS(Segment::constant_rf(-0.1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Segment::constant_rf(0.1, 0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Segment::delay(-1.0), std::invalid_argument);
    ChirpSpec flat;
    flat.f_end = flat.f_start;
    CHECK_THROWS_AS(Segment::chirp_segment(flat), std::invalid_argument);
    ChirpSpec zero_dur;
    zero_dur.duration = 0.0;
    CHECK_THROWS_AS(Segment::chirp_segment(zero_dur), std::invalid_argument);
}

TEST_CASE("chirp phase bookkeeping") {
    ChirpSpec c;
    c.f_start = -5.0;
    c.f_end = 5.0;
    c.duration = 300.0;
    c.amplitude = 0.5;
    CHECK(c.sweep_rate() == 10.0 / 300.0);
    CHECK(c.phase_at(0.0) == 0.0);
    CHECK(c.freq_at(0.0) == -5.0);
    CHECK(c.freq_at(300.0) == 5.0);
    CHECK(c.freq_at(150.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c.phase_at(300.0) == doctest::Approx(-5.0 * 300.0 + 10.0 * 300.0 / 2.0));
}

TEST_CASE("sequence json round-trip is lossless") {
    const DesignParams p = make_design(20, 10, 2);
    ChirpSpec sweep;
    sweep.duration = 1000.0;
    sweep.amplitude = 0.25;
    const PulseSequence s = rotation_sequence(p, sweep, {});
    const std::string text = sequence_to_json(s);
    const PulseSequence back = sequence_from_json(text);
    CHECK(back.segments == s.segments);
    CHECK(back.label == s.label);
    CHECK(back.peak_amplitude == s.peak_amplitude);
    REQUIRE(back.design.has_value());
    CHECK(back.design->N == p.N);
    CHECK(back.design->theta_target == p.theta_target);
    CHECK(sequence_to_json(back) == text);
}

TEST_CASE("sequence json rejects unknown kinds") {
    CHECK_THROWS(sequence_from_json(R"({"label":"x","peak_amplitude":0,
        "design":null,"segments":[{"kind":"wiggle","duration":1.0}]})"));
}

TEST_CASE("sampled waveform export") {
    PulseSequence s;
    s.segments.push_back(Segment::constant_rf(0.25, 0.0, 1.0));
    ChirpSpec c;
    c.f_start = -1.0;
    c.f_end = 1.0;
    c.duration = 1.0;
    c.amplitude = 0.5;
    s.segments.push_back(Segment::chirp_segment(c));
    std::ostringstream os;
    write_sampled_waveform(s, 0.5, os);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "# samples=4 dwell=0.5");
    std::string columns;
    std::getline(is, columns);
    CHECK(columns == "# amplitude phase");
    double amp = 0.0, ph = 0.0;
    is >> amp >> ph;  // t = 0.25, inside the constant slice
    CHECK(amp == 0.25);
    CHECK(ph == 0.0);
    is >> amp >> ph;  // t = 0.75
    CHECK(amp == 0.25);
    is >> amp >> ph;  // t = 1.25 -> chirp local 0.25
    CHECK(amp == 0.5);
    CHECK(ph == doctest::Approx(c.phase_at(0.25)).epsilon(1e-15));

    CHECK_THROWS_AS(write_sampled_waveform(s, 0.0, os), std::invalid_argument);
}

TEST_CASE("duration is additive under concatenation") {
    PulseSequence a;
    a.segments.push_back(Segment::delay(1.5));
    a.segments.push_back(Segment::constant_rf(0.1, 0.0, 2.0));
    PulseSequence b;
    b.segments.push_back(Segment::delay(0.25));
    PulseSequence joined = a;
    joined.segments.insert(joined.segments.end(), b.segments.begin(), b.segments.end());
    CHECK(joined.total_duration() == a.total_duration() + b.total_duration());
}

#include <cmath>
#include <sstream>

#include "doctest.h"

#include "dsweep/fourier.hpp"
#include "oracles.hpp"

using namespace dsweep;

namespace {
const DesignParams kBase = make_design(20, 10, 1);
}

TEST_CASE("coefficients of the pi/2 design") {
    const CoefficientSet c = coefficients(kBase);
    REQUIRE(c.u.size() == 11);
    CHECK(c.u[0] == 0.25);
    CHECK(c.u[1] == doctest::Approx(0.4979463676217807).epsilon(1e-14));
    CHECK(c.u[10] == doctest::Approx(0.3183098861837907).epsilon(1e-14));
    CHECK(c.peak() == doctest::Approx(0.4979463676217807).epsilon(1e-14));
}

TEST_CASE("reduced-angle coefficients scale linearly") {
    const CoefficientSet full = coefficients(kBase);
    const CoefficientSet half = coefficients(make_design(20, 10, 2));
    const CoefficientSet third = coefficients(make_design(20, 10, 3));
    for (std::size_t k = 0; k < full.u.size(); ++k) {
        CHECK(half.u[k] == 0.5 * full.u[k]);
        CHECK(third.u[k] == doctest::Approx(full.u[k] / 3.0).epsilon(1e-15));
    }
    CHECK(third.peak() == doctest::Approx(0.16598212254059357).epsilon(1e-12));
}

TEST_CASE("coefficients match an independent quadrature of the flat target") {
    for (auto [N, M] : {std::pair{20, 10}, std::pair{32, 16}, std::pair{64, 64}, std::pair{7, 3}}) {
        const DesignParams p = make_design(N, M, 1);
        const CoefficientSet c = coefficients(p);
        for (int k = 0; k <= M; ++k) {
            const double q = testor::rect_fourier_u(N, k, p.theta_target, p.dt());
            CHECK(std::abs(q - c.u[k]) < 1e-10);
        }
    }
}

TEST_CASE("waveform layout") {
    const CoefficientSet c = coefficients(kBase);
    const PulseSequence s = waveform(c, kBase);
    REQUIRE(s.segments.size() == 22);
    CHECK(s.total_duration() == doctest::Approx(22.0 * M_PI / 20.0).epsilon(1e-15));
    for (const auto& seg : s.segments) {
        CHECK(seg.kind == SegmentKind::constant_rf);
        CHECK(seg.phase == 0.0);
        CHECK(seg.duration == kBase.dt());
    }
    // time order u_M .. u_0, u_0 .. u_M
    for (int k = 0; k <= 10; ++k) {
        CHECK(s.segments[10 - k].amplitude == c.u[k]);
        CHECK(s.segments[11 + k].amplitude == c.u[k]);
    }
    CHECK(s.peak_amplitude == c.peak());
    CHECK(s.max_segment_amplitude() == s.peak_amplitude);
}

TEST_CASE("series values at the band center and edge") {
    const CoefficientSet c = coefficients(kBase);
    CHECK(series_value(c, kBase, 0.0) == doctest::Approx(1.4199286399914173).epsilon(1e-13));
    CHECK(series_value(c, kBase, 1.0) == doctest::Approx(0.9246586837941786).epsilon(1e-13));
    CHECK(series_value(c, kBase, 0.5) == doctest::Approx(1.2836649786367622).epsilon(1e-13));
    CHECK_THROWS_AS(series_value(c, kBase, 25.0), std::invalid_argument);
}

TEST_CASE("series evenness is exact") {
    const CoefficientSet c = coefficients(kBase);
    for (double w : {0.1, 0.33, 0.5, 0.77, 1.0}) {
        CHECK(series_value(c, kBase, w) == series_value(c, kBase, -w));
    }
}

TEST_CASE("on-resonance series equals the waveform area") {
    const CoefficientSet c = coefficients(kBase);
    const PulseSequence s = waveform(c, kBase);
    double area = 0.0;
    for (const auto& seg : s.segments) area += seg.amplitude * seg.duration;
    CHECK(std::abs(series_value(c, kBase, 0.0) - area) < 1e-12);
}

TEST_CASE("untruncated series converges to the target at the band center") {
    // partial sums of the closed-form coefficients, far beyond the M <= N cutoff
    const double dt = M_PI / 20.0;
    double sum = 0.25;
    for (int k = 1; k <= 100000; ++k) {
        const double x = k * M_PI / 20.0;
        sum += std::sin(x) / (2.0 * x);
    }
    CHECK(std::abs(2.0 * dt * sum - M_PI / 2.0) < 1e-4);
}

TEST_CASE("fit improves monotonically with harmonic count") {
    // integrated squared deviation from the flat target over one period
    auto isd = [](int M) {
        const DesignParams p = make_design(20, M, 1);
        const CoefficientSet c = coefficients(p);
        auto dev2 = [&](double x) {
            const double target = std::abs(x) <= M_PI / 20.0 ? M_PI / 2.0 : 0.0;
            double g = 0.0;
            for (std::size_t k = 0; k < c.u.size(); ++k) g += c.u[k] * std::cos(k * x);
            g *= 2.0 * p.dt();
            return (g - target) * (g - target);
        };
        return testor::simpson(dev2, -M_PI, M_PI, 20000);
    };
    double prev = isd(1);
    for (int M = 2; M <= 12; ++M) {
        const double cur = isd(M);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("design report rows and CSV") {
    const CoefficientSet c = coefficients(kBase);
    const std::vector<double> grid{-1.0, 0.0, 1.0};
    const auto rows = design_report(c, kBase, grid);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].series_value_rad == series_value(c, kBase, 0.0));
    CHECK(rows[0].series_value_rad == rows[2].series_value_rad);
    CHECK(rows[1].deviation_rad == doctest::Approx(-0.15086768680347928).epsilon(1e-12));

    std::ostringstream os;
    write_design_report_csv(rows, os);
    CHECK(os.str().substr(0, 39) == "offset,series_value_rad,deviation_rad\n-");
}

TEST_CASE("design validation") {
    CHECK_THROWS_AS(make_design(20, 40, 1), std::invalid_argument);   // M > N
    CHECK_THROWS_AS(make_design(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_design(20, 10, 0), std::invalid_argument);
    DesignParams bad = kBase;
    bad.theta_target = 1.0;  // != pi/2
    CHECK_THROWS_AS(validate_design(bad), std::invalid_argument);
    CHECK_THROWS_AS(coefficients(bad), std::invalid_argument);
}

#include "dsweep/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace dsweep {

double CoefficientSet::peak() const {
    double p = 0.0;
    for (double v : u) p = std::max(p, v);
    return p;
}

CoefficientSet coefficients(const DesignParams& p) {
    validate_design(p);
    const double scale = p.theta_target / (M_PI / 2.0);
    CoefficientSet c;
    c.u.resize(p.M + 1);
    c.u[0] = scale * 0.25;
    for (int k = 1; k <= p.M; ++k) {
        const double x = k * M_PI / p.N;
        c.u[k] = scale * std::sin(x) / (2.0 * x);
    }
    return c;
}

PulseSequence waveform(const CoefficientSet& c, const DesignParams& p) {
    validate_design(p);
    if (c.u.size() != static_cast<std::size_t>(p.M + 1)) {
        throw std::invalid_argument("waveform: coefficient count does not match design");
    }
    PulseSequence s;
    s.design = p;
    s.segments.reserve(2 * p.M + 2);
    for (int k = p.M; k >= 0; --k) {
        s.segments.push_back(Segment::constant_rf(c.u[k], 0.0, p.dt()));
    }
    for (int k = 0; k <= p.M; ++k) {
        s.segments.push_back(Segment::constant_rf(c.u[k], 0.0, p.dt()));
    }
    s.peak_amplitude = c.peak();
    char label[64];
    std::snprintf(label, sizeof(label), "waveform_N%d_M%d_n%d", p.N, p.M, p.n_blocks);
    s.label = label;
    return s;
}

double series_value(const CoefficientSet& c, const DesignParams& p, double offset) {
    if (!std::isfinite(offset) || std::abs(offset) > p.N) {
        throw std::invalid_argument("series_value: offset outside one fundamental period");
    }
    const double dt = p.dt();
    double sum = 0.0;
    for (std::size_t k = 0; k < c.u.size(); ++k) {
        sum += c.u[k] * std::cos(static_cast<double>(k) * offset * dt);
    }
    return 2.0 * dt * sum;
}

std::vector<DesignReportRow> design_report(const CoefficientSet& c, const DesignParams& p,
                                           const std::vector<double>& offsets) {
    std::vector<DesignReportRow> rows;
    rows.reserve(offsets.size());
    for (double w : offsets) {
        const double v = series_value(c, p, w);
        rows.push_back({w, v, v - p.theta_target});
    }
    return rows;
}

void write_design_report_csv(const std::vector<DesignReportRow>& rows, std::ostream& os) {
    os << "offset,series_value_rad,deviation_rad\n";
    char line[128];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", r.offset,
                      r.series_value_rad, r.deviation_rad);
        os << line;
    }
}

}  // namespace dsweep

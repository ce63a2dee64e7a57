#pragma once

#include <iosfwd>
#include <vector>

#include "dsweep/sequence.hpp"

namespace dsweep {

/// Symmetric Fourier coefficients u_0..u_M of the flat-band target; the
/// implied extension is u_{-k} = u_k.
struct CoefficientSet {
    std::vector<double> u;

    double peak() const;
};

/// u_0 = (theta/(pi/2))/4, u_k = (theta/(pi/2)) * sin(k pi/N) / (2 k pi/N).
CoefficientSet coefficients(const DesignParams& p);

/// Piecewise-constant x-phase schedule: 2M+2 slices of duration dt with
/// amplitudes (u_M .. u_1, u_0, u_0, u_1 .. u_M); u_0 fills one slot in
/// each half.
PulseSequence waveform(const CoefficientSet& c, const DesignParams& p);

/// 2*dt * sum_k u_k cos(k*offset*dt): the designed flip angle at a given
/// normalized offset. Requires |offset| <= N (one fundamental period).
double series_value(const CoefficientSet& c, const DesignParams& p, double offset);

struct DesignReportRow {
    double offset = 0.0;
    double series_value_rad = 0.0;
    double deviation_rad = 0.0;
};

std::vector<DesignReportRow> design_report(const CoefficientSet& c, const DesignParams& p,
                                           const std::vector<double>& offsets);

/// CSV columns: offset,series_value_rad,deviation_rad
void write_design_report_csv(const std::vector<DesignReportRow>& rows, std::ostream& os);

}  // namespace dsweep

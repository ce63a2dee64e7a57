#pragma once

// Test-side reference computations, kept independent of the library's
// production integration paths.

#include <cmath>

#include "dsweep/sequence.hpp"
#include "dsweep/su2.hpp"

namespace testor {

// Chirp propagator integrated in the fixed rotating frame (the library
// integrates in the rf co-rotating frame): phase sampled at slice midpoints.
inline dsweep::Su2 fixed_frame_chirp(const dsweep::ChirpSpec& spec, double offset, long steps) {
    const double dt = spec.duration / static_cast<double>(steps);
    dsweep::Su2 u = dsweep::Su2::identity();
    for (long j = 0; j < steps; ++j) {
        const double tm = (static_cast<double>(j) + 0.5) * dt;
        u = dsweep::prop_const(offset, spec.amplitude, spec.phase_at(tm), dt) * u;
    }
    return u;
}

// Simpson quadrature of f over [a, b] with an even panel count.
template <typename F>
double simpson(F f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

// Fourier coefficient of the flat-band target by quadrature.
inline double rect_fourier_u(int N, int k, double theta, double dt) {
    const double edge = M_PI / N;
    const double integral =
        simpson([&](double x) { return theta * std::cos(k * x); }, -edge, edge, 2048);
    const double a_k = integral / M_PI;
    return k == 0 ? a_k / (4.0 * dt) : a_k / (2.0 * dt);
}

}  // namespace testor

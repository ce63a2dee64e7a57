#include "dsweep/su2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsweep {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("non-finite ") + what);
    }
}

}  // namespace

double Spinor::norm() const { return std::sqrt(std::norm(c0) + std::norm(c1)); }

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

Su2 Su2::dagger() const {
    return Su2{std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

cplx Su2::det() const { return m00 * m11 - m01 * m10; }

double Su2::unitarity_defect() const {
    const Su2 p = *this * dagger();
    double d = std::abs(p.m00 - cplx{1.0, 0.0});
    d = std::max(d, std::abs(p.m11 - cplx{1.0, 0.0}));
    d = std::max(d, std::abs(p.m01));
    d = std::max(d, std::abs(p.m10));
    return d;
}

Su2 operator*(const Su2& a, const Su2& b) {
    return Su2{a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
               a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Su2 operator-(const Su2& a) { return Su2{-a.m00, -a.m01, -a.m10, -a.m11}; }

Su2 z_rotation(double angle) {
    require_finite(angle, "angle");
    const double h = 0.5 * angle;
    return Su2{{std::cos(h), -std::sin(h)}, {}, {}, {std::cos(h), std::sin(h)}};
}

Su2 x_rotation(double angle) {
    require_finite(angle, "angle");
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    return Su2{{c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0}};
}

Su2 prop_const(double offset, double amplitude, double phase, double duration) {
    require_finite(offset, "offset");
    require_finite(amplitude, "amplitude");
    require_finite(phase, "phase");
    require_finite(duration, "duration");
    if (duration < 0.0) throw std::invalid_argument("negative duration");
    if (amplitude < 0.0) throw std::invalid_argument("negative amplitude");

    const double omega = std::hypot(offset, amplitude);
    if (omega == 0.0 || duration == 0.0) return Su2::identity();

    const double half = 0.5 * omega * duration;
    const double c = std::cos(half);
    const double s = std::sin(half);
    const double nx = amplitude * std::cos(phase) / omega;
    const double ny = amplitude * std::sin(phase) / omega;
    const double nz = offset / omega;
    // cos(half)*I - i sin(half) * (n . sigma)
    return Su2{{c, -s * nz}, {s * ny, -s * nx}, {-s * ny, -s * nx}, {c, s * nz}};
}

Su2 compose(std::span<const Su2> factors) {
    if (factors.empty()) throw std::invalid_argument("compose: empty factor list");
    Su2 u = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) u = u * factors[i];
    return u;
}

Spinor apply(const Su2& u, const Spinor& s) {
    return Spinor{u.m00 * s.c0 + u.m01 * s.c1, u.m10 * s.c0 + u.m11 * s.c1};
}

BlochVector to_bloch(const Spinor& s) {
    const cplx t = std::conj(s.c0) * s.c1;
    return BlochVector{2.0 * t.real(), 2.0 * t.imag(), std::norm(s.c0) - std::norm(s.c1)};
}

Spinor spinor_plus_z() { return Spinor{{1.0, 0.0}, {0.0, 0.0}}; }

Spinor spinor_plus_y() {
    const double r = 1.0 / std::sqrt(2.0);
    return Spinor{{r, 0.0}, {0.0, r}};
}

EulerAnglesZxz euler_zxz(const Su2& u) {
    // Phase-normalize so the matrix is exactly special unitary, then read
    // the angles off the Cayley-Klein entries a = m00, b = m01.
    const cplx d = u.det();
    const cplx s = std::sqrt(d);
    const cplx a = u.m00 / s;
    const cplx b = u.m01 / s;

    EulerAnglesZxz e;
    e.theta = 2.0 * std::atan2(std::abs(b), std::abs(a));

    constexpr double kDegenerate = 1e-15;
    if (std::abs(b) <= kDegenerate) {
        e.alpha = -2.0 * std::arg(a);
        e.beta = 0.0;
    } else if (std::abs(a) <= kDegenerate) {
        e.alpha = -2.0 * std::arg(b) - M_PI;
        e.beta = 0.0;
    } else {
        // arg(a) = -(alpha+beta)/2 ; arg(b) = -pi/2 - (alpha-beta)/2
        const double sum = -2.0 * std::arg(a);
        const double diff = -2.0 * std::arg(b) - M_PI;
        e.alpha = 0.5 * (sum + diff);
        e.beta = 0.5 * (sum - diff);
    }
    return e;
}

Su2 from_euler_zxz(const EulerAnglesZxz& e) {
    return z_rotation(e.alpha) * x_rotation(e.theta) * z_rotation(e.beta);
}

double distance_up_to_phase(const Su2& u, const Su2& v) {
    const cplx tr = std::conj(u.m00) * v.m00 + std::conj(u.m10) * v.m10 +
                    std::conj(u.m01) * v.m01 + std::conj(u.m11) * v.m11;
    return std::max(0.0, 1.0 - 0.5 * std::abs(tr));
}

}  // namespace dsweep

#pragma once

#include <complex>
#include <span>

namespace dsweep {

using cplx = std::complex<double>;

/// Spin-1/2 state (c0, c1) with |c0|^2 + |c1|^2 = 1. (1, 0) is the +z state.
struct Spinor {
    cplx c0;
    cplx c1;

    double norm() const;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

/// 2x2 special-unitary propagator. All factory functions produce exact
/// det = 1 matrices; products preserve the structure to rounding.
struct Su2 {
    cplx m00{1.0, 0.0};
    cplx m01{0.0, 0.0};
    cplx m10{0.0, 0.0};
    cplx m11{1.0, 0.0};

    static Su2 identity() { return Su2{}; }

    Su2 dagger() const;
    cplx det() const;
    /// max |(U Udag - I)_ij|, for unitarity checks
    double unitarity_defect() const;

    friend Su2 operator*(const Su2& a, const Su2& b);
    friend Su2 operator-(const Su2& a);
};

/// z-x-z factorization U ~ Rz(alpha) * Rx(theta) * Rz(beta) up to global
/// phase, theta in [0, pi]. At theta in {0, pi} the z-angle is folded
/// entirely into alpha and beta = 0.
struct EulerAnglesZxz {
    double alpha = 0.0;
    double theta = 0.0;
    double beta = 0.0;
};

/// exp(-i*angle*Iz) = diag(e^{-i a/2}, e^{+i a/2})
Su2 z_rotation(double angle);
/// exp(-i*angle*Ix)
Su2 x_rotation(double angle);

/// Propagator of a constant control slice: exp(-i t H) with
/// H = offset*Iz + amplitude*(cos(phase)*Ix + sin(phase)*Iy), I = Pauli/2.
/// Closed-form axis-angle exponential; no series truncation.
Su2 prop_const(double offset, double amplitude, double phase, double duration);

/// Product in the listed order: compose({A, B}) = A*B, i.e. the rightmost
/// element acts first on the state.
Su2 compose(std::span<const Su2> factors);

Spinor apply(const Su2& u, const Spinor& s);

BlochVector to_bloch(const Spinor& s);

Spinor spinor_plus_z();
Spinor spinor_plus_y();

EulerAnglesZxz euler_zxz(const Su2& u);
Su2 from_euler_zxz(const EulerAnglesZxz& e);

/// 1 - |tr(U^dag V)| / 2: zero iff U and V agree up to a global phase,
/// 1 for orthogonal rotations.
double distance_up_to_phase(const Su2& u, const Su2& v);

}  // namespace dsweep

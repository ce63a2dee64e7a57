#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "dsweep/su2.hpp"

using namespace dsweep;

namespace {

double entry_distance(const Su2& a, const Su2& b) {
    double d = std::abs(a.m00 - b.m00);
    d = std::max(d, std::abs(a.m01 - b.m01));
    d = std::max(d, std::abs(a.m10 - b.m10));
    d = std::max(d, std::abs(a.m11 - b.m11));
    return d;
}

Su2 random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> off(-3.0, 3.0);
    std::uniform_real_distribution<double> amp(0.0, 3.0);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    std::uniform_real_distribution<double> dur(0.0, 5.0);
    return prop_const(off(rng), amp(rng), ang(rng), dur(rng)) * z_rotation(ang(rng)) *
           x_rotation(ang(rng));
}

}  // namespace

TEST_CASE("prop_const basics") {
    CHECK(entry_distance(prop_const(0.0, 1.3, 0.0, 0.0), Su2::identity()) == 0.0);

    // on-resonance 90 degree x-pulse takes +z to -y
    const Su2 u = prop_const(0.0, M_PI / 2.0, 0.0, 1.0);
    const BlochVector b = to_bloch(apply(u, spinor_plus_z()));
    CHECK(std::abs(b.x) < 1e-12);
    CHECK(std::abs(b.y + 1.0) < 1e-12);
    CHECK(std::abs(b.z) < 1e-12);

    // free evolution is a z-rotation: diag(e^{-i pi/2}, e^{i pi/2}) at w=1, t=pi
    const Su2 f = prop_const(1.0, 0.0, 0.0, M_PI);
    CHECK(std::abs(f.m00 - cplx{0.0, -1.0}) < 1e-12);
    CHECK(std::abs(f.m11 - cplx{0.0, 1.0}) < 1e-12);
    CHECK(std::abs(f.m01) == 0.0);
    CHECK(std::abs(f.m10) == 0.0);
}

TEST_CASE("prop_const input validation") {
    CHECK_THROWS_AS(prop_const(std::nan(""), 1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(prop_const(0.0, 1.0, 0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(prop_const(0.0, -1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(prop_const(0.0, 1.0, INFINITY, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(z_rotation(std::nan("")), std::invalid_argument);
}

TEST_CASE("rotation closed forms") {
    CHECK(entry_distance(z_rotation(0.0), Su2::identity()) == 0.0);
    CHECK(entry_distance(x_rotation(2.0 * M_PI), -Su2::identity()) < 1e-15);
    CHECK(entry_distance(x_rotation(M_PI) * x_rotation(M_PI), -Su2::identity()) < 1e-15);
}

TEST_CASE("compose order and identities") {
    std::mt19937_64 rng(11);
    const Su2 a = random_unitary(rng);
    const Su2 b = random_unitary(rng);

    const Su2 single[] = {a};
    CHECK(entry_distance(compose(single), a) == 0.0);

    const Su2 inv[] = {a, a.dagger()};
    CHECK(distance_up_to_phase(compose(inv), Su2::identity()) < 1e-10);

    const Su2 zz[] = {z_rotation(0.4), z_rotation(1.1)};
    CHECK(entry_distance(compose(zz), z_rotation(1.5)) < 1e-15);

    // compose({A, B}) applied to s equals A applied after B
    const Spinor s{{0.6, 0.0}, {0.0, 0.8}};
    const Su2 ab[] = {a, b};
    const Spinor s1 = apply(compose(ab), s);
    const Spinor s2 = apply(a, apply(b, s));
    CHECK(std::abs(s1.c0 - s2.c0) < 1e-14);
    CHECK(std::abs(s1.c1 - s2.c1) < 1e-14);

    CHECK_THROWS_AS(compose({}), std::invalid_argument);
}

TEST_CASE("apply and to_bloch conventions") {
    const Spinor z = spinor_plus_z();
    const Spinor same = apply(Su2::identity(), z);
    CHECK(same.c0 == z.c0);
    CHECK(same.c1 == z.c1);

    const BlochVector bz = to_bloch(z);
    CHECK(bz.x == 0.0);
    CHECK(bz.y == 0.0);
    CHECK(bz.z == 1.0);

    // the equator state (1, -i)/sqrt(2) sits on -y
    const double r = 1.0 / std::sqrt(2.0);
    const BlochVector by = to_bloch(Spinor{{r, 0.0}, {0.0, -r}});
    CHECK(std::abs(by.y + 1.0) < 1e-15);
    CHECK(std::abs(by.x) < 1e-15);
    CHECK(std::abs(by.z) < 1e-15);

    const BlochVector plus_y = to_bloch(spinor_plus_y());
    CHECK(std::abs(plus_y.y - 1.0) < 1e-15);
}

TEST_CASE("norm preservation") {
    std::mt19937_64 rng(17);
    Spinor s = spinor_plus_z();
    for (int i = 0; i < 200; ++i) s = apply(random_unitary(rng), s);
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
    CHECK(std::abs(to_bloch(s).norm() - 1.0) < 1e-10);
}

TEST_CASE("euler_zxz degenerate and generic cases") {
    const EulerAnglesZxz ex = euler_zxz(x_rotation(M_PI));
    CHECK(std::abs(ex.theta - M_PI) < 1e-12);
    CHECK(ex.beta == 0.0);
    CHECK(distance_up_to_phase(from_euler_zxz(ex), x_rotation(M_PI)) < 1e-12);

    const EulerAnglesZxz ez = euler_zxz(z_rotation(0.9));
    CHECK(ez.theta < 1e-12);
    CHECK(ez.beta == 0.0);
    const double folded = std::remainder(ez.alpha + ez.beta - 0.9, 2.0 * M_PI);
    CHECK(std::abs(folded) < 1e-12);

    const Su2 u = prop_const(0.3, 0.5, 0.0, 4.0);
    CHECK(distance_up_to_phase(from_euler_zxz(euler_zxz(u)), u) < 1e-9);
}

TEST_CASE("euler_zxz round-trip property") {
    std::mt19937_64 rng(23);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Su2 u = random_unitary(rng);
        worst = std::max(worst, distance_up_to_phase(from_euler_zxz(euler_zxz(u)), u));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("distance_up_to_phase metric") {
    std::mt19937_64 rng(5);
    const Su2 u = random_unitary(rng);
    CHECK(distance_up_to_phase(u, u) < 1e-15);
    CHECK(distance_up_to_phase(u, -u) < 1e-15);
    CHECK(std::abs(distance_up_to_phase(Su2::identity(), x_rotation(M_PI)) - 1.0) < 1e-15);
}

TEST_CASE("prop_const stays special unitary") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> off(-5.0, 5.0);
    std::uniform_real_distribution<double> amp(0.0, 5.0);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    std::uniform_real_distribution<double> dur(0.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const Su2 u = prop_const(off(rng), amp(rng), ang(rng), dur(rng));
        CHECK(u.unitarity_defect() < 1e-10);
        CHECK(std::abs(u.det() - cplx{1.0, 0.0}) < 1e-10);
    }
}

TEST_CASE("constant generator semigroup") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> off(-2.0, 2.0);
    std::uniform_real_distribution<double> amp(0.0, 2.0);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    std::uniform_real_distribution<double> dur(0.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double w = off(rng), a = amp(rng), p = ang(rng);
        const double t1 = dur(rng), t2 = dur(rng);
        const Su2 whole = prop_const(w, a, p, t1 + t2);
        const Su2 split[] = {prop_const(w, a, p, t2), prop_const(w, a, p, t1)};
        CHECK(distance_up_to_phase(whole, compose(split)) < 1e-10);
    }
}

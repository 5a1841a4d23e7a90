#include "eigencone/cubics.hpp"
#include "eigencone/rng.hpp"
#include "eigencone/symmetry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace eigencone;

TEST_CASE("generators reduce to the identity at angle 0") {
    for (int kind : {1, 2, 3}) CHECK(max_abs(generator(kind, 0.0) - Matrix::identity(5)) < 1e-15);
    CHECK_THROWS_AS(generator(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(generator(4, 1.0), std::invalid_argument);
}

TEST_CASE("generators are rotations at random angles") {
    SampleRng rng(51, 0);
    for (int t = 0; t < 100; ++t) {
        const int kind = 1 + static_cast<int>(rng.next_u64() % 3);
        const double angle = 20.0 * (rng.uniform01() - 0.5);
        const Matrix a = generator(kind, angle);
        CHECK(orthogonality_defect(a) <= 1e-13);
        CHECK(determinant(a) == Catch::Approx(1.0).margin(1e-12));
    }
    CHECK(orthogonality_defect(generator(2, 0.7)) <= 1e-15);
}

TEST_CASE("the cubic is invariant under all three generator families") {
    const Polynomial p5 = cartan_p5();
    SampleRng rng(52, 0);
    for (int t = 0; t < 300; ++t) {
        const int kind = 1 + static_cast<int>(rng.next_u64() % 3);
        const double angle = 8.0 * (rng.uniform01() - 0.5);
        const Matrix a = generator(kind, angle);
        std::vector<double> x(5);
        for (auto& v : x) v = 2.0 * (2.0 * rng.uniform01() - 1.0);
        std::vector<double> ax(5, 0.0);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) ax[static_cast<size_t>(i)] += a(i, j) * x[static_cast<size_t>(j)];
        CHECK(std::fabs(p5.eval(ax) - p5.eval(x)) <= 1e-11);
    }
}

TEST_CASE("orbit map basics") {
    const auto base = orbit_point(0, 0, 0, 0);
    CHECK(base[0] == Catch::Approx(1.0).margin(1e-15));
    for (int i = 1; i < 5; ++i) CHECK(std::fabs(base[static_cast<size_t>(i)]) < 1e-15);

    for (const double chi : {0.3, 1.2, -0.8}) {
        const auto pt = orbit_point(0, 0, 0, chi);
        CHECK(pt[0] == Catch::Approx(std::cos(chi)).margin(1e-14));
        CHECK(pt[2] == Catch::Approx(std::sin(chi)).margin(1e-14));
        CHECK(std::fabs(pt[1]) + std::fabs(pt[3]) + std::fabs(pt[4]) < 1e-14);
    }

    SampleRng rng(53, 0);
    for (int t = 0; t < 100; ++t) {
        const auto pt = orbit_point(6 * rng.uniform01(), 6 * rng.uniform01(), 6 * rng.uniform01(),
                                    6 * rng.uniform01());
        CHECK(std::fabs(norm(pt) - 1.0) <= 1e-12);
    }
}

TEST_CASE("orbit map rank: degenerate at the circle pole, full elsewhere") {
    // at chi = 0 the circle point is the level maximum: the chi-tangent
    // coincides with a symmetry tangent and one generator fixes the point,
    // so the differential only spans two directions there
    CHECK(orbit_map_rank(0, 0, 0, 0) == 2);
    // away from the pole the map is a submersion
    CHECK(orbit_map_rank(0, 0, 0, std::numbers::pi / 2) == 4);
    CHECK(orbit_map_rank(0, 0, 0, 0.7) == 4);
    SampleRng rng(56, 0);
    for (int t = 0; t < 20; ++t)
        CHECK(orbit_map_rank(rng.uniform01() * 3, rng.uniform01() * 3, rng.uniform01() * 3,
                             0.2 + rng.uniform01() * 2.5) == 4);
}

TEST_CASE("normal form recovery") {
    const double e1[5] = {1, 0, 0, 0, 0};
    CHECK(normal_form_of(e1).p == Catch::Approx(1.0).margin(1e-12));
    const double z1[5] = {0, 0, 1, 0, 0};
    CHECK(normal_form_of(z1).p == Catch::Approx(0.0).margin(1e-14));

    SampleRng rng(54, 0);
    for (int t = 0; t < 300; ++t) {
        const auto x = rng.unit_vector(5);
        const NormalForm nf = normal_form_of(x);
        CHECK(nf.q >= 0.0);
        CHECK(nf.p * nf.p + nf.q * nf.q == Catch::Approx(1.0).margin(1e-12));
        // the defining level equation holds at the recovered p
        CHECK(std::fabs(0.5 * nf.p * (3.0 - nf.p * nf.p) - cartan_field().eval(x)) <= 1e-12);
    }

    std::vector<double> off(5, 0.0);
    off[0] = 1.1;
    CHECK_THROWS_AS(normal_form_of(off), std::invalid_argument);
    CHECK_THROWS_AS(detail::invert_level(1.5), std::domain_error);
}

TEST_CASE("the level cubic is strictly increasing on the parameter range") {
    double prev = -2.0;
    for (int k = 0; k <= 2000; ++k) {
        const double p = -1.0 + 2.0 * k / 2000.0;
        const double v = 0.5 * p * (3.0 - p * p);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("spectrum transport along the symmetry orbit") {
    SampleRng rng(55, 0);
    const FieldSpec& w5 = cartan_field();
    for (int t = 0; t < 50; ++t) {
        const auto x = rng.unit_vector(5);
        // random word in the generators
        Matrix g = Matrix::identity(5);
        for (int w = 0; w < 3; ++w) {
            const int kind = 1 + static_cast<int>(rng.next_u64() % 3);
            g = g * generator(kind, 6.0 * (rng.uniform01() - 0.5));
        }
        std::vector<double> gx(5, 0.0);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) gx[static_cast<size_t>(i)] += g(i, j) * x[static_cast<size_t>(j)];
        const auto ev = jacobi_eigenvalues_desc(w5.hessian(x));
        const auto evg = jacobi_eigenvalues_desc(w5.hessian(gx));
        for (int i = 0; i < 5; ++i)
            CHECK(std::fabs(ev[static_cast<size_t>(i)] - evg[static_cast<size_t>(i)]) <= 1e-9);
    }
}

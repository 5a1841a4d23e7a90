#include "eigencone/field.hpp"
#include "eigencone/spectra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace eigencone;

namespace {

constexpr int kGrid = 1001;

double grid_p(int k) { return -1.0 + 2.0 * k / (kGrid - 1); }

std::array<double, 5> numeric_spectrum(double p) {
    const double q = std::sqrt(std::max(0.0, 1.0 - p * p));
    const double x[5] = {p, 0.0, q, 0.0, 0.0};
    const auto ev = jacobi_eigenvalues_desc(cartan_field().hessian(x));
    return {ev[0], ev[1], ev[2], ev[3], ev[4]};
}

}  // namespace

TEST_CASE("closed forms at the three landmark parameters") {
    const double s3 = std::sqrt(3.0);
    auto expect = [](double p, std::array<double, 5> want) {
        const auto cf = closed_form_spectrum(p);
        for (int i = 0; i < 5; ++i)
            CHECK(cf.lambda[static_cast<size_t>(i)] ==
                  Catch::Approx(want[static_cast<size_t>(i)]).margin(1e-14));
    };
    expect(1.0, {2, 2, 2, -7, -7});
    expect(0.0, {3 * s3, 3, 0, -3, -3 * s3});
    expect(-1.0, {7, 7, -2, -2, -2});
    CHECK(closed_form_spectrum(1.0).r == Catch::Approx(6.0).margin(1e-14));
    CHECK(closed_form_spectrum(0.0).r == Catch::Approx(4.0).margin(1e-14));
    CHECK_THROWS_AS(closed_form_spectrum(1.5), std::domain_error);
}

TEST_CASE("closed form vs numeric eigensolver across the grid") {
    double worst = 0.0;
    for (int k = 0; k < kGrid; ++k) {
        const double p = grid_p(k);
        const auto num = numeric_spectrum(p);
        const auto cf = closed_form_spectrum(p);
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst, std::fabs(num[static_cast<size_t>(i)] -
                                              cf.lambda[static_cast<size_t>(i)]));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("ordering, odd symmetry and trace across the grid") {
    for (int k = 0; k < kGrid; ++k) {
        const double p = grid_p(k);
        const auto cf = closed_form_spectrum(p);
        for (int i = 0; i < 4; ++i)
            CHECK(cf.lambda[static_cast<size_t>(i)] >= cf.lambda[static_cast<size_t>(i + 1)] - 1e-12);
        const auto cfm = closed_form_spectrum(-p);
        for (int i = 0; i < 5; ++i)
            CHECK(std::fabs(cfm.lambda[static_cast<size_t>(i)] +
                            cf.lambda[static_cast<size_t>(4 - i)]) <= 1e-12);
        double sum = 0.0;
        for (double v : cf.lambda) sum += v;
        CHECK(sum == Catch::Approx(4.0 * p * p * p - 12.0 * p).margin(1e-11));
    }
}

TEST_CASE("characteristic factors vanish at their roots") {
    CHECK(char_factors(1.0, 2.0).first == Catch::Approx(0.0).margin(1e-12));
    CHECK(char_factors(0.0, 3.0).second == Catch::Approx(0.0).margin(1e-12));
    for (int k = 0; k < kGrid; k += 20) {
        const double p = grid_p(k);
        const auto cf = closed_form_spectrum(p);
        for (int i : {0, 2, 4})
            CHECK(std::fabs(char_factors(p, cf.lambda[static_cast<size_t>(i)]).first) <= 1e-9);
        for (int i : {1, 3})
            CHECK(std::fabs(char_factors(p, cf.lambda[static_cast<size_t>(i)]).second) <= 1e-9);
    }
}

TEST_CASE("slowest contraction rate of the extreme eigenvalue pair is 3") {
    // central differences of the closed forms; the formulas extend smoothly
    // slightly past +-1, so the stencil is safe at the endpoints
    const double h = 1e-4;
    auto lam = [](double p, int i) {
        const double p2 = p * p, p3 = p2 * p;
        const double s = std::sqrt(3.0 * (4.0 - p2));
        if (i == 0) return (p3 - 6.0 * p + 3.0 * s) / 2.0;
        if (i == 2) return (p3 + 3.0 * p) / 2.0;
        return (p3 - 6.0 * p - 3.0 * s) / 2.0;  // i == 4
    };
    auto deriv = [&](double p, int i) { return (lam(p + h, i) - lam(p - h, i)) / (2.0 * h); };

    double floor15 = 1e9;  // pair {l1, l5}
    double floor13 = 1e9;  // pair {l1, l3}
    for (int k = 0; k < kGrid; ++k) {
        const double p = grid_p(k);
        const double d1 = std::fabs(deriv(p, 0));
        const double d3 = std::fabs(deriv(p, 2));
        const double d5 = std::fabs(deriv(p, 4));
        floor15 = std::min(floor15, std::max(d1, d5));
        floor13 = std::min(floor13, std::max(d1, d3));
    }
    // one of the two extreme eigenvalues always moves at rate >= 3 ...
    CHECK(floor15 >= 3.0 - 1e-6);
    // ... but the top eigenvalue alone slows below 3 on half the range:
    // paired with l3 the floor drops to (9 - 3 sqrt(3))/2
    const double expected = (9.0 - 3.0 * std::sqrt(3.0)) / 2.0;
    CHECK(floor13 == Catch::Approx(expected).margin(1e-3));
    CHECK(floor13 < 3.0 - 0.5);
}

TEST_CASE("spectrum type invariants") {
    Matrix a(3, 3);
    a(0, 0) = 4.0;
    a(1, 1) = -1.0;
    a(2, 2) = 2.0;
    const Spectrum s = eigenvalues(a);
    CHECK(s.values == std::vector<double>{4, 2, -1});
    CHECK(s.top() == 4.0);
    CHECK(s.bottom() == -1.0);
    CHECK(s.sum() == Catch::Approx(5.0).margin(1e-12));
}

#include "eigencone/field.hpp"
#include "eigencone/rng.hpp"
#include "eigencone/spectra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

using namespace eigencone;

namespace {

// central second differences of a scalar field
template <class F>
Matrix fd_hessian(const F& f, std::vector<double> x, double h) {
    const int n = static_cast<int>(x.size());
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto xpp = x, xpm = x, xmp = x, xmm = x;
            xpp[static_cast<size_t>(i)] += h;
            xpp[static_cast<size_t>(j)] += h;
            xpm[static_cast<size_t>(i)] += h;
            xpm[static_cast<size_t>(j)] -= h;
            xmp[static_cast<size_t>(i)] -= h;
            xmp[static_cast<size_t>(j)] += h;
            xmm[static_cast<size_t>(i)] -= h;
            xmm[static_cast<size_t>(j)] -= h;
            out(i, j) = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
        }
    return out;
}

double rel_err(const Matrix& a, const Matrix& b) {
    double scale = std::max(1.0, max_abs(a));
    double err = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) err = std::max(err, std::fabs(a(i, j) - b(i, j)));
    return err / scale;
}

}  // namespace

TEST_CASE("field values") {
    const FieldSpec w5 = make_w5();
    const double e1[5] = {1, 0, 0, 0, 0};
    CHECK(w5.eval(e1) == 1.0);

    SampleRng rng(41, 0);
    for (int t = 0; t < 50; ++t) {
        const double p = 2.0 * rng.uniform01() - 1.0;
        const double q = std::sqrt(1.0 - p * p);
        const double x[5] = {p, 0, q, 0, 0};
        CHECK(w5.eval(x) == Catch::Approx(p * (3.0 - p * p) / 2.0).margin(1e-14));
    }

    const double e1x2[5] = {2, 0, 0, 0, 0};
    CHECK(w5.eval(e1x2) == Catch::Approx(4.0).margin(1e-13));  // order 2 homogeneity

    std::vector<double> zero(5, 0.0);
    CHECK_THROWS_AS(w5.eval(zero), std::domain_error);
    std::vector<double> tiny(5, 1e-9);
    CHECK_THROWS_AS(w5.eval(tiny), std::domain_error);
}

TEST_CASE("Hessian at the two landmark points") {
    const FieldSpec& w5 = cartan_field();
    const double e1[5] = {1, 0, 0, 0, 0};
    const Matrix h = w5.hessian(e1);
    const double want[5] = {2, -7, 2, 2, -7};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(h(i, j) == Catch::Approx(i == j ? want[i] : 0.0).margin(1e-12));

    const double z1[5] = {0, 0, 1, 0, 0};
    const auto ev = jacobi_eigenvalues_desc(w5.hessian(z1));
    const double s3 = std::sqrt(3.0);
    const double wantev[5] = {3 * s3, 3, 0, -3, -3 * s3};
    for (int i = 0; i < 5; ++i)
        CHECK(ev[static_cast<size_t>(i)] == Catch::Approx(wantev[i]).margin(1e-9));
}

TEST_CASE("Hessian is exactly symmetric and matches finite differences") {
    SampleRng rng(42, 0);
    const FieldSpec w5 = make_w5();
    const FieldSpec w4 = make_w4();
    auto run = [&](const FieldSpec& f, int count) {
        for (int t = 0; t < count; ++t) {
            auto x = rng.unit_vector(f.dim());
            const Matrix h = f.hessian(x);
            CHECK(symmetry_defect(h) == 0.0);
            const Matrix fd = fd_hessian([&](const std::vector<double>& u) { return f.eval(u); }, x, 1e-4);
            CHECK(rel_err(h, fd) <= 1e-6);
        }
    };
    run(w5, 30);
    run(w4, 30);
}

TEST_CASE("Hessian homogeneity of order 0 for delta = 1") {
    SampleRng rng(43, 0);
    const FieldSpec& w5 = cartan_field();
    for (int t = 0; t < 20; ++t) {
        auto x = rng.unit_vector(5);
        const Matrix h1 = w5.hessian(x);
        for (const double s : {0.5, 2.0, 10.0}) {
            auto xs = x;
            for (auto& v : xs) v *= s;
            const Matrix hs = w5.hessian(xs);
            CHECK(rel_err(h1, hs) <= 1e-12);
        }
    }
}

TEST_CASE("Euler relation along the field") {
    SampleRng rng(44, 0);
    for (const double delta : {1.0, 1.5}) {
        const FieldSpec f = make_w5_delta(delta);
        for (int t = 0; t < 40; ++t) {
            auto x = rng.unit_vector(5);
            for (auto& v : x) v *= 0.5 + rng.uniform01();
            const auto g = f.gradient(x);
            const double xg = dot(x, g);
            CHECK(std::fabs(xg - (3.0 - delta) * f.eval(x)) <= 1e-10);
        }
    }
}

TEST_CASE("trace identity on the unit sphere") {
    SampleRng rng(45, 0);
    const FieldSpec& w5 = cartan_field();
    for (int t = 0; t < 200; ++t) {
        const auto x = rng.unit_vector(5);
        const Matrix h = w5.hessian(x);
        double tr = 0.0;
        for (int i = 0; i < 5; ++i) tr += h(i, i);
        CHECK(std::fabs(tr + 8.0 * w5.eval(x)) <= 1e-10);
    }
}

TEST_CASE("augmented 10-dimensional field") {
    const AugmentedField u(1e-6, 100.0);

    SECTION("value at a symmetric point") {
        std::vector<double> xy(10, 0.0);
        xy[0] = 1.0;
        xy[5] = 1.0;
        // w5 + w5 + 0, denominator 2^delta
        CHECK(u.eval(xy) == Catch::Approx(2.0 * std::pow(2.0, -1e-6)).margin(1e-14));
    }

    SECTION("degenerate parameters reduce to twice the base field") {
        const AugmentedField plain(0.0, 0.0);
        SampleRng rng(49, 0);
        for (int t = 0; t < 20; ++t) {
            const auto x = rng.unit_vector(5);
            std::vector<double> xy(10);
            std::copy(x.begin(), x.end(), xy.begin());
            std::copy(x.begin(), x.end(), xy.begin() + 5);
            CHECK(plain.eval(xy) ==
                  Catch::Approx(2.0 * cartan_field().eval(x)).margin(1e-13));
        }
    }

    SECTION("homogeneity of order 2 - 2 delta") {
        SampleRng rng(46, 0);
        for (int t = 0; t < 40; ++t) {
            auto xy = rng.unit_vector(10);
            if (!u.admissible(xy)) continue;
            auto xy2 = xy;
            for (auto& v : xy2) v *= 2.0;
            const double ratio = u.eval(xy2) / u.eval(xy);
            CHECK(std::fabs(ratio - std::pow(2.0, 2.0 - 2e-6)) <= 1e-9);
        }
    }

    SECTION("Hessian validated by finite differences") {
        SampleRng rng(47, 0);
        int done = 0;
        while (done < 15) {
            auto xy = rng.unit_vector(10);
            if (!u.admissible(xy)) continue;
            // keep blocks safely away from the base singularity for the stencil
            if (norm(std::span<const double>(xy).first(5)) < 0.2 ||
                norm(std::span<const double>(xy).subspan(5)) < 0.2)
                continue;
            ++done;
            const Matrix h = u.hessian(xy);
            CHECK(symmetry_defect(h) == 0.0);
            const Matrix fd =
                fd_hessian([&](const std::vector<double>& w) { return u.eval(w); }, xy, 1e-4);
            CHECK(rel_err(h, fd) <= 1e-6);
        }
    }

    SECTION("block guard") {
        std::vector<double> xy(10, 0.0);
        xy[0] = 1.0;  // y-block is exactly zero
        CHECK_THROWS_AS(u.eval(xy), std::domain_error);
    }
}

TEST_CASE("concurrent evaluation is bit-identical") {
    const FieldSpec& w5 = cartan_field();
    SampleRng rng(48, 0);
    const auto x = rng.unit_vector(5);
    const Matrix ref = w5.hessian(x);
    std::vector<Matrix> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (int k = 0; k < 100; ++k) results[static_cast<size_t>(t)] = w5.hessian(x);
        });
    for (auto& th : pool) th.join();
    for (const auto& m : results) CHECK(m == ref);
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(FieldSpec(norm_sq(5), 1.0), std::invalid_argument);  // degree 2
    CHECK_THROWS_AS(FieldSpec(cartan_p5(), -0.5), std::invalid_argument);
}

#include "eigencone/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

using namespace eigencone;

TEST_CASE("streams are pure functions of (seed, index)") {
    SampleRng a(123, 45);
    SampleRng b(123, 45);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    SampleRng c(123, 46);
    SampleRng d(124, 45);
    int same_c = 0, same_d = 0;
    SampleRng a2(123, 45);
    for (int i = 0; i < 64; ++i) {
        const uint64_t v = a2.next_u64();
        same_c += v == c.next_u64();
        same_d += v == d.next_u64();
    }
    CHECK(same_c == 0);
    CHECK(same_d == 0);
}

TEST_CASE("uniform draws live in [0, 1)") {
    SampleRng rng(7, 7);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("gaussian moments are sane") {
    SampleRng rng(11, 0);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        sum += g;
        sum2 += g * g;
    }
    CHECK(std::fabs(sum / n) < 0.01);
    CHECK(std::fabs(sum2 / n - 1.0) < 0.02);
}

TEST_CASE("unit vectors have unit norm") {
    SampleRng rng(13, 1);
    for (int i = 0; i < 200; ++i) {
        const auto v = rng.unit_vector(5);
        CHECK(std::fabs(norm(v) - 1.0) <= 1e-14);
    }
}

TEST_CASE("orthogonal draws cover both components of O(n)") {
    SampleRng rng(17, 3);
    int plus = 0, minus = 0;
    for (int i = 0; i < 100; ++i) {
        const Matrix o = rng.haar_orthogonal(5);
        CHECK(orthogonality_defect(o) <= 1e-12);
        const double d = determinant(o);
        CHECK(std::fabs(std::fabs(d) - 1.0) <= 1e-10);
        (d > 0 ? plus : minus)++;
    }
    CHECK(plus > 20);
    CHECK(minus > 20);
}

TEST_CASE("distinct sample indices give distinct members") {
    std::set<uint64_t> firsts;
    for (uint64_t i = 0; i < 1000; ++i) firsts.insert(SampleRng(42, i).next_u64());
    CHECK(firsts.size() == 1000);
}

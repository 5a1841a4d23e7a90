#include "eigencone/cone_calculus.hpp"
#include "eigencone/cubics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace eigencone;

TEST_CASE("mean curvature operator on degenerate inputs") {
    // linear: both pieces vanish
    CHECK(mean_curvature_op(Polynomial::variable(3, 0)).is_zero());
    // a function of one variable only: |f'|^2 f'' always cancels f'' f' f'
    const Polynomial x13 = Polynomial::monomial(2, {3, 0}, Scalar::integer(1));
    CHECK(mean_curvature_op(x13).is_zero());
}

TEST_CASE("mean curvature operator on |x|^2 in R^3") {
    const Polynomial f = norm_sq(3);
    CHECK(mean_curvature_op(f) == Scalar::integer(16) * norm_sq(3));
}

TEST_CASE("the R^5 cubic satisfies the exact weight identity") {
    const Polynomial p = cartan_p5();
    const Polynomial lhs = mean_curvature_op(p);
    const Polynomial rhs = Scalar::integer(-54) * (norm_sq(5) * p);
    CHECK(lhs == rhs);
    CHECK(lhs.is_homogeneous(5));
}

TEST_CASE("isoparametric check") {
    SECTION("R^5 cubic") {
        const EigencubicReport rep = check_munzner(cartan_p5());
        CHECK(rep.is_harmonic);
        REQUIRE(rep.munzner_gradient_constant.has_value());
        CHECK(*rep.munzner_gradient_constant == Scalar::integer(9));
        CHECK(rep.residual_zero);
    }
    SECTION("R^4 cubic is harmonic but not isoparametric") {
        const EigencubicReport rep = check_munzner(lawson_p4());
        CHECK(rep.is_harmonic);
        CHECK_FALSE(rep.munzner_gradient_constant.has_value());
        CHECK_FALSE(rep.residual_lead.empty());
    }
    SECTION("x1^3 in two variables is not harmonic") {
        const Polynomial f = Polynomial::monomial(2, {3, 0}, Scalar::integer(1));
        CHECK_FALSE(check_munzner(f).is_harmonic);
    }
}

TEST_CASE("weight recovery") {
    SECTION("R^5 cubic has weight -54") {
        const EigencubicReport rep = check_radial_eigencubic(cartan_p5());
        REQUIRE(rep.weight.has_value());
        CHECK(*rep.weight == Scalar::integer(-54));
    }
    SECTION("R^4 cubic has weight -8") {
        const EigencubicReport rep = check_radial_eigencubic(lawson_p4());
        REQUIRE(rep.weight.has_value());
        CHECK(*rep.weight == Scalar::integer(-8));
    }
    SECTION("quaternion cubic has weight -2") {
        const EigencubicReport rep = check_radial_eigencubic(quaternion_p12());
        REQUIRE(rep.weight.has_value());
        CHECK(*rep.weight == Scalar::integer(-2));
    }
    SECTION("x1^3 is trivially radial with weight 0: its zero set is a hyperplane") {
        const Polynomial f = Polynomial::monomial(2, {3, 0}, Scalar::integer(1));
        const EigencubicReport rep = check_radial_eigencubic(f);
        REQUIRE(rep.weight.has_value());
        CHECK(*rep.weight == Scalar::integer(0));
    }
    SECTION("x1^2 x2 admits no weight") {
        // L(x1^2 x2) = -6 x1^4 x2, not proportional to |x|^2 x1^2 x2
        const Polynomial f = Polynomial::monomial(2, {2, 1}, Scalar::integer(1));
        CHECK(mean_curvature_op(f) ==
              Polynomial::monomial(2, {4, 1}, Scalar::integer(-6)));
        const EigencubicReport rep = check_radial_eigencubic(f);
        CHECK_FALSE(rep.weight.has_value());
        CHECK_FALSE(rep.residual_zero);
    }
    SECTION("zero polynomial is rejected") {
        CHECK_THROWS_AS(check_radial_eigencubic(Polynomial::zero(3)), std::invalid_argument);
    }
}

TEST_CASE("a tampered coefficient breaks every identity") {
    Polynomial p = cartan_p5();
    p.add_term({1, 0, 2, 0, 0}, Scalar::rational(1, 100));
    const EigencubicReport mz = check_munzner(p);
    CHECK_FALSE(mz.munzner_gradient_constant.has_value());
    const EigencubicReport rad = check_radial_eigencubic(p);
    CHECK_FALSE(rad.weight.has_value());
    CHECK_FALSE(rad.residual_lead.empty());
}

TEST_CASE("operator commutes with variable permutations") {
    const Polynomial p = cartan_p5();
    const std::vector<int> perm = {3, 0, 4, 2, 1};
    CHECK(mean_curvature_op(p.permute_variables(perm)) ==
          mean_curvature_op(p).permute_variables(perm));
}

TEST_CASE("Munzner constant 9 with harmonicity forces weight -54 in R^5") {
    // grad f . grad |grad f|^2 / 2 = 54 |x|^2 f links the two identities
    const Polynomial p = cartan_p5();
    const EigencubicReport mz = check_munzner(p);
    REQUIRE(mz.is_harmonic);
    REQUIRE(mz.munzner_gradient_constant.has_value());
    REQUIRE(*mz.munzner_gradient_constant == Scalar::integer(9));
    const EigencubicReport rad = check_radial_eigencubic(p);
    REQUIRE(rad.weight.has_value());
    CHECK(*rad.weight == Scalar::integer(-54));
}

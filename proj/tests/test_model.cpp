#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pam/model.hpp"
#include "pam/rng.hpp"

using namespace pam;

TEST_CASE("tau from (m, delta)") {
    CHECK(derive_tau(ModelParams(2, 0.0)) == doctest::Approx(3.0));
    CHECK(derive_tau(ModelParams(2, -1.0)) == doctest::Approx(2.5));
    CHECK(derive_tau(ModelParams(3, 1.5)) == doctest::Approx(3.5));
}

TEST_CASE("chi from (m, delta)") {
    CHECK(derive_chi(ModelParams(2, 0.0)) == doctest::Approx(0.5));
    CHECK(derive_chi(ModelParams(2, -1.0)) == doctest::Approx(1.0 / 3.0));
    CHECK(derive_chi(ModelParams(1, 2.0)) == doctest::Approx(0.75));
}

TEST_CASE("chi equals (tau-2)/(tau-1) and regime equivalences") {
    for (int m : {1, 2, 3, 7}) {
        for (double d : {-0.9 * m, -1.0, 0.0, 0.5, 3.0}) {
            if (!(d > -m)) continue;
            ModelParams p(m, d);
            const double tau = p.tau(), chi = p.chi();
            CHECK(std::abs(chi - (tau - 2) / (tau - 1)) < 1e-12);
            CHECK(chi > 0.0);
            CHECK(chi < 1.0);
            CHECK(((tau > 3) == (d > 0)));
            CHECK(((tau > 3) == (chi > 0.5)));
        }
    }
}

TEST_CASE("invalid parameters are hard errors") {
    CHECK_THROWS_AS(ModelParams(0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(2, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(2, -2.5), std::invalid_argument);
}

TEST_CASE("rng streams are reproducible and distinct") {
    Rng a({42, 7}), b({42, 7}), c({42, 8});
    bool allEqual = true, anyDiff = false;
    for (int i = 0; i < 1000; ++i) {
        auto x = a.next(), y = b.next(), z = c.next();
        allEqual = allEqual && (x == y);
        anyDiff = anyDiff || (x != z);
    }
    CHECK(allEqual);
    CHECK(anyDiff);
}

TEST_CASE("uniform, beta and gamma samplers hit their moments") {
    Rng rng({123, 0});
    const int n = 200000;
    double su = 0, sb = 0, sg = 0;
    for (int i = 0; i < n; ++i) {
        su += rng.uniform01();
        sb += rng.beta(2.0, 3.0);
        sg += rng.gamma(0.5);
    }
    // 5-sigma bands on the means
    CHECK(std::abs(su / n - 0.5) < 5 * std::sqrt(1.0 / 12 / n));
    CHECK(std::abs(sb / n - 0.4) < 5 * std::sqrt(0.04 / n));  // var = 6/150
    CHECK(std::abs(sg / n - 0.5) < 5 * std::sqrt(0.5 / n));
}

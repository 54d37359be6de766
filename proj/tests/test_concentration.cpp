#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pam/concentration.hpp"

using namespace pam;

namespace {
const EdgeList kTriangle{{2, 1}, {3, 1}, {3, 2}};

ModelParams params_for_tau(int m, double tau) { return ModelParams(m, m * (tau - 3.0)); }
}

TEST_CASE("triangle is conditionally concentrated for 2 < tau < 3") {
    for (double tau : {2.25, 2.5, 2.75}) {
        auto v = classify(OrderedSubgraph(3, kTriangle), params_for_tau(2, tau));
        CHECK(v.applicable);
        CHECK(v.criterion_met);
        CHECK(v.doubled_exponent == doctest::Approx(2 * (3 - tau) / (tau - 1)));
        CHECK(v.doubled_log_power == 2);
        // the one-edge-share merge hits the doubled exponent but loses two logs
        bool sawEqualExponent = false;
        for (auto& row : v.merged) {
            CHECK_FALSE(row.violates);
            if (std::abs(row.exponent - v.doubled_exponent) < 1e-9) {
                sawEqualExponent = true;
                CHECK(row.log_power < v.doubled_log_power);
            }
        }
        CHECK(sawEqualExponent);
    }
}

TEST_CASE("wedge with two in-edges fails the criterion") {
    // center receives twice and forwards once; its doubled copies can share
    // the hub and beat o(E[N]^2)
    OrderedSubgraph wedge(4, {{3, 2}, {4, 2}, {2, 1}});
    for (double tau : {2.25, 2.75}) {
        auto v = classify(wedge, params_for_tau(2, tau));
        CHECK(v.applicable);
        CHECK_FALSE(v.criterion_met);
        // the violating merge scales as t^{4/(tau-1)} = E[N]^2 exactly
        bool found = false;
        for (auto& row : v.merged)
            if (row.violates && std::abs(row.exponent - 4 / (tau - 1)) < 1e-9 &&
                row.exponent_sym == "4/(tau-1)")
                found = true;
        CHECK(found);
    }
}

TEST_CASE("single edge: diverging count, criterion met") {
    auto v = classify(OrderedSubgraph(2, {{2, 1}}), ModelParams(2, -1.0));
    CHECK(v.applicable); // E[N_t] = m(t-1) -> infinity
    CHECK(v.criterion_met);
    REQUIRE(v.merged.size() == 1);
    const double chi = ModelParams(2, -1.0).chi();
    CHECK(v.merged[0].exponent == doctest::Approx(1 - 2 * chi));
}

TEST_CASE("out-star: no attainable merges at m=2, criterion met") {
    auto v = classify(OrderedSubgraph(3, {{3, 1}, {3, 2}}), ModelParams(2, -1.0));
    CHECK(v.applicable);
    CHECK(v.criterion_met);
    CHECK(v.merged.empty()); // every union needs out-degree 3 or an unattainable order
}

TEST_CASE("bounded expectation makes the criterion inapplicable") {
    // K4 at tau = 2.8: exponent 0, log_power 0
    OrderedSubgraph k4(4, {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}});
    auto v = classify(k4, params_for_tau(3, 2.8));
    CHECK_FALSE(v.applicable);
}

TEST_CASE("variance experiment: deterministic single edge") {
    auto rows = variance_experiment(ModelParams(2, 0.0), OrderedSubgraph(2, {{2, 1}}),
                                    {50}, 6, {4, 0});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].mean == doctest::Approx(98.0));
    CHECK(rows[0].variance == doctest::Approx(0.0));
    CHECK(rows[0].ratio == doctest::Approx(0.0));
    for (double n : rows[0].normalized) CHECK(n == doctest::Approx(1.0));
}

TEST_CASE("variance ratio: wedge out-star shrinks, triangle does not") {
    ModelParams p(2, -1.0);
    auto star = variance_experiment(p, OrderedSubgraph(3, {{3, 1}, {3, 2}}),
                                    {200, 3200}, 40, {8, 0});
    CHECK(star[1].ratio < star[0].ratio); // concentrated class
    auto tri = variance_experiment(p, OrderedSubgraph(3, kTriangle), {200, 3200}, 40, {9, 0});
    CHECK(tri[1].ratio > 0.25 * tri[0].ratio); // random limit: no collapse
}

#include <apfree/estimate.hpp>
#include <apfree/construct.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace apfree;

TEST_CASE("box counts use half-open anchored boxes, exactly") {
    auto q = PointSet::from_points(1, {{Rat(0)}, {Rat(1, 2)}, {Rat(1)}, {Rat(3, 2)}});
    CHECK(box_count(q, Rat(1)) == 2);        // [0,1) holds 0, 1/2; [1,2) holds 1, 3/2
    CHECK(box_count(q, Rat(1, 2)) == 4);     // boundaries fall into the upper box
    CHECK(box_count(q, Rat(2)) == 1);
    auto neg = PointSet::from_points(1, {{Rat(-1, 4)}, {Rat(1, 4)}});
    CHECK(box_count(neg, Rat(1, 2)) == 2);   // floor(-1/2) = -1 vs floor(1/2) = 0
    auto q2 = PointSet::from_points(2, {{Rat(0), Rat(0)}, {Rat(0), Rat(3, 4)}, {Rat(3, 4), Rat(0)}});
    CHECK(box_count(q2, Rat(1, 2)) == 3);
    CHECK_THROWS_AS(box_count(q, Rat(0)), ParameterError);
}

TEST_CASE("box dimension of the middle-thirds prefractal") {
    auto sys = build_ifs(GridSet::from_1d(3, {0, 2}), Rat(1), 3, Rat(1, 10));
    auto pre = prefractal(sys, 8);  // 256 points spanning [0, 3)
    REQUIRE(pre.size() == 256);
    std::vector<Rat> sides;
    long long p = 1;
    for (int j = 1; j <= 6; ++j) {
        p *= 3;
        sides.push_back(Rat(3, p));
    }
    auto fit = box_dim_fit(pre, sides);
    CHECK(fit.dimension == Catch::Approx(std::log(2.0) / std::log(3.0)).margin(0.02));
    CHECK(fit.reliable);  // 3^5 span between coarsest and finest
    CHECK(fit.residual < 0.05);
    CHECK(fit.samples.size() == 6);
}

TEST_CASE("box dimension validates its scale ladder") {
    auto q = PointSet::from_points(1, {{Rat(0)}, {Rat(1)}});
    CHECK_THROWS_AS(box_dim_fit(q, {Rat(1), Rat(1, 2)}), ParameterError);           // too few
    CHECK_THROWS_AS(box_dim_fit(q, {Rat(1), Rat(1), Rat(1, 2)}), ParameterError);   // not decreasing
    auto fit = box_dim_fit(q, {Rat(1), Rat(1, 2), Rat(1, 4)});
    CHECK_FALSE(fit.reliable);  // span 4 < 100
}

TEST_CASE("covering profiles are exact in one dimension") {
    auto q = PointSet::from_points(1, {{Rat(0)}, {Rat(1, 100)}, {Rat(1)}, {Rat(2)}});
    CoveringQuery query{{Rat(0)}, Rat(3), Rat(1, 10)};
    auto prof = covering_profile(q, {query});
    REQUIRE(prof.samples.size() == 1);
    const auto& s = prof.samples[0];
    CHECK(s.restricted == 4);
    CHECK(s.covering == 3);  // {0, 1/100} fit one interval of length 1/5
    CHECK(s.exact);
    CHECK(prof.exact);
    CHECK(s.local_dim == Catch::Approx(std::log(3.0) / std::log(30.0)).epsilon(1e-12));

    // restriction ball is closed: a point at distance exactly R counts
    CoveringQuery edge{{Rat(0)}, Rat(2), Rat(1, 2)};
    auto prof2 = covering_profile(q, {edge});
    CHECK(prof2.samples[0].restricted == 4);
}

TEST_CASE("planar covering counts are flagged as upper bounds") {
    std::vector<RatVec> pts;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) pts.push_back({Rat(a), Rat(b)});
    auto q = PointSet::from_points(2, pts);
    CoveringQuery query{{Rat(0), Rat(0)}, Rat(10), Rat(1, 2)};
    auto prof = covering_profile(q, {query});
    CHECK(prof.samples[0].restricted == 16);
    CHECK_FALSE(prof.samples[0].exact);
    CHECK_FALSE(prof.exact);
    CHECK(prof.samples[0].covering >= 16);  // grid points 1 apart never share an r=1/2 ball
}

TEST_CASE("covering profile validation") {
    auto q = PointSet::from_points(1, {{Rat(0)}});
    CHECK_THROWS_AS(covering_profile(q, {}), ParameterError);
    CHECK_THROWS_AS(covering_profile(q, {CoveringQuery{{Rat(0)}, Rat(1), Rat(2)}}),
                    ParameterError);
    CHECK_THROWS_AS(covering_profile(q, {CoveringQuery{{Rat(0), Rat(0)}, Rat(2), Rat(1)}}),
                    ParameterError);
}

TEST_CASE("prefix exponent of integer sets") {
    std::vector<Int> all{1, 2, 3, 4, 5, 6, 7, 8};
    auto full = zeta_prefix_dim(all, Int(8));
    CHECK(full.count == 8);
    CHECK(full.value == Catch::Approx(1.0).epsilon(1e-12));

    std::vector<Int> sparse{0, 1, 14, 15, 196};
    auto pd = zeta_prefix_dim(sparse, Int(196));
    CHECK(pd.count == 4);  // zero is excluded from [1, N]
    CHECK(pd.value == Catch::Approx(std::log(4.0) / std::log(196.0)).epsilon(1e-12));

    auto none = zeta_prefix_dim({Int(500)}, Int(100));
    CHECK(none.empty);
    CHECK(none.value == 0.0);
    CHECK_THROWS_AS(zeta_prefix_dim(all, Int(1)), ParameterError);
}

TEST_CASE("tower prefix exponent approaches the formula value") {
    auto sys = build_discrete({0, 1}, 3, 6, 3, 6);
    Int horizon = 1;
    for (int i = 0; i < 6; ++i) horizon *= sys.xi;
    auto pd = zeta_prefix_dim(sys.levels[6], horizon);
    CHECK(pd.count == 63);  // 2^6 members minus the zero
    double formula = zeta_lower_formula(2, 3, 6);
    CHECK(std::fabs(pd.value - formula) < 0.05);
}

#include "doctest.h"

#include "shb/errors.hpp"
#include "shb/symplectic.hpp"
#include "support/gen.hpp"

using namespace shb;

namespace {

PiRational P(const char* s) { return PiRational::parse(s); }

HomSpace deg(int d) {
    HomSpace h;
    h.add(d, 1);
    return h;
}

// Random rational action in (0, bins * pi * area), at least 2e-6 bins away from every multiple.
PiRational random_action(gen::Rng& rng, const Q& area, int bins) {
    for (;;) {
        const long long den = 1000;
        Q frac(gen::uniform(rng, 1, bins * den - 1), den);
        PiRational t = gen::coin(rng) ? PiRational::pi_times(frac * area)
                                      : PiRational::rational(Q(gen::uniform(rng, 1, 1000 * bins * 3), 1000) * area);
        auto [lo, hi] = t.bins(area);
        if (hi * 2 >= Q(bins) * 2) continue;
        Q dist = lo - Q(floor_of(lo));
        Q up = Q(floor_of(lo) + 1) - hi;
        if (dist > Q(2, 1000000) && up > Q(2, 1000000)) return t;
    }
}

} // namespace

TEST_CASE("pi rationals") {
    CHECK(P("3pi") == PiRational(3, 0));
    CHECK(P("-pi") == PiRational(-1, 0));
    CHECK(P("3/2pi+1/3") == PiRational(Q(3, 2), Q(1, 3)));
    CHECK(P("pi-1") == PiRational(1, -1));
    CHECK(P("0.5") == PiRational(0, Q(1, 2)));
    CHECK(P("2pi+1/3").str() == "2pi+1/3");
    CHECK(P("pi") > P("3.14159"));
    CHECK(P("pi") < P("3.1416"));
    CHECK(P("2pi") == P("2pi"));
    CHECK(P("4") > P("pi"));
    CHECK(pi_floor(P("4"), 1) == 1);
    CHECK(pi_floor(P("2pi"), 1) == 2);
    CHECK(pi_floor(P("pi"), 2) == 0);
    CHECK(pi_lower() < pi_upper());
    // A rational inside the enclosure cannot be ordered against pi.
    PiRational tight = PiRational::rational((pi_lower() + pi_upper()) / 2);
    CHECK_THROWS_AS((void)(tight < P("pi")), IndeterminateComparison);
    CHECK_THROWS_AS(P("3xpi"), std::invalid_argument);
}

TEST_CASE("ball and ellipsoid stalks") {
    CHECK(ball_stalk(1, 1, P("1")) == deg(1));
    CHECK(ball_stalk(2, 1, P("4")) == deg(6));
    CHECK(ball_stalk(1, 1, P("0")) == deg(1));
    CHECK(ball_stalk(1, 1, P("pi")) == deg(3));
    CHECK_THROWS_AS(ball_stalk(1, 1, P("-1")), ValidationError);
    CHECK(ellipsoid_stalk(2, 1, 3, P("4")) == deg(4));
    CHECK(ellipsoid_stalk(2, 1, 3, P("0.1")) == deg(2));
    CHECK_THROWS_AS(ellipsoid_stalk(1, 1, 3, P("1")), ValidationError);
    CHECK_THROWS_AS(ellipsoid_stalk(2, 3, 1, P("1")), ValidationError);
    for (const char* t : {"0", "1", "4", "7pi", "10"})
        for (int n = 2; n <= 3; ++n) CHECK(ellipsoid_stalk(n, Q(3, 2), Q(3, 2), P(t)) == ball_stalk(n, Q(3, 2), P(t)));
    // Scaled ball behaves as a ball of area c r^2.
    DomainSpec sb{ScaledBall{Q(1, 4), Ball{2, 2}}};
    CHECK(domain_stalk(sb, P("4")) == ball_stalk(2, 1, P("4")));
}

TEST_CASE("eigenvalue counts") {
    CHECK(eigen_count(P("1"), 1, 16) == 1);
    CHECK(eigen_count(P("4"), 1, 32) == 3);
    for (int M : {8, 16, 32, 64}) {
        CHECK(eigen_count(P("1"), 1, M) == 1);
        CHECK(eigen_count(P("4"), 1, M) == 3);
        CHECK(eigen_count(P("7"), 1, M) == 5);
    }
    CHECK_THROWS_AS(eigen_count(P("pi"), 1, 16), NearSpectralValue);
    CHECK_THROWS_AS(eigen_count(P("2pi+1/10000000"), 1, 16), NearSpectralValue);
    CHECK_THROWS_AS(eigen_count(P("0"), 1, 16), ValidationError);
    CHECK_THROWS_AS(eigen_count(P("13"), 1, 8), DomainError);
}

TEST_CASE("ball stalks agree with the eigenvalue oracle") {
    gen::Rng rng(21);
    for (int n = 1; n <= 3; ++n)
        for (Q r : {Q(1, 2), Q(1), Q(2)})
            for (int it = 0; it < 100; ++it) {
                auto t = random_action(rng, r * r, 4);
                const int d = ball_stalk(n, r, t).dims().begin()->first;
                for (int M : {8, 16, 32, 64}) CHECK(d == n * eigen_count(t, r, M));
            }
}

TEST_CASE("ellipsoid stalks agree with the eigenvalue oracle") {
    gen::Rng rng(22);
    for (int n = 2; n <= 3; ++n)
        for (auto [r, R] : {std::pair{Q(1), Q(3, 2)}, std::pair{Q(1, 2), Q(2)}})
            for (int it = 0; it < 40; ++it) {
                auto t = random_action(rng, r * r, 6);
                auto [lo, hi] = t.bins(R * R);
                Q frac = lo - Q(floor_of(lo));
                if (frac < Q(2, 1000000) || Q(floor_of(lo) + 1) - hi < Q(2, 1000000)) continue;
                const int d = ellipsoid_stalk(n, r, R, t).dims().begin()->first;
                CHECK(d == eigen_count(t, r, 64) + (n - 1) * eigen_count(t, R, 64));
            }
}

TEST_CASE("domain barcodes") {
    auto b = domain_barcode({Ball{1, 1}}, P("3pi"));
    REQUIRE(b.bars.size() == 3);
    CHECK(b.bars[0] == PiBar{P("0"), P("pi"), 1});
    CHECK(b.bars[1] == PiBar{P("pi"), P("2pi"), 3});
    CHECK(b.bars[2] == PiBar{P("2pi"), P("3pi"), 5});
    CHECK(domain_barcode({Ball{2, 1}}, P("1")).bars.front().degree == 2);

    auto spec = domain_spec({Ellipsoid{2, 1, 10}}, P("20pi"));
    REQUIRE(spec.size() == 20);
    for (std::size_t k = 0; k < spec.size(); ++k) CHECK(spec[k] == PiRational::pi_times(Q(static_cast<long long>(k))));
    CHECK(domain_spec({Ball{3, Q(1, 2)}}, P("1")).size() == 2);

    gen::Rng rng(23);
    for (const DomainSpec& d : {DomainSpec{Ball{2, 1}}, DomainSpec{Ellipsoid{2, 1, Q(3, 2)}},
                                DomainSpec{Ellipsoid{3, Q(1, 2), 1}}, DomainSpec{ScaledBall{Q(1, 2), Ball{1, 1}}}}) {
        auto bc = domain_barcode(d, P("6pi"));
        for (int it = 0; it < 60; ++it) {
            auto t = PiRational::pi_times(Q(gen::uniform(rng, 0, 5999), 1000));
            CHECK(stalk(bc, t) == domain_stalk(d, t));
        }
        for (std::size_t i = 0; i + 1 < bc.bars.size(); ++i) {
            CHECK(bc.bars[i].hi == bc.bars[i + 1].lo);
            CHECK(bc.bars[i].degree != bc.bars[i + 1].degree);
        }
    }
}

TEST_CASE("sheaf invariant and transfer maps") {
    CHECK(sheaf_invariant({Ball{1, 1}}, P("4")) == deg(2));
    CHECK(sheaf_invariant({Ellipsoid{2, 1, 10}}, P("4")) == deg(2));
    for (int n = 1; n <= 3; ++n) CHECK(sheaf_invariant({Ball{n, 2}}, P("1")) == deg(0));

    CHECK(transfer_is_iso({Ball{1, 1}}, P("3.2"), P("4.5")));
    CHECK_FALSE(transfer_is_iso({Ball{1, 1}}, P("3"), P("3.2")));
    CHECK(transfer_is_iso({Ball{1, 1}}, P("5"), P("5")));
    CHECK_THROWS_AS(transfer_is_iso({Ball{1, 1}}, P("5"), P("4")), ValidationError);

    for (int n = 1; n <= 3; ++n)
        for (Q r : {Q(1, 2), Q(1), Q(3, 2)}) {
            const DomainSpec d{Ball{n, r}};
            const Q a = r * r;
            std::vector<std::pair<PiRational, int>> samples;
            for (int m = 0; m <= 5; ++m)
                for (int j = 0; j < 4; ++j) samples.push_back({PiRational::pi_times((Q(m) + Q(j, 4)) * a), m});
            for (const auto& [t, m] : samples) CHECK(sheaf_invariant(d, t) == deg(2 * m * n));
            for (const auto& [t1, m1] : samples)
                for (const auto& [t2, m2] : samples) {
                    if (t2 < t1) continue;
                    const bool same = sheaf_invariant(d, t1) == sheaf_invariant(d, t2) && m1 == m2;
                    CHECK(transfer_is_iso(d, t1, t2) == same);
                }
        }
}

TEST_CASE("inclusion cones") {
    CHECK(inclusion_cone_rank(1, Q(1, 2), P("2"), 1, 32) == deg(2));
    CHECK(inclusion_cone_rank(1, 1, P("2"), 3, 32).total() == 0);
    CHECK(inclusion_cone_rank(2, Q(1, 2), P("1"), 2, 32).total() == 0);
    CHECK_THROWS_AS(inclusion_cone_rank(1, Q(1, 2), P("2pi"), 1, 32), NearSpectralValue);
    // Agrees with the difference of ball stalk degrees.
    for (int n = 1; n <= 3; ++n)
        for (const char* t : {"1", "2", "5", "9"}) {
            const int d1 = ball_stalk(n, 1, P(t)).dims().begin()->first;
            const int dc = domain_stalk({ScaledBall{Q(1, 3), Ball{n, 1}}}, P(t)).dims().begin()->first;
            auto h = inclusion_cone_rank(1, Q(1, 3), P(t), n, 64);
            if (dc == d1) CHECK(h.total() == 0);
            else CHECK(h == deg(dc - d1));
        }
}

TEST_CASE("non-squeezing") {
    auto v = nonsqueeze_check(2, Q(6, 5), 1, 10);
    CHECK(v.obstructed);
    REQUIRE(v.t.has_value());
    CHECK(*v.t > P("pi"));
    CHECK(*v.t < P("1.44pi"));
    CHECK(v.ball_invariant == deg(0));
    CHECK(v.ellipsoid_invariant == deg(2));
    CHECK(v.cone.total() == 0);
    CHECK_FALSE(nonsqueeze_check(2, 1, 1, 10).obstructed);
    CHECK_FALSE(nonsqueeze_check(2, Q(1, 2), 1, 10).obstructed);
    CHECK_THROWS_AS(nonsqueeze_check(2, 1, 1, 1), ValidationError);
    CHECK_THROWS_AS(nonsqueeze_check(1, 2, 1, 10), ValidationError);

    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const Q r1 = Q(1, 2) + Q(i, 6), r2 = Q(1, 2) + Q(j, 6);
            auto w = nonsqueeze_check(2, r1, r2, 10);
            CHECK(w.obstructed == (r1 > r2));
            if (w.obstructed) {
                CHECK(w.ball_invariant == deg(0));
                CHECK(w.ellipsoid_invariant == deg(2));
            }
        }
    // Larger dimension and a very thin cylinder.
    CHECK(nonsqueeze_check(3, 2, Q(1, 2), 10).obstructed);
}

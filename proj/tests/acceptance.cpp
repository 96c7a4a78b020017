// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
#include "shb/metrics.hpp"
#include "shb/morse.hpp"
#include "shb/symplectic.hpp"
#include "shb/tamarkin.hpp"
#include "support/betti_oracle.hpp"
#include "support/gen.hpp"
#include "support/quiver_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

using namespace shb;

namespace {

struct Tally {
    long checks = 0, failures = 0;
    std::string first;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first = what;
    }
};

GradedBarcode one(const Interval& iv, int d = 0) {
    GradedBarcode b;
    b.add(iv, d);
    return b;
}

VertexFunction random_values(gen::Rng& rng, std::size_t n, long long range, long long den) {
    VertexFunction f(n);
    for (auto& v : f) v = gen::rational(rng, -range, range, den);
    return f;
}

// Criterion 1
void rhom_tables(Tally& t) {
    gen::Rng rng(101);
    for (int k = 0; k < 500; ++k) {
        auto x = one(gen::tamarkin_interval(rng, -10, 10, 20), static_cast<int>(gen::uniform(rng, -1, 1)));
        auto y = one(gen::left_closed_interval(rng, -10, 10, 20), static_cast<int>(gen::uniform(rng, -1, 1)));
        t.expect(rhom_total(x, y) == oracle::global_rhom(x, y), "rhom_total " + x.bars[0].interval.str() + " " + y.bars[0].interval.str());
        if (!y.is_tamarkin()) continue;
        auto s = rhom_sheaf(x, y);
        auto crit = spec(x);
        for (const Q& q : spec(y)) crit.push_back(q);
        for (const Q& p : gen::probe_points(crit))
            t.expect(stalk(s, p) == oracle::local_rhom(x, y, p), "rhom_sheaf at " + to_string(p));
    }
}

// Criterion 2
void convolution(Tally& t) {
    auto ab = convolve(one(Interval::co(0, 1)), one(Interval::co(0, 2)));
    GradedBarcode expect;
    expect.add(Interval::co(0, 1), 0).add(Interval::co(2, 3), 1);
    t.expect(ab == expect, "two-bar convolution anchor");
    gen::Rng rng(102);
    for (int k = 0; k < 200; ++k) {
        auto x = one(gen::tamarkin_interval(rng, -10, 10, 20), static_cast<int>(gen::uniform(rng, -1, 1)));
        auto y = one(gen::tamarkin_interval(rng, -10, 10, 20), static_cast<int>(gen::uniform(rng, -1, 1)));
        auto out = convolve(x, y);
        t.expect(convolve(x, one(Interval::point(0))) == x, "unit");
        t.expect(convolve(x, one(Interval::co(0, ExtQ::pos_inf()))) == x, "ray absorbs Tamarkin sheaves");
        std::vector<Q> cand;
        for (const Q& a : spec(x))
            for (const Q& b : spec(y)) cand.push_back(a + b);
        auto pts = gen::probe_points(cand);
        while (pts.size() < 50) pts.push_back(gen::rational(rng, -25, 45, 7));
        for (std::size_t i = 0; i < 50; ++i)
            t.expect(stalk(out, pts[i]) == stalk_oracle(OracleKind::Proper, x, y, pts[i]), "stalk at " + to_string(pts[i]));
        auto ev = gen::events(cand, [&](const Q& p) { return stalk_oracle(OracleKind::Proper, x, y, p); });
        t.expect(ev == spec(out), "event set");
    }
}

// Criterion 3
void adjunction(Tally& t) {
    gen::Rng rng(103);
    for (int k = 0; k < 100; ++k) {
        auto f = gen::tamarkin_barcode(rng, 3, -6, 6, 8);
        auto g = gen::tamarkin_barcode(rng, 3, -6, 6, 8);
        auto h = gen::tamarkin_barcode(rng, 3, -6, 6, 8);
        t.expect(rhom_total(convolve(f, g), h) == rhom_total(f, hom_star(g, h)), "adjunction");
    }
}

// Criterion 4: smallest brute-force feasible delta among the candidates equals the bottleneck distance.
void isometry(Tally& t) {
    gen::Rng rng(104);
    for (int k = 0; k < 100; ++k) {
        GradedBarcode x, y;
        for (int d = 0; d <= 1; ++d) {
            x.add(shift_deg(gen::tamarkin_barcode(rng, 4, -4, 4, 6, 0), d));
            y.add(shift_deg(gen::tamarkin_barcode(rng, 4, -4, 4, 6, 0), d));
        }
        x = canonicalize(x);
        y = canonicalize(y);
        std::map<std::pair<int, int>, std::uint64_t> per_degree;
        for (int side = 0; side < 2; ++side)
            for (const auto& bar : (side ? y : x).bars) per_degree[{side, bar.degree}] += bar.mult;
        if (std::any_of(per_degree.begin(), per_degree.end(), [](const auto& e) { return e.second > 4; })) {
            --k;
            continue;
        }
        std::set<Q> cand{Q(0)};
        auto ex = x.expanded(), ey = y.expanded();
        for (const auto* v : {&ex, &ey})
            for (const auto& bar : *v)
                if (bar.interval.bounded()) cand.insert(bar.interval.length().value() / 2);
        for (const auto& p : ex)
            for (const auto& q : ey)
                for (int e = 0; e < 2; ++e) {
                    const ExtQ a = e ? p.interval.hi().value : p.interval.lo().value;
                    const ExtQ b = e ? q.interval.hi().value : q.interval.lo().value;
                    if (a.finite() && b.finite()) cand.insert(abs_of(a.value() - b.value()));
                }
        std::optional<Q> brute;
        for (const Q& c : cand)
            if (brute_interleave(x, y, c)) {
                brute = c;
                break;
            }
        const ExtQ d = bottleneck(x, y);
        t.expect(brute ? d == ExtQ(*brute) : !d.finite(), "isometry");
    }
}

// Criterion 5
void capacity_anchors(Tally& t) {
    t.expect(capacity(one(Interval::co(0, 2))) == ExtQ(2), "c(k_[0,2)) = 2");
    FrontRegion eye{{Q(0), Q(1), Q(2), Q(3), Q(4)},
                    {Q(0), Q(1, 2), Q(1), Q(1, 2), Q(0)},
                    {Q(0), Q(1), Q(2), Q(1), Q(0)}};
    auto h = front_hom_star(eye);
    GradedBarcode expect;
    expect.add(Interval::co(0, 3), 1).add(Interval::co(-3, 0), -1);
    t.expect(h == expect, "eye front internal hom");
    t.expect(front_capacity(eye) == 3, "eye capacity");
    t.expect(torsion(h) == ExtQ(3), "eye torsion");
    GradedBarcode graph;
    graph.add(Interval::co(0, ExtQ::pos_inf()), 0).add(Interval::co(1, ExtQ::pos_inf()), 1);
    t.expect(capacity(graph) == ExtQ::pos_inf(), "graph capacity");
}

// Criterion 6
void ball_oracle(Tally& t) {
    gen::Rng rng(106);
    for (int n = 1; n <= 3; ++n)
        for (Q r : {Q(1, 2), Q(1), Q(2)})
            for (int k = 0; k < 100; ++k) {
                const Q area = r * r;
                PiRational tt;
                for (;;) {
                    tt = PiRational::rational(Q(gen::uniform(rng, 1, 3 * 3999), 1000) * area);
                    auto [lo, hi] = tt.bins(area);
                    if (hi >= 4) continue;
                    if (lo - Q(floor_of(lo)) > Q(2, 1000000) && Q(floor_of(lo) + 1) - hi > Q(2, 1000000)) break;
                }
                const int deg = ball_stalk(n, r, tt).dims().begin()->first;
                for (int M : {8, 16, 32, 64}) t.expect(deg == n * eigen_count(tt, r, M), "ball oracle at " + tt.str());
            }
}

// Criterion 7
void sheaf_invariant_sweep(Tally& t) {
    for (int n = 1; n <= 3; ++n)
        for (Q r : {Q(1, 2), Q(1), Q(2)}) {
            const DomainSpec d{Ball{n, r}};
            std::vector<std::pair<PiRational, int>> samples;
            for (int m = 0; m <= 5; ++m)
                for (int j = 0; j < 5; ++j) samples.push_back({PiRational::pi_times((Q(m) + Q(j, 5)) * r * r), m});
            for (const auto& [x, m] : samples) {
                HomSpace want;
                want.add(2 * m * n, 1);
                t.expect(sheaf_invariant(d, x) == want, "S_T at " + x.str());
            }
            for (const auto& [a, ma] : samples)
                for (const auto& [b, mb] : samples) {
                    if (b < a) continue;
                    const bool same = sheaf_invariant(d, a) == sheaf_invariant(d, b) && ma == mb;
                    t.expect(transfer_is_iso(d, a, b) == same, "transfer " + a.str() + " " + b.str());
                }
        }
}

// Criterion 8
void nonsqueezing(Tally& t) {
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const Q r1 = Q(1, 2) + Q(i, 6), r2 = Q(1, 2) + Q(j, 6);
            t.expect(nonsqueeze_check(2, r1, r2, 10).obstructed == (r1 > r2), "grid verdict");
        }
    auto v = nonsqueeze_check(2, Q(6, 5), 1, 10);
    HomSpace d0, d2;
    d0.add(0, 1);
    d2.add(2, 1);
    t.expect(v.obstructed && v.ball_invariant == d0 && v.ellipsoid_invariant == d2, "r1 = 1.2 trace");
    t.expect(v.t && PiRational::pi_times(1) < *v.t && *v.t < PiRational::pi_times(Q(144, 100)), "witness window");
}

// Criterion 9
void two_routes(Tally& t) {
    gen::Rng rng(109);
    auto circle = make_circle(12);
    for (int k = 0; k < 50; ++k) {
        auto h = random_values(rng, 12, 6, 3);
        t.expect(lefschetz_reindex(sheaf_route_barcode(circle, h), 1) == superlevel_barcode(circle, h), "circle routes");
    }
    auto torus = make_torus(3, 3);
    auto h = random_values(rng, 9, 5, 2);
    t.expect(lefschetz_reindex(sheaf_route_barcode(torus, h), 2) == superlevel_barcode(torus, h), "torus routes");
    auto zc = lefschetz_reindex(sheaf_route_barcode(circle, VertexFunction(12, Q(0))), 1);
    auto zt = lefschetz_reindex(sheaf_route_barcode(torus, VertexFunction(9, Q(0))), 2);
    t.expect(zc.total_bars() == 2 && zc == superlevel_barcode(circle, VertexFunction(12, Q(0))), "h = 0 on the circle");
    t.expect(zt.total_bars() == 4 && zt == superlevel_barcode(torus, VertexFunction(9, Q(0))), "h = 0 on the torus");
    for (const auto& bar : zt.bars) t.expect(bar.interval == Interval::co(ExtQ::neg_inf(), 0), "h = 0 bars are (-inf,0)");
}

// Criterion 10
void stability_and_torsion(Tally& t) {
    gen::Rng rng(110);
    for (int k = 0; k < 100; ++k) {
        auto cx = k % 4 == 0 ? make_torus(3, 3) : make_circle(10);
        auto f = random_values(rng, cx.n_vertices, 4, 2);
        auto g = f;
        Q norm(0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] += gen::rational(rng, -1, 1, 4);
            norm = std::max(norm, abs_of(g[i] - f[i]));
        }
        t.expect(interleaving_distance(sublevel_barcode(cx, f), sublevel_barcode(cx, g)) <= ExtQ(norm), "stability");
    }
    for (int k = 0; k < 100; ++k) {
        auto src = gen::tamarkin_barcode(rng, 4, -6, 6, 8);
        auto bars = src.expanded();
        GradedBarcode dst;
        std::vector<std::pair<std::size_t, GradedBar>> targets;
        for (std::size_t i = 0; i < bars.size(); ++i) {
            if (!gen::coin(rng, 0.7)) continue;
            const auto& iv = bars[i].interval;
            const Q a = iv.lo().value.value();
            const Q c = a - gen::uniform(rng, 0, 3);
            const ExtQ d = iv.hi().value.finite()
                               ? ExtQ(Q(a + gen::uniform(rng, 1, 1000) * (iv.hi().value.value() - a) / 1000))
                               : (gen::coin(rng) ? ExtQ::pos_inf() : ExtQ(Q(a + gen::uniform(rng, 1, 5))));
            targets.push_back({i, {Interval::co(c, d), bars[i].degree, 1}});
        }
        for (const auto& x : targets) dst.bars.push_back(x.second);
        auto dexp = dst.expanded();
        std::vector<bool> used(dexp.size(), false);
        MorphismPlan plan;
        for (const auto& [i, bar] : targets)
            for (std::size_t j = 0; j < dexp.size(); ++j)
                if (!used[j] && dexp[j] == bar) {
                    used[j] = true;
                    plan.pairs.emplace_back(i, j);
                    break;
                }
        t.expect(torsion_bound_check(src, dst, plan).holds, "torsion bound");
    }
}

// Criterion 11
void metric_axioms(Tally& t) {
    gen::Rng rng(111);
    for (int k = 0; k < 200; ++k) {
        auto x = gen::tamarkin_barcode(rng, 5, -6, 6, 8);
        auto y = gen::tamarkin_barcode(rng, 5, -6, 6, 8);
        auto z = gen::tamarkin_barcode(rng, 5, -6, 6, 8);
        const ExtQ xy = bottleneck(x, y), yz = bottleneck(y, z), xz = bottleneck(x, z);
        t.expect(xy == bottleneck(y, x), "symmetry");
        if (xy.finite() && yz.finite()) t.expect(xz <= xy + yz, "triangle inequality");
        else t.expect(true, "triangle inequality");
    }
    for (int k = 0; k < 100; ++k) {
        auto x = gen::tamarkin_barcode(rng, 6, -6, 6, 8, 1, 0.0);
        t.expect(torsion(x) == ExtQ(Q(2 * bottleneck(x, GradedBarcode{}).value())), "torsion = 2 d(f, 0)");
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Tally&)> run;
        double budget_s;
    };
    const std::vector<Criterion> all{
        {1, "RHom tables against the quiver oracle", rhom_tables, 1.0},
        {2, "convolution against the fiber oracle and anchors", convolution, 0},
        {3, "convolution / internal hom adjunction", adjunction, 0},
        {4, "bottleneck equals brute-force interleaving", isometry, 0},
        {5, "capacity anchors", capacity_anchors, 0},
        {6, "ball stalks against the eigenvalue oracle", ball_oracle, 10.0},
        {7, "sheaf invariant and transfer isomorphisms", sheaf_invariant_sweep, 0},
        {8, "non-squeezing verdicts", nonsqueezing, 0},
        {9, "superlevel route equals sheaf route", two_routes, 0},
        {10, "stability and torsion-criterion sweeps", stability_and_torsion, 0},
        {11, "metric axioms", metric_axioms, 0},
    };
    int failed = 0;
    for (const auto& c : all) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = t.failures == 0;
        std::string note;
        if (c.budget_s > 0 && secs > c.budget_s) {
            ok = false;
            note = " over time budget";
        }
        if (!ok) {
            ++failed;
            if (t.failures) note += " first failure: " + t.first;
        }
        std::printf("criterion %2d %s  %s (%ld checks, %.2f s)%s\n", c.id, ok ? "PASS" : "FAIL", c.name, t.checks, secs,
                    note.c_str());
    }
    return failed == 0 ? 0 : 1;
}

#include "shb/metrics.hpp"

#include "shb/tamarkin.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace shb {

namespace {

struct Indexed {
    Interval iv;
    std::size_t index; // position in expanded()
};

std::map<int, std::vector<Indexed>> by_degree(const GradedBarcode& b) {
    std::map<int, std::vector<Indexed>> out;
    auto bars = b.expanded();
    for (std::size_t i = 0; i < bars.size(); ++i) out[bars[i].degree].push_back({bars[i].interval, i});
    return out;
}

bool same_shape(const Interval& x, const Interval& y) {
    return x.lo().value.finite() == y.lo().value.finite() && x.hi().value.finite() == y.hi().value.finite();
}

// Largest endpoint displacement between bars of the same shape.
Q displacement(const Interval& x, const Interval& y) {
    Q d = 0;
    if (x.lo().value.finite()) d = std::max(d, abs_of(x.lo().value.value() - y.lo().value.value()));
    if (x.hi().value.finite()) d = std::max(d, abs_of(x.hi().value.value() - y.hi().value.value()));
    return d;
}

bool erasable(const Interval& x, const Q& delta) { return x.length() <= ExtQ(Q(2 * delta)); }

// Kuhn's augmenting-path bipartite matching.
class Bipartite {
public:
    Bipartite(std::size_t left, std::size_t right) : adj_(left), match_right_(right, npos) {}
    void edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

    std::size_t solve() {
        std::size_t size = 0;
        for (std::size_t l = 0; l < adj_.size(); ++l) {
            seen_.assign(match_right_.size(), false);
            if (augment(l)) ++size;
        }
        return size;
    }
    std::size_t partner_of_right(std::size_t r) const { return match_right_[r]; }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    bool augment(std::size_t l) {
        for (std::size_t r : adj_[l]) {
            if (seen_[r]) continue;
            seen_[r] = true;
            if (match_right_[r] == npos || augment(match_right_[r])) {
                match_right_[r] = l;
                return true;
            }
        }
        return false;
    }
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_right_;
    std::vector<bool> seen_;
};

// Perfect matching on {xs, diagonal copies of ys} x {ys, diagonal copies of xs}.
bool match_degree(const std::vector<Indexed>& xs, const std::vector<Indexed>& ys, const Q& delta, Matching* out) {
    const std::size_t n = xs.size(), m = ys.size();
    Bipartite g(n + m, m + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            if (same_shape(xs[i].iv, ys[j].iv) && displacement(xs[i].iv, ys[j].iv) <= delta) g.edge(i, j);
        if (erasable(xs[i].iv, delta)) g.edge(i, m + i);
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (erasable(ys[j].iv, delta)) g.edge(n + j, j);
        for (std::size_t i = 0; i < n; ++i) g.edge(n + j, m + i);
    }
    if (g.solve() != n + m) return false;
    if (out) {
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t l = g.partner_of_right(j);
            if (l < n) out->pairs.emplace_back(xs[l].index, ys[j].index);
            else out->erased_right.push_back(ys[j].index);
        }
        for (std::size_t i = 0; i < n; ++i)
            if (g.partner_of_right(m + i) == i) out->erased_left.push_back(xs[i].index);
    }
    return true;
}

std::vector<Q> candidates(const std::vector<Indexed>& xs, const std::vector<Indexed>& ys) {
    std::set<Q> c{Q(0)};
    for (const auto* side : {&xs, &ys})
        for (const auto& x : *side)
            if (x.iv.bounded()) c.insert(x.iv.length().value() / 2);
    for (const auto& x : xs)
        for (const auto& y : ys) {
            if (x.iv.lo().value.finite() && y.iv.lo().value.finite())
                c.insert(abs_of(x.iv.lo().value.value() - y.iv.lo().value.value()));
            if (x.iv.hi().value.finite() && y.iv.hi().value.finite())
                c.insert(abs_of(x.iv.hi().value.value() - y.iv.hi().value.value()));
        }
    return {c.begin(), c.end()};
}

} // namespace

DeltaMatch delta_matched(const GradedBarcode& b1, const GradedBarcode& b2, const Q& delta) {
    if (delta < 0) throw ValidationError("delta must be non-negative");
    auto d1 = by_degree(b1), d2 = by_degree(b2);
    std::set<int> degrees;
    for (const auto& [d, v] : d1) degrees.insert(d);
    for (const auto& [d, v] : d2) degrees.insert(d);
    Matching m;
    for (int d : degrees)
        if (!match_degree(d1[d], d2[d], delta, &m)) return {false, std::nullopt};
    return {true, m};
}

ExtQ bottleneck(const GradedBarcode& b1, const GradedBarcode& b2) {
    auto d1 = by_degree(b1), d2 = by_degree(b2);
    std::set<int> degrees;
    for (const auto& [d, v] : d1) degrees.insert(d);
    for (const auto& [d, v] : d2) degrees.insert(d);
    Q worst = 0;
    for (int d : degrees) {
        const auto& xs = d1[d];
        const auto& ys = d2[d];
        auto cand = candidates(xs, ys);
        if (!match_degree(xs, ys, cand.back(), nullptr)) return ExtQ::pos_inf();
        std::size_t lo = 0, hi = cand.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (match_degree(xs, ys, cand[mid], nullptr)) hi = mid;
            else lo = mid + 1;
        }
        worst = std::max(worst, cand[lo]);
    }
    return ExtQ(worst);
}

ExtQ interleaving_distance(const GradedBarcode& b1, const GradedBarcode& b2) { return bottleneck(b1, b2); }

bool module_morphism_exists(const Interval& src, const Interval& dst) {
    const ExtQ& a = src.lo().value;
    const ExtQ& b = src.hi().value;
    const ExtQ& c = dst.lo().value;
    const ExtQ& d = dst.hi().value;
    return c <= a && a < d && d <= b;
}

namespace {

Interval shifted_down(const Interval& x, const Q& s) {
    return Interval::co(x.lo().value - ExtQ(s), x.hi().value - ExtQ(s));
}

bool meet3(const Interval& x, const Interval& y, const Interval& z) {
    ExtQ lo = max_of(max_of(x.lo().value, y.lo().value), z.lo().value);
    ExtQ hi = min_of(min_of(x.hi().value, y.hi().value), z.hi().value);
    return lo < hi;
}

// Solvability of a linear system over F_2; each row is (coefficient mask, rhs).
bool solvable(std::vector<std::pair<std::uint32_t, bool>> rows) {
    std::size_t r = 0;
    for (int bit = 0; bit < 32 && r < rows.size(); ++bit) {
        std::uint32_t mask = 1u << bit;
        std::size_t sel = r;
        while (sel < rows.size() && !(rows[sel].first & mask)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && (rows[k].first & mask)) {
                rows[k].first ^= rows[r].first;
                rows[k].second = rows[k].second != rows[r].second;
            }
        ++r;
    }
    for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k].first == 0 && rows[k].second) return false;
    return true;
}

bool interleave_degree(const std::vector<Interval>& v, const std::vector<Interval>& w, const Q& delta) {
    const std::size_t n = v.size(), m = w.size();
    const Q two = 2 * delta;
    // Allowed entries of F: V_i -> W_j[delta], and of G: W_j -> V_i[delta].
    std::vector<std::pair<std::size_t, std::size_t>> fvars, gvars;
    std::vector<std::vector<int>> gindex(n, std::vector<int>(m, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (module_morphism_exists(v[i], shifted_down(w[j], delta))) fvars.emplace_back(j, i);
            if (module_morphism_exists(w[j], shifted_down(v[i], delta))) {
                gindex[i][j] = static_cast<int>(gvars.size());
                gvars.emplace_back(i, j);
            }
        }
    auto phi = [&](const Interval& x) { return x.length() > ExtQ(two); };
    const std::uint64_t total = 1ull << fvars.size();
    for (std::uint64_t fm = 0; fm < total; ++fm) {
        std::vector<std::vector<bool>> F(m, std::vector<bool>(n, false));
        for (std::size_t e = 0; e < fvars.size(); ++e)
            if (fm >> e & 1) F[fvars[e].first][fvars[e].second] = true;
        std::vector<std::pair<std::uint32_t, bool>> rows;
        // G[delta] o F = shift morphism of V.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t mask = 0;
                for (std::size_t j = 0; j < m; ++j)
                    if (gindex[k][j] >= 0 && F[j][i] &&
                        meet3(v[i], shifted_down(w[j], delta), shifted_down(v[k], two)))
                        mask ^= 1u << gindex[k][j];
                rows.emplace_back(mask, k == i && phi(v[i]));
            }
        // F[delta] o G = shift morphism of W.
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t j = 0; j < m; ++j) {
                std::uint32_t mask = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (gindex[i][j] >= 0 && F[l][i] &&
                        meet3(w[j], shifted_down(v[i], delta), shifted_down(w[l], two)))
                        mask ^= 1u << gindex[i][j];
                rows.emplace_back(mask, l == j && phi(w[j]));
            }
        if (solvable(std::move(rows))) return true;
    }
    return false;
}

} // namespace

bool brute_interleave(const GradedBarcode& b1, const GradedBarcode& b2, const Q& delta) {
    if (delta < 0) throw ValidationError("delta must be non-negative");
    for (const auto* b : {&b1, &b2})
        for (const auto& bar : b->bars)
            if (!bar.interval.is_left_closed_type()) throw ValidationError("brute_interleave needs [.,.) bars");
    std::map<int, std::pair<std::vector<Interval>, std::vector<Interval>>> per;
    for (const auto& bar : b1.expanded()) per[bar.degree].first.push_back(bar.interval);
    for (const auto& bar : b2.expanded()) per[bar.degree].second.push_back(bar.interval);
    for (const auto& [d, vw] : per)
        if (vw.first.size() > 4 || vw.second.size() > 4)
            throw InstanceTooLarge("more than 4 bars in degree " + std::to_string(d));
    for (const auto& [d, vw] : per)
        if (!interleave_degree(vw.first, vw.second, delta)) return false;
    return true;
}

GradedBarcode cone_of_morphism(const GradedBarcode& v, const GradedBarcode& w, const MorphismPlan& plan) {
    auto vb = v.expanded(), wb = w.expanded();
    std::vector<bool> vused(vb.size(), false), wused(wb.size(), false);
    GradedBarcode out;
    for (const auto& [i, j] : plan.pairs) {
        if (i >= vb.size() || j >= wb.size()) throw ValidationError("morphism plan index out of range");
        if (vused[i] || wused[j]) throw ValidationError("morphism plan uses a bar twice");
        vused[i] = wused[j] = true;
        const auto& src = vb[i];
        const auto& dst = wb[j];
        if (src.degree != dst.degree || !module_morphism_exists(src.interval, dst.interval))
            throw ValidationError("no morphism " + src.interval.str() + " -> " + dst.interval.str());
        const ExtQ& a = src.interval.lo().value;
        const ExtQ& b = src.interval.hi().value;
        const ExtQ& c = dst.interval.lo().value;
        const ExtQ& d = dst.interval.hi().value;
        if (b > d) out.add(Interval::co(d, b), src.degree);
        if (c < a) out.add(Interval::co(c, a), src.degree + 1);
    }
    for (std::size_t i = 0; i < vb.size(); ++i)
        if (!vused[i]) out.add(vb[i].interval, vb[i].degree);
    for (std::size_t j = 0; j < wb.size(); ++j)
        if (!wused[j]) out.add(wb[j].interval, wb[j].degree + 1);
    return canonicalize(out);
}

TorsionBound torsion_bound_check(const GradedBarcode& v, const GradedBarcode& w, const MorphismPlan& plan) {
    ExtQ bound = torsion(cone_of_morphism(v, w, plan));
    return {bound, interleaving_distance(v, w) <= bound};
}

} // namespace shb

#include "quiver_oracle.hpp"

#include <set>

namespace shb::oracle {

namespace {

struct Arrow {
    std::size_t from, to;
};

// Node samples and arrows for the zigzag built on the sorted critical list.
struct Zigzag {
    std::vector<Q> samples;   // even index: open stratum, odd index: critical point
    std::vector<Arrow> arrows;
};

Zigzag build_zigzag(const std::vector<Q>& crit) {
    Zigzag z;
    const std::size_t k = crit.size();
    for (std::size_t i = 0; i <= k; ++i) {
        if (k == 0) z.samples.push_back(Q(0));
        else if (i == 0) z.samples.push_back(crit.front() - 1);
        else if (i == k) z.samples.push_back(crit.back() + 1);
        else z.samples.push_back((crit[i - 1] + crit[i]) / 2);
        if (i < k) z.samples.push_back(crit[i]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t pt = 2 * i + 1;
        z.arrows.push_back({pt, pt - 1});
        z.arrows.push_back({pt, pt + 1});
    }
    return z;
}

// Representation of the degree-d part: per node, the bars containing its sample.
struct Rep {
    std::vector<std::vector<std::size_t>> basis;
};

Rep build_rep(const std::vector<GradedBar>& bars, int degree, const Zigzag& z) {
    Rep r;
    r.basis.resize(z.samples.size());
    for (std::size_t n = 0; n < z.samples.size(); ++n)
        for (std::size_t b = 0; b < bars.size(); ++b)
            if (bars[b].degree == degree && bars[b].interval.contains(z.samples[n])) r.basis[n].push_back(b);
    return r;
}

// Matrix of the arrow map in the bar bases: identity on bars alive at both ends.
FpMatrix arrow_matrix(const Rep& r, const Arrow& a, std::uint32_t p) {
    const auto& src = r.basis[a.from];
    const auto& dst = r.basis[a.to];
    FpMatrix m(dst.size(), src.size(), p);
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j)
            if (dst[i] == src[j]) m.set(i, j, 1);
    return m;
}

HomExt hom_ext(const Rep& v, const Rep& w, const Zigzag& z, std::uint32_t p) {
    const std::size_t nodes = z.samples.size();
    std::vector<std::size_t> var_off(nodes + 1, 0);
    for (std::size_t n = 0; n < nodes; ++n) var_off[n + 1] = var_off[n] + w.basis[n].size() * v.basis[n].size();
    std::vector<std::size_t> eq_off(z.arrows.size() + 1, 0);
    for (std::size_t e = 0; e < z.arrows.size(); ++e)
        eq_off[e + 1] = eq_off[e] + w.basis[z.arrows[e].to].size() * v.basis[z.arrows[e].from].size();
    const std::size_t nvars = var_off[nodes], neqs = eq_off[z.arrows.size()];
    if (nvars == 0) return {0, neqs};
    FpMatrix delta(neqs, nvars, p);
    for (std::size_t e = 0; e < z.arrows.size(); ++e) {
        const Arrow& a = z.arrows[e];
        FpMatrix va = arrow_matrix(v, a, p), wa = arrow_matrix(w, a, p);
        const std::size_t vx = v.basis[a.from].size(), wx = w.basis[a.from].size(), wy = w.basis[a.to].size(),
                          vy = v.basis[a.to].size();
        // Entry (r,c) of W_a phi_x - phi_y V_a, with r < wy and c < vx.
        for (std::size_t r = 0; r < wy; ++r)
            for (std::size_t c = 0; c < vx; ++c) {
                std::size_t row = eq_off[e] + r * vx + c;
                for (std::size_t k = 0; k < wx; ++k)
                    if (wa(r, k)) delta.set(row, var_off[a.from] + k * vx + c, (delta(row, var_off[a.from] + k * vx + c) + wa(r, k)));
                for (std::size_t k = 0; k < vy; ++k)
                    if (va(k, c)) {
                        std::size_t col = var_off[a.to] + r * vy + k;
                        delta.set(row, col, static_cast<std::int64_t>(delta(row, col)) - va(k, c));
                    }
            }
    }
    std::size_t rk = delta.rank();
    return {nvars - rk, neqs - rk};
}

std::set<int> degrees_of(const GradedBarcode& b) {
    std::set<int> s;
    for (const auto& bar : b.bars) s.insert(bar.degree);
    return s;
}

HomSpace rhom_on(const GradedBarcode& f, const GradedBarcode& g, const Zigzag& z, std::uint32_t p) {
    auto fb = f.expanded(), gb = g.expanded();
    HomSpace h;
    for (int i : degrees_of(f))
        for (int j : degrees_of(g)) {
            HomExt he = hom_ext(build_rep(fb, i, z), build_rep(gb, j, z), z, p);
            h.add(j - i, he.hom);
            h.add(j - i + 1, he.ext);
        }
    return h;
}

} // namespace

HomSpace global_rhom(const GradedBarcode& f, const GradedBarcode& g, std::uint32_t p) {
    std::set<Q> crit;
    for (const auto& q : spec(f)) crit.insert(q);
    for (const auto& q : spec(g)) crit.insert(q);
    return rhom_on(f, g, build_zigzag({crit.begin(), crit.end()}), p);
}

HomSpace local_rhom(const GradedBarcode& f, const GradedBarcode& g, const Q& t, std::uint32_t p) {
    std::set<Q> crit;
    for (const auto& q : spec(f)) crit.insert(q);
    for (const auto& q : spec(g)) crit.insert(q);
    Zigzag z;
    if (crit.count(t)) {
        auto it = crit.find(t);
        Q left = it == crit.begin() ? t - 1 : (*std::prev(it) + t) / 2;
        Q right = std::next(it) == crit.end() ? t + 1 : (*std::next(it) + t) / 2;
        z.samples = {left, t, right};
        z.arrows = {{1, 0}, {1, 2}};
    } else {
        z.samples = {t};
    }
    return rhom_on(f, g, z, p);
}

} // namespace shb::oracle

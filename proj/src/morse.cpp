#include "shb/morse.hpp"

#include "shb/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shb {

namespace {

using Simplex = std::vector<std::size_t>;

std::vector<Simplex> faces_of(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.size() <= 1) return out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != k) f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

std::int64_t face_sign(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

std::uint32_t mod_p(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

void check_prime(std::uint32_t p) {
    if (!is_prime(p)) throw ValidationError("field characteristic must be prime");
}

void check_function(const SimplicialComplex& k, const VertexFunction& f) {
    k.validate();
    if (f.size() != k.n_vertices) throw ValidationError("vertex function must have one value per vertex");
}

// Sparse column over F_p, sorted by row index.
using Column = std::vector<std::pair<std::size_t, std::uint32_t>>;

void axpy(Column& dst, const Column& src, std::uint32_t factor, std::uint32_t p) {
    Column out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.push_back({src[j].first, static_cast<std::uint32_t>((std::uint64_t(factor) * src[j].second) % p)});
            ++j;
        } else {
            std::uint32_t v = static_cast<std::uint32_t>((dst[i].second + std::uint64_t(factor) * src[j].second) % p);
            if (v != 0) out.push_back({dst[i].first, v});
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

} // namespace

SimplicialComplex SimplicialComplex::closure(std::size_t n_vertices, const std::vector<std::vector<std::size_t>>& top) {
    std::set<Simplex> all;
    for (std::size_t v = 0; v < n_vertices; ++v) all.insert({v});
    std::vector<Simplex> stack;
    for (auto s : top) {
        std::sort(s.begin(), s.end());
        stack.push_back(s);
    }
    while (!stack.empty()) {
        Simplex s = stack.back();
        stack.pop_back();
        if (!all.insert(s).second && s.size() > 1) continue;
        for (auto& f : faces_of(s)) stack.push_back(f);
    }
    SimplicialComplex k;
    k.n_vertices = n_vertices;
    k.simplices.assign(all.begin(), all.end());
    std::stable_sort(k.simplices.begin(), k.simplices.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    return k;
}

void SimplicialComplex::validate() const {
    std::set<Simplex> seen;
    for (const auto& s : simplices) {
        if (s.empty() || s.size() > 3) throw ValidationError("simplices must have dimension 0, 1 or 2");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= n_vertices) throw ValidationError("simplex references unknown vertex");
            if (i > 0 && !(s[i - 1] < s[i])) throw ValidationError("simplex vertices must be sorted and distinct");
        }
        if (!seen.insert(s).second) throw ValidationError("duplicate simplex");
    }
    for (std::size_t v = 0; v < n_vertices; ++v)
        if (!seen.count({v})) throw ValidationError("every vertex must appear as a 0-simplex");
    for (const auto& s : simplices)
        for (const auto& f : faces_of(s))
            if (!seen.count(f)) throw ValidationError("complex is not closed under faces");
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

bool SimplicialComplex::is_closed_manifold() const {
    validate();
    const int n = dimension();
    if (n < 0) return false;
    if (n == 0) return true;
    std::map<Simplex, int> cofaces;
    for (const auto& s : simplices)
        if (static_cast<int>(s.size()) == n + 1)
            for (const auto& f : faces_of(s)) ++cofaces[f];
    for (const auto& s : simplices) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d == n - 1 && cofaces[s] != 2) return false;
    }
    // Purity: every simplex lies in a top simplex.
    std::set<Simplex> covered;
    for (const auto& s : simplices)
        if (static_cast<int>(s.size()) == n + 1) {
            covered.insert(s);
            for (const auto& f : faces_of(s)) {
                covered.insert(f);
                for (const auto& g : faces_of(f)) covered.insert(g);
            }
        }
    if (covered.size() != simplices.size()) return false;
    if (n == 2) {
        // The link of each vertex must be a single cycle.
        for (std::size_t v = 0; v < n_vertices; ++v) {
            std::map<std::size_t, std::vector<std::size_t>> adj;
            std::size_t edges = 0;
            for (const auto& s : simplices) {
                if (s.size() != 3 || std::find(s.begin(), s.end(), v) == s.end()) continue;
                std::vector<std::size_t> o;
                for (auto w : s)
                    if (w != v) o.push_back(w);
                adj[o[0]].push_back(o[1]);
                adj[o[1]].push_back(o[0]);
                ++edges;
            }
            if (adj.empty()) return false;
            for (const auto& [w, nb] : adj)
                if (nb.size() != 2) return false;
            std::set<std::size_t> seen{adj.begin()->first};
            std::vector<std::size_t> stack{adj.begin()->first};
            while (!stack.empty()) {
                auto w = stack.back();
                stack.pop_back();
                for (auto u : adj[w])
                    if (seen.insert(u).second) stack.push_back(u);
            }
            if (seen.size() != adj.size() || edges != adj.size()) return false;
        }
    }
    return true;
}

SimplicialComplex make_circle(std::size_t n) {
    if (n < 3) throw ValidationError("a triangulated circle needs at least 3 vertices");
    std::vector<Simplex> top;
    for (std::size_t i = 0; i < n; ++i) top.push_back({i, (i + 1) % n});
    return SimplicialComplex::closure(n, top);
}

SimplicialComplex make_path(std::size_t n) {
    if (n == 0) throw ValidationError("a path needs at least one vertex");
    std::vector<Simplex> top;
    for (std::size_t i = 0; i + 1 < n; ++i) top.push_back({i, i + 1});
    return SimplicialComplex::closure(n, top);
}

SimplicialComplex make_torus(std::size_t rows, std::size_t cols) {
    if (rows < 3 || cols < 3) throw ValidationError("torus grid needs at least 3 x 3 vertices");
    auto id = [&](std::size_t r, std::size_t c) { return (r % rows) * cols + (c % cols); };
    std::vector<Simplex> top;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            top.push_back({id(r, c), id(r + 1, c), id(r + 1, c + 1)});
            top.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
        }
    return SimplicialComplex::closure(rows * cols, top);
}

GradedBarcode sublevel_barcode(const SimplicialComplex& k, const VertexFunction& f, std::uint32_t prime) {
    check_function(k, f);
    check_prime(prime);
    const std::size_t nv = k.n_vertices;
    std::vector<std::size_t> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (f[a] != f[b]) return f[a] < f[b];
        return a < b;
    });
    std::vector<std::size_t> rank(nv);
    for (std::size_t i = 0; i < nv; ++i) rank[order[i]] = i;

    // Filtration key: ranks of the vertices in decreasing order, then dimension.
    struct Entry {
        std::vector<std::size_t> key;
        std::size_t idx;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < k.simplices.size(); ++i) {
        std::vector<std::size_t> key;
        for (auto v : k.simplices[i]) key.push_back(rank[v]);
        std::sort(key.rbegin(), key.rend());
        entries.push_back({key, i});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.key[0] != b.key[0]) return a.key[0] < b.key[0];
        if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
        return a.key < b.key;
    });
    std::map<Simplex, std::size_t> pos;
    for (std::size_t i = 0; i < entries.size(); ++i) pos[k.simplices[entries[i].idx]] = i;
    auto value = [&](std::size_t i) { return f[order[entries[i].key[0]]]; };

    std::vector<Column> cols(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Simplex& s = k.simplices[entries[i].idx];
        auto fs = faces_of(s);
        for (std::size_t j = 0; j < fs.size(); ++j) cols[i].push_back({pos.at(fs[j]), mod_p(face_sign(j), prime)});
        std::sort(cols[i].begin(), cols[i].end());
    }
    std::vector<std::ptrdiff_t> pivot_owner(entries.size(), -1);
    std::vector<bool> paired(entries.size(), false);
    GradedBarcode out;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& c = cols[j];
        while (!c.empty() && pivot_owner[c.back().first] >= 0) {
            const auto& other = cols[static_cast<std::size_t>(pivot_owner[c.back().first])];
            std::uint32_t factor = static_cast<std::uint32_t>(
                (std::uint64_t(prime - c.back().second) * fp_inverse(other.back().second, prime)) % prime);
            axpy(c, other, factor, prime);
        }
        if (!c.empty()) {
            const std::size_t i = c.back().first;
            pivot_owner[i] = static_cast<std::ptrdiff_t>(j);
            paired[i] = paired[j] = true;
            if (value(i) < value(j))
                out.add(Interval::co(ExtQ(value(i)), ExtQ(value(j))),
                        static_cast<int>(k.simplices[entries[i].idx].size()) - 1);
        }
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!paired[i])
            out.add(Interval::co(ExtQ(value(i)), ExtQ::pos_inf()), static_cast<int>(k.simplices[entries[i].idx].size()) - 1);
    return canonicalize(out);
}

GradedBarcode superlevel_barcode(const SimplicialComplex& k, const VertexFunction& h, std::uint32_t prime) {
    VertexFunction neg(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) neg[i] = -h[i];
    GradedBarcode out;
    // A class of {-h <= s} alive on [b, d) lives on {h >= t} for t in (-d, -b]; completed as [-d, -b).
    for (const auto& bar : sublevel_barcode(k, neg, prime).bars)
        out.add(Interval::co(-bar.interval.hi().value, -bar.interval.lo().value), bar.degree, bar.mult);
    return canonicalize(out);
}

namespace {

// Cohomology of (K, L) in one degree with chosen representatives.
struct RelCohomology {
    std::vector<std::size_t> cells;        // q-simplices outside L (indices into the complex)
    std::map<std::size_t, std::size_t> at; // simplex index -> coordinate
    FpMatrix basis;                        // columns: coboundaries first, then representatives
    std::size_t n_boundary = 0;
    std::size_t dim = 0;
};

struct RelData {
    std::vector<std::vector<std::size_t>> by_dim; // simplex indices per dimension
    std::map<Simplex, std::size_t> index;
};

std::vector<std::uint32_t> column(const FpMatrix& m, std::size_t c) {
    std::vector<std::uint32_t> v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    return v;
}

FpMatrix from_columns(std::size_t rows, const std::vector<std::vector<std::uint32_t>>& cs, std::uint32_t p) {
    FpMatrix m(rows, cs.size(), p);
    for (std::size_t c = 0; c < cs.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cs[c][r]);
    return m;
}

// Coboundary from q-cells to (q+1)-cells, both outside L.
FpMatrix coboundary(const SimplicialComplex& k, const RelData& rd, const std::vector<bool>& in_l, int q, std::uint32_t p,
                    const std::map<std::size_t, std::size_t>& src, const std::map<std::size_t, std::size_t>& dst) {
    FpMatrix d(dst.size(), src.size(), p);
    if (q + 1 >= static_cast<int>(rd.by_dim.size())) return d;
    for (auto t : rd.by_dim[static_cast<std::size_t>(q) + 1]) {
        if (in_l[t]) continue;
        auto fs = faces_of(k.simplices[t]);
        for (std::size_t j = 0; j < fs.size(); ++j) {
            auto it = src.find(rd.index.at(fs[j]));
            if (it != src.end()) d.set(dst.at(t), it->second, face_sign(j));
        }
    }
    return d;
}

std::vector<RelCohomology> relative_cohomology(const SimplicialComplex& k, const RelData& rd, const std::vector<bool>& in_l,
                                               std::uint32_t p) {
    const int top = static_cast<int>(rd.by_dim.size()) - 1;
    std::vector<RelCohomology> hs(static_cast<std::size_t>(top) + 1);
    for (int q = 0; q <= top; ++q) {
        auto& h = hs[static_cast<std::size_t>(q)];
        for (auto s : rd.by_dim[static_cast<std::size_t>(q)])
            if (!in_l[s]) {
                h.at[s] = h.cells.size();
                h.cells.push_back(s);
            }
    }
    for (int q = 0; q <= top; ++q) {
        auto& h = hs[static_cast<std::size_t>(q)];
        const std::size_t n = h.cells.size();
        static const std::map<std::size_t, std::size_t> none;
        const auto& up = q < top ? hs[static_cast<std::size_t>(q) + 1].at : none;
        FpMatrix dq = coboundary(k, rd, in_l, q, p, h.at, up);
        std::vector<std::vector<std::uint32_t>> cols;
        if (q > 0) {
            const auto& down = hs[static_cast<std::size_t>(q) - 1];
            FpMatrix dprev = coboundary(k, rd, in_l, q - 1, p, down.at, h.at);
            // Independent columns of the previous coboundary.
            for (std::size_t c = 0; c < dprev.cols(); ++c) {
                auto v = column(dprev, c);
                auto trial = cols;
                trial.push_back(v);
                if (from_columns(n, trial, p).rank() == trial.size()) cols = std::move(trial);
            }
        }
        h.n_boundary = cols.size();
        std::vector<std::vector<std::uint32_t>> cocycles;
        if (dq.rows() == 0) {
            for (std::size_t e = 0; e < n; ++e) {
                cocycles.emplace_back(n, 0);
                cocycles.back()[e] = 1;
            }
        } else {
            cocycles = dq.kernel();
        }
        for (auto& z : cocycles) {
            auto trial = cols;
            trial.push_back(z);
            if (from_columns(n, trial, p).rank() == trial.size()) cols = std::move(trial);
        }
        h.dim = cols.size() - h.n_boundary;
        h.basis = from_columns(n, cols, p);
    }
    return hs;
}

// Matrix of H^q(K, L_big) -> H^q(K, L_small) induced by extending cochains by zero.
FpMatrix restriction_map(const RelCohomology& from, const RelCohomology& to, std::uint32_t p) {
    FpMatrix m(to.dim, from.dim, p);
    for (std::size_t c = 0; c < from.dim; ++c) {
        std::vector<std::uint32_t> v(to.cells.size(), 0);
        for (std::size_t r = 0; r < from.cells.size(); ++r) v[to.at.at(from.cells[r])] = from.basis(r, from.n_boundary + c);
        auto x = to.basis.solve(v);
        if (!x) throw DomainError("relative cocycle failed to extend");
        for (std::size_t r = 0; r < to.dim; ++r) m.set(r, c, (*x)[to.n_boundary + r]);
    }
    return m;
}

} // namespace

StratModel sheaf_route_model(const SimplicialComplex& k, const VertexFunction& h, std::uint32_t prime) {
    check_function(k, h);
    check_prime(prime);
    RelData rd;
    const int top = std::max(k.dimension(), 0);
    rd.by_dim.resize(static_cast<std::size_t>(top) + 1);
    for (std::size_t i = 0; i < k.simplices.size(); ++i) {
        rd.by_dim[k.simplices[i].size() - 1].push_back(i);
        rd.index[k.simplices[i]] = i;
    }
    StratModel m;
    m.prime = prime;
    std::set<Q> crit(h.begin(), h.end());
    m.critical.assign(crit.begin(), crit.end());
    // A simplex lies in {h <= t} when all its vertices do.
    auto sublevel = [&](const Q& t) {
        std::vector<bool> in(k.simplices.size());
        for (std::size_t i = 0; i < k.simplices.size(); ++i)
            in[i] = std::all_of(k.simplices[i].begin(), k.simplices[i].end(), [&](std::size_t v) { return h[v] <= t; });
        return in;
    };
    auto dims = [&](const std::vector<RelCohomology>& hs) {
        HomSpace d;
        for (std::size_t q = 0; q < hs.size(); ++q) d.add(static_cast<int>(q), hs[q].dim);
        return d;
    };
    std::vector<std::vector<RelCohomology>> open;
    for (std::size_t i = 0; i <= m.critical.size(); ++i) {
        open.push_back(relative_cohomology(k, rd, sublevel(m.sample(i)), prime));
        m.open_dims.push_back(dims(open.back()));
    }
    for (const auto& c : m.critical) m.point_dims.push_back(dims(relative_cohomology(k, rd, sublevel(c), prime)));
    for (int q = 0; q <= top; ++q) {
        auto& v = m.maps[q];
        for (std::size_t i = 0; i < m.critical.size(); ++i)
            v.push_back(restriction_map(open[i + 1][static_cast<std::size_t>(q)], open[i][static_cast<std::size_t>(q)], prime));
    }
    return m;
}

GradedBarcode sheaf_route_barcode(const SimplicialComplex& k, const VertexFunction& h, std::uint32_t prime) {
    return decompose(sheaf_route_model(k, h, prime));
}

GradedBarcode lefschetz_reindex(const GradedBarcode& b, int n) {
    GradedBarcode out;
    for (const auto& bar : b.bars) out.add(bar.interval, n - bar.degree, bar.mult);
    return canonicalize(out);
}

Q c0_two_critical_bound(const GradedBarcode& b) {
    Q best(0);
    for (const auto& bar : b.bars)
        if (bar.interval.bounded()) best = std::max(best, bar.interval.length().value());
    return best / 2;
}

void FrontRegion::validate() const {
    if (t_minus.size() != xs.size() || t_plus.size() != xs.size())
        throw ValidationError("front region needs t_minus and t_plus at every sample");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0 && !(xs[i - 1] < xs[i])) throw ValidationError("front samples must increase strictly");
        if (t_minus[i] < 0 || t_plus[i] < 0) throw ValidationError("front heights must be non-negative");
    }
}

GradedBarcode front_hom_star(const FrontRegion& f) {
    f.validate();
    VertexFunction g(f.xs.size());
    bool support = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = f.t_minus[i] + f.t_plus[i];
        support = support || g[i] > 0;
    }
    if (!support) throw ValidationError("front region has empty support");
    GradedBarcode out;
    for (const auto& bar : superlevel_barcode(make_path(g.size()), g).bars) {
        const ExtQ top = bar.interval.hi().value;
        const ExtQ low = max_of(bar.interval.lo().value, ExtQ(Q(0)));
        if (!(low < top)) continue;
        out.add(Interval::co(low, top), 1, bar.mult);
        out.add(Interval::co(-top, -low), -1, bar.mult);
    }
    return canonicalize(out);
}

Q front_capacity(const FrontRegion& f) {
    f.validate();
    Q best(0);
    for (std::size_t i = 0; i < f.xs.size(); ++i) best = std::max(best, Q(f.t_minus[i] + f.t_plus[i]));
    return best;
}

} // namespace shb

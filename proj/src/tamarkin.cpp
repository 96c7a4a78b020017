#include "shb/tamarkin.hpp"

namespace shb {

namespace {

void emit(GradedBarcode& out, const ExtQ& lo, const ExtQ& hi, int degree, std::uint64_t mult) {
    if (lo < hi) out.add(Interval::co(lo, hi), degree, mult);
}

Interval translate(const Interval& iv, const Q& s) {
    return Interval({iv.lo().value + ExtQ(s), iv.lo().closed}, {iv.hi().value + ExtQ(s), iv.hi().closed});
}

// Singletons {s} act as T_s on the other factor.  Returns false when neither factor is one.
bool convolve_singleton(GradedBarcode& out, const GradedBar& x, const GradedBar& y) {
    const GradedBar* pt = x.interval.is_singleton() ? &x : (y.interval.is_singleton() ? &y : nullptr);
    if (!pt) return false;
    const GradedBar& other = pt == &x ? y : x;
    out.add(translate(other.interval, pt->interval.lo().value.value()), x.degree + y.degree, x.mult * y.mult);
    return true;
}

void convolve_pair(GradedBarcode& out, const GradedBar& x, const GradedBar& y) {
    if (convolve_singleton(out, x, y)) return;
    const ExtQ& a = x.interval.lo().value;
    const ExtQ& b = x.interval.hi().value;
    const ExtQ& c = y.interval.lo().value;
    const ExtQ& d = y.interval.hi().value;
    const int deg = x.degree + y.degree;
    const std::uint64_t mult = x.mult * y.mult;
    if (b + c < a + d) {
        emit(out, a + c, b + c, deg, mult);
        emit(out, a + d, b + d, deg + 1, mult);
    } else {
        emit(out, a + c, a + d, deg, mult);
        emit(out, b + c, b + d, deg + 1, mult);
    }
}

void convolve_np_pair(GradedBarcode& out, const GradedBar& x, const GradedBar& y) {
    if (convolve_singleton(out, x, y)) return;
    const bool xl = x.interval.lo().value.is_neg_inf();
    const bool yl = y.interval.lo().value.is_neg_inf();
    if (!xl && !yl) return convolve_pair(out, x, y);
    if (!xl && yl) return convolve_np_pair(out, y, x);
    const ExtQ& b = x.interval.hi().value;
    const ExtQ& c = y.interval.lo().value;
    const ExtQ& d = y.interval.hi().value;
    const int deg = x.degree + y.degree;
    const std::uint64_t mult = x.mult * y.mult;
    if (!yl) {
        // (-inf,b) against [c,d)
        if (d.finite()) emit(out, b + c, b + d, deg + 1, mult);
        else emit(out, ExtQ::neg_inf(), b + c, deg, mult);
        return;
    }
    // (-inf,b) against (-inf,d)
    if (b.finite() && d.finite()) emit(out, ExtQ::neg_inf(), b + d, deg + 1, mult);
    else if (!b.finite() && !d.finite()) emit(out, ExtQ::neg_inf(), ExtQ::pos_inf(), deg, mult);
}

void require_np_type(const GradedBarcode& f, const char* op) {
    for (const auto& bar : f.bars)
        if (!bar.interval.is_left_closed_type() && !bar.interval.is_singleton())
            throw UnsupportedCombination(std::string(op) + " got " + bar.interval.str());
}

void require_tamarkin_or_unit(const GradedBarcode& f, const char* op) {
    for (const auto& bar : f.bars)
        if (!bar.interval.is_tamarkin() && !bar.interval.is_singleton())
            throw NotTamarkinClass(std::string(op) + " got " + bar.interval.str());
}

void require_left_closed(const GradedBarcode& f, const char* op) {
    for (const auto& bar : f.bars)
        if (!bar.interval.is_left_closed_type())
            throw NotTamarkinClass(std::string(op) + " got " + bar.interval.str());
}

} // namespace

GradedBarcode shift_t(const GradedBarcode& f, const Q& c) {
    GradedBarcode out;
    for (const auto& bar : f.bars) out.add(translate(bar.interval, c), bar.degree, bar.mult);
    return canonicalize(out);
}

GradedBarcode shift_deg(const GradedBarcode& f, int k) {
    GradedBarcode out = f;
    for (auto& bar : out.bars) bar.degree += k;
    return canonicalize(out);
}

GradedBarcode convolve(const GradedBarcode& f, const GradedBarcode& g) {
    require_tamarkin_or_unit(f, "convolve");
    require_tamarkin_or_unit(g, "convolve");
    GradedBarcode out;
    for (const auto& x : f.bars)
        for (const auto& y : g.bars) convolve_pair(out, x, y);
    return canonicalize(out);
}

GradedBarcode convolve_np(const GradedBarcode& f, const GradedBarcode& g) {
    require_np_type(f, "convolve_np");
    require_np_type(g, "convolve_np");
    GradedBarcode out;
    for (const auto& x : f.bars)
        for (const auto& y : g.bars) convolve_np_pair(out, x, y);
    return canonicalize(out);
}

GradedBarcode adjoint(const GradedBarcode& f) {
    require_left_closed(f, "adjoint");
    GradedBarcode out;
    for (const auto& bar : f.bars)
        out.add(Interval::co(-bar.interval.hi().value, -bar.interval.lo().value), -bar.degree - 1, bar.mult);
    return canonicalize(out);
}

GradedBarcode hom_star(const GradedBarcode& f, const GradedBarcode& g) {
    require_left_closed(f, "hom_star");
    require_left_closed(g, "hom_star");
    GradedBarcode out;
    for (const auto& x : f.bars)
        for (const auto& y : g.bars) {
            const ExtQ& a = x.interval.lo().value;
            const ExtQ& b = x.interval.hi().value;
            const ExtQ& c = y.interval.lo().value;
            const ExtQ& d = y.interval.hi().value;
            const std::uint64_t mult = x.mult * y.mult;
            const int deg = y.degree - x.degree;
            if (x.interval.bounded() && y.interval.bounded()) {
                emit(out, c - b, min_of(d - b, c - a), deg - 1, mult);
                emit(out, max_of(d - b, c - a), d - a, deg, mult);
            } else {
                GradedBarcode one;
                one.add(x.interval, x.degree, x.mult);
                GradedBarcode two;
                two.add(y.interval, y.degree, y.mult);
                out.add(convolve_np(adjoint(one), two));
            }
        }
    return canonicalize(out);
}

HomSpace rhom_total(const GradedBarcode& f, const GradedBarcode& g) {
    require_tamarkin(f, "rhom_total source");
    require_left_closed(g, "rhom_total target");
    HomSpace h;
    for (const auto& x : f.bars)
        for (const auto& y : g.bars) {
            const ExtQ& a = x.interval.lo().value;
            const ExtQ& b = x.interval.hi().value;
            const ExtQ& c = y.interval.lo().value;
            const ExtQ& d = y.interval.hi().value;
            const int deg = y.degree - x.degree;
            if (a <= c && c < b && b <= d) h.add(deg, x.mult * y.mult);
            else if (c < a && a <= d && d < b) h.add(deg + 1, x.mult * y.mult);
        }
    return h;
}

GradedBarcode rhom_sheaf(const GradedBarcode& f, const GradedBarcode& g) {
    require_tamarkin(f, "rhom_sheaf source");
    require_tamarkin(g, "rhom_sheaf target");
    GradedBarcode out;
    for (const auto& x : f.bars)
        for (const auto& y : g.bars) {
            const ExtQ& a = x.interval.lo().value;
            const ExtQ& b = x.interval.hi().value;
            const ExtQ& c = y.interval.lo().value;
            const ExtQ& d = y.interval.hi().value;
            const int deg = y.degree - x.degree;
            const std::uint64_t mult = x.mult * y.mult;
            if (d >= b) {
                if (c >= b) continue;
                if (a <= c) out.add(Interval::cc(c, b), deg, mult);
                else out.add(Interval::oc(a, b), deg, mult);
            } else if (a <= c) {
                out.add(Interval::co(c, d), deg, mult);
            } else if (a < d) {
                out.add(Interval::oo(a, d), deg, mult);
            } else if (a == d) {
                out.add(Interval::point(a.value()), deg + 1, mult);
            }
        }
    return canonicalize(out);
}

ExtQ torsion(const GradedBarcode& f) {
    ExtQ t(0);
    for (const auto& bar : f.bars) t = max_of(t, bar.interval.length());
    return t;
}

HomSpace tau_rank(const GradedBarcode& f, const Q& c) {
    if (c < 0) throw ValidationError("tau_rank needs c >= 0");
    HomSpace h;
    for (const auto& bar : f.bars)
        if (bar.interval.length() > ExtQ(c)) h.add(bar.degree, bar.mult);
    return h;
}

ExtQ capacity(const GradedBarcode& f) {
    require_tamarkin(f, "capacity");
    return torsion(hom_star(f, f));
}

ExtQ capacity_prime(const GradedBarcode& f) {
    require_tamarkin(f, "capacity_prime");
    ExtQ best(0);
    for (const auto& bar : hom_star(f, f).bars) {
        const ExtQ& lo = bar.interval.lo().value;
        const ExtQ& hi = bar.interval.hi().value;
        if (lo < ExtQ(0) && ExtQ(0) <= hi) best = max_of(best, min_of(-lo, hi - lo));
    }
    return best;
}

HomSpace FiberCut::cohomology() const {
    HomSpace h;
    if (!interval) return h;
    const Endpoint& lo = interval->lo();
    const Endpoint& hi = interval->hi();
    const bool lo_closed_set = lo.closed || lo.value.is_neg_inf();
    const bool hi_closed_set = hi.closed || hi.value.is_pos_inf();
    const bool open = !lo.closed && !hi.closed;
    if (mode == Mode::CompactSupport) {
        if (interval->bounded() && lo.closed && hi.closed) h.add(0, 1);
        else if (open) h.add(1, 1);
    } else {
        if (lo_closed_set && hi_closed_set) h.add(0, 1);
        else if (open && interval->bounded()) h.add(1, 1);
    }
    return h;
}

namespace {

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
    Endpoint lo = x.lo(), hi = x.hi();
    if (y.lo().value > lo.value) lo = y.lo();
    else if (y.lo().value == lo.value) lo.closed = lo.closed && y.lo().closed;
    if (y.hi().value < hi.value) hi = y.hi();
    else if (y.hi().value == hi.value) hi.closed = hi.closed && y.hi().closed;
    return Interval::make(lo.value, lo.closed, hi.value, hi.closed);
}

} // namespace

HomSpace stalk_oracle(OracleKind kind, const Interval& i, const Interval& j, const Q& t) {
    Interval first = i;
    if (kind == OracleKind::HomStar) {
        if (!i.is_left_closed_type()) throw UnsupportedCombination("hom-star oracle source " + i.str());
        first = Interval::co(-i.hi().value, -i.lo().value);
    }
    // Points (t1, t - t1) of the anti-diagonal with t - t1 in j.
    const ExtQ tt(t);
    Interval reflected({tt - j.hi().value, j.hi().closed}, {tt - j.lo().value, j.lo().closed});
    FiberCut cut{intersect(first, reflected),
                 kind == OracleKind::Proper ? FiberCut::Mode::CompactSupport : FiberCut::Mode::Ordinary};
    HomSpace h = cut.cohomology();
    return kind == OracleKind::HomStar ? h.shifted(-1) : h;
}

HomSpace stalk_oracle(OracleKind kind, const GradedBarcode& f, const GradedBarcode& g, const Q& t) {
    HomSpace out;
    for (const auto& x : f.bars)
        for (const auto& y : g.bars) {
            HomSpace h = stalk_oracle(kind, x.interval, y.interval, t);
            int base = kind == OracleKind::HomStar ? y.degree - x.degree : x.degree + y.degree;
            for (const auto& [d, n] : h.dims()) out.add(d + base, n * x.mult * y.mult);
        }
    return out;
}

} // namespace shb

#include "shb/barcode.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace shb {

Interval::Interval(Endpoint lo, Endpoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!lo_.value.finite()) lo_.closed = false;
    if (!hi_.value.finite()) hi_.closed = false;
    if (lo_.value.is_pos_inf() || hi_.value.is_neg_inf())
        throw ValidationError("interval endpoint on the wrong infinite side");
    bool ok = lo_.value < hi_.value || (lo_.value == hi_.value && lo_.closed && hi_.closed);
    if (!ok) throw ValidationError("empty interval " + str());
}

std::optional<Interval> Interval::make(const ExtQ& lo, bool lo_closed, const ExtQ& hi, bool hi_closed) {
    if (lo.is_pos_inf() || hi.is_neg_inf()) return std::nullopt;
    if (!lo.finite()) lo_closed = false;
    if (!hi.finite()) hi_closed = false;
    if (lo < hi || (lo == hi && lo_closed && hi_closed)) return Interval({lo, lo_closed}, {hi, hi_closed});
    return std::nullopt;
}

Interval Interval::co(const ExtQ& a, const ExtQ& b) { return Interval({a, true}, {b, false}); }
Interval Interval::oc(const ExtQ& a, const ExtQ& b) { return Interval({a, false}, {b, true}); }
Interval Interval::cc(const ExtQ& a, const ExtQ& b) { return Interval({a, true}, {b, true}); }
Interval Interval::oo(const ExtQ& a, const ExtQ& b) { return Interval({a, false}, {b, false}); }
Interval Interval::point(const Q& a) { return Interval({a, true}, {a, true}); }

bool Interval::contains(const Q& t) const {
    ExtQ x(t);
    bool above = lo_.closed ? lo_.value <= x : lo_.value < x;
    bool below = hi_.closed ? x <= hi_.value : x < hi_.value;
    return above && below;
}

bool Interval::is_tamarkin() const { return lo_.value.finite() && lo_.closed && !hi_.closed && !is_singleton(); }

bool Interval::is_left_closed_type() const {
    return (lo_.closed || lo_.value.is_neg_inf()) && !hi_.closed && !is_singleton();
}

bool Interval::is_right_closed_type() const {
    return !lo_.closed && (hi_.closed || hi_.value.is_pos_inf()) && !is_singleton();
}

std::string Interval::str() const {
    if (lo_.value == hi_.value) return "{" + lo_.value.str() + "}";
    std::string s = lo_.closed ? "[" : "(";
    s += lo_.value.str() + "," + hi_.value.str();
    s += hi_.closed ? "]" : ")";
    return s;
}

std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.lo_.value <=> b.lo_.value; c != 0) return c;
    if (a.lo_.closed != b.lo_.closed) return a.lo_.closed ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a.hi_.value <=> b.hi_.value; c != 0) return c;
    if (a.hi_.closed != b.hi_.closed) return a.hi_.closed ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string convention_name(Convention c) {
    switch (c) {
    case Convention::LeftClosed: return "left-closed";
    case Convention::RightClosed: return "right-closed";
    default: return "mixed";
    }
}

Convention parse_convention(const std::string& s) {
    if (s == "left-closed") return Convention::LeftClosed;
    if (s == "right-closed") return Convention::RightClosed;
    if (s == "mixed") return Convention::Mixed;
    throw ValidationError("unknown convention '" + s + "'");
}

GradedBarcode& GradedBarcode::add(const Interval& iv, int degree, std::uint64_t mult) {
    if (mult == 0) throw ValidationError("bar multiplicity must be positive");
    bars.push_back({iv, degree, mult});
    return *this;
}

GradedBarcode& GradedBarcode::add(const GradedBarcode& other) {
    bars.insert(bars.end(), other.bars.begin(), other.bars.end());
    return *this;
}

std::uint64_t GradedBarcode::total_bars() const {
    std::uint64_t n = 0;
    for (const auto& b : bars) n += b.mult;
    return n;
}

bool GradedBarcode::is_tamarkin() const {
    return std::all_of(bars.begin(), bars.end(), [](const GradedBar& b) { return b.interval.is_tamarkin(); });
}

bool GradedBarcode::is_left_closed_type() const {
    return std::all_of(bars.begin(), bars.end(), [](const GradedBar& b) { return b.interval.is_left_closed_type(); });
}

Convention GradedBarcode::convention() const {
    if (is_left_closed_type()) return Convention::LeftClosed;
    if (std::all_of(bars.begin(), bars.end(), [](const GradedBar& b) { return b.interval.is_right_closed_type(); }))
        return Convention::RightClosed;
    return Convention::Mixed;
}

std::vector<GradedBar> GradedBarcode::expanded() const {
    std::vector<GradedBar> out;
    for (const auto& b : canonicalize(*this).bars)
        for (std::uint64_t k = 0; k < b.mult; ++k) out.push_back({b.interval, b.degree, 1});
    return out;
}

bool operator==(const GradedBarcode& a, const GradedBarcode& b) {
    return canonicalize(a).bars == canonicalize(b).bars;
}

HomSpace::HomSpace(std::initializer_list<std::pair<const int, std::uint64_t>> init) {
    for (const auto& [d, n] : init) add(d, n);
}

void HomSpace::add(int degree, std::uint64_t n) {
    if (n == 0) return;
    dims_[degree] += n;
}

std::uint64_t HomSpace::at(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

std::uint64_t HomSpace::total() const {
    std::uint64_t n = 0;
    for (const auto& [d, k] : dims_) n += k;
    return n;
}

HomSpace HomSpace::shifted(int k) const {
    HomSpace h;
    for (const auto& [d, n] : dims_) h.add(d + k, n);
    return h;
}

HomSpace HomSpace::negated() const {
    HomSpace h;
    for (const auto& [d, n] : dims_) h.add(-d, n);
    return h;
}

HomSpace& HomSpace::operator+=(const HomSpace& o) {
    for (const auto& [d, n] : o.dims_) add(d, n);
    return *this;
}

std::string HomSpace::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, n] : dims_) {
        os << (first ? "" : ", ") << d << ":" << n;
        first = false;
    }
    os << "}";
    return os.str();
}

GradedBarcode canonicalize(const GradedBarcode& b) {
    std::vector<GradedBar> v = b.bars;
    std::sort(v.begin(), v.end(), [](const GradedBar& x, const GradedBar& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.interval < y.interval;
    });
    std::vector<GradedBar> out;
    for (auto& bar : v) {
        if (!out.empty() && out.back().degree == bar.degree && out.back().interval == bar.interval)
            out.back().mult += bar.mult;
        else
            out.push_back(bar);
    }
    return GradedBarcode(std::move(out));
}

HomSpace stalk(const GradedBarcode& b, const Q& t) {
    HomSpace h;
    for (const auto& bar : b.bars)
        if (bar.interval.contains(t)) h.add(bar.degree, bar.mult);
    return h;
}

std::vector<Q> spec(const GradedBarcode& b) {
    std::set<Q> s;
    for (const auto& bar : b.bars) {
        if (bar.interval.lo().value.finite()) s.insert(bar.interval.lo().value.value());
        if (bar.interval.hi().value.finite()) s.insert(bar.interval.hi().value.value());
    }
    return {s.begin(), s.end()};
}

void require_tamarkin(const GradedBarcode& b, const char* op) {
    for (const auto& bar : b.bars)
        if (!bar.interval.is_tamarkin()) throw NotTamarkinClass(std::string(op) + " got " + bar.interval.str());
}

HomSpace ray_sections(const GradedBarcode& b, const Q& c) {
    require_tamarkin(b, "ray_sections");
    HomSpace h;
    ExtQ x(c);
    for (const auto& bar : b.bars)
        if (bar.interval.lo().value < x && x <= bar.interval.hi().value) h.add(bar.degree, bar.mult);
    return h;
}

namespace {

void require_homogeneous(const GradedBarcode& b, const char* op) {
    if (b.convention() == Convention::Mixed)
        throw ValidationError(std::string(op) + ": mixed-convention barcode");
}

} // namespace

GradedBarcode phi(const GradedBarcode& b) {
    require_homogeneous(b, "phi");
    return canonicalize(b);
}

GradedBarcode psi(const GradedBarcode& b) {
    require_homogeneous(b, "psi");
    return canonicalize(b);
}

GradedBarcode reflect(const GradedBarcode& b) {
    GradedBarcode out;
    for (const auto& bar : b.bars) {
        const auto& iv = bar.interval;
        out.add(Interval({-iv.hi().value, iv.hi().closed}, {-iv.lo().value, iv.lo().closed}), bar.degree, bar.mult);
    }
    return canonicalize(out);
}

GradedBarcode convert_convention(const GradedBarcode& b, Convention target) {
    if (target == Convention::Mixed) throw ValidationError("convert_convention: target must be homogeneous");
    require_homogeneous(b, "convert_convention");
    if (b.convention() == target || b.empty()) return canonicalize(b);
    return reflect(b);
}

std::string SSDescription::str() const {
    std::ostringstream os;
    os << "0_" << zero_section.str();
    for (const auto& r : rays) {
        os << " + {" << to_string(r.point) << "}x";
        if (r.nonneg && r.nonpos) os << "R";
        else if (r.nonneg) os << "R>=0";
        else os << "R<=0";
    }
    if (convention_dependent) os << " (convention-dependent)";
    return os.str();
}

SSDescription ss_describe(const Interval& i) {
    const auto& lo = i.lo();
    const auto& hi = i.hi();
    SSDescription d{Interval({lo.value, true}, {hi.value, true}), {}, false};
    if (i.is_singleton()) {
        d.rays.push_back({lo.value.value(), true, true});
        d.convention_dependent = true;
        return d;
    }
    if (lo.value.finite()) d.rays.push_back({lo.value.value(), lo.closed, !lo.closed});
    if (hi.value.finite()) d.rays.push_back({hi.value.value(), !hi.closed, hi.closed});
    d.convention_dependent = !(i.is_tamarkin() && i.bounded());
    return d;
}

} // namespace shb

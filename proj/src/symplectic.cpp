#include "shb/symplectic.hpp"

#include "shb/errors.hpp"
#include "shb/tamarkin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace shb {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

void require_nonnegative(const PiRational& t) {
    if (t.sign() < 0) throw ValidationError("action must be non-negative, got " + t.str());
}

int to_int(const Z& z) {
    if (z > 1000000 || z < -1000000) throw InstanceTooLarge("bin index out of range");
    return static_cast<int>(z);
}

HomSpace single(int degree) {
    HomSpace h;
    h.add(degree, 1);
    return h;
}

Q min_area(const DomainSpec& d) {
    auto a = d.areas();
    return *std::min_element(a.begin(), a.end());
}

} // namespace

void DomainSpec::validate() const {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                if (s.n < 1 || s.r <= 0) throw ValidationError("ball needs n >= 1 and r > 0");
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                if (s.n < 2) throw ValidationError("ellipsoid needs n >= 2");
                if (s.r <= 0 || s.R < s.r) throw ValidationError("ellipsoid needs 0 < r <= R");
            } else {
                if (s.c <= 0 || s.c > 1) throw ValidationError("scale factor must lie in (0, 1]");
                if (s.inner.n < 1 || s.inner.r <= 0) throw ValidationError("ball needs n >= 1 and r > 0");
            }
        },
        shape);
}

int DomainSpec::dim() const {
    return std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ScaledBall>) return s.inner.n;
            else return s.n;
        },
        shape);
}

std::vector<Q> DomainSpec::areas() const {
    validate();
    return std::visit(
        [](const auto& s) -> std::vector<Q> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return std::vector<Q>(static_cast<std::size_t>(s.n), s.r * s.r);
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                std::vector<Q> a(static_cast<std::size_t>(s.n), s.R * s.R);
                a[0] = s.r * s.r;
                return a;
            } else {
                return std::vector<Q>(static_cast<std::size_t>(s.inner.n), s.c * s.inner.r * s.inner.r);
            }
        },
        shape);
}

HomSpace domain_stalk(const DomainSpec& d, const PiRational& t) {
    require_nonnegative(t);
    // Each disc of area pi*a contributes 2*floor(t/(pi a)) + 1; the sum is the cohomological degree.
    int degree = 0;
    for (const auto& a : d.areas()) degree += 2 * to_int(pi_floor(t, a)) + 1;
    return single(degree);
}

HomSpace ball_stalk(int n, const Q& r, const PiRational& t) { return domain_stalk({Ball{n, r}}, t); }

HomSpace ellipsoid_stalk(int n, const Q& r, const Q& R, const PiRational& t) {
    return domain_stalk({Ellipsoid{n, r, R}}, t);
}

int eigen_count_area(const PiRational& t, const Q& area, int M) {
    if (M < 1) throw ValidationError("eigen_count needs M >= 1");
    if (area <= 0) throw ValidationError("eigen_count needs a positive radius");
    if (t.sign() <= 0) throw ValidationError("eigen_count needs a positive action");
    auto [lo, hi] = t.bins(area);
    const Q band(1, 1000000);
    if (floor_of(lo - band) != floor_of(hi + band))
        throw NearSpectralValue("action " + t.str() + " lies within 1e-6 of a multiple of pi*r^2");
    if (hi * 2 >= Q(M)) throw DomainError("M too small: |2a/M| must stay below pi");
    const long double x = static_cast<long double>(to_double(lo));
    const long double theta = -2.0L * kPi * x / static_cast<long double>(M);
    const long double s = std::sin(theta), c = std::tan(theta);
    const long double scale = std::fabs(1.0L / c) + std::fabs(1.0L / s);
    // Generous bound on the accumulated rounding error of one eigenvalue.
    const long double err = 64.0L * std::numeric_limits<long double>::epsilon() * (1.0L + scale) +
                            scale * 8.0L * std::numeric_limits<double>::epsilon();
    int count = 0;
    for (int i = 1; i <= M; ++i) {
        const long double phi = 2.0L * kPi * static_cast<long double>(i - 1) / static_cast<long double>(M);
        const long double lambda = 1.0L / c - std::cos(phi) / s;
        if (std::fabs(lambda) <= err) throw IndeterminateComparison("eigenvalue sign not certified");
        if (lambda > 0) ++count;
    }
    return count;
}

int eigen_count(const PiRational& t, const Q& r, int M) { return eigen_count_area(t, r * r, M); }

std::vector<PiRational> domain_spec(const DomainSpec& d, const PiRational& tmax) {
    std::set<Q> areas;
    for (const auto& a : d.areas()) areas.insert(a);
    std::set<Q> coeffs;
    for (const auto& a : areas)
        for (long long k = 0;; ++k) {
            PiRational v = PiRational::pi_times(Q(k) * a);
            if (!(v < tmax)) break;
            if (k > 100000) throw InstanceTooLarge("too many spectral values below tmax");
            coeffs.insert(Q(k) * a);
        }
    std::vector<PiRational> out;
    for (const auto& q : coeffs) out.push_back(PiRational::pi_times(q));
    return out;
}

PiBarcode domain_barcode(const DomainSpec& d, const PiRational& tmax) {
    PiBarcode out;
    auto pts = domain_spec(d, tmax);
    if (pts.empty()) return out;
    // First spectral value after the last one below tmax.
    const Q last = pts.back().pi_coeff();
    std::optional<Q> next;
    for (const auto& a : d.areas()) {
        Q k = Q(floor_of(last / a) + 1) * a;
        if (!next || k < *next) next = k;
    }
    pts.push_back(PiRational::pi_times(*next));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto h = domain_stalk(d, pts[i]);
        out.bars.push_back({pts[i], pts[i + 1], h.dims().begin()->first});
    }
    return out;
}

HomSpace stalk(const PiBarcode& b, const PiRational& t) {
    HomSpace h;
    for (const auto& bar : b.bars)
        if (bar.lo <= t && t < bar.hi) h.add(bar.degree, 1);
    return h;
}

HomSpace sheaf_invariant(const DomainSpec& d, const PiRational& t) {
    require_nonnegative(t);
    auto b = domain_barcode(d, t + PiRational::pi_times(min_area(d)));
    // rhom_total only sees the order type of the endpoints, so rank them.
    std::vector<PiRational> pts{t};
    for (const auto& bar : b.bars) {
        pts.push_back(bar.lo);
        pts.push_back(bar.hi);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x <=> y == 0; }), pts.end());
    auto rank = [&](const PiRational& v) {
        return static_cast<long long>(std::lower_bound(pts.begin(), pts.end(), v) - pts.begin());
    };
    GradedBarcode f, target;
    for (const auto& bar : b.bars) f.add(Interval::co(rank(bar.lo), rank(bar.hi)), bar.degree);
    target.add(Interval::co(ExtQ(rank(t)), ExtQ::pos_inf()), d.dim());
    return rhom_total(f, target).negated();
}

bool transfer_is_iso(const DomainSpec& d, const PiRational& t1, const PiRational& t2) {
    require_nonnegative(t1);
    if (t2 < t1) throw ValidationError("transfer needs t1 <= t2");
    for (const auto& a : d.areas())
        if (pi_floor(t1, a) != pi_floor(t2, a)) return false;
    return true;
}

HomSpace inclusion_cone_rank(const Q& r, const Q& c, const PiRational& t, int n, int M) {
    if (n < 1) throw ValidationError("dimension must be positive");
    if (c <= 0 || c > 1) throw ValidationError("scale factor must lie in (0, 1]");
    const int m1 = eigen_count_area(t, r * r, M);
    const int mc = eigen_count_area(t, c * r * r, M);
    if (mc < m1) throw DomainError("scaled ball produced fewer eigenvalues than the ball");
    HomSpace h;
    if (mc > m1) h.add(n * (mc - m1), 1);
    return h;
}

NonsqueezeVerdict nonsqueeze_check(int n, const Q& r1, const Q& r2, const Q& R) {
    if (n < 2) throw ValidationError("non-squeezing check needs n >= 2");
    if (r1 <= 0 || r2 <= 0) throw ValidationError("radii must be positive");
    if (!(R > r1 && R > r2)) throw ValidationError("need R > max(r1, r2)");
    NonsqueezeVerdict v;
    if (r1 <= r2) {
        v.trace.push_back("r1 <= r2: the window (pi r2^2, pi r1^2) is empty, so this invariant gives no obstruction");
        return v;
    }
    const Q a1 = r1 * r1, a2 = r2 * r2;
    const PiRational t = PiRational::pi_times((a2 + std::min(a1, 2 * a2)) / 2);
    v.t = t;
    const DomainSpec ball{Ball{n, r1}};
    const DomainSpec ell{Ellipsoid{n, r2, R}};
    v.ball_invariant = sheaf_invariant(ball, t);
    v.ellipsoid_invariant = sheaf_invariant(ell, t);
    v.cone = inclusion_cone_rank(R, a1 / (R * R), t, n, 64);
    v.trace.push_back("choose T = " + t.str() + " in (pi r2^2, pi r1^2) and below pi R^2");
    v.trace.push_back("S_T(B(r1)) = " + v.ball_invariant.str());
    v.trace.push_back("S_T(E(r2,R,...,R)) = " + v.ellipsoid_invariant.str());
    v.trace.push_back("cone of B(r1) -> B(R) at T has total rank " + std::to_string(v.cone.total()) +
                      ", so S_T(B(R)) -> S_T(B(r1)) is an isomorphism");
    const bool mismatch = !(v.ball_invariant == v.ellipsoid_invariant);
    v.obstructed = mismatch && v.cone.total() == 0;
    if (v.obstructed)
        v.trace.push_back("an embedding B(r1) -> E -> B(R) would factor that isomorphism through S_T(E), "
                          "which lives in a different degree: OBSTRUCTED");
    else
        v.trace.push_back("degrees agree: no obstruction from this invariant");
    return v;
}

} // namespace shb

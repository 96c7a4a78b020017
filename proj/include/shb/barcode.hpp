#pragma once

#include "shb/errors.hpp"
#include "shb/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shb {

struct Endpoint {
    ExtQ value;
    bool closed = false; // ignored (always false) for infinite values

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

class Interval {
public:
    // Validates nonemptiness; infinite endpoints are forced open.
    Interval(Endpoint lo, Endpoint hi);

    static Interval co(const ExtQ& a, const ExtQ& b);   // [a,b), or (-inf,b) / [a,+inf) when infinite
    static Interval oc(const ExtQ& a, const ExtQ& b);   // (a,b]
    static Interval cc(const ExtQ& a, const ExtQ& b);   // [a,b]
    static Interval oo(const ExtQ& a, const ExtQ& b);   // (a,b)
    static Interval point(const Q& a);                   // {a}
    static Interval line() { return oo(ExtQ::neg_inf(), ExtQ::pos_inf()); }

    // Builds the interval if nonempty.
    static std::optional<Interval> make(const ExtQ& lo, bool lo_closed, const ExtQ& hi, bool hi_closed);

    const Endpoint& lo() const { return lo_; }
    const Endpoint& hi() const { return hi_; }

    bool contains(const Q& t) const;
    bool is_singleton() const { return lo_.value == hi_.value; }
    bool bounded() const { return lo_.value.finite() && hi_.value.finite(); }
    // [a,b) or [a,+inf) with a finite.
    bool is_tamarkin() const;
    // Closed-or-(-inf) on the left, open on the right: the sheaves with SS in {tau >= 0}.
    bool is_left_closed_type() const;
    bool is_right_closed_type() const;
    ExtQ length() const { return hi_.value - lo_.value; }

    std::string str() const;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend std::strong_ordering operator<=>(const Interval& a, const Interval& b);

private:
    Endpoint lo_, hi_;
};

struct GradedBar {
    Interval interval;
    int degree = 0;
    std::uint64_t mult = 1;

    friend bool operator==(const GradedBar&, const GradedBar&) = default;
};

enum class Convention { LeftClosed, RightClosed, Mixed };
std::string convention_name(Convention c);
Convention parse_convention(const std::string& s);

// Finite multiset of degree-tagged intervals; operations return canonical form.
struct GradedBarcode {
    std::vector<GradedBar> bars;

    GradedBarcode() = default;
    explicit GradedBarcode(std::vector<GradedBar> b) : bars(std::move(b)) {}

    GradedBarcode& add(const Interval& iv, int degree = 0, std::uint64_t mult = 1);
    GradedBarcode& add(const GradedBarcode& other);

    bool empty() const { return bars.empty(); }
    std::uint64_t total_bars() const;
    bool is_tamarkin() const;
    bool is_left_closed_type() const;
    Convention convention() const;

    // One entry per unit of multiplicity, in canonical order.
    std::vector<GradedBar> expanded() const;

    friend bool operator==(const GradedBarcode& a, const GradedBarcode& b);
};

// Graded dimension vector; zero entries are never stored.
class HomSpace {
public:
    HomSpace() = default;
    HomSpace(std::initializer_list<std::pair<const int, std::uint64_t>> init);

    void add(int degree, std::uint64_t n);
    std::uint64_t at(int degree) const;
    std::uint64_t total() const;
    bool zero() const { return dims_.empty(); }
    const std::map<int, std::uint64_t>& dims() const { return dims_; }
    HomSpace shifted(int k) const;   // every degree d becomes d + k
    HomSpace negated() const;        // every degree d becomes -d

    HomSpace& operator+=(const HomSpace& o);
    friend bool operator==(const HomSpace&, const HomSpace&) = default;
    std::string str() const;

private:
    std::map<int, std::uint64_t> dims_;
};

GradedBarcode canonicalize(const GradedBarcode& b);
HomSpace stalk(const GradedBarcode& b, const Q& t);
std::vector<Q> spec(const GradedBarcode& b);
HomSpace ray_sections(const GradedBarcode& b, const Q& c);

void require_tamarkin(const GradedBarcode& b, const char* op);

// Persistence <-> sheaf transport: identity on intervals, defined on homogeneous input.
GradedBarcode phi(const GradedBarcode& b);
GradedBarcode psi(const GradedBarcode& b);
// t -> -t, exchanging the two homogeneous conventions.
GradedBarcode reflect(const GradedBarcode& b);
GradedBarcode convert_convention(const GradedBarcode& b, Convention target);

struct CovectorRay {
    Q point;
    bool nonneg = false; // contains {tau >= 0}
    bool nonpos = false; // contains {tau <= 0}
};

struct SSDescription {
    Interval zero_section;          // closure of the support
    std::vector<CovectorRay> rays;  // one per finite endpoint
    bool convention_dependent = false;
    std::string str() const;
};

SSDescription ss_describe(const Interval& i);

} // namespace shb

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shb {

using Q = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using Z = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Accepts "3", "-7/2", "0.125", "1e-3" is not accepted.
Q parse_rational(std::string_view text);
std::string to_string(const Q& q);
Z floor_of(const Q& q);
Q abs_of(const Q& q);
double to_double(const Q& q);
std::strong_ordering compare(const Q& a, const Q& b);

// Rational extended by -inf and +inf.
class ExtQ {
public:
    enum class Kind : std::int8_t { NegInf = -1, Finite = 0, PosInf = 1 };

    ExtQ() = default;
    ExtQ(const Q& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    ExtQ(long long v) : v_(v) {} // NOLINT(google-explicit-constructor)
    ExtQ(int v) : v_(v) {}       // NOLINT(google-explicit-constructor)

    static ExtQ neg_inf() { return ExtQ(Kind::NegInf); }
    static ExtQ pos_inf() { return ExtQ(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    const Q& value() const;

    friend std::strong_ordering operator<=>(const ExtQ& a, const ExtQ& b);
    friend bool operator==(const ExtQ& a, const ExtQ& b) { return (a <=> b) == 0; }

    friend ExtQ operator+(const ExtQ& a, const ExtQ& b);
    friend ExtQ operator-(const ExtQ& a);
    friend ExtQ operator-(const ExtQ& a, const ExtQ& b) { return a + (-b); }

    std::string str() const;
    static ExtQ parse(std::string_view text);

private:
    explicit ExtQ(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Finite;
    Q v_{0};
};

ExtQ min_of(const ExtQ& a, const ExtQ& b);
ExtQ max_of(const ExtQ& a, const ExtQ& b);

} // namespace shb

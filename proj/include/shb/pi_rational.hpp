#pragma once

#include "shb/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace shb {

// Exact value q*pi + s.
class PiRational {
public:
    PiRational() = default;
    PiRational(const Q& q, const Q& s) : q_(q), s_(s) {}
    static PiRational rational(const Q& s) { return {Q(0), s}; }
    static PiRational pi_times(const Q& q) { return {q, Q(0)}; }

    const Q& pi_coeff() const { return q_; }
    const Q& rational_part() const { return s_; }

    // Throws IndeterminateComparison if the pi enclosure cannot decide.
    friend std::strong_ordering operator<=>(const PiRational& a, const PiRational& b);
    friend bool operator==(const PiRational& a, const PiRational& b) { return a.q_ == b.q_ && a.s_ == b.s_; }

    friend PiRational operator+(const PiRational& a, const PiRational& b) { return {a.q_ + b.q_, a.s_ + b.s_}; }
    friend PiRational operator-(const PiRational& a, const PiRational& b) { return {a.q_ - b.q_, a.s_ - b.s_}; }
    friend PiRational operator*(const Q& c, const PiRational& a) { return {c * a.q_, c * a.s_}; }

    // Sign of the value: -1, 0 or 1.
    int sign() const;
    // Certified enclosure [lo, hi] of the value.
    std::pair<Q, Q> enclosure() const;
    // Enclosure of value / (pi * area) for positive area.
    std::pair<Q, Q> bins(const Q& area) const;
    long double approx() const;

    // Forms: "3", "-1/2", "0.5", "pi", "-pi", "3pi", "3/2pi", "2pi+1/3", "pi-1".
    static PiRational parse(std::string_view text);
    std::string str() const;

private:
    Q q_{0};
    Q s_{0};
};

// Rational bounds with pi_lower() < pi < pi_upper().
const Q& pi_lower();
const Q& pi_upper();

// floor(value / (pi * area)), certified.
Z pi_floor(const PiRational& t, const Q& area);

} // namespace shb

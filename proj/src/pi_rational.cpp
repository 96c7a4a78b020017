#include "shb/pi_rational.hpp"

#include "shb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace shb {

namespace {

Q decimal(std::string_view digits) { return parse_rational(digits); }

int sign_of(const Q& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

} // namespace

const Q& pi_lower() {
    static const Q v = decimal("3.1415926535897932384626433832795028841971");
    return v;
}

const Q& pi_upper() {
    static const Q v = pi_lower() + Q(1, Z("10000000000000000000000000000000000000000"));
    return v;
}

std::pair<Q, Q> PiRational::enclosure() const {
    Q a = q_ * pi_lower() + s_;
    Q b = q_ * pi_upper() + s_;
    if (a > b) std::swap(a, b);
    return {a, b};
}

int PiRational::sign() const {
    if (q_ == 0) return sign_of(s_);
    if (s_ == 0) return sign_of(q_);
    auto [lo, hi] = enclosure();
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    throw IndeterminateComparison("cannot decide the sign of " + str() + " with the pi enclosure");
}

std::strong_ordering operator<=>(const PiRational& a, const PiRational& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::pair<Q, Q> PiRational::bins(const Q& area) const {
    if (area <= 0) throw ValidationError("area must be positive");
    // (q pi + s)/(pi area) = q/area + s/(pi area)
    Q base = q_ / area;
    if (s_ == 0) return {base, base};
    Q x = s_ / (pi_upper() * area);
    Q y = s_ / (pi_lower() * area);
    if (x > y) std::swap(x, y);
    return {base + x, base + y};
}

long double PiRational::approx() const {
    return static_cast<long double>(to_double(q_)) * 3.14159265358979323846264338327950288L +
           static_cast<long double>(to_double(s_));
}

Z pi_floor(const PiRational& t, const Q& area) {
    auto [lo, hi] = t.bins(area);
    Z a = floor_of(lo), b = floor_of(hi);
    if (a != b) throw IndeterminateComparison("bin of " + t.str() + " is not decided by the pi enclosure");
    return a;
}

PiRational PiRational::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ValidationError("empty number");
    const auto at = s.find("pi");
    if (at == std::string::npos) return rational(parse_rational(s));
    std::string coeff = s.substr(0, at);
    std::string rest = s.substr(at + 2);
    Q q;
    if (coeff.empty() || coeff == "+") q = 1;
    else if (coeff == "-") q = -1;
    else {
        if (coeff.back() == '*') coeff.pop_back();
        q = parse_rational(coeff);
    }
    Q r(0);
    if (!rest.empty()) {
        if (rest[0] != '+' && rest[0] != '-') throw ValidationError("malformed pi literal: " + s);
        r = parse_rational(rest[0] == '+' ? rest.substr(1) : rest);
    }
    return {q, r};
}

std::string PiRational::str() const {
    if (q_ == 0) return to_string(s_);
    std::string out;
    if (q_ == 1) out = "pi";
    else if (q_ == -1) out = "-pi";
    else out = to_string(q_) + "pi";
    if (s_ > 0) out += "+" + to_string(s_);
    else if (s_ < 0) out += to_string(s_);
    return out;
}

} // namespace shb

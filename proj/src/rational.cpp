#include "shb/rational.hpp"

#include <cctype>

namespace shb {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Z parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    Z z{std::string(s)};
    return neg ? Z(-z) : z;
}

} // namespace

Q parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Z num = parse_integer(text.substr(0, slash));
        Z den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Q(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("bad decimal literal '" + std::string(text) + "'");
        Z scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Z whole = Z(std::string(ip)) * scale + (fp.empty() ? Z(0) : Z(std::string(fp)));
        Q out(whole, scale);
        return neg ? Q(-out) : out;
    }
    return Q(parse_integer(text));
}

std::string to_string(const Q& q) {
    const Z& d = boost::multiprecision::denominator(q);
    if (d == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + d.str();
}

Z floor_of(const Q& q) {
    Z n = boost::multiprecision::numerator(q);
    Z d = boost::multiprecision::denominator(q);
    Z f = n / d; // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

Q abs_of(const Q& q) { return q < 0 ? Q(-q) : q; }

double to_double(const Q& q) { return q.convert_to<double>(); }

std::strong_ordering compare(const Q& a, const Q& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

const Q& ExtQ::value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite extended rational");
    return v_;
}

std::strong_ordering operator<=>(const ExtQ& a, const ExtQ& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != ExtQ::Kind::Finite) return std::strong_ordering::equal;
    return compare(a.v_, b.v_);
}

ExtQ operator+(const ExtQ& a, const ExtQ& b) {
    if (a.finite() && b.finite()) return ExtQ(Q(a.v_ + b.v_));
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
        throw std::domain_error("indeterminate sum of +inf and -inf");
    return a.finite() ? b : a;
}

ExtQ operator-(const ExtQ& a) {
    switch (a.kind_) {
    case ExtQ::Kind::NegInf: return ExtQ::pos_inf();
    case ExtQ::Kind::PosInf: return ExtQ::neg_inf();
    default: return ExtQ(Q(-a.v_));
    }
}

std::string ExtQ::str() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return to_string(v_);
}

ExtQ ExtQ::parse(std::string_view text) {
    if (text == "+inf" || text == "inf") return pos_inf();
    if (text == "-inf") return neg_inf();
    return ExtQ(parse_rational(text));
}

ExtQ min_of(const ExtQ& a, const ExtQ& b) { return b < a ? b : a; }
ExtQ max_of(const ExtQ& a, const ExtQ& b) { return a < b ? b : a; }

} // namespace shb

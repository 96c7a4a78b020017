#include "shb/io.hpp"

#include "shb/errors.hpp"

#include <sstream>

namespace shb::io {

namespace {

json endpoint_value(const ExtQ& v) {
    if (v.is_pos_inf()) return "+inf";
    if (v.is_neg_inf()) return "-inf";
    return to_string(v.value());
}

ExtQ ext_from_json(const json& j) {
    if (j.is_string()) return ExtQ::parse(j.get<std::string>());
    return ExtQ(rational_from_json(j));
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return j.get<int>();
    if (j.is_string()) {
        Q q = parse_rational(j.get<std::string>());
        if (boost::multiprecision::denominator(q) == 1) return static_cast<int>(boost::multiprecision::numerator(q));
    }
    throw ValidationError(std::string(what) + " must be an integer");
}

PiRational pi_from_json(const json& j) {
    if (j.is_object()) return {rational_from_json(field(j, "pi")), j.contains("plus") ? rational_from_json(j.at("plus")) : Q(0)};
    if (j.is_string()) return PiRational::parse(j.get<std::string>());
    return PiRational::rational(rational_from_json(j));
}

} // namespace

Q rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long long>());
    throw ValidationError("rationals must be given as strings or integers, got " + j.dump());
}

json to_json(const GradedBarcode& b) {
    auto c = canonicalize(b);
    json bars = json::array();
    for (const auto& bar : c.bars) {
        json e;
        e["lo"] = {{"v", endpoint_value(bar.interval.lo().value)}, {"closed", bar.interval.lo().closed}};
        e["hi"] = {{"v", endpoint_value(bar.interval.hi().value)}, {"closed", bar.interval.hi().closed}};
        e["deg"] = bar.degree;
        e["mult"] = bar.mult;
        bars.push_back(e);
    }
    json out;
    out["convention"] = convention_name(c.convention());
    out["bars"] = bars;
    return out;
}

GradedBarcode barcode_from_json(const json& j) {
    if (j.contains("convention")) parse_convention(field(j, "convention").get<std::string>());
    const json& bars = field(j, "bars");
    if (!bars.is_array()) throw ValidationError("'bars' must be an array");
    GradedBarcode b;
    for (const auto& e : bars) {
        const json& lo = field(e, "lo");
        const json& hi = field(e, "hi");
        Interval iv({ext_from_json(field(lo, "v")), field(lo, "closed").get<bool>()},
                    {ext_from_json(field(hi, "v")), field(hi, "closed").get<bool>()});
        const int deg = e.contains("deg") ? int_from_json(e.at("deg"), "deg") : 0;
        const std::uint64_t mult = e.contains("mult") ? e.at("mult").get<std::uint64_t>() : 1;
        b.add(iv, deg, mult);
    }
    return canonicalize(b);
}

json to_json(const HomSpace& h) {
    json dims = json::object();
    for (const auto& [d, n] : h.dims())
        if (n > 0) dims[std::to_string(d)] = n;
    return {{"dims", dims}};
}

HomSpace homspace_from_json(const json& j) {
    HomSpace h;
    for (const auto& [k, v] : field(j, "dims").items()) h.add(std::stoi(k), v.get<std::size_t>());
    return h;
}

json to_json(const PiRational& v) { return {{"pi", to_string(v.pi_coeff())}, {"plus", to_string(v.rational_part())}}; }

json to_json(const PiBarcode& b) {
    json bars = json::array();
    for (const auto& bar : b.bars)
        bars.push_back({{"lo", {{"v", to_json(bar.lo)}, {"closed", true}}},
                        {"hi", {{"v", to_json(bar.hi)}, {"closed", false}}},
                        {"deg", bar.degree},
                        {"mult", 1}});
    json out;
    out["convention"] = "left-closed";
    out["bars"] = bars;
    return out;
}

PiBarcode pi_barcode_from_json(const json& j) {
    PiBarcode b;
    for (const auto& e : field(j, "bars")) {
        const json& lo = field(e, "lo");
        const json& hi = field(e, "hi");
        if (!field(lo, "closed").get<bool>() || field(hi, "closed").get<bool>())
            throw ValidationError("symbolic bars must be closed on the left and open on the right");
        const int deg = e.contains("deg") ? int_from_json(e.at("deg"), "deg") : 0;
        const std::uint64_t mult = e.contains("mult") ? e.at("mult").get<std::uint64_t>() : 1;
        for (std::uint64_t k = 0; k < mult; ++k) b.bars.push_back({pi_from_json(field(lo, "v")), pi_from_json(field(hi, "v")), deg});
    }
    return b;
}

json to_json(const Matching& m) {
    json pairs = json::array();
    for (const auto& [i, k] : m.pairs) pairs.push_back({i, k});
    return {{"pairs", pairs}, {"erased_left", m.erased_left}, {"erased_right", m.erased_right}};
}

json to_json(const NonsqueezeVerdict& v) {
    json out;
    out["verdict"] = v.obstructed ? "OBSTRUCTED" : "NOT-OBSTRUCTED-BY-THIS-INVARIANT";
    out["T"] = v.t ? to_json(*v.t) : json(nullptr);
    out["S_T_ball"] = to_json(v.ball_invariant);
    out["S_T_ellipsoid"] = to_json(v.ellipsoid_invariant);
    out["inclusion_cone"] = to_json(v.cone);
    out["trace"] = v.trace;
    return out;
}

DomainSpec domain_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw ValidationError("domain spec must have exactly one key");
    DomainSpec d;
    if (j.contains("ball")) {
        const auto& b = j.at("ball");
        d.shape = Ball{int_from_json(field(b, "n"), "n"), rational_from_json(field(b, "r"))};
    } else if (j.contains("ellipsoid")) {
        const auto& e = j.at("ellipsoid");
        d.shape = Ellipsoid{int_from_json(field(e, "n"), "n"), rational_from_json(field(e, "r")),
                            rational_from_json(field(e, "R"))};
    } else if (j.contains("scaled_ball")) {
        const auto& s = j.at("scaled_ball");
        const auto& b = field(s, "ball");
        d.shape = ScaledBall{rational_from_json(field(s, "c")),
                             Ball{int_from_json(field(b, "n"), "n"), rational_from_json(field(b, "r"))}};
    } else {
        throw ValidationError("unknown domain kind " + j.begin().key());
    }
    d.validate();
    return d;
}

json to_json(const DomainSpec& d) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) return {{"ball", {{"n", s.n}, {"r", to_string(s.r)}}}};
            else if constexpr (std::is_same_v<T, Ellipsoid>)
                return {{"ellipsoid", {{"n", s.n}, {"r", to_string(s.r)}, {"R", to_string(s.R)}}}};
            else
                return {{"scaled_ball",
                         {{"c", to_string(s.c)}, {"ball", {{"n", s.inner.n}, {"r", to_string(s.inner.r)}}}}}};
        },
        d.shape);
}

MorseInput morse_from_json(const json& j) {
    const json& nv = field(j, "vertices");
    if (!nv.is_number_unsigned()) throw ValidationError("'vertices' must be a non-negative integer");
    const std::size_t n = nv.get<std::size_t>();
    MorseInput m;
    for (const auto& v : field(j, "values")) m.values.push_back(rational_from_json(v));
    if (m.values.size() != n) throw ValidationError("need one value per vertex");
    std::vector<std::vector<std::size_t>> top;
    for (const auto& s : field(j, "simplices")) {
        std::vector<std::size_t> vs;
        for (const auto& v : s) {
            if (!v.is_number_unsigned()) throw ValidationError("simplex entries must be vertex indices");
            vs.push_back(v.get<std::size_t>());
            if (vs.back() >= n) throw ValidationError("simplex references unknown vertex");
        }
        top.push_back(vs);
    }
    m.complex = SimplicialComplex::closure(n, top);
    m.complex.validate();
    return m;
}

MorseInput morse_from_text(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) tokens.push_back(t);
    }
    std::size_t at = 0;
    if (!tokens.empty() && (tokens[0] == "SHB" || tokens[0] == "OFF")) ++at;
    auto next = [&]() -> const std::string& {
        if (at >= tokens.size()) throw ValidationError("complex text ended early");
        return tokens[at++];
    };
    auto count = [&](const std::string& t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ValidationError("expected a count, got '" + t + "'");
        return static_cast<std::size_t>(std::stoull(t));
    };
    const std::size_t nv = count(next());
    const std::size_t ns = count(next());
    MorseInput m;
    for (std::size_t i = 0; i < nv; ++i) m.values.push_back(parse_rational(next()));
    std::vector<std::vector<std::size_t>> top;
    for (std::size_t i = 0; i < ns; ++i) {
        const std::size_t k = count(next());
        if (k == 0 || k > 3) throw ValidationError("simplices must have 1 to 3 vertices");
        std::vector<std::size_t> vs;
        for (std::size_t j = 0; j < k; ++j) {
            vs.push_back(count(next()));
            if (vs.back() >= nv) throw ValidationError("simplex references unknown vertex");
        }
        top.push_back(vs);
    }
    if (at != tokens.size()) throw ValidationError("trailing tokens after the simplex list");
    m.complex = SimplicialComplex::closure(nv, top);
    m.complex.validate();
    return m;
}

json parse(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const json& j) { return j.dump() + "\n"; }

} // namespace shb::io

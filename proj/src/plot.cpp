#include "shb/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace shb::plot {

namespace {

struct Bar {
    double lo, hi;
    bool lo_inf, hi_inf, lo_closed, hi_closed;
    int degree;
    std::string label;
};

struct Tick {
    double x;
    std::string label;
};

constexpr double kWidth = 720, kLeft = 70, kRight = 30, kRow = 16, kLaneGap = 14, kTop = 20, kAxis = 36;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

std::string render(const std::vector<Bar>& bars, std::vector<Tick> ticks) {
    double lo = 0, hi = 1;
    bool any = false;
    for (const auto& b : bars) {
        for (auto [v, inf] : {std::pair{b.lo, b.lo_inf}, std::pair{b.hi, b.hi_inf}}) {
            if (inf) continue;
            lo = any ? std::min(lo, v) : v;
            hi = any ? std::max(hi, v) : v;
            any = true;
        }
    }
    for (const auto& t : ticks) {
        lo = std::min(lo, t.x);
        hi = std::max(hi, t.x);
    }
    if (hi <= lo) hi = lo + 1;
    const double pad = (hi - lo) * 0.08;
    const double vlo = lo - pad, vhi = hi + pad;
    const double plot_w = kWidth - kLeft - kRight;
    auto X = [&](double v) { return kLeft + (v - vlo) / (vhi - vlo) * plot_w; };

    std::map<int, std::vector<const Bar*>> lanes;
    for (const auto& b : bars) lanes[b.degree].push_back(&b);
    double height = kTop;
    for (const auto& [d, v] : lanes) height += kRow * static_cast<double>(v.size()) + kLaneGap;
    const double axis_y = height;
    height += kAxis;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth) << "\" height=\""
       << num(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
    double y = kTop;
    for (const auto& [d, v] : lanes) {
        const double lane_h = kRow * static_cast<double>(v.size());
        os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(y - 4) << "\" width=\"" << num(plot_w) << "\" height=\""
           << num(lane_h + 4) << "\" fill=\"#f4f4f8\"/>\n";
        os << "<text x=\"8\" y=\"" << num(y + lane_h / 2 + 4) << "\">deg " << d << "</text>\n";
        for (const Bar* b : v) {
            const double yy = y + kRow / 2;
            const double x0 = b->lo_inf ? kLeft : X(b->lo);
            const double x1 = b->hi_inf ? kLeft + plot_w : X(b->hi);
            os << "<g><title>" << escape(b->label) << "</title>\n";
            os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(yy) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(yy)
               << "\" stroke=\"#2b4c9b\" stroke-width=\"3\"/>\n";
            auto cap = [&](double x, bool inf, bool closed, int dir) {
                if (inf) {
                    os << "<polygon points=\"" << num(x) << "," << num(yy) << " " << num(x - dir * 8) << ","
                       << num(yy - 5) << " " << num(x - dir * 8) << "," << num(yy + 5)
                       << "\" fill=\"#2b4c9b\"/>\n";
                } else {
                    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(yy) << "\" r=\"4\" stroke=\"#2b4c9b\" stroke-width=\"1.5\" fill=\""
                       << (closed ? "#2b4c9b" : "white") << "\"/>\n";
                }
            };
            cap(x0, b->lo_inf, b->lo_closed, -1);
            cap(x1, b->hi_inf, b->hi_closed, 1);
            os << "</g>\n";
            y += kRow;
        }
        y += kLaneGap;
    }
    os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(kLeft + plot_w) << "\" y2=\""
       << num(axis_y) << "\" stroke=\"black\"/>\n";
    std::sort(ticks.begin(), ticks.end(), [](const Tick& a, const Tick& b) { return a.x < b.x; });
    for (const auto& t : ticks) {
        os << "<line x1=\"" << num(X(t.x)) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(X(t.x)) << "\" y2=\""
           << num(axis_y + 5) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(X(t.x)) << "\" y=\"" << num(axis_y + 18) << "\" text-anchor=\"middle\">"
           << escape(t.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string pi_label(const Q& k) {
    if (k == 0) return "0";
    std::string c = k == 1 ? "" : to_string(k);
    return c + "πr²";
}

std::string pi_plain(const PiRational& v) {
    std::string s = v.str();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, 2, "pi") == 0) {
            out += "π";
            ++i;
        } else {
            out += s[i];
        }
    }
    return out;
}

} // namespace

std::string svg(const GradedBarcode& b) {
    std::vector<Bar> bars;
    std::vector<Tick> ticks;
    std::map<Q, bool> seen;
    for (const auto& g : canonicalize(b).expanded()) {
        const auto& lo = g.interval.lo();
        const auto& hi = g.interval.hi();
        bars.push_back({lo.value.finite() ? to_double(lo.value.value()) : 0.0,
                        hi.value.finite() ? to_double(hi.value.value()) : 0.0, !lo.value.finite(), !hi.value.finite(),
                        lo.closed, hi.closed, g.degree, g.interval.str() + " deg " + std::to_string(g.degree)});
        for (const auto* e : {&lo, &hi})
            if (e->value.finite() && !seen[e->value.value()]) {
                seen[e->value.value()] = true;
                ticks.push_back({to_double(e->value.value()), to_string(e->value.value())});
            }
    }
    return render(bars, ticks);
}

std::string svg(const PiBarcode& b, const std::optional<Q>& area) {
    std::vector<Bar> bars;
    std::vector<Tick> ticks;
    for (const auto& p : b.bars)
        bars.push_back({static_cast<double>(p.lo.approx()), static_cast<double>(p.hi.approx()), false, false, true, false,
                        p.degree, "[" + pi_plain(p.lo) + ", " + pi_plain(p.hi) + ") deg " + std::to_string(p.degree)});
    if (area && *area > 0 && !b.bars.empty()) {
        PiRational top = b.bars.front().hi;
        for (const auto& p : b.bars) top = std::max(top, p.hi);
        for (long long k = 0; k < 10000; ++k) {
            PiRational v = PiRational::pi_times(Q(k) * *area);
            if (top < v) break;
            ticks.push_back({static_cast<double>(v.approx()), pi_label(Q(k))});
        }
    } else {
        std::vector<PiRational> pts;
        for (const auto& p : b.bars) {
            pts.push_back(p.lo);
            pts.push_back(p.hi);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (const auto& v : pts) ticks.push_back({static_cast<double>(v.approx()), pi_plain(v)});
    }
    return render(bars, ticks);
}

std::string text(const GradedBarcode& b) {
    std::ostringstream os;
    auto c = canonicalize(b);
    if (c.bars.empty()) os << "(empty barcode)\n";
    for (const auto& g : c.bars) {
        os << "deg " << g.degree << "  " << g.interval.str();
        if (g.mult > 1) os << "  x" << g.mult;
        os << "\n";
    }
    return os.str();
}

std::string text(const PiBarcode& b) {
    std::ostringstream os;
    if (b.bars.empty()) os << "(empty barcode)\n";
    for (const auto& p : b.bars) os << "deg " << p.degree << "  [" << p.lo.str() << ", " << p.hi.str() << ")\n";
    return os.str();
}

} // namespace shb::plot

#include "shb/cli.hpp"

#include "shb/errors.hpp"
#include "shb/io.hpp"
#include "shb/plot.hpp"
#include "shb/tamarkin.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace shb::cli {

namespace {

using io::json;

std::uint32_t default_field() {
    const char* env = std::getenv("SHB_FIELD_CHAR");
    if (!env || !*env) return 2;
    try {
        return static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception&) {
        throw ValidationError(std::string("SHB_FIELD_CHAR is not a number: ") + env);
    }
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::string output;
    std::string format = "json";
    std::uint32_t field = 2;

    std::string slurp(const std::string& path) const {
        if (path == "-") {
            std::ostringstream os;
            os << in.rdbuf();
            return os.str();
        }
        std::ifstream f(path);
        if (!f) throw ValidationError("cannot open input file '" + path + "'");
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    }

    json read_json(const std::string& path) const {
        std::istringstream is(slurp(path));
        return io::parse(is);
    }

    void emit(const std::string& payload) const {
        if (output.empty()) {
            out << payload;
            return;
        }
        std::ofstream f(output);
        if (!f) throw ValidationError("cannot write output file '" + output + "'");
        f << payload;
    }

    void emit_barcode(const GradedBarcode& b) const {
        if (format == "svg") emit(plot::svg(b));
        else if (format == "text") emit(plot::text(b));
        else emit(io::dump(io::to_json(b)));
    }

    void emit_json(const json& j) const {
        if (format == "svg") throw ValidationError("this result has no SVG rendering");
        if (format == "text") emit(j.dump(2) + "\n");
        else emit(io::dump(j));
    }
};

json ext_json(const ExtQ& v) { return v.str(); }

Q parse_q(const std::string& s) { return parse_rational(s); }

bool is_symbolic(const json& j) {
    if (!j.is_object() || !j.contains("bars")) return false;
    for (const auto& b : j.at("bars"))
        for (const char* k : {"lo", "hi"})
            if (b.contains(k) && b.at(k).contains("v") && b.at(k).at("v").is_object()) return true;
    return false;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Barcode calculus for constructible sheaves over the real line", "shb"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{in, out, "", "json", 2};
    std::uint32_t field = 0;
    app.add_option("-o,--output", ctx.output, "Write the result to this file instead of stdout");
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "svg", "text"}));
    app.add_option("--field", field, "Field characteristic (default: SHB_FIELD_CHAR or 2)");

    std::function<void()> action;

    // barcode
    auto* bc = app.add_subcommand("barcode", "Read, canonicalize and query a barcode");
    std::string bc_file = "-", bc_stalk, bc_convert;
    bool bc_torsion = false, bc_capacity = false, bc_spec = false;
    bc->add_option("file", bc_file, "Barcode JSON ('-' for stdin)");
    bc->add_option("--stalk", bc_stalk, "Graded stalk dimensions at t");
    bc->add_option("--convert", bc_convert, "Convert to the other homogeneous convention")
        ->check(CLI::IsMember({"left-closed", "right-closed"}));
    bc->add_flag("--torsion", bc_torsion, "Supremum of bar lengths");
    bc->add_flag("--capacity", bc_capacity, "Capacity of the barcode");
    bc->add_flag("--spec", bc_spec, "Endpoint values where stalks jump");
    bc->callback([&] {
        action = [&] {
            auto b = io::barcode_from_json(ctx.read_json(bc_file));
            if (!bc_stalk.empty()) return ctx.emit_json(io::to_json(stalk(b, parse_q(bc_stalk))));
            if (bc_torsion) return ctx.emit_json({{"torsion", ext_json(torsion(b))}});
            if (bc_capacity) return ctx.emit_json({{"capacity", ext_json(capacity(b))}});
            if (bc_spec) {
                json s = json::array();
                for (const auto& v : spec(b)) s.push_back(to_string(v));
                return ctx.emit_json({{"spec", s}});
            }
            if (!bc_convert.empty()) return ctx.emit_barcode(convert_convention(b, parse_convention(bc_convert)));
            ctx.emit_barcode(b);
        };
    });

    // ops
    auto* ops = app.add_subcommand("ops", "Sheaf operations on barcodes");
    std::string op, op_a, op_b, op_by;
    ops->add_option("op", op, "Operation")
        ->required()
        ->check(CLI::IsMember({"convolve", "convolve_np", "hom_star", "adjoint", "rhom_total", "rhom_sheaf", "shift_t",
                               "shift_deg", "reflect", "phi", "psi", "torsion", "capacity", "capacity_prime", "tau_rank"}));
    ops->add_option("a", op_a, "First barcode JSON")->required();
    ops->add_option("b", op_b, "Second barcode JSON");
    ops->add_option("--by", op_by, "Shift amount (shift_t, shift_deg) or threshold (tau_rank)");
    ops->callback([&] {
        action = [&] {
            auto a = io::barcode_from_json(ctx.read_json(op_a));
            auto second = [&] {
                if (op_b.empty()) throw ValidationError("operation '" + op + "' needs two barcodes");
                return io::barcode_from_json(ctx.read_json(op_b));
            };
            auto by = [&] {
                if (op_by.empty()) throw ValidationError("operation '" + op + "' needs --by");
                return parse_q(op_by);
            };
            if (op == "convolve") return ctx.emit_barcode(convolve(a, second()));
            if (op == "convolve_np") return ctx.emit_barcode(convolve_np(a, second()));
            if (op == "hom_star") return ctx.emit_barcode(hom_star(a, second()));
            if (op == "rhom_sheaf") return ctx.emit_barcode(rhom_sheaf(a, second()));
            if (op == "rhom_total") return ctx.emit_json(io::to_json(rhom_total(a, second())));
            if (op == "adjoint") return ctx.emit_barcode(adjoint(a));
            if (op == "reflect") return ctx.emit_barcode(reflect(a));
            if (op == "phi") return ctx.emit_barcode(phi(a));
            if (op == "psi") return ctx.emit_barcode(psi(a));
            if (op == "shift_t") return ctx.emit_barcode(shift_t(a, by()));
            if (op == "shift_deg") {
                Q k = by();
                if (boost::multiprecision::denominator(k) != 1) throw ValidationError("degree shift must be an integer");
                return ctx.emit_barcode(shift_deg(a, static_cast<int>(boost::multiprecision::numerator(k))));
            }
            if (op == "torsion") return ctx.emit_json({{"torsion", ext_json(torsion(a))}});
            if (op == "capacity") return ctx.emit_json({{"capacity", ext_json(capacity(a))}});
            if (op == "capacity_prime") return ctx.emit_json({{"capacity_prime", ext_json(capacity_prime(a))}});
            ctx.emit_json(io::to_json(tau_rank(a, by())));
        };
    });

    // dist
    auto* dist = app.add_subcommand("dist", "Bottleneck distance with a matching witness");
    std::string d_a, d_b, d_delta;
    bool d_brute = false;
    dist->add_option("a", d_a, "First barcode, or {\"b1\":...,\"b2\":...}")->required();
    dist->add_option("b", d_b, "Second barcode");
    dist->add_option("--delta", d_delta, "Test a specific delta instead of computing the distance");
    dist->add_flag("--brute", d_brute, "Also decide interleaving by exhaustive search over F_2");
    dist->callback([&] {
        action = [&] {
            GradedBarcode b1, b2;
            if (d_b.empty()) {
                auto j = ctx.read_json(d_a);
                if (!j.contains("b1") || !j.contains("b2")) throw ValidationError("expected an object with b1 and b2");
                b1 = io::barcode_from_json(j.at("b1"));
                b2 = io::barcode_from_json(j.at("b2"));
            } else {
                b1 = io::barcode_from_json(ctx.read_json(d_a));
                b2 = io::barcode_from_json(ctx.read_json(d_b));
            }
            json r;
            if (!d_delta.empty()) {
                Q delta = parse_q(d_delta);
                auto m = delta_matched(b1, b2, delta);
                r["delta"] = to_string(delta);
                r["matched"] = m.matched;
                r["witness"] = m.witness ? io::to_json(*m.witness) : json(nullptr);
                if (d_brute) r["brute_interleaved"] = brute_interleave(b1, b2, delta);
                return ctx.emit_json(r);
            }
            ExtQ d = bottleneck(b1, b2);
            r["bottleneck"] = ext_json(d);
            if (d.finite()) {
                r["witness"] = io::to_json(*delta_matched(b1, b2, d.value()).witness);
                if (d_brute) r["brute_interleaved"] = brute_interleave(b1, b2, d.value());
            } else {
                r["witness"] = nullptr;
            }
            ctx.emit_json(r);
        };
    });

    // morse
    auto* morse = app.add_subcommand("morse", "Barcodes of a function on a simplicial complex");
    std::string m_file = "-", m_route = "sublevel", m_input = "auto";
    bool m_bound = false;
    morse->add_option("file", m_file, "Complex in JSON or text form ('-' for stdin)");
    morse->add_option("--route", m_route, "Which barcode to compute")
        ->check(CLI::IsMember({"sublevel", "superlevel", "sheaf", "sheaf-raw"}));
    morse->add_option("--input", m_input, "Input format")->check(CLI::IsMember({"auto", "json", "text"}));
    morse->add_flag("--bound", m_bound, "Report the two-critical-point C0 bound of the sublevel barcode");
    morse->callback([&] {
        action = [&] {
            const std::string raw = ctx.slurp(m_file);
            std::size_t first = raw.find_first_not_of(" \t\r\n");
            const bool as_json = m_input == "json" || (m_input == "auto" && first != std::string::npos && raw[first] == '{');
            std::istringstream is(raw);
            io::MorseInput mi = as_json ? io::morse_from_json(io::parse(is)) : io::morse_from_text(is);
            if (m_bound)
                return ctx.emit_json(
                    {{"c0_bound", to_string(c0_two_critical_bound(sublevel_barcode(mi.complex, mi.values, ctx.field)))}});
            if (m_route == "sublevel") return ctx.emit_barcode(sublevel_barcode(mi.complex, mi.values, ctx.field));
            if (m_route == "superlevel") return ctx.emit_barcode(superlevel_barcode(mi.complex, mi.values, ctx.field));
            if (m_route == "sheaf-raw") return ctx.emit_barcode(sheaf_route_barcode(mi.complex, mi.values, ctx.field));
            if (!mi.complex.is_closed_manifold())
                throw ValidationError("the duality reindexing needs a closed manifold; use --route sheaf-raw");
            ctx.emit_barcode(lefschetz_reindex(sheaf_route_barcode(mi.complex, mi.values, ctx.field), mi.complex.dimension()));
        };
    });

    // domain
    auto* dom = app.add_subcommand("domain", "Invariants of balls and ellipsoids");
    std::string kind, dn = "1", dr = "1", dR, dc = "1", tmax = "3pi", d_stalk, d_inv, d_json;
    int eigen_m = 0;
    dom->add_option("kind", kind, "ball, ellipsoid or scaled-ball")->check(CLI::IsMember({"ball", "ellipsoid", "scaled-ball"}));
    dom->add_option("--spec-json", d_json, "Domain spec JSON file instead of flags");
    dom->add_option("--n", dn, "Complex dimension");
    dom->add_option("--r", dr, "Radius (small radius for ellipsoids)");
    dom->add_option("--R", dR, "Large ellipsoid radius");
    dom->add_option("--c", dc, "Scale factor of a scaled ball");
    dom->add_option("--tmax", tmax, "Upper action for the barcode, e.g. 3pi");
    dom->add_option("--stalk", d_stalk, "Stalk at action T");
    dom->add_option("--invariant", d_inv, "Sheaf invariant S_T at action T");
    dom->add_option("--eigen-count", eigen_m, "Eigenvalue count with M steps at --stalk T (balls only)");
    dom->callback([&] {
        action = [&] {
            DomainSpec d;
            if (!d_json.empty()) {
                d = io::domain_from_json(ctx.read_json(d_json));
            } else {
                if (kind.empty()) throw ValidationError("give a domain kind or --spec-json");
                json j;
                if (kind == "ball") j = {{"ball", {{"n", dn}, {"r", dr}}}};
                else if (kind == "ellipsoid") {
                    if (dR.empty()) throw ValidationError("ellipsoid needs --R");
                    j = {{"ellipsoid", {{"n", dn}, {"r", dr}, {"R", dR}}}};
                } else {
                    j = {{"scaled_ball", {{"c", dc}, {"ball", {{"n", dn}, {"r", dr}}}}}};
                }
                d = io::domain_from_json(j);
            }
            if (eigen_m > 0) {
                if (d_stalk.empty()) throw ValidationError("--eigen-count needs --stalk T");
                const auto areas = d.areas();
                const PiRational t = PiRational::parse(d_stalk);
                int total = 0;
                for (const auto& a : areas) total += eigen_count_area(t, a, eigen_m);
                return ctx.emit_json({{"T", io::to_json(t)}, {"M", eigen_m}, {"degree", total}});
            }
            if (!d_stalk.empty()) return ctx.emit_json(io::to_json(domain_stalk(d, PiRational::parse(d_stalk))));
            if (!d_inv.empty()) return ctx.emit_json(io::to_json(sheaf_invariant(d, PiRational::parse(d_inv))));
            auto b = domain_barcode(d, PiRational::parse(tmax));
            auto areas = d.areas();
            if (ctx.format == "svg") return ctx.emit(plot::svg(b, *std::min_element(areas.begin(), areas.end())));
            if (ctx.format == "text") return ctx.emit(plot::text(b));
            ctx.emit(io::dump(io::to_json(b)));
        };
    });

    // nonsqueeze
    auto* ns = app.add_subcommand("nonsqueeze", "Ball-into-cylinder obstruction from the sheaf invariant");
    std::string n_n = "2", n_r1, n_r2, n_R = "10";
    ns->add_option("--n", n_n, "Complex dimension");
    ns->add_option("--r1", n_r1, "Ball radius")->required();
    ns->add_option("--r2", n_r2, "Cylinder radius")->required();
    ns->add_option("--R", n_R, "Large ellipsoid radius approximating the cylinder");
    ns->callback([&] {
        action = [&] {
            Q n = parse_q(n_n);
            if (boost::multiprecision::denominator(n) != 1) throw ValidationError("--n must be an integer");
            auto v = nonsqueeze_check(static_cast<int>(boost::multiprecision::numerator(n)), parse_q(n_r1), parse_q(n_r2),
                                      parse_q(n_R));
            ctx.emit_json(io::to_json(v));
        };
    });

    // plot
    auto* pl = app.add_subcommand("plot", "Render a barcode as SVG or text");
    std::string p_file = "-", p_area;
    pl->add_option("file", p_file, "Barcode JSON, numeric or symbolic");
    pl->add_option("--area", p_area, "For symbolic barcodes: tick spacing pi*area, labelled in units of pi r^2");
    pl->callback([&] {
        action = [&] {
            auto j = ctx.read_json(p_file);
            const bool text = ctx.format == "text";
            if (is_symbolic(j)) {
                auto b = io::pi_barcode_from_json(j);
                std::optional<Q> area;
                if (!p_area.empty()) area = parse_q(p_area);
                return ctx.emit(text ? plot::text(b) : plot::svg(b, area));
            }
            auto b = io::barcode_from_json(j);
            ctx.emit(text ? plot::text(b) : plot::svg(b));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        ctx.field = field ? field : default_field();
        if (!is_prime(ctx.field)) throw ValidationError("field characteristic must be prime, got " + std::to_string(ctx.field));
        if (action) action();
        return 0;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

} // namespace shb::cli

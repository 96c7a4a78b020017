#pragma once

#include "shb/barcode.hpp"
#include "shb/pi_rational.hpp"

#include <optional>
#include <variant>

namespace shb {

struct Ball {
    int n = 1;
    Q r{1};
};
struct Ellipsoid {
    int n = 2;
    Q r{1}, R{1}; // E(r, R, ..., R) with n-1 large radii
};
struct ScaledBall {
    Q c{1};
    Ball inner;
};

struct DomainSpec {
    std::variant<Ball, Ellipsoid, ScaledBall> shape;

    void validate() const;
    int dim() const;
    // Squared radius of each complex coordinate disc (n entries).
    std::vector<Q> areas() const;
};

struct PiBar {
    PiRational lo, hi; // [lo, hi)
    int degree = 0;
    bool operator==(const PiBar&) const = default;
};

struct PiBarcode {
    std::vector<PiBar> bars;
    bool operator==(const PiBarcode&) const = default;
};

HomSpace ball_stalk(int n, const Q& r, const PiRational& t);
HomSpace ellipsoid_stalk(int n, const Q& r, const Q& R, const PiRational& t);
HomSpace domain_stalk(const DomainSpec& d, const PiRational& t);

// Number of positive eigenvalues of the discretised generating function of the
// disc of area pi*area, for action t and M steps.
int eigen_count_area(const PiRational& t, const Q& area, int M);
int eigen_count(const PiRational& t, const Q& r, int M);

// Spectral values k*pi*area below tmax, merged over all coordinate discs.
std::vector<PiRational> domain_spec(const DomainSpec& d, const PiRational& tmax);
PiBarcode domain_barcode(const DomainSpec& d, const PiRational& tmax);
HomSpace stalk(const PiBarcode& b, const PiRational& t);

HomSpace sheaf_invariant(const DomainSpec& d, const PiRational& t);
bool transfer_is_iso(const DomainSpec& d, const PiRational& t1, const PiRational& t2);
HomSpace inclusion_cone_rank(const Q& r, const Q& c, const PiRational& t, int n, int M);

struct NonsqueezeVerdict {
    bool obstructed = false;
    std::optional<PiRational> t;
    HomSpace ball_invariant, ellipsoid_invariant, cone;
    std::vector<std::string> trace;
};

NonsqueezeVerdict nonsqueeze_check(int n, const Q& r1, const Q& r2, const Q& R);

} // namespace shb

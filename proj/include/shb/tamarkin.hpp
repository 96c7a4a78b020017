#pragma once

#include "shb/barcode.hpp"

#include <optional>

namespace shb {

GradedBarcode shift_t(const GradedBarcode& f, const Q& c);
GradedBarcode shift_deg(const GradedBarcode& f, int k);

// Proper convolution.  Factors are Tamarkin-class; singletons {s} act as translation by s.
GradedBarcode convolve(const GradedBarcode& f, const GradedBarcode& g);
// Non-proper convolution on left-closed-type intervals (including (-inf,b) and R) and singletons.
GradedBarcode convolve_np(const GradedBarcode& f, const GradedBarcode& g);
// Reflection t -> -t keeping the [.,.) shape, degree d -> -d-1.
GradedBarcode adjoint(const GradedBarcode& f);
GradedBarcode hom_star(const GradedBarcode& f, const GradedBarcode& g);

HomSpace rhom_total(const GradedBarcode& f, const GradedBarcode& g);
GradedBarcode rhom_sheaf(const GradedBarcode& f, const GradedBarcode& g);

ExtQ torsion(const GradedBarcode& f);
HomSpace tau_rank(const GradedBarcode& f, const Q& c);
ExtQ capacity(const GradedBarcode& f);
ExtQ capacity_prime(const GradedBarcode& f);

// Cohomology of the real line with coefficients in the constant sheaf on a cut interval.
struct FiberCut {
    enum class Mode { Ordinary, CompactSupport };
    std::optional<Interval> interval; // empty cut when absent
    Mode mode = Mode::Ordinary;

    HomSpace cohomology() const;
};

enum class OracleKind { Proper, NonProper, HomStar };

// Stalk at t of k_i (op) k_j, computed from the fiber of the addition map.
HomSpace stalk_oracle(OracleKind kind, const Interval& i, const Interval& j, const Q& t);
// Bilinear extension over barcodes, with degrees.
HomSpace stalk_oracle(OracleKind kind, const GradedBarcode& f, const GradedBarcode& g, const Q& t);

} // namespace shb

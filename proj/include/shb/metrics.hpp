#pragma once

#include "shb/barcode.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace shb {

// Indices refer to GradedBarcode::expanded() of the respective barcode.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> erased_left, erased_right;
};

struct DeltaMatch {
    bool matched = false;
    std::optional<Matching> witness;
};

// Closed thresholds: erase bars of length <= 2 delta, move endpoints by <= delta.
DeltaMatch delta_matched(const GradedBarcode& b1, const GradedBarcode& b2, const Q& delta);
ExtQ bottleneck(const GradedBarcode& b1, const GradedBarcode& b2);
ExtQ interleaving_distance(const GradedBarcode& b1, const GradedBarcode& b2);

// Nonzero morphism of interval modules I_src -> I_dst ([.,.) bars): c <= a < d <= b.
bool module_morphism_exists(const Interval& src, const Interval& dst);

// Exhaustive search for a delta-interleaving over F_2 (at most 4 bars per degree per side).
bool brute_interleave(const GradedBarcode& b1, const GradedBarcode& b2, const Q& delta);

struct MorphismPlan {
    // (index into v.expanded(), index into w.expanded())
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

GradedBarcode cone_of_morphism(const GradedBarcode& v, const GradedBarcode& w, const MorphismPlan& plan);

struct TorsionBound {
    ExtQ bound;
    bool holds = false;
};

TorsionBound torsion_bound_check(const GradedBarcode& v, const GradedBarcode& w, const MorphismPlan& plan);

} // namespace shb

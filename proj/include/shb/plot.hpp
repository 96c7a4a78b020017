#pragma once

#include "shb/barcode.hpp"
#include "shb/symplectic.hpp"

#include <optional>
#include <string>

namespace shb::plot {

// One horizontal lane per degree. Closed ends get a filled cap, open ends a hollow one,
// infinite ends an arrow at the frame.
std::string svg(const GradedBarcode& b);
// Ticks at k * pi * area labelled "kπr²" when an area is given, otherwise at bar endpoints.
std::string svg(const PiBarcode& b, const std::optional<Q>& area = std::nullopt);
std::string text(const GradedBarcode& b);
std::string text(const PiBarcode& b);

} // namespace shb::plot

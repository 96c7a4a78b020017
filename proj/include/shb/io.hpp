#pragma once

#include "shb/metrics.hpp"
#include "shb/morse.hpp"
#include "shb/symplectic.hpp"

#include <json.hpp>

#include <istream>

namespace shb::io {

using json = nlohmann::ordered_json;

json to_json(const GradedBarcode& b);
json to_json(const HomSpace& h);
json to_json(const PiRational& v);
json to_json(const PiBarcode& b);
json to_json(const Matching& m);
json to_json(const NonsqueezeVerdict& v);

GradedBarcode barcode_from_json(const json& j);
HomSpace homspace_from_json(const json& j);
PiBarcode pi_barcode_from_json(const json& j);
DomainSpec domain_from_json(const json& j);
json to_json(const DomainSpec& d);

// Rational from a JSON string or integer.
Q rational_from_json(const json& j);

struct MorseInput {
    SimplicialComplex complex;
    VertexFunction values;
};

// JSON {"vertices": n, "values": [...], "simplices": [[...], ...]} with faces added automatically.
MorseInput morse_from_json(const json& j);
// Text form: optional "SHB" header line, then "nv ns", nv values, ns lines "k v_1 ... v_k".
// Lines starting with '#' are ignored.
MorseInput morse_from_text(std::istream& in);

json parse(std::istream& in);
// Compact, deterministic rendering followed by a newline.
std::string dump(const json& j);

} // namespace shb::io

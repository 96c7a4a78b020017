#pragma once

#include "shb/barcode.hpp"
#include "shb/fp_matrix.hpp"

#include <map>
#include <vector>

namespace shb {

// Quiver presentation of a constructible sheaf over R relative to critical values
// lambda_1 < ... < lambda_k.  Open stratum i (0..k) is (lambda_i, lambda_{i+1}) with
// lambda_0 = -inf, lambda_{k+1} = +inf.  maps[d][i] goes from the degree-d stalk at the
// sample point of open stratum i+1 to the one of stratum i (right to left).
struct StratModel {
    std::vector<Q> critical;
    std::vector<HomSpace> open_dims;   // size k+1
    std::vector<HomSpace> point_dims;  // size k
    std::map<int, std::vector<FpMatrix>> maps;
    std::uint32_t prime = 2;

    // Interior sample point of open stratum i.
    Q sample(std::size_t i) const;
    void validate() const;
};

StratModel from_barcode(const GradedBarcode& b, std::uint32_t prime = 2);
GradedBarcode decompose(const StratModel& m);

} // namespace shb

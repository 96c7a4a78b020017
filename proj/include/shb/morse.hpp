#pragma once

#include "shb/barcode.hpp"
#include "shb/strat_model.hpp"

#include <vector>

namespace shb {

struct SimplicialComplex {
    std::size_t n_vertices = 0;
    std::vector<std::vector<std::size_t>> simplices; // sorted vertex lists, dim <= 2

    // Adds every face of the given simplices (and every vertex).
    static SimplicialComplex closure(std::size_t n_vertices, const std::vector<std::vector<std::size_t>>& top);
    void validate() const;
    int dimension() const;
    bool is_closed_manifold() const;
};

SimplicialComplex make_circle(std::size_t n);
SimplicialComplex make_path(std::size_t n);
// Triangulated torus on a rows x cols vertex grid (rows, cols >= 3).
SimplicialComplex make_torus(std::size_t rows, std::size_t cols);

using VertexFunction = std::vector<Q>;

GradedBarcode sublevel_barcode(const SimplicialComplex& k, const VertexFunction& f, std::uint32_t prime = 2);
GradedBarcode superlevel_barcode(const SimplicialComplex& k, const VertexFunction& h, std::uint32_t prime = 2);

// Stalks H^q(K, {h <= t}) assembled into a stratification model.
StratModel sheaf_route_model(const SimplicialComplex& k, const VertexFunction& h, std::uint32_t prime = 2);
// Barcode of that model, in relative-cohomology degrees q.
GradedBarcode sheaf_route_barcode(const SimplicialComplex& k, const VertexFunction& h, std::uint32_t prime = 2);
// Degree q becomes n - q.
GradedBarcode lefschetz_reindex(const GradedBarcode& b, int n);

Q c0_two_critical_bound(const GradedBarcode& b);

struct FrontRegion {
    std::vector<Q> xs;
    std::vector<Q> t_minus, t_plus; // fiber over xs[i] is [-t_minus[i], t_plus[i])
    void validate() const;
};

GradedBarcode front_hom_star(const FrontRegion& f);
Q front_capacity(const FrontRegion& f);

} // namespace shb

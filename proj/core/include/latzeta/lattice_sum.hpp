#pragma once

#include "latzeta/types.hpp"

#include <functional>
#include <span>
#include <vector>

namespace latzeta {

// Cutoff w(r) = erfc((r - R0)/sigma)/2. Points with r <= R0 + 7 sigma are
// summed with weight w; the complement enters through the radial integral
// of phi (1 - w), whose Poisson error is of order exp(-(pi sigma)^2).
struct SmoothCutoff {
    double R0 = 20.0;
    double sigma = 1.8;
};

using RadialFunction = std::function<cplx(double r)>;

// sum over m in Z^nu of phi(|m + shift|), phi radial and smooth for r >= R0 - 7 sigma.
SeriesValue radial_lattice_sum(int nu, std::span<const double> shift, const RadialFunction& phi,
                               const SmoothCutoff& cut = {});

// Several radial functions over the same points; one callback fills all values.
using RadialBundle = std::function<void(double r, std::span<cplx> out)>;
std::vector<SeriesValue> radial_lattice_sums(int nu, std::span<const double> shift, std::size_t count,
                                             const RadialBundle& phi, const SmoothCutoff& cut = {});

// Area of the unit sphere S^{k}, including S^0 = 2 points.
double unit_sphere_measure(int k);

} // namespace latzeta

#include "latzeta/lattice_sum.hpp"

#include "latzeta/errors.hpp"
#include "latzeta/special.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <vector>

namespace latzeta {

double unit_sphere_measure(int k)
{
    if (k == 0) return 2.0;
    return sphere_area(k);
}

namespace {

template <class F>
void shifted_points(int nu, std::span<const double> shift, double rmax, F&& f)
{
    std::vector<double> y(static_cast<std::size_t>(nu));
    const double r2max = rmax * rmax;
    auto rec = [&](auto&& self, int j, double used) -> void {
        if (j == nu) {
            f(std::sqrt(used));
            return;
        }
        double rem = std::sqrt(std::max(0.0, r2max - used));
        double a = shift[static_cast<std::size_t>(j)];
        auto lo = static_cast<long long>(std::ceil(-a - rem));
        auto hi = static_cast<long long>(std::floor(-a + rem));
        for (long long m = lo; m <= hi; ++m) {
            double c = static_cast<double>(m) + a;
            double u = used + c * c;
            if (u > r2max) continue;
            self(self, j + 1, u);
        }
    };
    rec(rec, 0, 0.0);
}

} // namespace

std::vector<SeriesValue> radial_lattice_sums(int nu, std::span<const double> shift, std::size_t count,
                                             const RadialBundle& phi, const SmoothCutoff& cut)
{
    if (nu < 1) throw DomainError("radial_lattice_sum needs nu >= 1");
    if (shift.size() != static_cast<std::size_t>(nu)) throw DomainError("shift dimension mismatch");
    const double R0 = cut.R0, sg = cut.sigma;
    const double inner = R0 - 7.0 * sg, outer = R0 + 7.0 * sg;
    if (inner <= 0.0) throw DomainError("smooth cutoff needs R0 > 7 sigma");

    std::vector<cplx> acc(count), vals(count);
    std::vector<double> mag(count, 0.0);
    std::size_t npts = 0;
    shifted_points(nu, shift, outer, [&](double r) {
        double w = r <= inner ? 1.0 : 0.5 * std::erfc((r - R0) / sg);
        phi(r, vals);
        for (std::size_t i = 0; i < count; ++i) {
            acc[i] += w * vals[i];
            mag[i] += w * std::abs(vals[i]);
        }
        ++npts;
    });

    using Gauss = boost::math::quadrature::gauss<double, 30>;
    const double area = unit_sphere_measure(nu - 1);
    std::vector<cplx> integral(count);
    std::vector<cplx> tmp(count);
    const int panels = static_cast<int>(std::ceil((outer - inner) / sg));
    const double pw = (outer - inner) / panels;
    for (std::size_t i = 0; i < count; ++i) {
        auto edge = [&](double r) {
            phi(r, tmp);
            return std::pow(r, nu - 1) * tmp[i] * (0.5 * std::erfc((R0 - r) / sg));
        };
        cplx I{};
        for (int p = 0; p < panels; ++p) I += Gauss::integrate(edge, inner + p * pw, inner + (p + 1) * pw);
        // r = outer / u maps [outer, inf) to (0, 1]
        auto tail = [&](double u) {
            if (u <= 0.0) return cplx{};
            double r = outer / u;
            phi(r, tmp);
            return std::pow(r, nu - 1) * tmp[i] * (outer / (u * u));
        };
        I += Gauss::integrate(tail, 0.0, 0.125) + Gauss::integrate(tail, 0.125, 0.5) +
             Gauss::integrate(tail, 0.5, 1.0);
        integral[i] = area * I;
    }

    std::vector<SeriesValue> out(count);
    const double poisson = std::exp(-(pi * sg) * (pi * sg));
    for (std::size_t i = 0; i < count; ++i) {
        double scale = mag[i] + std::abs(integral[i]);
        out[i].value = acc[i] + integral[i];
        out[i].terms = npts;
        out[i].tail_estimate = scale * (poisson + 1e-15 * std::sqrt(static_cast<double>(npts) + 1.0));
    }
    return out;
}

SeriesValue radial_lattice_sum(int nu, std::span<const double> shift, const RadialFunction& phi,
                               const SmoothCutoff& cut)
{
    return radial_lattice_sums(
        nu, shift, 1, [&](double r, std::span<cplx> out) { out[0] = phi(r); }, cut)[0];
}

} // namespace latzeta

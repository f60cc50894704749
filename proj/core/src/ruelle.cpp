#include "latzeta/ruelle.hpp"

#include "latzeta/arith.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/special.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace latzeta {

Truncation Truncation::defaults_for(cplx s)
{
    Truncation tr;
    double sr = s.real();
    if (sr > 0) {
        tr.radius = std::max(8.0, 40.0 / sr);
        tr.ell_limit = static_cast<int>(std::ceil(40.0 / sr));
    }
    return tr;
}

void Truncation::validate() const
{
    if (!(radius >= 1.0)) throw DomainError("truncation radius must be >= 1");
    if (mobius_limit < 1 || ell_limit < 1) throw DomainError("truncation limits must be positive");
    if (!(tol > 0.0)) throw DomainError("truncation tol must be positive");
}

namespace {

void require_half_plane(cplx s)
{
    if (!(s.real() > 0.0)) throw DomainError("needs Re(s) > 0");
}

std::int64_t radius_sq(const Truncation& tr)
{
    return static_cast<std::int64_t>(std::ceil(tr.radius * tr.radius - 1e-9));
}

// Bound on sum_{|n|>R} e^{-sigma |n|} by shell-area comparison.
double lattice_tail(int nu, double R, double sigma)
{
    double area = unit_sphere_measure(nu - 1);
    double q = std::exp(-sigma);
    return area * std::pow(R + std::sqrt(static_cast<double>(nu)) + 1.0, nu - 1) * std::exp(-sigma * R) / (1.0 - q);
}

// -log(1 - z) with the rounding of 1 - z compensated.
cplx minus_log1m(cplx z)
{
    cplx w = 1.0 - z;
    if (w == 1.0) return z;
    return -(std::log(w) * (-z) / (w - 1.0));
}

struct ShellSums {
    const TwistedShells& sh;
    std::vector<double> root;

    explicit ShellSums(const TwistedShells& t) : sh(t), root(static_cast<std::size_t>(t.max_norm2() + 1))
    {
        for (std::size_t n = 0; n < root.size(); ++n) root[n] = std::sqrt(static_cast<double>(n));
    }

    // g(u, ell alpha) over the table
    cplx g(cplx u, std::int64_t ell) const
    {
        cplx sum{};
        for (std::int64_t n = sh.max_norm2(); n >= 1; --n) {
            if (sh.shell_empty(n)) continue;
            sum += sh.twisted_count(n, ell) * std::exp(-u * root[static_cast<std::size_t>(n)]);
        }
        return sum;
    }
};

} // namespace

SeriesValue g_direct(cplx s, const Character& chi, int nu, const Truncation& tr)
{
    require_half_plane(s);
    tr.validate();
    TwistedShells sh(nu, radius_sq(tr), chi);
    ShellSums ss(sh);
    return {ss.g(s, 1), sh.vector_count(), lattice_tail(nu, tr.radius, s.real())};
}

SeriesValue g_poisson(cplx s, const Character& chi, int nu, const Truncation& tr, const SmoothCutoff& cut)
{
    require_half_plane(s);
    tr.validate();
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    std::vector<double> shift;
    for (const auto& a : chi.alpha()) shift.push_back(to_double(a));
    const double t = 0.5 * (nu + 1);
    const double tp = 2.0 * pi;
    SeriesValue dual;
    if (s.imag() == 0.0) {
        double sr = s.real();
        dual = radial_lattice_sum(nu, shift, [&](double r) {
            return cplx(std::pow(sr * sr + tp * tp * r * r, -t), 0.0);
        }, cut);
    } else {
        dual = radial_lattice_sum(nu, shift, [&](double r) {
            return std::pow(s * s + tp * tp * r * r, -t);
        }, cut);
    }
    const double K = 2.0 * std::pow(tp, nu) / sphere_area(nu);
    SeriesValue out;
    out.value = K * s * dual.value - 1.0;
    out.terms = dual.terms;
    out.tail_estimate = K * std::abs(s) * dual.tail_estimate;
    return out;
}

SeriesValue log_G(cplx s, const Character& chi, int nu, const Truncation& tr)
{
    require_half_plane(s);
    tr.validate();
    TwistedShells sh(nu, radius_sq(tr), chi);
    ShellSums ss(sh);
    const double sr = s.real();
    cplx sum{};
    int used = 0;
    for (int l = 1; l <= tr.ell_limit; ++l) {
        if (2.0 * nu * std::exp(-l * sr) / l < 1e-22) break;
        sum += ss.g(static_cast<double>(l) * s, l) / static_cast<double>(l);
        used = l;
    }
    double q = std::exp(-sr);
    double tail = 2.0 * nu * std::pow(q, used + 1) / ((used + 1) * (1.0 - q)) +
                  lattice_tail(nu, tr.radius, sr) / (1.0 - q);
    return {sum, static_cast<std::size_t>(used) * sh.vector_count(), tail};
}

SeriesValue log_G_double_sum(cplx s, const Character& chi, int nu, const Truncation& tr)
{
    require_half_plane(s);
    tr.validate();
    const auto R2 = radius_sq(tr);
    const auto D = chi.denominator();
    const double sr = s.real();
    cplx sum{};
    std::size_t terms = 0;
    for_each_in_ball(nu, R2, [&](std::span<const std::int64_t> c, std::int64_t n2) {
        double r = std::sqrt(static_cast<double>(n2));
        auto k = chi.phase_index(c);
        for (int l = 1; l <= tr.ell_limit; ++l) {
            if (std::exp(-l * sr * r) < 1e-22) break;
            sum += unit_root(k * l, D) * std::exp(-static_cast<double>(l) * s * r) / static_cast<double>(l);
            ++terms;
        }
    });
    double q = std::exp(-sr);
    return {sum, terms, lattice_tail(nu, tr.radius, sr) / (1.0 - q)};
}

SeriesValue log_G_product(cplx s, const Character& chi, int nu, const Truncation& tr)
{
    require_half_plane(s);
    tr.validate();
    const auto R2 = radius_sq(tr);
    const auto D = chi.denominator();
    cplx sum{};
    std::size_t terms = 0;
    for_each_in_ball(nu, R2, [&](std::span<const std::int64_t> c, std::int64_t n2) {
        double r = std::sqrt(static_cast<double>(n2));
        sum += minus_log1m(unit_root(chi.phase_index(c), D) * std::exp(-s * r));
        ++terms;
    });
    double q = std::exp(-s.real());
    return {sum, terms, lattice_tail(nu, tr.radius, s.real()) / (1.0 - q)};
}

double LogLRoutes::max_delta() const
{
    return std::max({std::abs(euler.value - moebius.value), std::abs(euler.value - series.value),
                     std::abs(moebius.value - series.value)});
}

namespace {

SeriesValue route_euler(cplx s, const TwistedShells& sh, const ShellSums& ss, double tail)
{
    const auto D = sh.denominator();
    cplx sum{};
    for (std::int64_t n = sh.max_norm2(); n >= 1; --n) {
        if (sh.shell_empty(n)) continue;
        cplx e = std::exp(-s * ss.root[static_cast<std::size_t>(n)]);
        for (std::int64_t k = 0; k < D; ++k) {
            auto c = sh.primitive(n, k);
            if (c) sum += static_cast<double>(c) * minus_log1m(unit_root(k, D) * e);
        }
    }
    return {sum, sh.vector_count(), tail};
}

SeriesValue route_moebius(cplx s, const Truncation& tr, const TwistedShells& sh, const ShellSums& ss, double tail)
{
    const double sr = s.real();
    cplx sum{};
    std::size_t pairs = 0;
    for (int m = 1; m <= tr.mobius_limit; ++m) {
        int mu = moebius(static_cast<std::uint64_t>(m));
        if (2.0 * sh.nu() * std::exp(-m * sr) < 1e-22) break;
        if (mu == 0) continue;
        for (int l = 1; l <= tr.ell_limit; ++l) {
            std::int64_t k = static_cast<std::int64_t>(m) * l;
            if (2.0 * sh.nu() * std::exp(-static_cast<double>(k) * sr) / l < 1e-22) break;
            sum += static_cast<double>(mu) * ss.g(static_cast<double>(k) * s, k) / static_cast<double>(l);
            ++pairs;
        }
    }
    return {sum, pairs, tail};
}

SeriesValue route_series(cplx s, const TwistedShells& sh, const ShellSums& ss, double tail)
{
    cplx sum{};
    for (std::int64_t n = sh.max_norm2(); n >= 1; --n) {
        if (sh.shell_empty(n)) continue;
        sum += sh.twisted_gcd_weight(n) * std::exp(-s * ss.root[static_cast<std::size_t>(n)]);
    }
    return {sum, sh.vector_count(), tail};
}

double log_L_tail(int nu, const Truncation& tr, double sr)
{
    double q = std::exp(-sr);
    double cut_l = 2.0 * nu * std::pow(q, tr.ell_limit + 1) / (1.0 - q);
    return lattice_tail(nu, tr.radius, sr) / (1.0 - q) + cut_l;
}

} // namespace

SeriesValue log_L(cplx s, const Character& chi, int nu, const Truncation& tr, LogLRoute route)
{
    require_half_plane(s);
    tr.validate();
    TwistedShells sh(nu, radius_sq(tr), chi, 1.0);
    ShellSums ss(sh);
    double tail = log_L_tail(nu, tr, s.real());
    switch (route) {
    case LogLRoute::euler: return route_euler(s, sh, ss, tail);
    case LogLRoute::moebius: return route_moebius(s, tr, sh, ss, tail);
    default: return route_series(s, sh, ss, tail);
    }
}

LogLRoutes log_L_routes(cplx s, const Character& chi, int nu, const Truncation& tr)
{
    require_half_plane(s);
    tr.validate();
    TwistedShells sh(nu, radius_sq(tr), chi, 1.0);
    ShellSums ss(sh);
    double tail = log_L_tail(nu, tr, s.real());
    return {route_euler(s, sh, ss, tail), route_moebius(s, tr, sh, ss, tail), route_series(s, sh, ss, tail)};
}

double C_nu(int nu)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    return 2.0 * std::pow(2.0 * std::sqrt(pi), nu - 1) * gamma_half(nu + 1);
}

namespace {

std::vector<double> shifted_alpha(const Character& chi, int n)
{
    Character c = chi.scaled(n);
    std::vector<double> v;
    for (const auto& a : c.alpha()) v.push_back(to_double(a));
    return v;
}

} // namespace

SeriesValue phi(cplx s, const Character& chi, double t, int nu, const Truncation& tr, const SmoothCutoff& cut)
{
    require_half_plane(s);
    tr.validate();
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    if (t < 0.5 * (nu + 1)) throw DomainError("phi needs t >= (nu+1)/2");
    const double tp = 2.0 * pi;
    const cplx s2 = s * s;
    cplx sum{};
    std::size_t terms = 0;
    double last = 0.0, tail = 0.0;
    for (int n = 1; n <= tr.mobius_limit; ++n) {
        auto shift = shifted_alpha(chi, n);
        const double k = tp / n;
        auto inner = radial_lattice_sum(nu, shift, [&](double r) {
            return std::pow(s2 + k * k * r * r, -t);
        }, cut);
        cplx term = static_cast<double>(gamma_mult(static_cast<std::uint64_t>(n))) /
                    std::pow(static_cast<double>(n), nu + 1) * inner.value;
        sum += term;
        terms += inner.terms;
        last = std::abs(term);
        tail += std::abs(term) / std::max(std::abs(inner.value), 1e-300) * inner.tail_estimate;
    }
    return {sum, terms, last + tail};
}

SeriesValue log_deriv_L(cplx s, const Character& chi, int nu, const Truncation& tr, const SmoothCutoff& cut)
{
    require_half_plane(s);
    tr.validate();
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    const double tp = 2.0 * pi;
    const double sr = s.real();
    const double t1 = 0.5 * (nu + 1);
    const double c = C_nu(nu);
    const bool real_s = s.imag() == 0.0;
    const cplx s2 = s * s;
    const double nu1 = nu + 1;
    cplx sum{};
    std::size_t terms = 0;
    double err = 0.0;
    int n = 1;
    for (; n <= tr.mobius_limit; ++n) {
        // the n-th term is gamma(n) times d/du g(u, n alpha) at u = n s
        if (2.0 * nu * n * n * std::exp(-n * sr) < 1e-3 * tr.tol * 1e-3) break;
        std::int64_t gm = gamma_mult(static_cast<std::uint64_t>(n));
        if (gm == 0) continue;
        auto shift = shifted_alpha(chi, n);
        const double k = tp / n;
        SeriesValue inner;
        if (real_s) {
            const double q2 = sr * sr;
            inner = radial_lattice_sum(nu, shift, [&](double r) {
                double A = q2 + k * k * r * r;
                double p = std::pow(A, -t1);
                return cplx(p - nu1 * q2 * p / A, 0.0);
            }, cut);
        } else {
            inner = radial_lattice_sum(nu, shift, [&](double r) {
                cplx A = s2 + k * k * r * r;
                cplx p = std::pow(A, -t1);
                return p - nu1 * s2 * p / A;
            }, cut);
        }
        double w = c * static_cast<double>(gm) / std::pow(static_cast<double>(n), nu + 1);
        sum += w * inner.value;
        terms += inner.terms;
        err += std::abs(w) * inner.tail_estimate;
    }
    double tail = 2.0 * nu * n * n * std::exp(-n * sr) / (1.0 - std::exp(-sr));
    return {sum, terms, err + tail};
}

} // namespace latzeta

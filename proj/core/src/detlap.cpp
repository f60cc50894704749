#include "latzeta/detlap.hpp"

#include "latzeta/arith.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/special.hpp"

#include <cmath>

namespace latzeta {

BigRational c_coeff(int ell, int k)
{
    if (ell < 0 || k < 0 || k > ell) throw IndexError("c_coeff needs 0 <= k <= ell");
    if (k == 0 || ell == 0) return 1;
    BigInt prod = 1;
    for (int j = 1 - k; j <= k; ++j) prod *= ell + j;
    BigRational c(prod, pow(BigInt(2), static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(k)));
    c.canonicalize();
    return c;
}

LadderCoeffs ladder_coeffs(int ell)
{
    LadderCoeffs lc;
    lc.ell = ell;
    for (int k = 0; k <= ell; ++k) lc.c.push_back(c_coeff(ell, k));
    return lc;
}

namespace {

double double_factorial_odd(int n)
{
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

double fact(int n)
{
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

std::vector<double> c_table(int ell)
{
    std::vector<double> c;
    for (int k = 0; k <= ell; ++k) c.push_back(to_double(c_coeff(ell, k)));
    return c;
}

cplx P_with(const std::vector<double>& c, int ell, cplx s, double a)
{
    if (a == 0.0) return std::pow(2.0, ell + 1) * std::pow(s, 2 * ell + 1) / double_factorial_odd(2 * ell + 1);
    cplx sum{};
    for (int k = 0; k <= ell; ++k) sum += c[static_cast<std::size_t>(k)] * std::pow(a, -k) * std::pow(s, ell - k);
    return std::pow(-2.0 / a, ell + 1) * sum;
}

void require_positive(cplx s)
{
    if (!(s.real() > 0.0)) throw DomainError("needs Re(s) > 0");
}

std::int64_t det_R2(const Truncation& tr)
{
    return static_cast<std::int64_t>(std::ceil(tr.radius * tr.radius - 1e-9));
}

} // namespace

cplx P_poly(int ell, cplx s, double a)
{
    if (ell < 0) throw DomainError("P_poly needs ell >= 0");
    return P_with(c_table(ell), ell, s, a);
}

double Q_func(int ell, double s, double a)
{
    if (ell < 0) throw DomainError("Q_func needs ell >= 0");
    if (!(s > 0.0)) throw DomainError("Q_func needs s > 0");
    if (a == 0.0) return std::pow(s, 2 * ell) * std::log(s) / fact(ell);
    return ((ell + 1) % 2 ? -1.0 : 1.0) * std::pow(2.0 * s / a, ell) * bessel_K(ell, a * s);
}

Truncation det_truncation(cplx s)
{
    Truncation tr;
    tr.radius = s.real() > 0 ? std::max(6.0, 30.0 / (2.0 * pi * s.real())) : 6.0;
    return tr;
}

cplx log_det_odd(int ell, const Character& chi, cplx s, const Truncation& tr)
{
    if (ell < 0) throw DomainError("det_odd needs ell >= 0");
    require_positive(s);
    const int nu = 2 * ell + 1;
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    auto c = c_table(ell);
    cplx sum = P_with(c, ell, s, 0.0);
    const auto D = chi.denominator();
    for_each_in_ball(nu, det_R2(tr), [&](std::span<const std::int64_t> v, std::int64_t n2) {
        double r = std::sqrt(static_cast<double>(n2));
        double a = 2.0 * pi * r;
        sum += unit_root(chi.phase_index(v), D) * P_with(c, ell, s, a) * std::exp(-a * s);
    });
    return (ell % 2 ? -1.0 : 1.0) * std::pow(pi, ell + 1) * sum;
}

cplx log_det_odd(int ell, const Character& chi, cplx s) { return log_det_odd(ell, chi, s, det_truncation(s)); }

cplx det_odd(int ell, const Character& chi, cplx s, const Truncation& tr) { return std::exp(log_det_odd(ell, chi, s, tr)); }

cplx log_det_odd_shells(int ell, const Character& chi, cplx s, const Truncation& tr)
{
    if (ell < 0) throw DomainError("det_odd needs ell >= 0");
    require_positive(s);
    const int nu = 2 * ell + 1;
    auto c = c_table(ell);
    cplx sum{};
    for (std::int64_t n = 1; n <= det_R2(tr); ++n) {
        cplx r = r_twisted(nu, n, chi);
        if (r == 0.0) continue;
        double rn = std::sqrt(static_cast<double>(n));
        cplx inner{};
        for (int k = 0; k <= ell; ++k)
            inner += c[static_cast<std::size_t>(k)] * std::pow(2.0 * pi * rn, -k) * std::pow(s, ell - k);
        sum += r * std::pow(rn, -(ell + 1)) * inner * std::exp(-2.0 * pi * rn * s);
    }
    return -std::pow(-2.0 * pi, ell + 1) * std::pow(s, 2 * ell + 1) / double_factorial_odd(2 * ell + 1) - sum;
}

namespace {

double even_sum(int ell, const Character& chi, double s, const Truncation& tr)
{
    const int nu = 2 * ell;
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    const auto D = chi.denominator();
    double sum = 0.0;
    for_each_in_ball(nu, det_R2(tr), [&](std::span<const std::int64_t> v, std::int64_t n2) {
        double r = std::sqrt(static_cast<double>(n2));
        sum += unit_root(chi.phase_index(v), D).real() * std::pow(r, -ell) * bessel_K(ell, 2.0 * pi * r * s);
    });
    return sum;
}

void require_even(int ell, double s)
{
    if (ell < 1) throw DomainError("det_even needs ell >= 1");
    if (!(s > 0.0)) throw DomainError("det_even needs real s > 0");
}

} // namespace

double log_det_even(int ell, const Character& chi, double s, const Truncation& tr)
{
    require_even(ell, s);
    double lead = 2.0 * (ell % 2 ? -1.0 : 1.0) * std::pow(pi, ell) / fact(ell) * std::pow(s, 2 * ell) * std::log(s);
    return lead - 2.0 * std::pow(s, ell) * even_sum(ell, chi, s, tr);
}

double log_det_even(int ell, const Character& chi, double s) { return log_det_even(ell, chi, s, det_truncation(s)); }

double det_even(int ell, const Character& chi, double s, const Truncation& tr) { return std::exp(log_det_even(ell, chi, s, tr)); }

double log_det_even_shells(int ell, const Character& chi, double s, const Truncation& tr)
{
    require_even(ell, s);
    const int nu = 2 * ell;
    double sum = 0.0;
    for (std::int64_t n = 1; n <= det_R2(tr); ++n) {
        double r = r_twisted(nu, n, chi).real();
        if (r == 0.0) continue;
        double rn = std::sqrt(static_cast<double>(n));
        sum += r * std::pow(rn, -ell) * bessel_K(ell, 2.0 * pi * rn * s);
    }
    double lead = 2.0 * (ell % 2 ? -1.0 : 1.0) * std::pow(pi, ell) / fact(ell) * std::pow(s, 2 * ell) * std::log(s);
    return lead - 2.0 * std::pow(s, ell) * sum;
}

double log_det_even_displayed(int ell, const Character& chi, double s, const Truncation& tr)
{
    require_even(ell, s);
    double lead = 4.0 * (ell % 2 ? -1.0 : 1.0) * std::pow(pi, ell) / fact(ell - 1) * std::pow(s, 2 * ell) * std::log(s);
    return lead - 4.0 * ell * std::pow(s, ell) * even_sum(ell, chi, s, tr);
}

cplx det_dim1_exact(const BigRational& alpha, cplx s)
{
    require_positive(s);
    double a = to_double(alpha);
    cplx e = std::exp(-2.0 * pi * s);
    cplx w = std::polar(1.0, 2.0 * pi * a);
    return std::exp(2.0 * pi * s) * (1.0 - w * e) * (1.0 - std::conj(w) * e);
}

cplx det_dim1_sine(const BigRational& alpha, cplx s)
{
    double a = to_double(alpha);
    const cplx i(0.0, 1.0);
    return 4.0 * std::sin(pi * (a + i * s)) * std::sin(pi * (a - i * s));
}

SeriesValue spectral_sum(int nu, const Character& chi, double s, int j, const SmoothCutoff& cut)
{
    if (!(s > 0.0)) throw DomainError("spectral_sum needs s > 0");
    if (2 * j <= nu) throw DomainError("spectral_sum needs j > nu/2");
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    std::vector<double> shift;
    for (const auto& a : chi.alpha()) shift.push_back(to_double(a));
    const double s2 = s * s;
    return radial_lattice_sum(nu, shift, [&](double r) { return cplx(std::pow(r * r + s2, -j), 0.0); }, cut);
}

double psf_odd_rhs(int ell, const Character& chi, double s, const Truncation& tr)
{
    const int nu = 2 * ell + 1;
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    const auto D = chi.denominator();
    double sum = 1.0;
    for_each_in_ball(nu, det_R2(tr), [&](std::span<const std::int64_t> v, std::int64_t n2) {
        sum += unit_root(chi.phase_index(v), D).real() * std::exp(-2.0 * pi * s * std::sqrt(static_cast<double>(n2)));
    });
    return 2.0 * (ell % 2 ? -1.0 : 1.0) * std::pow(pi, ell + 1) * sum;
}

double psf_even_rhs(int ell, const Character& chi, double s, const Truncation& tr)
{
    const int nu = 2 * ell;
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    const auto D = chi.denominator();
    double sum = 1.0 / s;
    for_each_in_ball(nu, det_R2(tr), [&](std::span<const std::int64_t> v, std::int64_t n2) {
        double a = 2.0 * pi * std::sqrt(static_cast<double>(n2));
        sum += unit_root(chi.phase_index(v), D).real() * a * bessel_K(1, a * s);
    });
    return 2.0 * (ell % 2 ? -1.0 : 1.0) * std::pow(pi, ell) * sum;
}

namespace {

// k-th central difference of F at t with step h, O(h^2).
double central(const std::function<double(double)>& F, double t, int k, double h)
{
    double sum = 0.0, binom = 1.0;
    for (int i = 0; i <= k; ++i) {
        sum += (i % 2 ? -binom : binom) * F(t + (0.5 * k - i) * h);
        binom = binom * (k - i) / (i + 1);
    }
    return sum / std::pow(h, k);
}

} // namespace

double ladder_t_derivative(const std::function<double(double)>& f, double s, int k, double rel_step)
{
    if (!(s > 0.0)) throw DomainError("ladder operator needs s > 0");
    if (k < 0) throw DomainError("ladder order must be >= 0");
    auto F = [&](double t) { return f(std::sqrt(t)); };
    const double t = s * s;
    if (k == 0) return f(s);
    const double h = rel_step * t;
    double d1 = central(F, t, k, h), d2 = central(F, t, k, h / 2), d4 = central(F, t, k, h / 4);
    return (64.0 * d4 - 20.0 * d2 + d1) / 45.0;
}

double ladder_operator(const std::function<double(double)>& f, double s, int ell, double rel_step)
{
    return 2.0 * s * ladder_t_derivative(f, s, ell + 1, rel_step);
}

double fourier_gl(int ell, double R, double s)
{
    if (ell < 1) throw DomainError("fourier_gl needs ell >= 1");
    if (!(R > 0.0 && s > 0.0)) throw DomainError("fourier_gl needs R, s > 0");
    return 2.0 * std::pow(pi, ell + 1) * R / (fact(ell) * s) * bessel_K(1, 2.0 * pi * R * s);
}

double fourier_gl_displayed(int ell, double R, double s)
{
    if (ell < 1) throw DomainError("fourier_gl needs ell >= 1");
    if (!(R > 0.0 && s > 0.0)) throw DomainError("fourier_gl needs R, s > 0");
    return 4.0 * std::pow(pi, ell + 1) * R / (fact(ell - 1) * s) * bessel_K(1, 2.0 * pi * R * s);
}

} // namespace latzeta

#include "latzeta/special.hpp"

#include "latzeta/arith.hpp"
#include "latzeta/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace latzeta {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// B_{2k}/(2k)! for k = 1..16
const std::array<double, 17>& bernoulli_scaled()
{
    static const std::array<double, 17> t = [] {
        std::array<double, 17> a{};
        for (unsigned k = 1; k <= 16; ++k) a[k] = to_double(bernoulli(2 * k) / BigRational(factorial(2 * k)));
        return a;
    }();
    return t;
}

} // namespace

EvalResult riemann_zeta(cplx s)
{
    if (!(s.real() > 1.0)) throw DomainError("riemann_zeta needs Re(s) > 1");
    const int N = std::max(20, static_cast<int>(std::ceil(std::abs(s.imag()))));
    cplx sum{};
    for (int n = N - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    const double dN = N;
    cplx Ns = std::pow(dN, -s);
    sum += dN * Ns / (s - 1.0) + 0.5 * Ns;
    const auto& b = bernoulli_scaled();
    cplx rising = s;
    cplx Npow = Ns / dN;
    cplx term{};
    for (int k = 1; k <= 15; ++k) {
        term = b[static_cast<std::size_t>(k)] * rising * Npow;
        sum += term;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        Npow /= dN * dN;
    }
    cplx next = b[16] * rising * Npow;
    double err = std::abs(next) + 4 * eps * N * std::abs(sum);
    return {sum, err};
}

double zeta(double s) { return riemann_zeta(cplx(s, 0.0)).value.real(); }

namespace {

// Cohen-Villegas-Zagier acceleration of sum_k (-1)^k (2k+1)^{-s}.
cplx cvz_L4(cplx s, int n)
{
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d;
    cplx sum{};
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(2.0 * k + 1.0, -s);
        b = static_cast<double>(k + n) * static_cast<double>(k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

} // namespace

EvalResult dirichlet_L4(cplx s)
{
    if (!(s.real() > 0.0)) throw DomainError("dirichlet_L4 needs Re(s) > 0");
    int n = 48 + static_cast<int>(std::ceil(1.5 * std::abs(s.imag())));
    cplx v = cvz_L4(s, n);
    cplx w = cvz_L4(s, n - 12);
    return {v, std::abs(v - w) + 8 * eps * std::abs(v)};
}

double L4(double s) { return dirichlet_L4(cplx(s, 0.0)).value.real(); }

namespace {

// J_0 .. J_nmax at x >= 0 by Miller's backward recurrence,
// normalized by J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> bessel_J_miller(int nmax, double x)
{
    std::vector<double> out(static_cast<std::size_t>(nmax + 1), 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    int M = static_cast<int>(x + 40.0 + 12.0 * std::cbrt(x)) + nmax;
    if (M % 2) ++M;
    double jp1 = 0.0, j = 1e-300, norm = 0.0;
    for (int k = M; k >= 1; --k) {
        double jm1 = 2.0 * k / x * j - jp1;
        jp1 = j;
        j = jm1;
        if (k - 1 <= nmax) out[static_cast<std::size_t>(k - 1)] = j;
        if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            for (auto& o : out) o *= 1e-250;
        }
    }
    norm += j;
    for (auto& o : out) o /= norm;
    return out;
}

} // namespace

double bessel_J(int n, double x)
{
    if (!std::isfinite(x)) throw DomainError("bessel_J needs finite x");
    int an = std::abs(n);
    double v = bessel_J_miller(an, std::abs(x))[static_cast<std::size_t>(an)];
    int sign = 1;
    if (x < 0 && an % 2) sign = -sign;
    if (n < 0 && an % 2) sign = -sign;
    return sign * v;
}

double bessel_J0(double x) { return bessel_J(0, x); }
double bessel_J1(double x) { return bessel_J(1, x); }

EvalResult bessel_K_eval(int ell, double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_K needs x > 0");
    const double l = std::abs(ell);
    // K_l(x) = int_0^inf e^{-x cosh t} cosh(l t) dt; the log of the integrand keeps small x finite
    const double shift = x * std::cosh(std::asinh(l / x)) - l * std::asinh(l / x);
    auto f = [&](double t) { return std::exp(-x * std::cosh(t) + l * t + shift) * 0.5 * (1.0 + std::exp(-2.0 * l * t)); };
    double h = std::min(0.25, 0.5 / std::sqrt(x));
    const double peak = std::asinh(l / x);
    double tmax = h;
    while (!(tmax > peak && f(tmax) < 1e-20)) tmax += h;
    int n = static_cast<int>(std::ceil(tmax / h));
    double sum = 0.5 * f(0.0);
    for (int k = 1; k <= n; ++k) sum += f(k * h);
    double value = h * sum, diff = 0.0;
    for (int level = 0; level < 12; ++level) {
        double mid = 0.0;
        for (int k = 0; k < n; ++k) mid += f((k + 0.5) * h);
        sum += mid;
        h *= 0.5;
        n *= 2;
        double next = h * sum;
        diff = std::abs(next - value);
        value = next;
        if (diff < 1e-9 * value) break;
    }
    double scale = std::exp(-shift);
    double err = (diff * diff / value + 32 * eps * value) * scale;
    return {value * scale, err};
}

double bessel_K(int ell, double x) { return bessel_K_eval(ell, x).value.real(); }

double gamma_half(int k)
{
    if (k < 1) throw DomainError("gamma_half needs k >= 1");
    double g;
    if (k % 2 == 0) {
        g = 1.0;
        for (int j = 1; j < k / 2; ++j) g *= j;
    } else {
        g = std::sqrt(pi);
        for (int j = 1; j < k; j += 2) g *= 0.5 * j;
    }
    return g;
}

double sphere_area(int nu)
{
    if (nu < 1) throw DomainError("sphere_area needs nu >= 1");
    return 2.0 * std::pow(pi, 0.5 * (nu + 1)) / gamma_half(nu + 1);
}

double ball_volume(int nu)
{
    if (nu < 1) throw DomainError("ball_volume needs nu >= 1");
    return std::pow(pi, 0.5 * nu) / gamma_half(nu + 2);
}

double bessel_integral(int lambda, int mu, double a, double b)
{
    if (!(a > 0.0 && b > 0.0)) throw DomainError("bessel_integral needs a, b > 0");
    if (!(lambda > -1 && lambda < 2 * mu + 1.5)) throw DomainError("bessel_integral outside its range");
    return std::pow(a, lambda - mu) * std::pow(b, mu) / (std::pow(2.0, mu) * gamma_half(2 * mu + 2)) *
           bessel_K(lambda - mu, a * b);
}

} // namespace latzeta

#include "latzeta/tauber.hpp"

#include "latzeta/arith.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/lattice.hpp"
#include "latzeta/special.hpp"

#include <cmath>
#include <cstdio>
#include <thread>

namespace latzeta {

namespace {

void require_abscissa(int nu, double s)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    if (!(s > 0.5 * nu)) throw DomainError("Dirichlet series needs s > nu/2");
}

// sum_{n>N} r_nu(n) n^{-s} ~ (nu/2) V_nu N^{nu/2-s}/(s-nu/2)
double lattice_series_tail(int nu, double s, std::int64_t N)
{
    double a = 0.5 * nu;
    return a * ball_volume(nu) * std::pow(static_cast<double>(N), a - s) / (s - a);
}

constexpr std::int64_t direct_terms = 20000;

} // namespace

EvalResult script_L(int nu, double s)
{
    require_abscissa(nu, s);
    auto z = [](double u) { return riemann_zeta(cplx(u, 0.0)); };
    auto l = [](double u) { return dirichlet_L4(cplx(u, 0.0)); };
    switch (nu) {
    case 2: {
        auto a = z(s), b = l(s);
        double v = 4.0 * a.value.real() * b.value.real();
        return {v, std::abs(v) * (a.est_error / std::abs(a.value) + b.est_error / std::abs(b.value))};
    }
    case 4: {
        auto a = z(s), b = z(s - 1);
        double f = 8.0 * (1.0 - std::pow(4.0, 1.0 - s));
        double v = f * a.value.real() * b.value.real();
        return {v, std::abs(v) * (a.est_error / std::abs(a.value) + b.est_error / std::abs(b.value))};
    }
    case 6: {
        auto a = z(s - 2), b = l(s), c = z(s), d = l(s - 2);
        double v1 = 16.0 * a.value.real() * b.value.real();
        double v2 = 4.0 * c.value.real() * d.value.real();
        double err = std::abs(v1) * (a.est_error / std::abs(a.value) + b.est_error / std::abs(b.value)) +
                     std::abs(v2) * (c.est_error / std::abs(c.value) + d.est_error / std::abs(d.value));
        return {v1 - v2, err};
    }
    case 8: {
        auto a = z(s), b = z(s - 3);
        double f = 16.0 * (1.0 - std::pow(2.0, 1.0 - s) + std::pow(4.0, 2.0 - s));
        double v = f * a.value.real() * b.value.real();
        return {v, std::abs(v) * (a.est_error / std::abs(a.value) + b.est_error / std::abs(b.value))};
    }
    default: {
        auto d = script_L_direct(nu, s, direct_terms);
        double tail = lattice_series_tail(nu, s, direct_terms);
        return {d.value.real() + tail, d.est_error};
    }
    }
}

EvalResult script_L_direct(int nu, double s, std::int64_t N)
{
    require_abscissa(nu, s);
    auto r = r_count_table(nu, N);
    double sum = 0.0;
    for (std::int64_t n = N; n >= 1; --n)
        if (r[static_cast<std::size_t>(n)]) sum += static_cast<double>(r[static_cast<std::size_t>(n)]) * std::pow(static_cast<double>(n), -s);
    return {sum, lattice_series_tail(nu, s, N)};
}

std::vector<std::int64_t> primitive_count_table(int nu, std::int64_t N)
{
    auto r = r_count_table(nu, N);
    std::vector<std::int64_t> p(r.size(), 0);
    for (std::int64_t l = 1; l * l <= N; ++l) {
        int mu = moebius(static_cast<std::uint64_t>(l));
        if (!mu) continue;
        std::int64_t q = l * l;
        for (std::int64_t m = 0; m * q <= N; ++m) p[static_cast<std::size_t>(m * q)] += mu * r[static_cast<std::size_t>(m)];
    }
    p[0] = 0;
    return p;
}

EvalResult script_L_tilde(int nu, double s)
{
    auto L = script_L(nu, s);
    auto z = riemann_zeta(cplx(2.0 * s, 0.0));
    double v = L.value.real() / z.value.real();
    return {v, std::abs(v) * (L.est_error / std::abs(L.value) + z.est_error / std::abs(z.value))};
}

EvalResult script_L_tilde_direct(int nu, double s, std::int64_t N)
{
    require_abscissa(nu, s);
    auto p = primitive_count_table(nu, N);
    double sum = 0.0;
    for (std::int64_t n = N; n >= 1; --n)
        if (p[static_cast<std::size_t>(n)]) sum += static_cast<double>(p[static_cast<std::size_t>(n)]) * std::pow(static_cast<double>(n), -s);
    return {sum, lattice_series_tail(nu, s, N)};
}

EvalResult D_series(int nu, double s, double x)
{
    require_abscissa(nu, s);
    if (!(x + 2.0 * s > 1.0)) throw DomainError("D_series needs x + 2s > 1");
    auto Lt = script_L_tilde(nu, s);
    auto z = riemann_zeta(cplx(x + 2.0 * s, 0.0));
    double v = Lt.value.real() * z.value.real();
    return {v, std::abs(v) * (Lt.est_error / std::abs(Lt.value) + z.est_error / std::abs(z.value))};
}

EvalResult D_series_direct(int nu, double s, double x, std::int64_t N)
{
    require_abscissa(nu, s);
    auto p = primitive_count_table(nu, N);
    std::vector<double> M(p.size(), 0.0);
    for (std::int64_t l = 1; l * l <= N; ++l) {
        double w = std::pow(static_cast<double>(l), -x);
        std::int64_t q = l * l;
        for (std::int64_t m = 1; m * q <= N; ++m) M[static_cast<std::size_t>(m * q)] += w * static_cast<double>(p[static_cast<std::size_t>(m)]);
    }
    double sum = 0.0;
    for (std::int64_t n = N; n >= 1; --n)
        if (M[static_cast<std::size_t>(n)] != 0.0) sum += M[static_cast<std::size_t>(n)] * std::pow(static_cast<double>(n), -s);
    return {sum, std::max(1.0, std::pow(static_cast<double>(N), -x)) * lattice_series_tail(nu, s, N)};
}

double partial_sum_M(int nu, std::int64_t X, double x)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    if (X < 1) throw DomainError("partial_sum_M needs X >= 1");
    auto p = primitive_count_table(nu, X);
    std::vector<long double> prefix(p.size(), 0.0L);
    __int128 acc = 0;
    for (std::size_t n = 1; n < p.size(); ++n) {
        acc += p[n];
        prefix[n] = static_cast<long double>(acc);
    }
    long double sum = 0.0L;
    for (std::int64_t l = detail::isqrt(X); l >= 1; --l)
        sum += std::pow(static_cast<long double>(l), static_cast<long double>(-x)) * prefix[static_cast<std::size_t>(X / (l * l))];
    return static_cast<double>(sum);
}

double partial_sum_M_sweep(int nu, std::int64_t X, double x, int threads)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    if (X < 1) throw DomainError("partial_sum_M needs X >= 1");
    const std::int64_t B = detail::isqrt(X);
    std::vector<double> gpow(static_cast<std::size_t>(B + 1), 0.0);
    for (std::int64_t g = 1; g <= B; ++g) gpow[static_cast<std::size_t>(g)] = std::pow(static_cast<double>(g), -x);
    std::vector<double> per_lead(static_cast<std::size_t>(2 * B + 1), 0.0);
    auto work = [&](std::int64_t first, std::int64_t stride) {
        for (std::int64_t lead = -B + first; lead <= B; lead += stride) {
            double s = 0.0;
            for_each_in_ball_slice(nu, X, lead, [&](std::span<const std::int64_t> c, std::int64_t) {
                s += gpow[static_cast<std::size_t>(vec_gcd(c))];
            });
            per_lead[static_cast<std::size_t>(lead + B)] = s;
        }
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }
    double total = 0.0;
    for (double v : per_lead) total += v;
    return total;
}

namespace {

bool is_log_regime(int nu, double x) { return std::abs(x - (1.0 - nu)) <= 1e-12; }

double zeta_at(int k)
{
    if (k % 2 == 0) {
        // zeta(2n) = (-1)^{n+1} 2^{2n-1} B_{2n} pi^{2n} / (2n)!
        int n = k / 2;
        BigRational c = bernoulli(static_cast<unsigned>(k)) * BigRational(pow(BigInt(2), static_cast<unsigned long>(k - 1))) /
                        BigRational(factorial(static_cast<unsigned long>(k)));
        return (n % 2 ? 1.0 : -1.0) * to_double(c) * std::pow(pi, k);
    }
    return zeta(k);
}

} // namespace

AsymptoticReport asymptotic_constant(int nu, double x)
{
    if (nu < 2) throw UnsupportedRegime("the asymptotic formula needs nu >= 2");
    AsymptoticReport r;
    r.nu = nu;
    r.x = x;
    const double half = 0.5 * nu;
    const double gh = gamma_half(nu);
    const double zn = zeta_at(nu);
    if (is_log_regime(nu, x)) {
        r.predicted_power = half;
        r.log_factor = true;
        r.predicted_constant = std::pow(pi, half) / (2.0 * zn * gh);
    } else if (x > 1.0 - nu) {
        r.predicted_power = half;
        r.predicted_constant = std::pow(pi, half) / (zn * gh) * zeta(nu + x);
    } else {
        if (nu != 2 && nu != 4 && nu != 6 && nu != 8)
            throw UnsupportedRegime("x < 1 - nu needs a closed form of L_nu (nu in {2,4,6,8})");
        r.predicted_power = 0.5 * (1.0 - x);
        r.predicted_constant = script_L(nu, 0.5 * (1.0 - x)).value.real() / zeta(1.0 - x);
    }
    return r;
}

double lattice_asymptotic_constant(int nu, double x)
{
    if (nu < 2) throw UnsupportedRegime("the asymptotic formula needs nu >= 2");
    const double V = ball_volume(nu);
    const double zn = zeta_at(nu);
    if (is_log_regime(nu, x)) return V / (2.0 * zn);
    if (x > 1.0 - nu) return V * zeta(nu + x) / zn;
    if (nu != 2 && nu != 4 && nu != 6 && nu != 8)
        throw UnsupportedRegime("x < 1 - nu needs a closed form of L_nu (nu in {2,4,6,8})");
    return script_L(nu, 0.5 * (1.0 - x)).value.real() / ((1.0 - x) * zeta(1.0 - x));
}

AsymptoticReport tauber_report(int nu, double x, std::int64_t X)
{
    auto r = asymptotic_constant(nu, x);
    const double dX = static_cast<double>(X);
    r.X = dX;
    r.observed = partial_sum_M(nu, X, x);
    double pred = r.predicted_constant * std::pow(dX, r.predicted_power);
    if (r.log_factor) pred *= std::log(dX);
    r.ratio = r.observed / pred;
    return r;
}

BigRational beta_coefficient(int ell, Parity parity)
{
    if (ell < 1) throw DomainError("beta needs ell >= 1");
    const auto l = static_cast<unsigned long>(ell);
    if (parity == Parity::even) {
        BigRational b = BigRational(factorial(2 * l)) /
                        (BigRational(factorial(l - 1)) * BigRational(pow(BigInt(2), 2 * l - 1)) * bernoulli(2 * static_cast<unsigned>(l)));
        if (ell % 2 == 0) b = -b;
        b.canonicalize();
        return b;
    }
    BigInt dfact = 1;
    for (unsigned long k = 2 * l - 1; k > 1; k -= 2) dfact *= k;
    BigRational b = BigRational(pow(BigInt(2), 3 * l + 1)) * bernoulli(2 * static_cast<unsigned>(l) + 2) /
                    (BigRational(dfact) * BigRational(factorial(2 * l + 2)));
    if (ell % 2) b = -b;
    b.canonicalize();
    return b;
}

double bernoulli_constant(int ell, Parity parity)
{
    double b = to_double(beta_coefficient(ell, parity));
    if (parity == Parity::even) return b * zeta(2 * ell + 1) / std::pow(pi, ell);
    return b * std::pow(pi, 3 * ell + 2) / zeta(2 * ell + 1);
}

std::string report_csv_header() { return "nu,x,X,observed,predicted,ratio"; }

std::string report_csv_row(const AsymptoticReport& r)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g", r.nu, r.x, r.X, r.observed,
                  r.predicted_constant, r.ratio);
    return buf;
}

} // namespace latzeta

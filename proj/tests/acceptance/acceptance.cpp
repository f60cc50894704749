#include "latzeta/arith.hpp"
#include "latzeta/boundary.hpp"
#include "latzeta/detlap.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/lattice.hpp"
#include "latzeta/ruelle.hpp"
#include "latzeta/special.hpp"
#include "latzeta/tauber.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "quadrature.hpp"

using namespace latzeta;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

int hardware_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome closed_forms()
{
    long bad = 0;
    for (int nu : {2, 4, 6, 8}) {
        auto table = r_count_table(nu, 10000);
        for (std::int64_t n = 1; n <= 10000; ++n)
            if (r_closed(nu, n) != table[static_cast<std::size_t>(n)]) ++bad;
    }
    return {bad == 0, std::to_string(bad) + " mismatches over 4x10^4 values"};
}

Outcome gamma_identity()
{
    const std::uint64_t N = 100000;
    std::vector<std::int64_t> lhs(N + 1, 0);
    for (std::uint64_t m = 1; m <= N; ++m) {
        int mu = moebius(m);
        if (!mu) continue;
        for (std::uint64_t k = m; k <= N; k += m) lhs[k] += static_cast<std::int64_t>(m) * mu;
    }
    long bad = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        std::int64_t rhs = 1;
        for (auto [p, e] : factorize(n)) rhs *= 1 - static_cast<std::int64_t>(p);
        if (lhs[n] != rhs) ++bad;
    }
    return {bad == 0, std::to_string(bad) + " mismatches for n <= 10^5"};
}

Outcome key_lemma()
{
    long checked = 0, bad = 0;
    for (int nu : {2, 4, 8})
        for (std::uint64_t p = 2; p <= 101; ++p) {
            if (!is_prime(p)) continue;
            for (unsigned e = 0; e <= 5; ++e) {
                auto r = key_lemma_sides(nu, p, e);
                ++checked;
                if (!r.distinct || r.lhs == r.rhs || r.lhs <= 0 || r.rhs <= 0) ++bad;
            }
        }
    bool anchors = true;
    for (unsigned e = 0; e <= 5; ++e) {
        auto r = key_lemma_sides(2, 2, e);
        anchors = anchors && r.lhs == BigRational(4, 7) && r.rhs == 4;
    }
    auto r4 = key_lemma_sides(4, 2, 0);
    anchors = anchors && r4.lhs == BigRational(24, 31);
    std::ostringstream os;
    os << checked << " cases, " << bad << " equal; anchors 4/7, 4, 24/31 " << (anchors ? "exact" : "WRONG");
    return {bad == 0 && anchors, os.str()};
}

Outcome nonvanishing()
{
    struct Job {
        int nu;
        std::uint64_t m, n;
    };
    std::vector<Job> jobs;
    for (int nu : {2, 4, 8})
        for (std::uint64_t m = 1; m <= 20; ++m)
            for (std::uint64_t n = 1; n <= 20; ++n)
                if (std::gcd(m, n) == 1) jobs.push_back({nu, m, n});
    std::vector<char> ok(jobs.size(), 0);
    std::vector<double> err(jobs.size(), 0.0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            auto c = certify_nonvanishing(jobs[i].nu, jobs[i].m, jobs[i].n, 100);
            err[i] = rel(c.factored_value, c.series_value);
            ok[i] = c.verdict && err[i] < 1e-6;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < hardware_threads(); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    auto failed = std::count(ok.begin(), ok.end(), 0);
    double worst = *std::max_element(err.begin(), err.end());
    return {failed == 0, std::to_string(jobs.size()) + " certificates, " + std::to_string(failed) +
                             " failed, worst factored/series rel " + fmt("%.1e", worst)};
}

std::vector<Character> char_grid(int nu)
{
    return {Character::trivial(nu), Character::uniform(nu, BigRational(1, 3)), Character::uniform(nu, BigRational(1, 2))};
}

Outcome poisson()
{
    double worst = 0.0;
    bool ok = true;
    for (int nu : {1, 2, 3})
        for (double s : {0.8, 1.5, 3.0})
            for (const auto& chi : char_grid(nu)) {
                Truncation tr = Truncation::defaults_for(s);
                auto d = g_direct(s, chi, nu, tr);
                auto p = g_poisson(s, chi, nu, tr);
                double diff = std::abs(d.value - p.value);
                worst = std::max(worst, diff);
                if (!(diff < 1e-8) || diff > d.tail_estimate + p.tail_estimate + 1e-12) ok = false;
            }
    double coth_worst = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        double s = 2 * pi * t;
        auto p = g_poisson(s, Character::trivial(1), 1, Truncation::defaults_for(s));
        coth_worst = std::max(coth_worst, std::abs(1.0 + p.value.real() - 1.0 / std::tanh(pi * t)));
    }
    ok = ok && coth_worst < 1e-10;
    return {ok, "max |direct-poisson| " + fmt("%.1e", worst) + ", coth " + fmt("%.1e", coth_worst)};
}

Outcome three_routes()
{
    double worst = 0.0, worst_deriv = 0.0;
    for (int nu : {1, 2, 3})
        for (double s : {0.8, 1.5, 3.0})
            for (const auto& chi : char_grid(nu)) {
                Truncation tr = Truncation::defaults_for(s);
                worst = std::max(worst, log_L_routes(s, chi, nu, tr).max_delta());
                const double h = 1e-3 * s;
                auto f = [&](double u) { return log_L(u, chi, nu, tr).value; };
                cplx fd = (f(s - 2 * h) - 8.0 * f(s - h) + 8.0 * f(s + h) - f(s + 2 * h)) / (12.0 * h);
                cplx ld = log_deriv_L(s, chi, nu, tr).value;
                worst_deriv = std::max(worst_deriv, std::abs(ld - fd) / std::abs(fd));
            }
    return {worst < 1e-8 && worst_deriv < 1e-5,
            "max route delta " + fmt("%.1e", worst) + ", log-derivative vs FD rel " + fmt("%.1e", worst_deriv)};
}

Outcome dim1_identity()
{
    double worst = 0.0;
    for (auto a : {BigRational(0), BigRational(1, 4), BigRational(1, 3), BigRational(1, 2)})
        for (double s : {0.5, 1.0, 2.0}) {
            Character chi(std::vector<BigRational>{a});
            cplx d = det_odd(0, chi, s, det_truncation(s));
            cplx e = det_dim1_exact(a, s);
            cplx w = det_dim1_sine(a, s);
            worst = std::max({worst, std::abs(d - e) / std::abs(e), std::abs(w - e) / std::abs(e)});
        }
    return {worst < 1e-12, "max rel " + fmt("%.1e", worst) + " on 4x3 grid"};
}

Outcome ladders()
{
    long bad = 0;
    for (int ell = 1; ell <= 20; ++ell)
        for (int k = 1; k <= ell; ++k) {
            BigRational prev = k <= ell - 1 ? c_coeff(ell - 1, k) : BigRational(0);
            if (c_coeff(ell, k) - prev != BigRational(ell - k + 1) * c_coeff(ell, k - 1)) ++bad;
        }
    double wp = 0.0, wq = 0.0, wd = 0.0;
    for (int ell : {1, 2}) {
        const double a = 2 * pi, s = 1.3;
        auto f = [&](double u) { return (std::exp(-a * u) * P_poly(ell, u, a)).real(); };
        wp = std::max(wp, rel(ladder_operator(f, s, ell), 2 * std::exp(-a * s)));
        for (double aq : {1.0, 2 * pi}) {
            auto q = [&](double u) { return Q_func(ell, u, aq); };
            wq = std::max(wq, rel(ladder_operator(q, 1.2, ell), aq * bessel_K(1, aq * 1.2)));
        }
    }
    for (const auto& chi : char_grid(2))
        for (double s : {0.8, 1.2}) {
            auto f = [&](double u) { return log_det_even(1, chi, u); };
            double sp = spectral_sum(2, chi, s, 2).value.real();
            wd = std::max(wd, rel(ladder_t_derivative(f, s, 2), -sp));
        }
    for (const auto& chi : char_grid(3))
        for (double s : {0.8, 1.2}) {
            auto f = [&](double u) { return log_det_odd(1, chi, u).real(); };
            double sp = spectral_sum(3, chi, s, 2).value.real();
            wd = std::max(wd, rel(ladder_t_derivative(f, s, 2), -sp));
        }
    std::ostringstream os;
    os << bad << " c-recursion failures; P ladder rel " << fmt("%.1e", wp) << ", Q ladder rel " << fmt("%.1e", wq)
       << ", log det vs spectral sum rel " << fmt("%.1e", wd);
    return {bad == 0 && wp < 1e-4 && wq < 1e-4 && wd < 1e-4, os.str()};
}

Outcome bessel_layer()
{
    bool sym = true;
    for (int l = 0; l <= 6; ++l)
        for (double x : {0.3, 1.0, 4.0}) sym = sym && bessel_K(-l, x) == bessel_K(l, x);
    double small = std::abs(1e-6 * bessel_K(1, 1e-6) - 1.0);

    // (for:Bessel-int) at lambda=0, mu=1, a=1, b=2 pi, and at lambda=1, mu=2, a=0.7, b=3
    double wi = 0.0;
    struct Case {
        int lambda, mu;
        double a, b;
    };
    for (Case c : {Case{0, 1, 1.0, 2 * pi}, Case{1, 2, 0.7, 3.0}, Case{2, 2, 1.3, 2.0}}) {
        auto f = [&](double x) {
            return std::pow(x, c.lambda + 1) * boost::math::cyl_bessel_j(c.lambda, c.b * x) /
                   std::pow(x * x + c.a * c.a, c.mu + 1);
        };
        double q = oscillatory_integral(f, pi / c.b);
        wi = std::max(wi, rel(q, bessel_integral(c.lambda, c.mu, c.a, c.b)));
    }

    // (for:glR): radial Fourier transform on R^{2l}
    double wg = 0.0, displayed = 0.0;
    for (int ell : {1, 2})
        for (double R : {1.0, 0.6}) {
            const double s = 1.0;
            auto f = [&](double r) {
                return std::pow(r, ell) * boost::math::cyl_bessel_j(ell - 1, 2 * pi * R * r) / std::pow(r * r + s * s, ell + 1);
            };
            double q = 2 * pi * std::pow(R, 1 - ell) * oscillatory_integral(f, 0.5 / R);
            wg = std::max(wg, rel(q, fourier_gl(ell, R, s)));
            if (ell == 1 && R == 1.0) displayed = fourier_gl_displayed(ell, R, s) / q;
        }
    std::ostringstream os;
    os << "K_-l=K_l " << (sym ? "yes" : "NO") << ", |xK1(x)-1| " << fmt("%.1e", small) << ", Bessel-int rel "
       << fmt("%.1e", wi) << ", gl rel " << fmt("%.1e", wg) << " (displayed constants give ratio "
       << fmt("%.3f", displayed) << ")";
    return {sym && small < 1e-5 && wi < 1e-8 && wg < 1e-6, os.str()};
}

Outcome dirichlet_series()
{
    double wid = 0.0;
    for (int nu : {2, 3, 4, 6, 8})
        for (double ds : {0.3, 1.0, 2.5})
            for (double x : {0.0, 1.0, -1.5, 2.0}) {
                double s = 0.5 * nu + ds;
                if (x + 2 * s <= 1) continue;
                double lhs = D_series(nu, s, x).value.real() * zeta(2 * s);
                double rhs = zeta(x + 2 * s) * script_L(nu, s).value.real();
                wid = std::max(wid, rel(lhs, rhs));
            }
    double wl = 0.0;
    for (int nu : {2, 4, 6, 8}) {
        double s = 0.5 * nu + 2.0;
        auto d = script_L_direct(nu, s, 100000);
        wl = std::max(wl, rel(d.value.real(), script_L(nu, s).value.real()));
    }
    return {wid < 1e-10 && wl < 1e-6, "D zeta(2s) vs zeta(x+2s) L rel " + fmt("%.1e", wid) +
                                          ", closed L vs direct sum (n<=10^5) rel " + fmt("%.1e", wl)};
}

Outcome tauberian()
{
    struct Case {
        int nu;
        std::int64_t X;
        double band;
    };
    bool ok = true;
    std::ostringstream os;
    for (Case c : {Case{2, 1000000, 0.02}, Case{4, 100000, 0.05}, Case{6, 100000, 0.05}, Case{3, 100000, 0.05}}) {
        auto r = tauber_report(c.nu, 1.0, c.X);
        bool pass = std::abs(r.ratio - 1.0) <= c.band;
        ok = ok && pass;
        double true_ratio = r.ratio * r.predicted_constant / lattice_asymptotic_constant(c.nu, 1.0);
        os << "(" << c.nu << ",1) ratio " << fmt("%.4f", r.ratio) << (pass ? "" : " out of band")
           << " [vs residue/abscissa constant " << fmt("%.4f", true_ratio) << "]; ";
    }
    std::string d = os.str();
    d.resize(d.size() - 2);
    return {ok, d};
}

Outcome constant_routes()
{
    double worst = 0.0;
    for (int ell = 1; ell <= 6; ++ell) {
        worst = std::max(worst, rel(bernoulli_constant(ell, Parity::even), asymptotic_constant(2 * ell, 1.0).predicted_constant));
        worst = std::max(worst, rel(bernoulli_constant(ell, Parity::odd), asymptotic_constant(2 * ell + 1, 1.0).predicted_constant));
    }
    return {worst < 1e-12, "max rel " + fmt("%.1e", worst) + " over l <= 6, both parities"};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "closed-form r_nu vs brute force", closed_forms},
        {2, "gamma identity", gamma_identity},
        {3, "key lemma certificate", key_lemma},
        {4, "nonvanishing certificates", nonvanishing},
        {5, "Poisson identity", poisson},
        {6, "three-route log L", three_routes},
        {7, "nu=1 determinant identity", dim1_identity},
        {8, "ladder verifications", ladders},
        {9, "Bessel layer", bessel_layer},
        {10, "Dirichlet-series identities", dirichlet_series},
        {11, "Tauberian averages", tauberian},
        {12, "constant-route consistency", constant_routes},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::printf("%s %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), sec);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}

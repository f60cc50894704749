#include "latzeta/arith.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/lattice.hpp"
#include "latzeta/special.hpp"
#include "latzeta/tauber.hpp"

#include "oracle_values.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace latzeta;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double v(const EvalResult& e) { return e.value.real(); }

} // namespace

TEST_SUITE("tauber")
{
    TEST_CASE("L_nu closed forms")
    {
        CHECK(rel(v(script_L(2, 3)), 4 * zeta(3) * L4(3)) < 1e-15);
        CHECK(v(script_L(2, 3)) == doctest::Approx(4.6589).epsilon(1e-4));
        CHECK(rel(v(script_L(4, 4)), 8 * (1 - std::pow(4.0, -3)) * zeta(4) * zeta(3)) < 1e-15);
        for (int nu : {2, 4, 6, 8})
            for (double ds : {1.5, 2.0, 3.0}) {
                double s = 0.5 * nu + ds;
                auto d = script_L_direct(nu, s, 100000);
                CHECK(rel(v(d), v(script_L(nu, s))) < std::max(1e-6, 2 * d.est_error / v(d)));
            }
        CHECK_THROWS_AS(script_L(4, 2.0), DomainError);
        // the generic route: nu = 3 through direct summation plus the ball-volume tail
        CHECK(rel(v(script_L(3, 4.0)), v(script_L_direct(3, 4.0, 100000))) < 1e-6);
    }

    TEST_CASE("primitive series")
    {
        CHECK(rel(v(script_L_tilde(2, 3)), 4 * zeta(3) * L4(3) / oracle::zeta_6) < 1e-13);
        CHECK(rel(v(script_L_tilde_direct(2, 3, 100000)), v(script_L_tilde(2, 3))) < 1e-6);
        CHECK(v(script_L_tilde(1, 2)) == doctest::Approx(2.0).epsilon(1e-6));
        CHECK(rel(v(script_L(1, 2)), 2 * zeta(4)) < 1e-6);
        auto p = primitive_count_table(2, 30);
        CHECK(p[4] == 0);
        CHECK(p[5] == 8);
        CHECK(p[25] == 8);
        CHECK(p[2] == 4);
    }

    TEST_CASE("D series")
    {
        CHECK(rel(v(D_series(4, 3.5, 0.0)), v(script_L(4, 3.5))) < 1e-14);
        CHECK(rel(v(D_series(2, 3, 1)), oracle::zeta_7 / oracle::zeta_6 * 4 * zeta(3) * L4(3)) < 1e-13);
        CHECK(rel(v(D_series_direct(2, 2.5, 1, 100000)), v(D_series(2, 2.5, 1))) < 1e-6);
        for (int nu : {2, 3, 4, 6, 8})
            for (double x : {-2.0, 0.5, 1.0, 3.0}) {
                double s = 0.5 * nu + 0.7;
                if (x + 2 * s <= 1) continue;
                CHECK(rel(v(D_series(nu, s, x)) * zeta(2 * s), zeta(x + 2 * s) * v(script_L(nu, s))) < 1e-10);
            }
        CHECK_THROWS_AS(D_series(2, 1.2, -2), DomainError);
    }

    TEST_CASE("partial sums")
    {
        CHECK(partial_sum_M(2, 1, 1.0) == 4);
        CHECK(partial_sum_M(2, 1, 3.0) == 4);
        CHECK(partial_sum_M(2, 4, 1.0) == doctest::Approx(10.0));
        for (int nu : {1, 2, 3, 4})
            for (double x : {-1.0, 0.0, 1.0, 2.5}) {
                const std::int64_t X = nu <= 2 ? 20000 : 2000;
                double a = partial_sum_M(nu, X, x), b = partial_sum_M_sweep(nu, X, x, 1), c = partial_sum_M_sweep(nu, X, x, 3);
                CHECK(rel(a, b) < 1e-12);
                CHECK(b == c);
            }
        // convolution route, shell by shell
        double sum = 0;
        auto chi = Character::trivial(3);
        for (std::int64_t n = 1; n <= 300; ++n) sum += M_value_convolution(3, n, chi, 1.0).real();
        CHECK(rel(partial_sum_M(3, 300, 1.0), sum) < 1e-12);
        // x = 0 counts lattice points
        double pts = partial_sum_M(3, 1000, 0.0);
        auto t = r_count_table(3, 1000);
        CHECK(pts == doctest::Approx(static_cast<double>(std::accumulate(t.begin() + 1, t.end(), std::int64_t{0}))));
    }

    TEST_CASE("lattice points fill the ball")
    {
        for (int nu : {2, 3, 4}) {
            const std::int64_t X = 100000;
            double pts = partial_sum_M(nu, X, 0.0);
            CHECK(rel(pts, ball_volume(nu) * std::pow(static_cast<double>(X), 0.5 * nu)) < 0.02);
        }
    }

    TEST_CASE("asymptotic constants as displayed")
    {
        auto a = asymptotic_constant(2, 1.0);
        CHECK(rel(a.predicted_constant, 6 * oracle::zeta_3 / pi) < 1e-14);
        CHECK(rel(a.predicted_constant, pi * oracle::zeta_3 / zeta(2)) < 1e-14);
        CHECK(a.predicted_power == 1.0);
        CHECK_FALSE(a.log_factor);
        auto b = asymptotic_constant(4, 1.0);
        CHECK(rel(b.predicted_constant, 90 * zeta(5) / (pi * pi)) < 1e-14);
        CHECK(b.predicted_power == 2.0);
        auto c = asymptotic_constant(3, 1.0);
        CHECK(rel(c.predicted_constant, std::pow(pi, 5) / (45 * oracle::zeta_3)) < 1e-14);
        CHECK(rel(c.predicted_constant, 2 * pi * zeta(4) / oracle::zeta_3) < 1e-14);
        auto d = asymptotic_constant(2, -1.0);
        CHECK(d.log_factor);
        CHECK(rel(d.predicted_constant, 3 / pi) < 1e-14);
        auto e = asymptotic_constant(2, -3.0);
        CHECK(e.predicted_power == 2.0);
        CHECK(rel(e.predicted_constant, 4 * zeta(2) * L4(2) / zeta(4)) < 1e-13);
        CHECK_THROWS_AS(asymptotic_constant(3, -5.0), UnsupportedRegime);
        CHECK_THROWS_AS(asymptotic_constant(1, 1.0), UnsupportedRegime);
    }

    TEST_CASE("residue over abscissa")
    {
        CHECK(rel(lattice_asymptotic_constant(2, 1.0), asymptotic_constant(2, 1.0).predicted_constant) < 1e-14);
        for (int nu : {3, 4, 5, 6, 8}) {
            double ratio = lattice_asymptotic_constant(nu, 1.0) / asymptotic_constant(nu, 1.0).predicted_constant;
            CHECK(rel(ratio, 2.0 / nu) < 1e-13);
        }
        CHECK(rel(lattice_asymptotic_constant(2, -3.0), asymptotic_constant(2, -3.0).predicted_constant / 4) < 1e-13);
        // the observed sums follow the residue constant
        for (auto [nu, X] : {std::pair{2, std::int64_t{200000}}, {3, 20000}, {4, 20000}}) {
            double obs = partial_sum_M(nu, X, 1.0);
            double pred = lattice_asymptotic_constant(nu, 1.0) * std::pow(static_cast<double>(X), 0.5 * nu);
            CHECK(rel(obs, pred) < 0.01);
        }
        double obs = partial_sum_M(2, 100000, -3.0);
        CHECK(rel(obs, lattice_asymptotic_constant(2, -3.0) * 1e10) < 0.01);
    }

    TEST_CASE("Bernoulli forms")
    {
        CHECK(beta_coefficient(1, Parity::even) == 6);
        CHECK(beta_coefficient(2, Parity::even) == 90);
        CHECK(rel(bernoulli_constant(1, Parity::odd), std::pow(pi, 5) / (45 * oracle::zeta_3)) < 1e-14);
        for (int l = 1; l <= 6; ++l) {
            CHECK(rel(bernoulli_constant(l, Parity::even), asymptotic_constant(2 * l, 1.0).predicted_constant) < 1e-12);
            CHECK(rel(bernoulli_constant(l, Parity::odd), asymptotic_constant(2 * l + 1, 1.0).predicted_constant) < 1e-12);
        }
    }

    TEST_CASE("reports")
    {
        auto r = tauber_report(2, 1.0, 1000);
        CHECK(r.X == 1000);
        CHECK(r.observed == doctest::Approx(partial_sum_M(2, 1000, 1.0)));
        CHECK(report_csv_header() == "nu,x,X,observed,predicted,ratio");
        auto row = report_csv_row(r);
        CHECK(row.rfind("2,1,1000,", 0) == 0);
        CHECK(std::count(row.begin(), row.end(), ',') == 5);
    }
}

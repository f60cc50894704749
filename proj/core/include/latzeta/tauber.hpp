#pragma once

#include "latzeta/rational.hpp"
#include "latzeta/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latzeta {

// L_nu(s) = sum r_nu(n) n^{-s}: closed forms for nu in {2,4,6,8}, else direct summation.
EvalResult script_L(int nu, double s);
EvalResult script_L_direct(int nu, double s, std::int64_t N);
// L_nu(s)/zeta(2s) = sum over primitive counts.
EvalResult script_L_tilde(int nu, double s);
EvalResult script_L_tilde_direct(int nu, double s, std::int64_t N);
// zeta(x+2s) zeta(2s)^{-1} L_nu(s) = sum M_nu(n, 0, x) n^{-s}.
EvalResult D_series(int nu, double s, double x);
EvalResult D_series_direct(int nu, double s, double x, std::int64_t N);

// sum_{n<=X} M_nu(n, 0, x) from representation-count tables:
// sum_l l^{-x} P(X / l^2), P the prefix sum of primitive counts.
double partial_sum_M(int nu, std::int64_t X, double x);
// The same sum by one sweep of the ball |m|^2 <= X.
double partial_sum_M_sweep(int nu, std::int64_t X, double x, int threads = 1);
// r~_nu(0..N): representation counts by primitive vectors.
std::vector<std::int64_t> primitive_count_table(int nu, std::int64_t N);

struct AsymptoticReport {
    int nu = 0;
    double x = 0.0;
    double X = 0.0;
    double observed = 0.0;
    double predicted_constant = 0.0;
    double predicted_power = 0.0;
    bool log_factor = false;
    double ratio = 0.0;
};

// Constant, power and log flag in the three regimes x <, =, > 1 - nu,
// with the constants exactly as displayed in the general-nu statement.
AsymptoticReport asymptotic_constant(int nu, double x);
// Residue over abscissa of D_nu(s;x): V_nu zeta(nu+x)/zeta(nu) for x > 1-nu,
// V_nu/(2 zeta(nu)) with the log for x = 1-nu, L_nu((1-x)/2)/((1-x) zeta(1-x)) below.
// V_nu is the volume of the unit ball.
double lattice_asymptotic_constant(int nu, double x);
AsymptoticReport tauber_report(int nu, double x, std::int64_t X);

enum class Parity { even, odd };

// beta_l for nu = 2l (even) or nu = 2l+1 (odd), exact.
BigRational beta_coefficient(int ell, Parity parity);
// Constant at x = 1 through the Bernoulli forms.
double bernoulli_constant(int ell, Parity parity);

std::string report_csv_header();
std::string report_csv_row(const AsymptoticReport& r);

} // namespace latzeta

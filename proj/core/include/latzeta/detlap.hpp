#pragma once

#include "latzeta/lattice.hpp"
#include "latzeta/lattice_sum.hpp"
#include "latzeta/rational.hpp"
#include "latzeta/ruelle.hpp"
#include "latzeta/types.hpp"

#include <functional>
#include <vector>

namespace latzeta {

struct LadderCoeffs {
    int ell = 0;
    std::vector<BigRational> c;
};

BigRational c_coeff(int ell, int k);
LadderCoeffs ladder_coeffs(int ell);

cplx P_poly(int ell, cplx s, double a);
double Q_func(int ell, double s, double a);

// Lattice cutoff for determinant sums: |n| <= max(6, 30/(2 pi Re s)).
Truncation det_truncation(cplx s);

// log of the canonical representative of det(Delta_{2l+1,alpha} + s^2).
cplx log_det_odd(int ell, const Character& chi, cplx s, const Truncation& tr);
cplx log_det_odd(int ell, const Character& chi, cplx s);
cplx det_odd(int ell, const Character& chi, cplx s, const Truncation& tr);
// Same exponent with the lattice sum regrouped by shells through r_twisted.
cplx log_det_odd_shells(int ell, const Character& chi, cplx s, const Truncation& tr);

// log of the representative of det(Delta_{2l,alpha} + s^2):
// 2(-1)^l pi^l s^{2l} log s / l! - 2 s^l sum |n|^{-l} e(n alpha) K_l(2 pi |n| s).
double log_det_even(int ell, const Character& chi, double s, const Truncation& tr);
double log_det_even(int ell, const Character& chi, double s);
double det_even(int ell, const Character& chi, double s, const Truncation& tr);
double log_det_even_shells(int ell, const Character& chi, double s, const Truncation& tr);
// The exponent with the constants 4/(l-1)! and 4l; 2l times the one above.
double log_det_even_displayed(int ell, const Character& chi, double s, const Truncation& tr);

// e^{2 pi s}(1 - e(alpha) e^{-2 pi s})(1 - e(-alpha) e^{-2 pi s}) and 4 sin pi(a+is) sin pi(a-is).
cplx det_dim1_exact(const BigRational& alpha, cplx s);
cplx det_dim1_sine(const BigRational& alpha, cplx s);

// sum_m (|m + alpha|^2 + s^2)^{-j}, j > nu/2.
SeriesValue spectral_sum(int nu, const Character& chi, double s, int j, const SmoothCutoff& cut = {});

// Right-hand sides of the Poisson identities for d/ds (1/2s d/ds)^l log det.
double psf_odd_rhs(int ell, const Character& chi, double s, const Truncation& tr);
double psf_even_rhs(int ell, const Character& chi, double s, const Truncation& tr);

// (1/2s d/ds)^k f and d/ds (1/2s d/ds)^l f by central differences in t = s^2
// with two Richardson steps; intended for k <= 3.
double ladder_t_derivative(const std::function<double(double)>& f, double s, int k, double rel_step = 0.02);
double ladder_operator(const std::function<double(double)>& f, double s, int ell, double rel_step = 0.02);

// Fourier transform of (|x|^2 + s^2)^{-l-1} on R^{2l} at |y| = R.
double fourier_gl(int ell, double R, double s);
double fourier_gl_displayed(int ell, double R, double s);

} // namespace latzeta

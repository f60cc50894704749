#pragma once

#include "latzeta/types.hpp"

namespace latzeta {

EvalResult riemann_zeta(cplx s);
double zeta(double s);
EvalResult dirichlet_L4(cplx s);
double L4(double s);

double bessel_J0(double x);
double bessel_J1(double x);
double bessel_J(int n, double x);
// Integer order, x > 0; K_{-l} = K_l.
double bessel_K(int ell, double x);
EvalResult bessel_K_eval(int ell, double x);

// Gamma(k/2) for k >= 1.
double gamma_half(int k);
double sphere_area(int nu);
// Volume of the unit ball in R^nu.
double ball_volume(int nu);

// int_0^inf x^{l+1} J_l(bx) / (x^2+a^2)^{mu+1} dx in closed form.
double bessel_integral(int lambda, int mu, double a, double b);

} // namespace latzeta

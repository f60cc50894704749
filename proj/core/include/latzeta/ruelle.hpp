#pragma once

#include "latzeta/lattice.hpp"
#include "latzeta/lattice_sum.hpp"
#include "latzeta/types.hpp"

namespace latzeta {

struct Truncation {
    double radius = 8.0;
    int mobius_limit = 60;
    int ell_limit = 40;
    double tol = 1e-9;

    // radius = max(8, 40/Re s), ell_limit = ceil(40/Re s)
    static Truncation defaults_for(cplx s);
    void validate() const;
};

SeriesValue g_direct(cplx s, const Character& chi, int nu, const Truncation& tr);
SeriesValue g_poisson(cplx s, const Character& chi, int nu, const Truncation& tr, const SmoothCutoff& cut = {});

// log G = sum_l g(l s, l alpha)/l; the double-sum and product forms are
// kept for cross-checks.
SeriesValue log_G(cplx s, const Character& chi, int nu, const Truncation& tr);
SeriesValue log_G_double_sum(cplx s, const Character& chi, int nu, const Truncation& tr);
SeriesValue log_G_product(cplx s, const Character& chi, int nu, const Truncation& tr);

enum class LogLRoute { euler, moebius, series };

struct LogLRoutes {
    SeriesValue euler, moebius, series;
    double max_delta() const;
};

// The series route, sum_n M_nu(n, alpha, 1) e^{-s sqrt n}, unless another is asked for.
SeriesValue log_L(cplx s, const Character& chi, int nu, const Truncation& tr,
                  LogLRoute route = LogLRoute::series);
LogLRoutes log_L_routes(cplx s, const Character& chi, int nu, const Truncation& tr);

// Partial sum over n <= mobius_limit. The n-sum of Phi on its own does not
// converge (the n-th term tends to gamma(n)/n times a constant); the
// tail_estimate is the size of the last included term.
SeriesValue phi(cplx s, const Character& chi, double t, int nu, const Truncation& tr,
                const SmoothCutoff& cut = {});

double C_nu(int nu);

// C(nu) (Phi((nu+1)/2) - (nu+1) s^2 Phi((nu+3)/2)), combined per n.
SeriesValue log_deriv_L(cplx s, const Character& chi, int nu, const Truncation& tr,
                        const SmoothCutoff& cut = {});

} // namespace latzeta

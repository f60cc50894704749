#pragma once

#include <complex>
#include <cstddef>

namespace latzeta {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

struct SeriesValue {
    cplx value{};
    std::size_t terms = 0;
    double tail_estimate = 0.0;
};

struct EvalResult {
    cplx value{};
    double est_error = 0.0;
};

} // namespace latzeta

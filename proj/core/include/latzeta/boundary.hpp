#pragma once

#include "latzeta/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latzeta {

// h(b) = r_nu(p^{2b}) = A + B b + C Lambda^b for b >= 1, h(0) = 2 nu.
struct SquareExponentForm {
    BigRational A, B, C, Lambda;
};

SquareExponentForm square_exponent_form(int nu, std::uint64_t p);
BigRational r_prime_square_power(int nu, std::uint64_t p, unsigned b);

struct KeyLemmaResult {
    int nu = 0;
    std::uint64_t p = 0;
    unsigned e = 0;
    BigRational lhs, rhs;
    bool distinct = false;
};

// lhs = sum_{n>=1} r_nu(p^{2(n+e)}) p^{-n(nu+1)}, rhs = r_nu(p^{2e})/(p-1).
KeyLemmaResult key_lemma_sides(int nu, std::uint64_t p, unsigned e);

BigRational local_E(int nu, std::uint64_t q);
BigRational local_F(int nu, std::uint64_t p, unsigned e);
BigRational local_G(int nu, std::uint64_t p);
// 1 - G_{nu,p} in binary64 for the float tail of the Euler product.
double one_minus_G(int nu, std::uint64_t p);
// 0 <= 1 - G_{nu,p} <= c / p^2 for every prime p.
double G_tail_constant(int nu);

struct RSeries {
    double value = 0.0;
    double tail_estimate = 0.0;
    std::uint64_t terms = 0;
};

// R_nu(m/n) = n^{-(nu+1)} sum_{k<=K} gamma(kn) r_nu(k^2 m^2) k^{-(nu+1)}.
RSeries R_coeff_series(int nu, std::uint64_t m_tilde, std::uint64_t n_tilde, std::uint64_t K = 1000000);

struct LocalFactor {
    char kind = 'G';
    std::uint64_t p = 0;
    unsigned e = 0;
    BigRational value;
};

struct Certificate {
    int nu = 0;
    std::uint64_t m_tilde = 0, n_tilde = 0, prime_limit = 0;
    std::vector<LocalFactor> E_factors, F_factors, G_factors;
    BigRational G_partial;
    // 2 nu prod((1-q)/2nu E_q) prod(F_p/2nu) G_partial
    BigRational exact_product;
    // every omitted G_p lies in [1 - 4/p^2, 1]; the tail product is >= 1 - G_tail_bound
    double G_tail_bound = 0.0;
    double factored_value = 0.0;
    double series_value = 0.0;
    double series_tail = 0.0;
    bool verdict = false;
};

struct CertifyOptions {
    std::uint64_t series_terms = 1000000;
    std::uint64_t float_prime_limit = 10000000;
};

// R by the E.F.G factorization: exact factors to P, float G_p to float_prime_limit.
double R_coeff_factored(int nu, std::uint64_t m_tilde, std::uint64_t n_tilde, std::uint64_t P,
                        std::uint64_t float_prime_limit = 10000000);

Certificate certify_nonvanishing(int nu, std::uint64_t m_tilde, std::uint64_t n_tilde, std::uint64_t P = 100,
                                 const CertifyOptions& opt = {});
std::string certificate_json(const Certificate& c, int indent = 2);

} // namespace latzeta

#pragma once

#include "latzeta/lattice.hpp"
#include "latzeta/rational.hpp"
#include "latzeta/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace latzeta {

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

// Linear sieve of mu, smallest prime factor and gamma(n) = prod_{p|n}(1-p).
class SieveTable {
public:
    explicit SieveTable(std::uint32_t limit = 1000000);

    std::uint32_t limit() const { return limit_; }
    int mu(std::uint64_t n) const;
    std::int64_t gamma(std::uint64_t n) const;
    std::uint32_t spf(std::uint64_t n) const;
    Factorization factorize(std::uint64_t n) const;
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    bool is_prime(std::uint64_t n) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::int8_t> mu_;
    std::vector<std::int64_t> gamma_;
    std::vector<std::uint32_t> primes_;
};

// Built on first use; the limit can be changed only before that.
const SieveTable& default_sieve();
void set_default_sieve_limit(std::uint32_t limit);

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
int moebius(std::uint64_t n);
std::int64_t gamma_mult(std::uint64_t n);
int chi_m4(std::int64_t n);

// r_nu(n) by counting; the table form returns r_nu(0..N).
std::int64_t r_count(int nu, std::int64_t n);
std::vector<std::int64_t> r_count_table(int nu, std::int64_t N);

// Divisor-sum closed forms, nu in {2,4,6,8}.
std::int64_t r_closed(int nu, std::int64_t n);

cplx r_twisted(int nu, std::int64_t n, const Character& chi);
cplx r_primitive(int nu, std::int64_t n, const Character& chi);

// g_x(n): k^{-x} when n = k^2, else 0.
double g_weight(std::int64_t n, double x);

// M_nu(n, alpha, x) as the gcd-weighted shell sum, and through the
// square-divisor convolution with primitive counts.
cplx M_value(int nu, std::int64_t n, const Character& chi, double x);
cplx M_value_convolution(int nu, std::int64_t n, const Character& chi, double x);

BigRational bernoulli(unsigned n);

} // namespace latzeta

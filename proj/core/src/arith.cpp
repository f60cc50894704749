#include "latzeta/arith.hpp"

#include "latzeta/errors.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace latzeta {

SieveTable::SieveTable(std::uint32_t limit) : limit_(std::max<std::uint32_t>(limit, 2))
{
    std::size_t n = static_cast<std::size_t>(limit_) + 1;
    spf_.assign(n, 0);
    mu_.assign(n, 0);
    gamma_.assign(n, 0);
    mu_[1] = 1;
    gamma_[1] = 1;
    for (std::uint32_t i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes_.push_back(i);
            mu_[i] = -1;
            gamma_[i] = 1 - static_cast<std::int64_t>(i);
        }
        for (std::uint32_t p : primes_) {
            std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
            if (p > spf_[i] || ip > limit_) break;
            spf_[ip] = p;
            if (p == spf_[i]) {
                mu_[ip] = 0;
                gamma_[ip] = gamma_[i];
            } else {
                mu_[ip] = static_cast<std::int8_t>(-mu_[i]);
                gamma_[ip] = gamma_[i] * (1 - static_cast<std::int64_t>(p));
            }
        }
    }
}

namespace {

Factorization trial_factor(std::uint64_t n)
{
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

} // namespace

Factorization SieveTable::factorize(std::uint64_t n) const
{
    if (n > limit_) return trial_factor(n);
    Factorization f;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    return f;
}

int SieveTable::mu(std::uint64_t n) const
{
    if (n <= limit_) return mu_[n];
    int m = 1;
    for (auto [p, e] : trial_factor(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

std::int64_t SieveTable::gamma(std::uint64_t n) const
{
    if (n <= limit_) return gamma_[n];
    std::int64_t g = 1;
    for (auto [p, e] : trial_factor(n)) g *= 1 - static_cast<std::int64_t>(p);
    return g;
}

std::uint32_t SieveTable::spf(std::uint64_t n) const
{
    if (n <= limit_) return spf_[n];
    return static_cast<std::uint32_t>(trial_factor(n).front().first);
}

bool SieveTable::is_prime(std::uint64_t n) const
{
    if (n < 2) return false;
    if (n <= limit_) return spf_[n] == n;
    auto f = trial_factor(n);
    return f.size() == 1 && f[0].second == 1;
}

namespace {

std::atomic<std::uint32_t> g_sieve_limit{1000000};

} // namespace

const SieveTable& default_sieve()
{
    static const SieveTable table(g_sieve_limit.load());
    return table;
}

void set_default_sieve_limit(std::uint32_t limit) { g_sieve_limit = limit; }

Factorization factorize(std::uint64_t n) { return default_sieve().factorize(n); }
bool is_prime(std::uint64_t n) { return default_sieve().is_prime(n); }
int moebius(std::uint64_t n)
{
    if (n == 0) throw DomainError("moebius(0)");
    return default_sieve().mu(n);
}
std::int64_t gamma_mult(std::uint64_t n)
{
    if (n == 0) throw DomainError("gamma_mult(0)");
    return default_sieve().gamma(n);
}

int chi_m4(std::int64_t n)
{
    std::int64_t r = ((n % 4) + 4) % 4;
    return r == 1 ? 1 : (r == 3 ? -1 : 0);
}

std::vector<std::int64_t> r_count_table(int nu, std::int64_t N)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    if (N < 0) return {};
    auto sz = static_cast<std::size_t>(N + 1);
    std::vector<std::int64_t> one(sz, 0);
    one[0] = 1;
    for (std::int64_t m = 1; m * m <= N; ++m) one[static_cast<std::size_t>(m * m)] = 2;
    std::vector<std::int64_t> cur = one;
    std::vector<std::int64_t> next(sz);
    for (int k = 2; k <= nu; ++k) {
        std::fill(next.begin(), next.end(), 0);
        for (std::int64_t m = 0; m * m <= N; ++m) {
            std::int64_t w = m == 0 ? 1 : 2;
            std::size_t off = static_cast<std::size_t>(m * m);
            for (std::size_t n = off; n < sz; ++n) next[n] += w * cur[n - off];
        }
        cur.swap(next);
    }
    return cur;
}

std::int64_t r_count(int nu, std::int64_t n)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    if (n < 0) return 0;
    if (nu == 1) {
        if (n == 0) return 1;
        auto r = detail::isqrt(n);
        return r * r == n ? 2 : 0;
    }
    return r_count_table(nu, n).back();
}

namespace {

template <class F>
void for_each_divisor(std::uint64_t n, F&& f)
{
    auto fac = factorize(n);
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : fac) {
        std::size_t cnt = divs.size();
        std::uint64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < cnt; ++j) divs.push_back(divs[j] * pk);
        }
    }
    for (auto d : divs) f(static_cast<std::int64_t>(d));
}

std::int64_t r8_prime_power(std::uint64_t p, int a)
{
    // r_8(p^a)/16 from the prime-power forms
    if (p == 2) {
        std::int64_t t = std::int64_t{1} << (3 * a + 3);
        return (t - 15) / 7;
    }
    std::int64_t p3 = static_cast<std::int64_t>(p * p * p);
    std::int64_t s = 1, q = 1;
    for (int i = 1; i <= a; ++i) {
        q *= p3;
        s += q;
    }
    return s;
}

} // namespace

std::int64_t r_closed(int nu, std::int64_t n)
{
    if (nu != 2 && nu != 4 && nu != 6 && nu != 8) throw UnsupportedDimension(nu);
    if (n < 1) throw DomainError("r_closed needs n >= 1");
    auto un = static_cast<std::uint64_t>(n);
    std::int64_t s = 0;
    switch (nu) {
    case 2:
        for_each_divisor(un, [&](std::int64_t d) { s += chi_m4(d); });
        return 4 * s;
    case 4:
        for_each_divisor(un, [&](std::int64_t d) {
            if (d % 4) s += d;
        });
        return 8 * s;
    case 6:
        for_each_divisor(un, [&](std::int64_t m) { s += 16 * chi_m4(n / m) * m * m - 4 * chi_m4(m) * m * m; });
        return s;
    default: {
        // r_8/16 is multiplicative
        std::int64_t prod = 1;
        for (auto [p, e] : factorize(un)) prod *= r8_prime_power(p, e);
        return 16 * prod;
    }
    }
}

cplx r_twisted(int nu, std::int64_t n, const Character& chi)
{
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    std::int64_t D = chi.denominator();
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(D), 0);
    for_each_in_range(nu, n, n, [&](std::span<const std::int64_t> c, std::int64_t) {
        ++cnt[static_cast<std::size_t>(chi.phase_index(c))];
    });
    cplx s{};
    for (std::int64_t k = 0; k < D; ++k)
        if (cnt[static_cast<std::size_t>(k)]) s += static_cast<double>(cnt[static_cast<std::size_t>(k)]) * unit_root(k, D);
    return s;
}

cplx r_primitive(int nu, std::int64_t n, const Character& chi)
{
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    std::int64_t D = chi.denominator();
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(D), 0);
    for_each_in_range(nu, n, n, [&](std::span<const std::int64_t> c, std::int64_t) {
        if (vec_gcd(c) == 1) ++cnt[static_cast<std::size_t>(chi.phase_index(c))];
    });
    cplx s{};
    for (std::int64_t k = 0; k < D; ++k)
        if (cnt[static_cast<std::size_t>(k)]) s += static_cast<double>(cnt[static_cast<std::size_t>(k)]) * unit_root(k, D);
    return s;
}

double g_weight(std::int64_t n, double x)
{
    if (n < 1) return 0.0;
    auto k = detail::isqrt(n);
    return k * k == n ? std::pow(static_cast<double>(k), -x) : 0.0;
}

cplx M_value(int nu, std::int64_t n, const Character& chi, double x)
{
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    cplx s{};
    for_each_in_range(nu, n, n, [&](std::span<const std::int64_t> c, std::int64_t) {
        s += std::pow(static_cast<double>(vec_gcd(c)), -x) * unit_root(chi.phase_index(c), chi.denominator());
    });
    return s;
}

cplx M_value_convolution(int nu, std::int64_t n, const Character& chi, double x)
{
    cplx s{};
    for (std::int64_t l = 1; l * l <= n; ++l) {
        if (n % (l * l)) continue;
        s += g_weight(l * l, x) * r_primitive(nu, n / (l * l), chi.scaled(l));
    }
    return s;
}

BigRational bernoulli(unsigned n)
{
    static std::mutex mtx;
    static std::vector<BigRational> cache{BigRational(1)};
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        // sum_{k<m+1} C(m+1,k) B_k = 0
        unsigned m = static_cast<unsigned>(cache.size());
        BigRational acc = 0;
        BigInt binom = 1;
        for (unsigned k = 0; k < m; ++k) {
            acc += BigRational(binom) * cache[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        BigRational b = -acc / BigRational(BigInt(m + 1));
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[n];
}

} // namespace latzeta

#include "latzeta/boundary.hpp"

#include "latzeta/arith.hpp"
#include "latzeta/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace latzeta {

namespace {

void require_nu(int nu)
{
    if (nu != 2 && nu != 4 && nu != 8) throw UnsupportedDimension(nu);
}

void require_prime(std::uint64_t p)
{
    if (!is_prime(p)) throw NotPrime(p);
}

BigRational Q(long long a, long long b = 1) { return make_rational(a, b); }

BigRational Qbig(const BigInt& a) { return BigRational(a); }

// S(e) = sum_{n>=1} h(n+e) x^n, x = p^{-(nu+1)}
BigRational shifted_sum(int nu, std::uint64_t p, unsigned e)
{
    auto f = square_exponent_form(nu, p);
    BigRational x = BigRational(1, pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(nu + 1)));
    x.canonicalize();
    BigRational g1 = x / (1 - x);
    BigRational g2 = x / ((1 - x) * (1 - x));
    BigRational lx = f.Lambda * x;
    BigRational g3 = lx / (1 - lx);
    BigRational s = f.A * g1 + f.B * (BigRational(e) * g1 + g2) + f.C * pow(f.Lambda, e) * g3;
    s.canonicalize();
    return s;
}

} // namespace

SquareExponentForm square_exponent_form(int nu, std::uint64_t p)
{
    require_nu(nu);
    require_prime(p);
    const auto P = static_cast<long long>(p);
    SquareExponentForm f{Q(0), Q(0), Q(0), Q(1)};
    switch (nu) {
    case 2:
        f.A = 4;
        if (p % 4 == 1) f.B = 8;
        break;
    case 4:
        if (p == 2) {
            f.A = 24;
        } else {
            f.A = Q(-8, P - 1);
            f.C = Q(8 * P, P - 1);
            f.Lambda = Q(P * P);
        }
        break;
    default:
        if (p == 2) {
            f.A = Q(-240, 7);
            f.C = Q(128, 7);
            f.Lambda = 64;
        } else {
            BigInt p3 = pow(BigInt(static_cast<unsigned long>(p)), 3);
            f.A = BigRational(BigInt(-16), p3 - 1);
            f.C = BigRational(16 * p3, p3 - 1);
            f.Lambda = Qbig(p3 * p3);
            f.A.canonicalize();
            f.C.canonicalize();
        }
    }
    return f;
}

BigRational r_prime_square_power(int nu, std::uint64_t p, unsigned b)
{
    auto f = square_exponent_form(nu, p);
    if (b == 0) return Q(2 * nu);
    BigRational v = f.A + f.B * BigRational(b) + f.C * pow(f.Lambda, b);
    v.canonicalize();
    return v;
}

KeyLemmaResult key_lemma_sides(int nu, std::uint64_t p, unsigned e)
{
    require_nu(nu);
    require_prime(p);
    KeyLemmaResult r;
    r.nu = nu;
    r.p = p;
    r.e = e;
    r.lhs = shifted_sum(nu, p, e);
    r.rhs = r_prime_square_power(nu, p, e) / BigRational(static_cast<unsigned long>(p - 1));
    r.rhs.canonicalize();
    r.distinct = r.lhs != r.rhs;
    return r;
}

BigRational local_E(int nu, std::uint64_t q)
{
    require_nu(nu);
    require_prime(q);
    BigRational v = Q(2 * nu) + shifted_sum(nu, q, 0);
    v.canonicalize();
    return v;
}

BigRational local_F(int nu, std::uint64_t p, unsigned e)
{
    require_nu(nu);
    require_prime(p);
    auto k = key_lemma_sides(nu, p, e);
    if (!k.distinct) throw Error("key lemma fails: F factor vanishes");
    BigRational v = r_prime_square_power(nu, p, e) - BigRational(static_cast<unsigned long>(p - 1)) * k.lhs;
    v.canonicalize();
    return v;
}

BigRational local_G(int nu, std::uint64_t p)
{
    require_nu(nu);
    require_prime(p);
    BigRational v = 1 - BigRational(static_cast<unsigned long>(p - 1)) / Q(2 * nu) * shifted_sum(nu, p, 0);
    v.canonicalize();
    if (v == 0) throw Error("key lemma fails: G factor vanishes");
    return v;
}

double one_minus_G(int nu, std::uint64_t p)
{
    require_nu(nu);
    const double dp = static_cast<double>(p);
    const double x = std::pow(dp, -(nu + 1));
    const double g1 = x / (1 - x), g2 = x / ((1 - x) * (1 - x));
    double s;
    switch (nu) {
    case 2: s = 4 * g1 + (p % 4 == 1 ? 8 * g2 : 0.0); break;
    case 4: {
        if (p == 2) {
            s = 24 * g1;
            break;
        }
        double lx = dp * dp * x;
        s = -8 / (dp - 1) * g1 + 8 * dp / (dp - 1) * lx / (1 - lx);
        break;
    }
    default: {
        if (p == 2) {
            double lx = 64 * x;
            s = -240.0 / 7 * g1 + 128.0 / 7 * lx / (1 - lx);
            break;
        }
        double p3 = dp * dp * dp;
        double lx = p3 * p3 * x;
        s = -16 / (p3 - 1) * g1 + 16 * p3 / (p3 - 1) * lx / (1 - lx);
    }
    }
    return (dp - 1) / (2 * nu) * s;
}

double G_tail_constant(int nu)
{
    require_nu(nu);
    return 4.0;
}

namespace {

struct Valuation {
    std::uint64_t p;
    unsigned vm, vn;
};

std::vector<Valuation> joint_primes(std::uint64_t m, std::uint64_t n)
{
    std::map<std::uint64_t, Valuation> mp;
    for (auto [p, e] : factorize(m)) mp[p] = {p, static_cast<unsigned>(e), 0};
    for (auto [p, e] : factorize(n)) {
        auto& v = mp[p];
        v.p = p;
        v.vn = static_cast<unsigned>(e);
    }
    std::vector<Valuation> out;
    for (auto& [p, v] : mp) out.push_back(v);
    return out;
}

void require_coprime(std::uint64_t m, std::uint64_t n)
{
    if (m == 0 || n == 0 || std::gcd(m, n) != 1) throw NotCoprime(m, n);
}

// r_nu(p^{2b}) / (2 nu) in binary64
double h_scaled(int nu, std::uint64_t p, unsigned b)
{
    if (b == 0) return 1.0;
    const double dp = static_cast<double>(p);
    double v;
    switch (nu) {
    case 2:
        v = 4.0 + (p % 4 == 1 ? 8.0 * b : 0.0);
        break;
    case 4:
        v = p == 2 ? 24.0 : (8.0 * std::pow(dp, 2.0 * b + 1) - 8.0) / (dp - 1);
        break;
    default:
        v = p == 2 ? 16.0 * (8.0 * std::pow(64.0, b) - 15.0) / 7.0
                   : 16.0 * (std::pow(dp, 6.0 * b + 3) - 1.0) / (dp * dp * dp - 1.0);
    }
    return v / (2 * nu);
}

// phi_p(a) = gamma_p(a + vn) h(a + vm)/(2 nu)
double local_phi(int nu, std::uint64_t p, unsigned a, unsigned vm, unsigned vn)
{
    double g = (a + vn) > 0 ? 1.0 - static_cast<double>(p) : 1.0;
    return g * h_scaled(nu, p, a + vm);
}

// base[k] = prod_{p^a || k} phi_p(a) / k^{nu+1} for (m, n) = (1, 1)
struct BaseTable {
    std::vector<double> base;
    explicit BaseTable(int nu, std::uint64_t K)
    {
        SieveTable sv(static_cast<std::uint32_t>(std::max<std::uint64_t>(K, 2)));
        base.assign(K + 1, 0.0);
        if (K >= 1) base[1] = 1.0;
        for (std::uint64_t k = 2; k <= K; ++k) {
            std::uint64_t p = sv.spf(k);
            std::uint64_t r = k;
            unsigned a = 0;
            std::uint64_t pa = 1;
            while (r % p == 0) {
                r /= p;
                pa *= p;
                ++a;
            }
            double loc = local_phi(nu, p, a, 0, 0) / std::pow(static_cast<double>(pa), nu + 1);
            base[k] = base[r] * loc;
        }
    }
};

const BaseTable& base_table(int nu, std::uint64_t K)
{
    static std::mutex mtx;
    static std::map<std::pair<int, std::uint64_t>, std::unique_ptr<BaseTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{nu, K}];
    if (!slot) slot = std::make_unique<BaseTable>(nu, K);
    return *slot;
}

} // namespace

RSeries R_coeff_series(int nu, std::uint64_t m_tilde, std::uint64_t n_tilde, std::uint64_t K)
{
    require_nu(nu);
    require_coprime(m_tilde, n_tilde);
    if (K < 1) throw DomainError("R_coeff_series needs K >= 1");
    const auto& base = base_table(nu, K).base;
    auto S = joint_primes(m_tilde, n_tilde);
    // term(k) = 2nu * w_S(b) * base[a], k = a b with b the S-smooth part
    std::map<std::uint64_t, double> wS;
    auto weight = [&](std::uint64_t b) {
        auto it = wS.find(b);
        if (it != wS.end()) return it->second;
        double w = 1.0 / std::pow(static_cast<double>(b), nu + 1);
        std::uint64_t r = b;
        for (const auto& v : S) {
            unsigned c = 0;
            while (r % v.p == 0) {
                r /= v.p;
                ++c;
            }
            w *= local_phi(nu, v.p, c, v.vm, v.vn);
        }
        wS.emplace(b, w);
        return w;
    };
    double sum = 0.0, comp = 0.0, peak = 0.0;
    for (std::uint64_t k = 1; k <= K; ++k) {
        std::uint64_t a = k, b = 1;
        for (const auto& v : S)
            while (a % v.p == 0) {
                a /= v.p;
                b *= v.p;
            }
        double t = 2.0 * nu * weight(b) * base[a];
        double y = t - comp;
        double z = sum + y;
        comp = (z - sum) - y;
        sum = z;
        if (2 * k > K) peak = std::max(peak, std::abs(t) * static_cast<double>(k) * static_cast<double>(k));
    }
    double scale = std::pow(static_cast<double>(n_tilde), -(nu + 1));
    RSeries out;
    out.value = scale * sum;
    out.tail_estimate = scale * peak / static_cast<double>(K);
    out.terms = K;
    return out;
}

namespace {

struct FloatTail {
    std::vector<double> log_prefix;
    std::vector<std::uint32_t> primes;
};

// log prod_{p <= x} G_p over all primes up to limit, as prefix sums.
const FloatTail& float_tail(int nu, std::uint64_t limit)
{
    static std::mutex mtx;
    static std::map<std::pair<int, std::uint64_t>, std::unique_ptr<FloatTail>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{nu, limit}];
    if (!slot) {
        slot = std::make_unique<FloatTail>();
        std::vector<bool> comp(limit + 1, false);
        double acc = 0.0;
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (comp[i]) continue;
            for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
            acc += std::log1p(-one_minus_G(nu, i));
            slot->primes.push_back(static_cast<std::uint32_t>(i));
            slot->log_prefix.push_back(acc);
        }
    }
    return *slot;
}

double float_G_product(int nu, std::uint64_t P, std::uint64_t limit)
{
    if (limit <= P) return 1.0;
    const auto& ft = float_tail(nu, limit);
    auto it = std::upper_bound(ft.primes.begin(), ft.primes.end(), static_cast<std::uint32_t>(P));
    double before = it == ft.primes.begin() ? 0.0 : ft.log_prefix[static_cast<std::size_t>(it - ft.primes.begin()) - 1];
    return std::exp(ft.log_prefix.back() - before);
}

struct ExactFactors {
    std::vector<LocalFactor> E, F, G;
    BigRational G_partial{1};
    BigRational product;
};

ExactFactors exact_factors(int nu, std::uint64_t m, std::uint64_t n, std::uint64_t P)
{
    ExactFactors out;
    const BigRational two_nu = 2 * nu;
    BigRational prod = two_nu;
    auto S = joint_primes(m, n);
    for (const auto& v : S) {
        if (v.vn > 0) {
            auto E = local_E(nu, v.p);
            out.E.push_back({'E', v.p, 0, E});
            prod *= BigRational(1 - static_cast<long>(v.p)) / two_nu * E;
        } else {
            auto F = local_F(nu, v.p, v.vm);
            out.F.push_back({'F', v.p, v.vm, F});
            prod *= F / two_nu;
        }
    }
    for (std::uint64_t p = 2; p <= P; ++p) {
        if (!is_prime(p) || m % p == 0 || n % p == 0) continue;
        auto G = local_G(nu, p);
        out.G.push_back({'G', p, 0, G});
        out.G_partial *= G;
    }
    out.G_partial.canonicalize();
    prod *= out.G_partial;
    prod.canonicalize();
    out.product = prod;
    return out;
}

} // namespace

double R_coeff_factored(int nu, std::uint64_t m_tilde, std::uint64_t n_tilde, std::uint64_t P,
                        std::uint64_t float_prime_limit)
{
    require_nu(nu);
    require_coprime(m_tilde, n_tilde);
    auto ex = exact_factors(nu, m_tilde, n_tilde, P);
    return to_double(ex.product) * float_G_product(nu, P, float_prime_limit) *
           std::pow(static_cast<double>(n_tilde), -(nu + 1));
}

Certificate certify_nonvanishing(int nu, std::uint64_t m_tilde, std::uint64_t n_tilde, std::uint64_t P,
                                 const CertifyOptions& opt)
{
    require_nu(nu);
    require_coprime(m_tilde, n_tilde);
    std::uint64_t largest = 1;
    for (auto [p, e] : factorize(m_tilde * n_tilde)) largest = std::max<std::uint64_t>(largest, p);
    if (P < largest) throw DomainError("prime limit below the largest prime factor of m n");
    if (P < 5) throw DomainError("prime limit must be at least 5");

    Certificate c;
    c.nu = nu;
    c.m_tilde = m_tilde;
    c.n_tilde = n_tilde;
    c.prime_limit = P;
    auto ex = exact_factors(nu, m_tilde, n_tilde, P);
    c.E_factors = std::move(ex.E);
    c.F_factors = std::move(ex.F);
    c.G_factors = std::move(ex.G);
    c.G_partial = ex.G_partial;
    c.exact_product = ex.product;

    // sum_{p>P} 4/p^2 < 4/P and -log(1-y) <= 2y for y <= 1/2
    const double cst = G_tail_constant(nu);
    c.G_tail_bound = -std::expm1(-2.0 * cst / static_cast<double>(P));

    c.factored_value = to_double(c.exact_product) * float_G_product(nu, P, opt.float_prime_limit) *
                       std::pow(static_cast<double>(n_tilde), -(nu + 1));
    auto rs = R_coeff_series(nu, m_tilde, n_tilde, opt.series_terms);
    c.series_value = rs.value;
    c.series_tail = rs.tail_estimate;

    bool ok = c.exact_product != 0 && c.G_tail_bound < 1.0;
    for (const auto* fs : {&c.E_factors, &c.F_factors, &c.G_factors})
        for (const auto& f : *fs) ok = ok && f.value != 0;
    for (const auto& f : c.G_factors) ok = ok && f.value > 0;
    c.verdict = ok;
    return c;
}

std::string certificate_json(const Certificate& c, int indent)
{
    nlohmann::ordered_json j;
    j["nu"] = c.nu;
    j["m"] = c.m_tilde;
    j["n"] = c.n_tilde;
    j["prime_limit"] = c.prime_limit;
    auto factors = nlohmann::ordered_json::array();
    auto put = [&](const LocalFactor& f) {
        nlohmann::ordered_json e;
        e["kind"] = std::string(1, f.kind);
        e["p"] = f.p;
        if (f.kind == 'F') e["e"] = f.e;
        e["num"] = f.value.get_num().get_str();
        e["den"] = f.value.get_den().get_str();
        factors.push_back(e);
    };
    for (const auto& f : c.E_factors) put(f);
    for (const auto& f : c.F_factors) put(f);
    for (const auto& f : c.G_factors) put(f);
    j["factors"] = factors;
    j["g_tail_bound"] = c.G_tail_bound;
    j["factored_value"] = c.factored_value;
    j["series_value"] = c.series_value;
    j["verdict"] = c.verdict;
    return j.dump(indent);
}

} // namespace latzeta

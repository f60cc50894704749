#include "latzeta/lattice.hpp"

#include "latzeta/errors.hpp"

#include <numeric>
#include <sstream>

namespace latzeta {

LatticeVector::LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords))
{
    if (coords_.empty()) throw DomainError("lattice vector needs dimension >= 1");
}

LatticeVector::LatticeVector(std::initializer_list<std::int64_t> coords)
    : LatticeVector(std::vector<std::int64_t>(coords)) {}

std::int64_t LatticeVector::squared_norm() const
{
    std::int64_t s = 0;
    for (auto c : coords_) s += c * c;
    return s;
}

bool LatticeVector::is_zero() const
{
    for (auto c : coords_)
        if (c != 0) return false;
    return true;
}

namespace {

BigRational reduce_unit(BigRational q)
{
    q.canonicalize();
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    q -= fl;
    return q;
}

} // namespace

Character::Character(std::vector<BigRational> alpha) : alpha_(std::move(alpha))
{
    if (alpha_.empty()) throw DomainError("character needs dimension >= 1");
    BigInt d = 1;
    for (auto& a : alpha_) {
        a = reduce_unit(a);
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a.get_den_mpz_t());
    }
    if (!d.fits_slong_p() || d > BigInt(1L << 30)) throw DomainError("character denominator too large");
    den_ = d.get_si();
    num_.clear();
    for (const auto& a : alpha_) {
        BigInt k = a.get_num() * (d / a.get_den());
        num_.push_back(k.get_si());
    }
}

Character Character::trivial(int nu)
{
    return Character(std::vector<BigRational>(static_cast<std::size_t>(nu), BigRational(0)));
}

Character Character::uniform(int nu, const BigRational& a)
{
    return Character(std::vector<BigRational>(static_cast<std::size_t>(nu), a));
}

Character Character::parse(const std::string& text, int nu)
{
    std::vector<BigRational> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
    if (parts.empty()) throw DomainError("empty character");
    if (parts.size() == 1 && nu > 1) parts.assign(static_cast<std::size_t>(nu), parts[0]);
    if (static_cast<int>(parts.size()) != nu) throw DimensionMismatch(parts.size(), static_cast<std::size_t>(nu));
    return Character(std::move(parts));
}

Character Character::scaled(std::int64_t ell) const
{
    std::vector<BigRational> a;
    a.reserve(alpha_.size());
    for (const auto& q : alpha_) a.push_back(q * BigRational(BigInt(static_cast<long>(ell))));
    return Character(std::move(a));
}

Character Character::negated() const
{
    std::vector<BigRational> a;
    for (const auto& q : alpha_) a.push_back(-q);
    return Character(std::move(a));
}

Character Character::sign_flipped(std::span<const int> eps) const
{
    if (eps.size() != alpha_.size()) throw DimensionMismatch(eps.size(), alpha_.size());
    std::vector<BigRational> a;
    for (std::size_t j = 0; j < alpha_.size(); ++j) a.push_back(eps[j] < 0 ? BigRational(-alpha_[j]) : alpha_[j]);
    return Character(std::move(a));
}

std::int64_t Character::phase_index(std::span<const std::int64_t> v) const
{
    if (v.size() != num_.size()) throw DimensionMismatch(v.size(), num_.size());
    if (den_ == 1) return 0;
    __int128 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += static_cast<__int128>(v[j]) * num_[j];
    auto k = static_cast<std::int64_t>(acc % den_);
    return k < 0 ? k + den_ : k;
}

std::string Character::to_string() const
{
    std::string s;
    for (std::size_t j = 0; j < alpha_.size(); ++j) {
        if (j) s += ',';
        s += alpha_[j].get_str();
    }
    return s;
}

cplx unit_root(std::int64_t k, std::int64_t d)
{
    k %= d;
    if (k < 0) k += d;
    if (k == 0) return {1.0, 0.0};
    if ((4 * k) % d == 0) {
        switch ((4 * k) / d) {
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
        }
    }
    double t = 2.0 * pi * static_cast<double>(k) / static_cast<double>(d);
    return {std::cos(t), std::sin(t)};
}

std::vector<LatticeVector> enumerate_shell(int nu, std::int64_t n)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    std::vector<LatticeVector> out;
    if (n < 0) return out;
    for_each_in_range(nu, n, n, [&](std::span<const std::int64_t> c, std::int64_t) {
        out.emplace_back(std::vector<std::int64_t>(c.begin(), c.end()));
    });
    return out;
}

std::vector<LatticeVector> enumerate_ball(int nu, std::int64_t R2)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    std::vector<LatticeVector> out;
    for_each_in_ball(nu, R2, [&](std::span<const std::int64_t> c, std::int64_t) {
        out.emplace_back(std::vector<std::int64_t>(c.begin(), c.end()));
    });
    return out;
}

std::int64_t vec_gcd(std::span<const std::int64_t> v)
{
    std::int64_t g = 0;
    for (auto c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw ZeroVector();
    return g;
}

std::int64_t vec_gcd(const LatticeVector& v) { return vec_gcd(v.coords()); }

bool is_primitive(const LatticeVector& v) { return vec_gcd(v) == 1; }

cplx char_pairing(const LatticeVector& v, const Character& chi)
{
    if (v.dim() != chi.dim()) throw DimensionMismatch(v.dim(), chi.dim());
    return unit_root(chi.phase_index(v.coords()), chi.denominator());
}

TwistedShells::TwistedShells(int nu, std::int64_t R2, const Character& chi, double gcd_power)
    : nu_(nu), R2_(R2), D_(chi.denominator()), x_(gcd_power)
{
    if (nu < 1) throw DomainError("nu must be >= 1");
    if (static_cast<int>(chi.dim()) != nu) throw DimensionMismatch(chi.dim(), static_cast<std::size_t>(nu));
    if (R2 < 0) R2_ = 0;
    std::size_t sz = static_cast<std::size_t>(R2_ + 1) * static_cast<std::size_t>(D_);
    all_.assign(sz, 0);
    prim_.assign(sz, 0);
    wgcd_.assign(sz, 0.0);
    nonempty_.assign(static_cast<std::size_t>(R2_ + 1), 0);
    std::vector<double> gpow(static_cast<std::size_t>(detail::isqrt(R2_) + 1), 0.0);
    for (std::size_t g = 1; g < gpow.size(); ++g) gpow[g] = std::pow(static_cast<double>(g), -x_);
    for_each_in_ball(nu, R2_, [&](std::span<const std::int64_t> c, std::int64_t n2) {
        auto k = chi.phase_index(c);
        auto g = vec_gcd(c);
        auto i = idx(n2, k);
        ++all_[i];
        if (g == 1) ++prim_[i];
        wgcd_[i] += gpow[static_cast<std::size_t>(g)];
        nonempty_[static_cast<std::size_t>(n2)] = 1;
        ++nvec_;
    });
    roots_.resize(static_cast<std::size_t>(D_));
    for (std::int64_t k = 0; k < D_; ++k) roots_[static_cast<std::size_t>(k)] = unit_root(k, D_);
}

template <class T>
cplx TwistedShells::fold(const std::vector<T>& v, std::int64_t n, std::int64_t ell) const
{
    if (n < 1 || n > R2_) return {};
    if (D_ == 1) return {static_cast<double>(v[idx(n, 0)]), 0.0};
    double re = 0.0, im = 0.0;
    std::int64_t e = ((ell % D_) + D_) % D_;
    for (std::int64_t k = 0; k < D_; ++k) {
        double c = static_cast<double>(v[idx(n, k)]);
        if (c == 0.0) continue;
        const cplx& w = roots_[static_cast<std::size_t>((k * e) % D_)];
        re += c * w.real();
        im += c * w.imag();
    }
    return {re, im};
}

cplx TwistedShells::twisted_count(std::int64_t n, std::int64_t ell) const { return fold(all_, n, ell); }
cplx TwistedShells::twisted_primitive(std::int64_t n, std::int64_t ell) const { return fold(prim_, n, ell); }
cplx TwistedShells::twisted_gcd_weight(std::int64_t n, std::int64_t ell) const { return fold(wgcd_, n, ell); }

} // namespace latzeta

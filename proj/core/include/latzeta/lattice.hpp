#pragma once

#include "latzeta/rational.hpp"
#include "latzeta/types.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace latzeta {

class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<std::int64_t> coords);
    LatticeVector(std::initializer_list<std::int64_t> coords);

    std::size_t dim() const { return coords_.size(); }
    std::span<const std::int64_t> coords() const { return coords_; }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t squared_norm() const;
    double norm() const { return std::sqrt(static_cast<double>(squared_norm())); }
    bool is_zero() const;

    auto operator<=>(const LatticeVector&) const = default;

private:
    std::vector<std::int64_t> coords_;
};

// A point alpha of [0,1)^nu, kept exact. All components share the
// denominator D, so the pairing phase is the integer (sum n_j A_j) mod D.
class Character {
public:
    Character() = default;
    explicit Character(std::vector<BigRational> alpha);
    static Character trivial(int nu);
    // "1/3,0,1/2"; a single component is broadcast when nu > 1.
    static Character parse(const std::string& text, int nu);
    static Character uniform(int nu, const BigRational& a);

    std::size_t dim() const { return alpha_.size(); }
    const std::vector<BigRational>& alpha() const { return alpha_; }
    std::int64_t denominator() const { return den_; }
    std::span<const std::int64_t> numerators() const { return num_; }
    bool is_trivial() const { return den_ == 1; }

    // ell*alpha and -alpha reduced mod 1.
    Character scaled(std::int64_t ell) const;
    Character negated() const;
    Character sign_flipped(std::span<const int> eps) const;

    // Phase index k in [0, D): pairing is exp(2 pi i k / D).
    std::int64_t phase_index(std::span<const std::int64_t> v) const;
    std::string to_string() const;

private:
    std::vector<BigRational> alpha_;
    std::vector<std::int64_t> num_;
    std::int64_t den_ = 1;
};

// exp(2 pi i k / D), exact at multiples of a quarter turn.
cplx unit_root(std::int64_t k, std::int64_t d);

std::vector<LatticeVector> enumerate_shell(int nu, std::int64_t n);
std::vector<LatticeVector> enumerate_ball(int nu, std::int64_t R2);

std::int64_t vec_gcd(const LatticeVector& v);
std::int64_t vec_gcd(std::span<const std::int64_t> v);
bool is_primitive(const LatticeVector& v);
cplx char_pairing(const LatticeVector& v, const Character& chi);

namespace detail {

inline std::int64_t isqrt(std::int64_t n)
{
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

template <class F>
void descend(std::vector<std::int64_t>& c, int j, std::int64_t used, std::int64_t lo, std::int64_t hi,
             bool exact, F& f)
{
    const int nu = static_cast<int>(c.size());
    if (j == nu) {
        if (used >= lo && used <= hi) f(std::span<const std::int64_t>(c), used);
        return;
    }
    std::int64_t rem = hi - used;
    std::int64_t b = isqrt(rem);
    if (exact && j == nu - 1) {
        // last coordinate is determined by the remaining norm
        std::int64_t need = lo - used;
        std::int64_t r = isqrt(need);
        if (r * r != need) return;
        if (r == 0) {
            c[j] = 0;
            f(std::span<const std::int64_t>(c), used);
            return;
        }
        c[j] = -r;
        f(std::span<const std::int64_t>(c), used + need);
        c[j] = r;
        f(std::span<const std::int64_t>(c), used + need);
        return;
    }
    for (std::int64_t m = -b; m <= b; ++m) {
        c[j] = m;
        descend(c, j + 1, used + m * m, lo, hi, exact, f);
    }
}

} // namespace detail

// Visits every vector with lo <= |v|^2 <= hi in lexicographic order;
// f(span<const int64_t> coords, int64_t norm2).
template <class F>
void for_each_in_range(int nu, std::int64_t lo, std::int64_t hi, F&& f)
{
    if (nu < 1 || hi < lo || hi < 0) return;
    std::vector<std::int64_t> c(static_cast<std::size_t>(nu), 0);
    detail::descend(c, 0, 0, lo, hi, lo == hi, f);
}

template <class F>
void for_each_in_ball(int nu, std::int64_t R2, F&& f)
{
    for_each_in_range(nu, 1, R2, std::forward<F>(f));
}

// Same, restricted to a fixed leading coordinate (for partitioned sweeps).
template <class F>
void for_each_in_ball_slice(int nu, std::int64_t R2, std::int64_t lead, F&& f)
{
    if (nu < 1 || lead * lead > R2) return;
    std::vector<std::int64_t> c(static_cast<std::size_t>(nu), 0);
    c[0] = lead;
    if (nu == 1) {
        if (lead != 0) f(std::span<const std::int64_t>(c), lead * lead);
        return;
    }
    detail::descend(c, 1, lead * lead, 1, R2, false, f);
}

// Per-shell aggregates of the ball |v|^2 <= R2 against one character:
// for shell n and phase k, the vector count, primitive count and
// sum of gcd^{-x}. Shared by every truncated lattice series.
class TwistedShells {
public:
    TwistedShells(int nu, std::int64_t R2, const Character& chi, double gcd_power = 1.0);

    int nu() const { return nu_; }
    std::int64_t max_norm2() const { return R2_; }
    std::int64_t denominator() const { return D_; }
    double gcd_power() const { return x_; }
    std::size_t vector_count() const { return nvec_; }

    std::int64_t count(std::int64_t n, std::int64_t k) const { return all_[idx(n, k)]; }
    std::int64_t primitive(std::int64_t n, std::int64_t k) const { return prim_[idx(n, k)]; }
    double gcd_weight(std::int64_t n, std::int64_t k) const { return wgcd_[idx(n, k)]; }

    // Twisted counts of shell n against ell*alpha.
    cplx twisted_count(std::int64_t n, std::int64_t ell = 1) const;
    cplx twisted_primitive(std::int64_t n, std::int64_t ell = 1) const;
    cplx twisted_gcd_weight(std::int64_t n, std::int64_t ell = 1) const;
    bool shell_empty(std::int64_t n) const { return !nonempty_[static_cast<std::size_t>(n)]; }

private:
    std::size_t idx(std::int64_t n, std::int64_t k) const
    {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(D_) + static_cast<std::size_t>(k);
    }
    template <class T>
    cplx fold(const std::vector<T>& v, std::int64_t n, std::int64_t ell) const;

    int nu_;
    std::int64_t R2_;
    std::int64_t D_;
    double x_;
    std::size_t nvec_ = 0;
    std::vector<std::int64_t> all_, prim_;
    std::vector<double> wgcd_;
    std::vector<char> nonempty_;
    std::vector<cplx> roots_;
};

} // namespace latzeta

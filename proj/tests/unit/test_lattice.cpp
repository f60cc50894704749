#include "latzeta/errors.hpp"
#include "latzeta/lattice.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace latzeta;

TEST_SUITE("lattice")
{
    TEST_CASE("shells")
    {
        CHECK(enumerate_shell(2, 5).size() == 8);
        CHECK(enumerate_shell(3, 3).size() == 8);
        CHECK(enumerate_shell(4, 1).size() == 8);
        CHECK(enumerate_shell(2, 3).empty());
        for (const auto& v : enumerate_shell(3, 9)) CHECK(v.squared_norm() == 9);
    }

    TEST_CASE("ball enumeration is lexicographic and complete")
    {
        auto b = enumerate_ball(2, 10);
        CHECK(std::is_sorted(b.begin(), b.end()));
        std::set<LatticeVector> seen(b.begin(), b.end());
        CHECK(seen.size() == b.size());
        std::size_t brute = 0;
        for (int x = -4; x <= 4; ++x)
            for (int y = -4; y <= 4; ++y)
                if (x * x + y * y >= 1 && x * x + y * y <= 10) ++brute;
        CHECK(b.size() == brute);
    }

    TEST_CASE("slices partition the ball")
    {
        std::size_t total = 0;
        for (std::int64_t lead = -5; lead <= 5; ++lead)
            for_each_in_ball_slice(3, 25, lead, [&](std::span<const std::int64_t>, std::int64_t) { ++total; });
        CHECK(total == enumerate_ball(3, 25).size());
    }

    TEST_CASE("gcd and primitivity")
    {
        CHECK(vec_gcd(LatticeVector{4, -6, 10}) == 2);
        CHECK(vec_gcd(LatticeVector{0, -7}) == 7);
        CHECK(is_primitive(LatticeVector{2, 3}));
        CHECK_FALSE(is_primitive(LatticeVector{2, 4}));
        CHECK_THROWS_AS(vec_gcd(LatticeVector{0, 0, 0}), ZeroVector);
    }

    TEST_CASE("characters")
    {
        auto c = Character::parse("1/3,0,1/2", 3);
        CHECK(c.denominator() == 6);
        CHECK(c.to_string() == "1/3,0,1/2");
        auto b = Character::parse("1/4", 3);
        CHECK(b.dim() == 3);
        CHECK(b.alpha()[2] == BigRational(1, 4));
        CHECK(Character::parse("5/4", 1).alpha()[0] == BigRational(1, 4));
        CHECK(Character::parse("-1/3", 1).alpha()[0] == BigRational(2, 3));
        CHECK_THROWS_AS(Character::parse("1/3,1/2", 3), DimensionMismatch);
        CHECK_THROWS_AS(Character::parse("x", 1), DomainError);

        std::vector<std::int64_t> v{1, 1, 1};
        CHECK(c.phase_index(v) == 5);
        CHECK(c.scaled(3).to_string() == "0,0,1/2");
        CHECK(c.negated().to_string() == "2/3,0,1/2");
        int eps[] = {-1, 1, 1};
        CHECK(c.sign_flipped(eps).to_string() == "2/3,0,1/2");
        CHECK(Character::trivial(2).is_trivial());
    }

    TEST_CASE("unit roots are exact at quarter turns")
    {
        CHECK(unit_root(0, 4) == cplx(1, 0));
        CHECK(unit_root(1, 4) == cplx(0, 1));
        CHECK(unit_root(2, 4) == cplx(-1, 0));
        CHECK(unit_root(3, 4) == cplx(0, -1));
        CHECK(std::abs(unit_root(1, 3) - std::polar(1.0, 2 * pi / 3)) < 1e-15);
        auto c = Character::parse("1/4,1/2", 2);
        CHECK(char_pairing(LatticeVector{1, 1}, c) == cplx(0, -1));
    }

    TEST_CASE("twisted shells agree with per-vector sums")
    {
        auto chi = Character::parse("1/3,1/5", 2);
        TwistedShells sh(2, 50, chi, 1.0);
        for (std::int64_t n = 1; n <= 50; ++n) {
            cplx all = 0, prim = 0, weighted = 0;
            for (const auto& v : enumerate_shell(2, n)) {
                cplx e = char_pairing(v, chi);
                all += e;
                if (is_primitive(v)) prim += e;
                weighted += e / static_cast<double>(vec_gcd(v));
            }
            CHECK(std::abs(sh.twisted_count(n) - all) < 1e-12);
            CHECK(std::abs(sh.twisted_primitive(n) - prim) < 1e-12);
            CHECK(std::abs(sh.twisted_gcd_weight(n) - weighted) < 1e-12);
            CHECK(sh.shell_empty(n) == enumerate_shell(2, n).empty());
        }
        cplx scaled = 0;
        for (const auto& v : enumerate_shell(2, 25)) scaled += char_pairing(v, chi.scaled(2));
        CHECK(std::abs(sh.twisted_count(25, 2) - scaled) < 1e-12);
    }
}

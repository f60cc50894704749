#include "latzeta/rational.hpp"

#include "latzeta/errors.hpp"

#include <cctype>

namespace latzeta {

BigRational make_rational(long long num, long long den)
{
    if (den == 0) throw DomainError("zero denominator");
    BigRational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

BigInt pow(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRational pow(const BigRational& base, unsigned long e)
{
    return BigRational(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

double to_double(const BigRational& q) { return q.get_d(); }

std::string to_string(const BigRational& q) { return q.get_str(); }

BigRational parse_rational(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw DomainError("not a rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    BigInt d(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    BigRational q(BigInt(num), d);
    q.canonicalize();
    return q;
}

} // namespace latzeta

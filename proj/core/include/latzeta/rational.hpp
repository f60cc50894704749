#pragma once

#include <gmpxx.h>

#include <string>

namespace latzeta {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(long long num, long long den = 1);
BigInt pow(const BigInt& base, unsigned long e);
BigRational pow(const BigRational& base, unsigned long e);
BigInt factorial(unsigned long n);
double to_double(const BigRational& q);
std::string to_string(const BigRational& q);
// Parses "a", "-a/b"; throws DomainError on malformed input.
BigRational parse_rational(const std::string& text);

} // namespace latzeta

#include "latzeta/errors.hpp"

namespace latzeta {

DimensionMismatch::DimensionMismatch(std::size_t a, std::size_t b)
    : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

UnsupportedDimension::UnsupportedDimension(int nu)
    : Error("unsupported dimension nu=" + std::to_string(nu)) {}

NotPrime::NotPrime(unsigned long long p) : Error(std::to_string(p) + " is not prime") {}

NotCoprime::NotCoprime(unsigned long long m, unsigned long long n)
    : Error("gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") != 1") {}

} // namespace latzeta

#pragma once

#include <stdexcept>
#include <string>

namespace latzeta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    ZeroVector() : Error("zero vector has no gcd") {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t a, std::size_t b);
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(int nu);
};

class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    explicit NotPrime(unsigned long long p);
};

class NotCoprime : public Error {
public:
    NotCoprime(unsigned long long m, unsigned long long n);
};

class IndexError : public Error {
public:
    using Error::Error;
};

} // namespace latzeta

#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace latzeta::cli {

enum ExitCode : int {
    ok = 0,
    check_failed = 1,
    bad_arguments = 2,
    unsupported_dimension = 3,
    not_coprime = 4,
};

// Unset truncation fields fall back to Truncation::defaults_for(s).
struct RunConfig {
    std::optional<double> radius;
    std::optional<int> ell_limit;
    std::optional<int> mobius_limit;
    std::optional<double> tol;
    std::optional<unsigned> sieve_limit;
    std::string format = "json";
    std::string output;
    int threads = 1;
    double band = 0.05;

    void validate() const;
};

// "key = value" per line, '#' starts a comment. Keys: radius, ell_limit,
// mobius_limit, tol, sieve_limit, format, output, threads, band.
RunConfig parse_config(std::istream& in, const std::string& origin = "config");
RunConfig load_config(const std::string& path);

// "1.5", "1.5+0.5i", "-2i".
std::complex<double> parse_complex(const std::string& text);

// Runs one command line; output goes to `out` unless --output is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace latzeta::cli

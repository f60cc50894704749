#include "cli.hpp"

#include "latzeta/arith.hpp"
#include "latzeta/boundary.hpp"
#include "latzeta/detlap.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/lattice.hpp"
#include "latzeta/ruelle.hpp"
#include "latzeta/tauber.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace latzeta::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v, const std::string& origin)
{
    std::istringstream is(v);
    T out{};
    if (!(is >> out) || !is.eof()) throw DomainError(origin + ": bad value for " + key + ": '" + v + "'");
    return out;
}

json complex_json(cplx z)
{
    json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

std::string csv_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Truncation truncation_for(cplx s, const RunConfig& cfg)
{
    Truncation tr = Truncation::defaults_for(s);
    if (cfg.radius) tr.radius = *cfg.radius;
    if (cfg.ell_limit) tr.ell_limit = *cfg.ell_limit;
    if (cfg.mobius_limit) tr.mobius_limit = *cfg.mobius_limit;
    if (cfg.tol) tr.tol = *cfg.tol;
    tr.validate();
    return tr;
}

struct Flags {
    std::string config;
    std::optional<double> radius, tol, band;
    std::optional<int> ell_limit, mobius_limit, threads;
    std::optional<unsigned> sieve_limit;
    std::optional<std::string> format, output;
};

struct ArithArgs {
    int nu = 2;
    std::int64_t max = 10;
    bool check_closed = false;
};

struct LfunArgs {
    int nu = 1;
    std::string s = "1";
    std::string alpha = "0";
    std::string route = "series";
    bool deriv = false;
};

struct BoundaryArgs {
    int nu = 2;
    std::uint64_t m = 1, n = 1, prime_limit = 100, series_terms = 1000000;
};

struct DetlapArgs {
    int nu = 1;
    std::string s = "1";
    std::string alpha = "0";
    bool verify = false;
};

struct TauberArgs {
    int nu = 2;
    double x = 1.0;
    std::int64_t X = 100000;
    bool sweep = false;
};

int cmd_arith(const ArithArgs& a, const RunConfig& cfg, std::ostream& out)
{
    if (a.nu < 1) throw DomainError("--nu must be >= 1");
    if (a.max < 1) throw DomainError("--max must be >= 1");
    auto r = r_count_table(a.nu, a.max);
    auto prim = primitive_count_table(a.nu, a.max);
    std::vector<double> M(r.size(), 0.0);
    for (std::int64_t l = 1; l * l <= a.max; ++l)
        for (std::int64_t m = 1; m * l * l <= a.max; ++m)
            M[static_cast<std::size_t>(m * l * l)] += static_cast<double>(prim[static_cast<std::size_t>(m)]) / static_cast<double>(l);
    bool all_match = true;
    std::vector<std::int64_t> closed;
    if (a.check_closed) {
        closed.resize(r.size());
        for (std::int64_t n = 1; n <= a.max; ++n) {
            closed[static_cast<std::size_t>(n)] = r_closed(a.nu, n);
            all_match = all_match && closed[static_cast<std::size_t>(n)] == r[static_cast<std::size_t>(n)];
        }
    }
    if (cfg.format == "csv") {
        out << "n,r,r_primitive,M1" << (a.check_closed ? ",closed" : "") << "\n";
        for (std::int64_t n = 1; n <= a.max; ++n) {
            auto i = static_cast<std::size_t>(n);
            out << n << "," << r[i] << "," << prim[i] << "," << csv_number(M[i]);
            if (a.check_closed) out << "," << closed[i];
            out << "\n";
        }
    } else {
        json j;
        j["nu"] = a.nu;
        j["rows"] = json::array();
        for (std::int64_t n = 1; n <= a.max; ++n) {
            auto i = static_cast<std::size_t>(n);
            json row;
            row["n"] = n;
            row["r"] = r[i];
            row["r_primitive"] = prim[i];
            row["M1"] = M[i];
            if (a.check_closed) row["closed"] = closed[i];
            j["rows"].push_back(row);
        }
        if (a.check_closed) j["closed_matches"] = all_match;
        out << j.dump(2) << "\n";
    }
    return all_match ? ok : check_failed;
}

int cmd_lfun(const LfunArgs& a, const RunConfig& cfg, std::ostream& out)
{
    if (a.nu < 1) throw DomainError("--nu must be >= 1");
    cplx s = parse_complex(a.s);
    if (!(s.real() > 0)) throw DomainError("log L needs Re(s) > 0");
    Character chi = Character::parse(a.alpha, a.nu);
    Truncation tr = truncation_for(s, cfg);

    std::vector<std::pair<std::string, SeriesValue>> values;
    double delta = 0.0;
    if (a.route == "all") {
        auto r = log_L_routes(s, chi, a.nu, tr);
        values = {{"euler", r.euler}, {"moebius", r.moebius}, {"series", r.series}};
        delta = r.max_delta();
    } else {
        LogLRoute route = a.route == "euler" ? LogLRoute::euler : a.route == "moebius" ? LogLRoute::moebius : LogLRoute::series;
        values = {{a.route, log_L(s, chi, a.nu, tr, route)}};
    }
    std::optional<SeriesValue> deriv;
    if (a.deriv) deriv = log_deriv_L(s, chi, a.nu, tr);

    if (cfg.format == "csv") {
        out << "quantity,re,im,tail_estimate\n";
        for (const auto& [name, v] : values)
            out << "log_L_" << name << "," << csv_number(v.value.real()) << "," << csv_number(v.value.imag()) << ","
                << csv_number(v.tail_estimate) << "\n";
        if (deriv)
            out << "log_deriv_L," << csv_number(deriv->value.real()) << "," << csv_number(deriv->value.imag()) << ","
                << csv_number(deriv->tail_estimate) << "\n";
    } else {
        json j;
        j["nu"] = a.nu;
        j["s"] = complex_json(s);
        j["alpha"] = chi.to_string();
        j["routes"] = json::object();
        for (const auto& [name, v] : values) {
            json e = complex_json(v.value);
            e["tail_estimate"] = v.tail_estimate;
            j["routes"][name] = e;
        }
        if (a.route == "all") j["max_delta"] = delta;
        if (deriv) {
            json e = complex_json(deriv->value);
            e["tail_estimate"] = deriv->tail_estimate;
            j["log_deriv"] = e;
        }
        out << j.dump(2) << "\n";
    }
    return ok;
}

int cmd_boundary(const BoundaryArgs& a, const RunConfig& cfg, std::ostream& out)
{
    CertifyOptions opt;
    opt.series_terms = a.series_terms;
    auto c = certify_nonvanishing(a.nu, a.m, a.n, a.prime_limit, opt);
    if (cfg.format == "csv") {
        out << "kind,p,e,num,den\n";
        auto put = [&](const LocalFactor& f) {
            out << f.kind << "," << f.p << "," << (f.kind == 'F' ? std::to_string(f.e) : "") << ","
                << f.value.get_num().get_str() << "," << f.value.get_den().get_str() << "\n";
        };
        for (const auto& f : c.E_factors) put(f);
        for (const auto& f : c.F_factors) put(f);
        for (const auto& f : c.G_factors) put(f);
    } else {
        out << certificate_json(c) << "\n";
    }
    return c.verdict ? ok : check_failed;
}

int cmd_detlap(const DetlapArgs& a, const RunConfig& cfg, std::ostream& out)
{
    if (a.nu < 1) throw DomainError("--nu must be >= 1");
    cplx s = parse_complex(a.s);
    if (!(s.real() > 0)) throw DomainError("det needs Re(s) > 0");
    Character chi = Character::parse(a.alpha, a.nu);
    const int ell = a.nu / 2;
    const bool odd = a.nu % 2 == 1;
    Truncation tr = det_truncation(s);
    if (cfg.radius) tr.radius = *cfg.radius;

    cplx logdet;
    if (odd) {
        logdet = log_det_odd(ell, chi, s, tr);
    } else {
        if (s.imag() != 0.0) throw DomainError("even dimensions need real s");
        logdet = log_det_even(ell, chi, s.real(), tr);
    }
    json j;
    j["nu"] = a.nu;
    j["ell"] = ell;
    j["alpha"] = chi.to_string();
    j["s"] = complex_json(s);
    j["log_det"] = complex_json(logdet);
    j["det"] = complex_json(std::exp(logdet));
    int code = ok;
    if (a.nu == 1) {
        cplx exact = det_dim1_exact(chi.alpha()[0], s);
        double res = std::abs(std::exp(logdet) - exact) / std::abs(exact);
        j["exact_residual"] = res;
        if (!(res < 1e-12)) code = check_failed;
    }
    if (a.verify) {
        if (s.imag() != 0.0) throw DomainError("--verify needs real s");
        const double sr = s.real();
        auto f = [&](double u) {
            return odd ? log_det_odd(ell, chi, cplx(u, 0.0), tr).real() : log_det_even(ell, chi, u, tr);
        };
        double lhs = ladder_t_derivative(f, sr, ell + 1);
        double fact = std::tgamma(ell + 1.0);
        double rhs = (ell % 2 ? -fact : fact) * spectral_sum(a.nu, chi, sr, ell + 1).value.real();
        double res = std::abs(lhs - rhs) / std::abs(rhs);
        json v;
        v["ladder"] = lhs;
        v["spectral"] = rhs;
        v["residual"] = res;
        j["verify"] = v;
        if (!(res < 1e-4)) code = check_failed;
    }
    if (cfg.format == "csv") {
        out << "quantity,re,im\n";
        out << "log_det," << csv_number(logdet.real()) << "," << csv_number(logdet.imag()) << "\n";
        cplx d = std::exp(logdet);
        out << "det," << csv_number(d.real()) << "," << csv_number(d.imag()) << "\n";
        if (j.contains("exact_residual")) out << "exact_residual," << csv_number(j["exact_residual"].get<double>()) << ",0\n";
        if (j.contains("verify")) out << "ladder_residual," << csv_number(j["verify"]["residual"].get<double>()) << ",0\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return code;
}

int cmd_tauber(const TauberArgs& a, const RunConfig& cfg, std::ostream& out)
{
    if (a.X < 1) throw DomainError("--X must be >= 1");
    AsymptoticReport r = asymptotic_constant(a.nu, a.x);
    r.X = static_cast<double>(a.X);
    r.observed = a.sweep ? partial_sum_M_sweep(a.nu, a.X, a.x, cfg.threads) : partial_sum_M(a.nu, a.X, a.x);
    double pred = r.predicted_constant * std::pow(r.X, r.predicted_power);
    if (r.log_factor) pred *= std::log(r.X);
    r.ratio = r.observed / pred;
    if (cfg.format == "csv") {
        out << report_csv_header() << "\n" << report_csv_row(r) << "\n";
    } else {
        json j;
        j["nu"] = r.nu;
        j["x"] = r.x;
        j["X"] = a.X;
        j["observed"] = r.observed;
        j["predicted_constant"] = r.predicted_constant;
        j["predicted_power"] = r.predicted_power;
        j["log_factor"] = r.log_factor;
        j["ratio"] = r.ratio;
        j["band"] = cfg.band;
        out << j.dump(2) << "\n";
    }
    return std::abs(r.ratio - 1.0) <= cfg.band ? ok : check_failed;
}

void add_common(CLI::App& app, Flags& f)
{
    app.add_option("--config", f.config, "key=value config file (default: $LATZETA_CONFIG)");
    app.add_option("--format", f.format, "json or csv");
    app.add_option("--output,-o", f.output, "write output to this file");
    app.add_option("--threads", f.threads, "worker threads");
    app.add_option("--radius", f.radius, "lattice cutoff radius");
    app.add_option("--ell-limit", f.ell_limit, "terms of the ell-sums");
    app.add_option("--mobius-limit", f.mobius_limit, "terms of the Moebius and Phi sums");
    app.add_option("--tol", f.tol, "series tolerance");
    app.add_option("--sieve-limit", f.sieve_limit, "size of the mu/gamma sieve");
    app.add_option("--band", f.band, "tauber: accepted |ratio - 1|");
}

RunConfig resolve(const Flags& f)
{
    RunConfig cfg;
    std::string path = f.config;
    if (path.empty())
        if (const char* env = std::getenv("LATZETA_CONFIG")) path = env;
    if (!path.empty()) cfg = load_config(path);
    if (f.radius) cfg.radius = f.radius;
    if (f.ell_limit) cfg.ell_limit = f.ell_limit;
    if (f.mobius_limit) cfg.mobius_limit = f.mobius_limit;
    if (f.tol) cfg.tol = f.tol;
    if (f.sieve_limit) cfg.sieve_limit = f.sieve_limit;
    if (f.format) cfg.format = *f.format;
    if (f.output) cfg.output = *f.output;
    if (f.threads) cfg.threads = *f.threads;
    if (f.band) cfg.band = *f.band;
    cfg.validate();
    return cfg;
}

} // namespace

void RunConfig::validate() const
{
    if (format != "json" && format != "csv") throw DomainError("format must be json or csv");
    if (radius && !(*radius >= 1.0)) throw DomainError("radius must be >= 1");
    if (ell_limit && *ell_limit < 1) throw DomainError("ell_limit must be positive");
    if (mobius_limit && *mobius_limit < 1) throw DomainError("mobius_limit must be positive");
    if (tol && !(*tol > 0.0)) throw DomainError("tol must be positive");
    if (sieve_limit && *sieve_limit < 2) throw DomainError("sieve_limit must be >= 2");
    if (threads < 1) throw DomainError("threads must be positive");
    if (!(band > 0.0)) throw DomainError("band must be positive");
}

RunConfig parse_config(std::istream& in, const std::string& origin)
{
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        if (key == "radius") cfg.radius = parse_number<double>(key, v, origin);
        else if (key == "ell_limit") cfg.ell_limit = parse_number<int>(key, v, origin);
        else if (key == "mobius_limit") cfg.mobius_limit = parse_number<int>(key, v, origin);
        else if (key == "tol") cfg.tol = parse_number<double>(key, v, origin);
        else if (key == "sieve_limit") cfg.sieve_limit = parse_number<unsigned>(key, v, origin);
        else if (key == "format") cfg.format = v;
        else if (key == "output") cfg.output = v;
        else if (key == "threads") cfg.threads = parse_number<int>(key, v, origin);
        else if (key == "band") cfg.band = parse_number<double>(key, v, origin);
        else throw DomainError(origin + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config " + path);
    return parse_config(in, path);
}

std::complex<double> parse_complex(const std::string& text)
{
    static const std::regex re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
    static const std::regex pure(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pure)) {
        std::string b = m[1].str();
        double im = b.empty() || b == "+" ? 1.0 : b == "-" ? -1.0 : std::stod(b);
        return {0.0, im};
    }
    if (!std::regex_match(text, m, re) || (!m[1].matched && !m[2].matched))
        throw DomainError("cannot parse complex number '" + text + "'");
    double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im_part = 0.0;
    if (m[2].matched) {
        im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (m[2].str() == "-") im_part = -im_part;
    }
    return {re_part, im_part};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lattice Ruelle-type zeta functions, boundary certificates, torus determinants", "latzeta"};
    app.require_subcommand(1);
    Flags flags;

    ArithArgs arith;
    auto* c_arith = app.add_subcommand("arith", "r_nu(n), primitive counts and M_nu(n,1)");
    c_arith->add_option("--nu", arith.nu)->required();
    c_arith->add_option("--max", arith.max, "largest n");
    c_arith->add_flag("--check-closed", arith.check_closed, "compare with the divisor-sum closed forms");
    add_common(*c_arith, flags);

    LfunArgs lfun;
    auto* c_lfun = app.add_subcommand("lfun", "log L by Euler product, Moebius inversion or M-series");
    c_lfun->add_option("--nu", lfun.nu)->required();
    c_lfun->add_option("--s", lfun.s, "complex s, e.g. 1.5+0.5i")->required();
    c_lfun->add_option("--alpha", lfun.alpha, "comma-separated fractions");
    c_lfun->add_option("--route", lfun.route)->check(CLI::IsMember({"euler", "moebius", "series", "all"}));
    c_lfun->add_flag("--deriv", lfun.deriv, "also the logarithmic derivative");
    add_common(*c_lfun, flags);

    BoundaryArgs bnd;
    auto* c_bnd = app.add_subcommand("boundary", "nonvanishing certificate for R_nu(m/n)");
    c_bnd->add_option("--nu", bnd.nu)->required();
    c_bnd->add_option("--m", bnd.m)->required();
    c_bnd->add_option("--n", bnd.n)->required();
    c_bnd->add_option("--prime-limit", bnd.prime_limit, "exact G factors up to this prime");
    c_bnd->add_option("--series-terms", bnd.series_terms, "terms of the float cross-check series");
    add_common(*c_bnd, flags);

    DetlapArgs det;
    auto* c_det = app.add_subcommand("detlap", "det(Laplacian + s^2) on the twisted torus");
    c_det->add_option("--nu", det.nu)->required();
    c_det->add_option("--s", det.s)->required()->allow_extra_args(false);
    c_det->add_option("--alpha", det.alpha);
    c_det->add_flag("--verify", det.verify, "ladder operator against the spectral sum");
    add_common(*c_det, flags);

    TauberArgs tb;
    auto* c_tb = app.add_subcommand("tauber", "sum_{n<=X} M_nu(n,x) against the asymptotic constant");
    c_tb->add_option("--nu", tb.nu)->required();
    c_tb->add_option("--x", tb.x)->required();
    c_tb->add_option("--X", tb.X)->required();
    c_tb->add_flag("--sweep", tb.sweep, "one ball sweep instead of count tables");
    add_common(*c_tb, flags);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return bad_arguments;
    }

    try {
        RunConfig cfg = resolve(flags);
        if (cfg.sieve_limit) set_default_sieve_limit(*cfg.sieve_limit);
        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.output.empty()) {
            file.open(cfg.output);
            if (!file) throw DomainError("cannot write " + cfg.output);
            sink = &file;
        }
        if (c_arith->parsed()) return cmd_arith(arith, cfg, *sink);
        if (c_lfun->parsed()) return cmd_lfun(lfun, cfg, *sink);
        if (c_bnd->parsed()) return cmd_boundary(bnd, cfg, *sink);
        if (c_det->parsed()) return cmd_detlap(det, cfg, *sink);
        return cmd_tauber(tb, cfg, *sink);
    } catch (const UnsupportedDimension& e) {
        err << "error: " << e.what() << "\n";
        return unsupported_dimension;
    } catch (const NotCoprime& e) {
        err << "error: " << e.what() << "\n";
        return not_coprime;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return bad_arguments;
    }
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace latzeta::cli

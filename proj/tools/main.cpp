// Command-line front end for the prabhakar library.
//
// Single-point evaluations print one bare decimal (17 significant digits).
// Sweeps emit CSV (header row, LF endings, 17 significant digits) or JSON
// (array of objects, same field names as the CSV header) selected with
// --format.  Most sweeps are two columns "t,value" with t the swept
// variable, so any sweep whose abscissa starts at 0 re-imports as a
// SampledFunction bit-for-bit; the two field solvers emit full triples
// ("v,t,G" and "x,t,u") instead.
//
// Every subcommand accepts --config FILE: key=value lines (# comments, blank
// lines allowed) whose keys are the subcommand's long flag names without the
// leading dashes.  Explicit flags take precedence over config values.
//
// Exit codes: 0 success, 1 validation failure, 2 numerical envelope,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prabhakar/errors.hpp"
#include "prabhakar/grid.hpp"
#include "prabhakar/kernels.hpp"
#include "prabhakar/mittag_leffler.hpp"
#include "prabhakar/operators.hpp"
#include "prabhakar/solvers.hpp"
#include "prabhakar/transforms.hpp"
#include "prabhakar/verify.hpp"

namespace {

using prabhakar::envelope_error;
using prabhakar::validation_error;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------
// Config-file plumbing: each option is registered with a setter so a
// key=value line can assign it exactly when the flag was not given.

template <class T>
T parse_value(const std::string& s);

template <>
double parse_value<double>(const std::string& s)
{
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw validation_error("config: not a number: '" + s + "'");
    }
    if (pos != s.size())
        throw validation_error("config: trailing characters in '" + s + "'");
    return v;
}

template <>
int parse_value<int>(const std::string& s)
{
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw validation_error("config: not an integer: '" + s + "'");
    }
    if (pos != s.size())
        throw validation_error("config: trailing characters in '" + s + "'");
    return static_cast<int>(v);
}

template <>
std::uint64_t parse_value<std::uint64_t>(const std::string& s)
{
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw validation_error("config: not an unsigned integer: '" + s +
                               "'");
    }
    if (pos != s.size())
        throw validation_error("config: trailing characters in '" + s + "'");
    return v;
}

template <>
std::string parse_value<std::string>(const std::string& s)
{
    return s;
}

template <>
bool parse_value<bool>(const std::string& s)
{
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    throw validation_error("config: not a boolean: '" + s + "'");
}

struct ConfigBinding {
    CLI::Option* opt;
    std::function<void(const std::string&)> set;
};
using ConfigMap = std::map<std::string, ConfigBinding>;

// Register every comma-separated long name (minus dashes) as a config key.
void register_keys(ConfigMap& m, const std::string& names, CLI::Option* o,
                   std::function<void(const std::string&)> set)
{
    std::size_t start = 0;
    while (start < names.size()) {
        std::size_t end = names.find(',', start);
        if (end == std::string::npos) end = names.size();
        std::string name = names.substr(start, end - start);
        while (!name.empty() && name.front() == '-') name.erase(0, 1);
        if (!name.empty()) m[name] = ConfigBinding{o, set};
        start = end + 1;
    }
}

template <class T>
CLI::Option* bind_opt(CLI::App* sub, ConfigMap& m, const std::string& names,
                  T& var, const std::string& desc)
{
    CLI::Option* o = sub->add_option(names, var, desc);
    register_keys(m, names, o,
                  [&var](const std::string& s) { var = parse_value<T>(s); });
    return o;
}

CLI::Option* bind_flag(CLI::App* sub, ConfigMap& m, const std::string& names,
                       bool& var, const std::string& desc)
{
    CLI::Option* o = sub->add_flag(names, var, desc);
    register_keys(m, names, o, [&var](const std::string& s) {
        var = parse_value<bool>(s);
    });
    return o;
}

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void apply_config(const std::string& path, const ConfigMap& m)
{
    std::ifstream is(path);
    if (!is) throw validation_error("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw validation_error("config: line " + std::to_string(lineno) +
                                   " is not key=value: '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const auto it = m.find(key);
        if (it == m.end())
            throw validation_error("config: unknown key '" + key + "'");
        if (it->second.opt->count() == 0) // explicit flags win
            it->second.set(value);
    }
}

// ---------------------------------------------------------------------
// Sweep ranges "a:b:n": n points from a to b inclusive.

std::vector<double> parse_range(const std::string& s)
{
    double a = 0.0, b = 0.0;
    long n = 0;
    const std::size_t c1 = s.find(':');
    const std::size_t c2 = c1 == std::string::npos
                               ? std::string::npos
                               : s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw validation_error("range: expected a:b:n, got '" + s + "'");
    try {
        std::size_t p1 = 0, p2 = 0, p3 = 0;
        const std::string sa = s.substr(0, c1);
        const std::string sb = s.substr(c1 + 1, c2 - c1 - 1);
        const std::string sn = s.substr(c2 + 1);
        a = std::stod(sa, &p1);
        b = std::stod(sb, &p2);
        n = std::stol(sn, &p3);
        if (p1 != sa.size() || p2 != sb.size() || p3 != sn.size())
            throw validation_error("range: malformed field in '" + s + "'");
    } catch (const validation_error&) {
        throw;
    } catch (const std::exception&) {
        throw validation_error("range: expected a:b:n, got '" + s + "'");
    }
    if (n < 1) throw validation_error("range: n must be >= 1");
    if (n == 1 && a != b)
        throw validation_error("range: n = 1 requires a == b");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(a);
        return out;
    }
    for (long i = 0; i < n; ++i)
        out.push_back(a + (b - a) * (double(i) / double(n - 1)));
    out.back() = b;
    return out;
}

// ---------------------------------------------------------------------
// Output: buffered, then flushed to stdout or a file in one piece.

struct Output {
    std::string path = "-";
    std::string format = "csv";
    std::ostringstream buf;

    void check_format() const
    {
        if (format != "csv" && format != "json")
            throw validation_error("format must be csv or json");
    }
    void flush()
    {
        if (path == "-") {
            std::cout << buf.str();
            std::cout.flush();
        } else {
            std::ofstream os(path, std::ios::binary);
            if (!os)
                throw validation_error("cannot open output file: " + path);
            os << buf.str();
        }
    }
};

void emit_single(Output& o, double v)
{
    o.buf << fmt17(v) << '\n';
}

void emit_rows(Output& o, const std::vector<std::string>& cols,
               const std::vector<std::vector<double>>& rows)
{
    o.check_format();
    if (o.format == "csv") {
        for (std::size_t i = 0; i < cols.size(); ++i)
            o.buf << (i ? "," : "") << cols[i];
        o.buf << '\n';
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                o.buf << (i ? "," : "") << fmt17(r[i]);
            o.buf << '\n';
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < r.size(); ++i) obj[cols[i]] = r[i];
            arr.push_back(std::move(obj));
        }
        o.buf << arr.dump(2) << '\n';
    }
}

// exactly one of a single point and a range may be provided
void need_one(bool has_single, bool has_range, const char* single_name,
              const char* range_name)
{
    if (has_single == has_range)
        throw validation_error(std::string("provide exactly one of ") +
                               single_name + " and " + range_name);
}

// Required parameters are checked after the config file has been merged, so
// they may come from either the command line or the file.
void need_num(double v, const char* flag)
{
    if (std::isnan(v))
        throw validation_error(std::string(flag) + " is required");
}

void need_str(const std::string& s, const char* flag)
{
    if (s.empty())
        throw validation_error(std::string(flag) + " is required");
}

struct Common {
    std::string config_path;
    Output out;
    ConfigMap cfg;
    CLI::Option* config_opt = nullptr;
};

void attach_common(CLI::App* sub, Common& c)
{
    c.config_opt = sub->add_option(
        "--config", c.config_path,
        "key=value file merged with the flags (explicit flags win)");
    bind_opt(sub, c.cfg, "--output", c.out.path,
         "output file path, or - for stdout (default)");
    bind_opt(sub, c.cfg, "--format", c.out.format, "csv or json (default csv)");
}

void merge_config(Common& c)
{
    if (!c.config_path.empty()) apply_config(c.config_path, c.cfg);
    c.out.check_format();
}

prabhakar::SampledFunction load_input(const std::string& path, bool ac1)
{
    prabhakar::SampledFunction f = prabhakar::read_csv_file(path);
    if (!ac1) return f;
    return prabhakar::SampledFunction::from_samples(f.grid(), f.values(),
                                                    true);
}

} // namespace

int main(int argc, char** argv)
{
    using namespace prabhakar;

    CLI::App app{
        "prabhakar: three-parameter Mittag-Leffler functions, Prabhakar "
        "kernels and fractional operators, Sumudu/Fourier transforms, and "
        "the associated Cauchy-problem solvers"};
    app.require_subcommand(1);

    // ---- ml ------------------------------------------------------------
    struct {
        Common c;
        double alpha = kUnset, beta = kUnset, gamma = 0.0;
        double z = kUnset;
        std::string z_range;
        SeriesControl ctl;
    } ml_a;
    CLI::App* ml_cmd = app.add_subcommand(
        "ml", "evaluate the three-parameter Mittag-Leffler function");
    attach_common(ml_cmd, ml_a.c);
    bind_opt(ml_cmd, ml_a.c.cfg, "--alpha", ml_a.alpha, "series order (> 0)");
    bind_opt(ml_cmd, ml_a.c.cfg, "--beta", ml_a.beta, "second parameter");
    bind_opt(ml_cmd, ml_a.c.cfg, "--gamma", ml_a.gamma,
         "upper parameter (default 0: 1/Gamma(beta))");
    bind_opt(ml_cmd, ml_a.c.cfg, "--z", ml_a.z, "argument (single evaluation)");
    bind_opt(ml_cmd, ml_a.c.cfg, "--z-range", ml_a.z_range,
         "sweep a:b:n; rows t,value with t = z");
    bind_opt(ml_cmd, ml_a.c.cfg, "--rel-tol", ml_a.ctl.rel_tol,
         "series stopping tolerance");
    bind_opt(ml_cmd, ml_a.c.cfg, "--max-terms", ml_a.ctl.max_terms,
         "series term budget");

    // ---- kernel ----------------------------------------------------------
    struct {
        Common c;
        double rho = kUnset, mu = kUnset, omega = 0.0, gamma = 0.0;
        double t = kUnset;
        std::string t_range;
    } ker_a;
    CLI::App* ker_cmd = app.add_subcommand(
        "kernel", "evaluate the Prabhakar kernel t^(mu-1) E(omega t^rho)");
    attach_common(ker_cmd, ker_a.c);
    bind_opt(ker_cmd, ker_a.c.cfg, "--rho", ker_a.rho, "kernel exponent (> 0)");
    bind_opt(ker_cmd, ker_a.c.cfg, "--mu", ker_a.mu,
         "kernel order (> 0; singular at t = 0 when mu < 1)");
    bind_opt(ker_cmd, ker_a.c.cfg, "--omega", ker_a.omega, "frequency");
    bind_opt(ker_cmd, ker_a.c.cfg, "--gamma", ker_a.gamma, "upper parameter");
    bind_opt(ker_cmd, ker_a.c.cfg, "--t", ker_a.t, "single evaluation point");
    bind_opt(ker_cmd, ker_a.c.cfg, "--t-range", ker_a.t_range,
         "sweep a:b:n; rows t,value");

    // ---- prabhakar-int ---------------------------------------------------
    struct {
        Common c;
        double rho = kUnset, mu = kUnset, omega = 0.0, gamma = 0.0;
        double t = kUnset;
        std::string t_range;
        std::string input;
        QuadratureConfig q;
    } pint_a;
    CLI::App* pint_cmd = app.add_subcommand(
        "prabhakar-int",
        "Prabhakar integral of a sampled function (CSV with header t,value)");
    attach_common(pint_cmd, pint_a.c);
    bind_opt(pint_cmd, pint_a.c.cfg, "--rho", pint_a.rho, "kernel exponent (> 0)");
    bind_opt(pint_cmd, pint_a.c.cfg, "--mu", pint_a.mu, "integral order (> 0)");
    bind_opt(pint_cmd, pint_a.c.cfg, "--omega", pint_a.omega, "frequency");
    bind_opt(pint_cmd, pint_a.c.cfg, "--gamma", pint_a.gamma, "upper parameter");
    bind_opt(pint_cmd, pint_a.c.cfg, "--input", pint_a.input,
         "operand samples, CSV with header t,value");
    bind_opt(pint_cmd, pint_a.c.cfg, "--t", pint_a.t, "single evaluation point");
    bind_opt(pint_cmd, pint_a.c.cfg, "--t-range", pint_a.t_range,
         "sweep a:b:n; rows t,value");
    bind_opt(pint_cmd, pint_a.c.cfg, "--nodes-per-cell", pint_a.q.nodes_per_cell,
         "Gauss-Legendre nodes per grid cell");
    bind_opt(pint_cmd, pint_a.c.cfg, "--jacobi-nodes", pint_a.q.jacobi_nodes,
         "Gauss-Jacobi nodes on singular cells");

    // ---- hp-deriv ----------------------------------------------------------
    struct {
        Common c;
        double mu = kUnset, nu = 0.0;
        double rho = kUnset, omega = 0.0, gamma = 0.0;
        double t = kUnset;
        std::string t_range;
        std::string input;
        bool regularized = false;
        bool ac1 = false;
        QuadratureConfig q;
    } hpd_a;
    CLI::App* hpd_cmd = app.add_subcommand(
        "hp-deriv",
        "Hilfer-Prabhakar derivative of a sampled function (CSV input)");
    attach_common(hpd_cmd, hpd_a.c);
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--mu", hpd_a.mu,
         "differentiation order in (0, 1)");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--nu", hpd_a.nu,
         "interpolation type in [0, 1] (0 = RL-flavored, 1 = "
         "Caputo-flavored; ignored with --regularized)");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--rho", hpd_a.rho, "kernel exponent (> 0)");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--omega", hpd_a.omega, "frequency");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--gamma", hpd_a.gamma, "upper parameter");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--input", hpd_a.input,
         "operand samples, CSV with header t,value");
    bind_flag(hpd_cmd, hpd_a.c.cfg, "--regularized", hpd_a.regularized,
              "use the regularized (Caputo-flavored) derivative; requires "
              "--ac1");
    bind_flag(hpd_cmd, hpd_a.c.cfg, "--ac1", hpd_a.ac1,
              "assert the input is absolutely continuous");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--t", hpd_a.t, "single evaluation point");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--t-range", hpd_a.t_range,
         "sweep a:b:n; rows t,value");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--nodes-per-cell", hpd_a.q.nodes_per_cell,
         "Gauss-Legendre nodes per grid cell");
    bind_opt(hpd_cmd, hpd_a.c.cfg, "--jacobi-nodes", hpd_a.q.jacobi_nodes,
         "Gauss-Jacobi nodes on singular cells");

    // ---- sumudu ------------------------------------------------------------
    struct {
        Common c;
        std::string input;
        double u = kUnset;
        std::string u_range;
        SumuduOptions opts;
        double t_cap = kUnset; // default: the input's domain end
    } sum_a;
    CLI::App* sum_cmd = app.add_subcommand(
        "sumudu", "numerical Sumudu transform of a sampled function");
    attach_common(sum_cmd, sum_a.c);
    bind_opt(sum_cmd, sum_a.c.cfg, "--input", sum_a.input,
         "samples of f on [0, T], CSV with header t,value");
    bind_opt(sum_cmd, sum_a.c.cfg, "--u", sum_a.u,
         "transform variable (single evaluation, > 0)");
    bind_opt(sum_cmd, sum_a.c.cfg, "--u-range", sum_a.u_range,
         "sweep a:b:n; rows t,value with t = u");
    bind_opt(sum_cmd, sum_a.c.cfg, "--n-nodes", sum_a.opts.n_nodes,
         "quadrature nodes per branch");
    bind_opt(sum_cmd, sum_a.c.cfg, "--sing-order", sum_a.opts.sing_order,
         "power of the f ~ t^s head absorbed into the rule");
    bind_opt(sum_cmd, sum_a.c.cfg, "--t-cap", sum_a.t_cap,
         "largest trusted argument of f (default: end of the input grid)");
    bind_opt(sum_cmd, sum_a.c.cfg, "--decay-tol", sum_a.opts.decay_tol,
         "bound on the exponential mass dropped beyond the cap");

    // ---- solve-ode -----------------------------------------------------------
    struct {
        Common c;
        double rho = kUnset, mu = kUnset, nu = 0.0;
        double gamma = 0.0, delta = 0.0, omega = 0.0, lambda = 0.0;
        double initial_weight = 0.0;
        std::string forcing;
        double x = kUnset;
        std::string x_range;
        SeriesControl ctl;
        QuadratureConfig q;
    } ode_a;
    CLI::App* ode_cmd = app.add_subcommand(
        "solve-ode",
        "resolvent-series solution of the linear fractional Cauchy problem");
    attach_common(ode_cmd, ode_a.c);
    bind_opt(ode_cmd, ode_a.c.cfg, "--rho", ode_a.rho, "kernel exponent (> 0)");
    bind_opt(ode_cmd, ode_a.c.cfg, "--mu", ode_a.mu,
         "differentiation order in (0, 1)");
    bind_opt(ode_cmd, ode_a.c.cfg, "--nu", ode_a.nu,
         "interpolation type in [0, 1]");
    bind_opt(ode_cmd, ode_a.c.cfg, "--gamma", ode_a.gamma,
         "derivative upper parameter (>= 0)");
    bind_opt(ode_cmd, ode_a.c.cfg, "--delta", ode_a.delta,
         "right-hand-side integral upper parameter (>= 0)");
    bind_opt(ode_cmd, ode_a.c.cfg, "--omega", ode_a.omega, "frequency");
    bind_opt(ode_cmd, ode_a.c.cfg, "--lambda", ode_a.lambda,
         "coefficient of the integral term");
    bind_opt(ode_cmd, ode_a.c.cfg, "--initial-weight,--K", ode_a.initial_weight,
         "weighted initial value (>= 0)");
    bind_opt(ode_cmd, ode_a.c.cfg, "--forcing", ode_a.forcing,
         "forcing samples, CSV with header t,value (default: none)");
    bind_opt(ode_cmd, ode_a.c.cfg, "--x", ode_a.x, "single evaluation point");
    bind_opt(ode_cmd, ode_a.c.cfg, "--x-range", ode_a.x_range,
         "sweep a:b:n; rows t,value with t = x");
    bind_opt(ode_cmd, ode_a.c.cfg, "--rel-tol", ode_a.ctl.rel_tol,
         "series stopping tolerance");
    bind_opt(ode_cmd, ode_a.c.cfg, "--max-terms", ode_a.ctl.max_terms,
         "series term budget");
    bind_opt(ode_cmd, ode_a.c.cfg, "--nodes-per-cell", ode_a.q.nodes_per_cell,
         "Gauss-Legendre nodes per grid cell");
    bind_opt(ode_cmd, ode_a.c.cfg, "--jacobi-nodes", ode_a.q.jacobi_nodes,
         "Gauss-Jacobi nodes on singular cells");

    // ---- solve-pgf ------------------------------------------------------------
    struct {
        Common c;
        double rho = kUnset, mu = kUnset, gamma = 0.0, omega = 0.0;
        double lambda = kUnset;
        double v = kUnset;
        double t = kUnset;
        std::string t_range;
        SeriesControl ctl;
    } pgf_a;
    CLI::App* pgf_cmd = app.add_subcommand(
        "solve-pgf",
        "probability generating function of the subordinated counting "
        "process");
    attach_common(pgf_cmd, pgf_a.c);
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--rho", pgf_a.rho,
         "kernel exponent in (0, 1]");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--mu", pgf_a.mu,
         "differentiation order in (0, 1]");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--gamma", pgf_a.gamma,
         "upper parameter (>= 0)");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--omega", pgf_a.omega,
         "frequency (enters negated)");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--lambda", pgf_a.lambda, "event rate (> 0)");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--v", pgf_a.v, "PGF argument in [-1, 1]");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--t", pgf_a.t, "single evaluation time");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--t-range", pgf_a.t_range,
         "sweep a:b:n; rows v,t,G");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--rel-tol", pgf_a.ctl.rel_tol,
         "series stopping tolerance");
    bind_opt(pgf_cmd, pgf_a.c.cfg, "--max-terms", pgf_a.ctl.max_terms,
         "series term budget");

    // ---- solve-diffusion --------------------------------------------------------
    struct {
        Common c;
        double rho = kUnset, mu = kUnset, nu = 1.0;
        double gamma = 0.0, omega = 0.0, diffusivity = kUnset;
        bool regularized = false;
        std::string datum = "gaussian";
        bool numeric_hat = false;
        FrequencyGrid grid;
        double x = kUnset, t = kUnset;
        std::string x_range, t_range;
        SeriesControl ctl;
    } dif_a;
    CLI::App* dif_cmd = app.add_subcommand(
        "solve-diffusion",
        "spectral solution of the fractional diffusion Cauchy problem");
    attach_common(dif_cmd, dif_a.c);
    bind_opt(dif_cmd, dif_a.c.cfg, "--rho", dif_a.rho, "kernel exponent (> 0)");
    bind_opt(dif_cmd, dif_a.c.cfg, "--mu", dif_a.mu,
         "differentiation order in (0, 1]");
    bind_opt(dif_cmd, dif_a.c.cfg, "--nu", dif_a.nu,
         "interpolation type in [0, 1] (ignored with --regularized)");
    bind_opt(dif_cmd, dif_a.c.cfg, "--gamma", dif_a.gamma, "upper parameter");
    bind_opt(dif_cmd, dif_a.c.cfg, "--omega", dif_a.omega, "frequency");
    bind_opt(dif_cmd, dif_a.c.cfg, "--diffusivity,--K", dif_a.diffusivity,
         "diffusivity (>= 0)");
    bind_flag(dif_cmd, dif_a.c.cfg, "--regularized", dif_a.regularized,
              "use the regularized flavor (plain initial datum)");
    bind_opt(dif_cmd, dif_a.c.cfg, "--datum", dif_a.datum,
         "initial datum; 'gaussian' (standard normal) is the only built-in");
    bind_flag(dif_cmd, dif_a.c.cfg, "--numeric-hat", dif_a.numeric_hat,
              "force the numerical forward transform of the datum (the "
              "Gaussian image is otherwise supplied analytically)");
    bind_opt(dif_cmd, dif_a.c.cfg, "--p-max", dif_a.grid.p_max,
         "frequency cutoff");
    bind_opt(dif_cmd, dif_a.c.cfg, "--n-p", dif_a.grid.n_p,
         "frequency intervals (even)");
    bind_opt(dif_cmd, dif_a.c.cfg, "--x-max", dif_a.grid.x_max,
         "spatial cutoff of the forward transform");
    bind_opt(dif_cmd, dif_a.c.cfg, "--n-x", dif_a.grid.n_x,
         "spatial intervals of the forward transform");
    bind_opt(dif_cmd, dif_a.c.cfg, "--x", dif_a.x, "evaluation point");
    bind_opt(dif_cmd, dif_a.c.cfg, "--t", dif_a.t, "evaluation time (> 0)");
    bind_opt(dif_cmd, dif_a.c.cfg, "--x-range", dif_a.x_range,
         "sweep a:b:n over x at fixed --t; rows x,t,u");
    bind_opt(dif_cmd, dif_a.c.cfg, "--t-range", dif_a.t_range,
         "sweep a:b:n over t at fixed --x; rows x,t,u");
    bind_opt(dif_cmd, dif_a.c.cfg, "--rel-tol", dif_a.ctl.rel_tol,
         "series stopping tolerance");
    bind_opt(dif_cmd, dif_a.c.cfg, "--max-terms", dif_a.ctl.max_terms,
         "series term budget");

    // ---- verify -------------------------------------------------------------------
    struct {
        Common c;
        std::string suite = "all";
        std::uint64_t seed = 42;
        std::string csv_path;
    } ver_a;
    CLI::App* ver_cmd = app.add_subcommand(
        "verify", "run the verification harness (summary on stdout)");
    attach_common(ver_cmd, ver_a.c);
    bind_opt(ver_cmd, ver_a.c.cfg, "--suite", ver_a.suite,
         "suite name, or 'all' (default)");
    bind_opt(ver_cmd, ver_a.c.cfg, "--seed", ver_a.seed,
         "seed for the randomized parameter draws (default 42)");
    bind_opt(ver_cmd, ver_a.c.cfg, "--csv", ver_a.csv_path,
         "also write the full report table to this CSV file");

    // ---- parse + dispatch ----------------------------------------------------------
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e); // prints the message and usage hint
            return 1;
        }

        if (ml_cmd->parsed()) {
            merge_config(ml_a.c);
            need_num(ml_a.alpha, "--alpha");
            need_num(ml_a.beta, "--beta");
            const MLParams p{ml_a.alpha, ml_a.beta, ml_a.gamma};
            const bool single = !std::isnan(ml_a.z);
            need_one(single, !ml_a.z_range.empty(), "--z", "--z-range");
            if (single) {
                emit_single(ml_a.c.out, ml3(p, ml_a.z, ml_a.ctl));
            } else {
                std::vector<std::vector<double>> rows;
                for (double z : parse_range(ml_a.z_range))
                    rows.push_back({z, ml3(p, z, ml_a.ctl)});
                emit_rows(ml_a.c.out, {"t", "value"}, rows);
            }
            ml_a.c.out.flush();
            return 0;
        }

        if (ker_cmd->parsed()) {
            merge_config(ker_a.c);
            need_num(ker_a.rho, "--rho");
            need_num(ker_a.mu, "--mu");
            const PrabhakarParams p{ker_a.rho, ker_a.mu, ker_a.omega,
                                    ker_a.gamma};
            const bool single = !std::isnan(ker_a.t);
            need_one(single, !ker_a.t_range.empty(), "--t", "--t-range");
            if (single) {
                emit_single(ker_a.c.out, kernel_eval(p, ker_a.t));
            } else {
                const PreparedKernel k(p);
                std::vector<std::vector<double>> rows;
                for (double t : parse_range(ker_a.t_range))
                    rows.push_back({t, k(t)});
                emit_rows(ker_a.c.out, {"t", "value"}, rows);
            }
            ker_a.c.out.flush();
            return 0;
        }

        if (pint_cmd->parsed()) {
            merge_config(pint_a.c);
            need_num(pint_a.rho, "--rho");
            need_num(pint_a.mu, "--mu");
            need_str(pint_a.input, "--input");
            const PrabhakarParams p{pint_a.rho, pint_a.mu, pint_a.omega,
                                    pint_a.gamma};
            const SampledFunction f = load_input(pint_a.input, false);
            const bool single = !std::isnan(pint_a.t);
            need_one(single, !pint_a.t_range.empty(), "--t", "--t-range");
            if (single) {
                emit_single(pint_a.c.out,
                            prabhakar_integral(p, f, pint_a.t, pint_a.q));
            } else {
                std::vector<std::vector<double>> rows;
                for (double t : parse_range(pint_a.t_range))
                    rows.push_back({t, prabhakar_integral(p, f, t, pint_a.q)});
                emit_rows(pint_a.c.out, {"t", "value"}, rows);
            }
            pint_a.c.out.flush();
            return 0;
        }

        if (hpd_cmd->parsed()) {
            merge_config(hpd_a.c);
            need_num(hpd_a.mu, "--mu");
            need_num(hpd_a.rho, "--rho");
            need_str(hpd_a.input, "--input");
            const PrabhakarBase b{hpd_a.rho, hpd_a.omega, hpd_a.gamma};
            const SampledFunction f = load_input(hpd_a.input, hpd_a.ac1);
            const bool single = !std::isnan(hpd_a.t);
            need_one(single, !hpd_a.t_range.empty(), "--t", "--t-range");
            std::function<double(double)> op;
            if (hpd_a.regularized) {
                auto r = std::make_shared<RegularizedHpDerivative>(
                    hpd_a.mu, b, f, hpd_a.q);
                op = [r](double t) { return (*r)(t); };
            } else {
                auto h = std::make_shared<HilferPrabhakarDerivative>(
                    HilferOrder{hpd_a.mu, hpd_a.nu}, b, f, hpd_a.q);
                op = [h](double t) { return (*h)(t); };
            }
            if (single) {
                emit_single(hpd_a.c.out, op(hpd_a.t));
            } else {
                std::vector<std::vector<double>> rows;
                for (double t : parse_range(hpd_a.t_range))
                    rows.push_back({t, op(t)});
                emit_rows(hpd_a.c.out, {"t", "value"}, rows);
            }
            hpd_a.c.out.flush();
            return 0;
        }

        if (sum_cmd->parsed()) {
            merge_config(sum_a.c);
            need_str(sum_a.input, "--input");
            const SampledFunction f = load_input(sum_a.input, false);
            SumuduOptions o = sum_a.opts;
            o.t_cap = std::isnan(sum_a.t_cap) ? f.domain_end() : sum_a.t_cap;
            const auto callable = [&f](double t) { return f.eval(t); };
            const bool single = !std::isnan(sum_a.u);
            need_one(single, !sum_a.u_range.empty(), "--u", "--u-range");
            if (single) {
                emit_single(sum_a.c.out, sumudu_numeric(callable, sum_a.u, o));
            } else {
                std::vector<std::vector<double>> rows;
                for (double u : parse_range(sum_a.u_range))
                    rows.push_back({u, sumudu_numeric(callable, u, o)});
                emit_rows(sum_a.c.out, {"t", "value"}, rows);
            }
            sum_a.c.out.flush();
            return 0;
        }

        if (ode_cmd->parsed()) {
            merge_config(ode_a.c);
            need_num(ode_a.rho, "--rho");
            need_num(ode_a.mu, "--mu");
            OdeProblem pb;
            pb.order = HilferOrder{ode_a.mu, ode_a.nu};
            pb.rho = ode_a.rho;
            pb.omega = ode_a.omega;
            pb.gamma_upper = ode_a.gamma;
            pb.delta = ode_a.delta;
            pb.lambda = ode_a.lambda;
            pb.initial_weight = ode_a.initial_weight;
            if (!ode_a.forcing.empty())
                pb.forcing = load_input(ode_a.forcing, false);
            const bool single = !std::isnan(ode_a.x);
            need_one(single, !ode_a.x_range.empty(), "--x", "--x-range");
            if (single) {
                emit_single(ode_a.c.out,
                            solve_ode(pb, ode_a.x, ode_a.ctl, ode_a.q));
            } else {
                std::vector<std::vector<double>> rows;
                for (double x : parse_range(ode_a.x_range))
                    rows.push_back({x, solve_ode(pb, x, ode_a.ctl, ode_a.q)});
                emit_rows(ode_a.c.out, {"t", "value"}, rows);
            }
            ode_a.c.out.flush();
            return 0;
        }

        if (pgf_cmd->parsed()) {
            merge_config(pgf_a.c);
            need_num(pgf_a.rho, "--rho");
            need_num(pgf_a.mu, "--mu");
            need_num(pgf_a.lambda, "--lambda");
            need_num(pgf_a.v, "--v");
            PgfProblem pb;
            pb.mu = pgf_a.mu;
            pb.rho = pgf_a.rho;
            pb.omega = pgf_a.omega;
            pb.gamma_upper = pgf_a.gamma;
            pb.lambda = pgf_a.lambda;
            const bool single = !std::isnan(pgf_a.t);
            need_one(single, !pgf_a.t_range.empty(), "--t", "--t-range");
            if (single) {
                emit_single(pgf_a.c.out,
                            solve_pgf(pb, pgf_a.v, pgf_a.t, pgf_a.ctl));
            } else {
                std::vector<std::vector<double>> rows;
                for (double t : parse_range(pgf_a.t_range))
                    rows.push_back(
                        {pgf_a.v, t, solve_pgf(pb, pgf_a.v, t, pgf_a.ctl)});
                emit_rows(pgf_a.c.out, {"v", "t", "G"}, rows);
            }
            pgf_a.c.out.flush();
            return 0;
        }

        if (dif_cmd->parsed()) {
            merge_config(dif_a.c);
            need_num(dif_a.rho, "--rho");
            need_num(dif_a.mu, "--mu");
            need_num(dif_a.diffusivity, "--diffusivity");
            if (dif_a.datum != "gaussian")
                throw validation_error(
                    "datum: only 'gaussian' is built in");
            DiffusionProblem pb;
            pb.order = HilferOrder{dif_a.mu, dif_a.nu};
            pb.rho = dif_a.rho;
            pb.omega = dif_a.omega;
            pb.gamma_upper = dif_a.gamma;
            pb.diffusivity = dif_a.diffusivity;
            pb.grid = dif_a.grid;
            pb.datum = [](double x) {
                return std::exp(-0.5 * x * x) /
                       std::sqrt(2.0 * 3.14159265358979323846);
            };
            if (!dif_a.numeric_hat)
                pb.datum_hat = [](double p) {
                    return std::exp(-0.5 * p * p);
                };
            const DiffusionSolver solver(
                pb,
                dif_a.regularized ? DiffusionSolver::Flavor::regularized
                                  : DiffusionSolver::Flavor::hilfer,
                dif_a.ctl);
            const bool x_single = !std::isnan(dif_a.x);
            const bool t_single = !std::isnan(dif_a.t);
            const bool x_sweep = !dif_a.x_range.empty();
            const bool t_sweep = !dif_a.t_range.empty();
            need_one(x_single, x_sweep, "--x", "--x-range");
            need_one(t_single, t_sweep, "--t", "--t-range");
            if (x_sweep && t_sweep)
                throw validation_error(
                    "sweep exactly one of --x-range and --t-range");
            if (x_single && t_single) {
                emit_single(dif_a.c.out, solver(dif_a.x, dif_a.t));
            } else {
                std::vector<std::vector<double>> rows;
                if (x_sweep)
                    for (double x : parse_range(dif_a.x_range))
                        rows.push_back({x, dif_a.t, solver(x, dif_a.t)});
                else
                    for (double t : parse_range(dif_a.t_range))
                        rows.push_back({dif_a.x, t, solver(dif_a.x, t)});
                emit_rows(dif_a.c.out, {"x", "t", "u"}, rows);
            }
            dif_a.c.out.flush();
            return 0;
        }

        if (ver_cmd->parsed()) {
            merge_config(ver_a.c);
            std::vector<VerificationReport> reports;
            if (ver_a.suite == "all") {
                reports = run_all(ver_a.seed);
            } else {
                const auto s = suite_from_name(ver_a.suite);
                if (!s)
                    throw validation_error("unknown suite '" + ver_a.suite +
                                           "'");
                reports = run_suite(*s, ver_a.seed);
            }
            write_summary(ver_a.c.out.buf, reports);
            if (!ver_a.csv_path.empty()) {
                std::ofstream os(ver_a.csv_path, std::ios::binary);
                if (!os)
                    throw validation_error("cannot open CSV report file: " +
                                           ver_a.csv_path);
                write_reports_csv(os, reports);
            }
            ver_a.c.out.flush();
            return all_passed(reports) ? 0 : 3;
        }

        return 1; // unreachable: require_subcommand(1)
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const envelope_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

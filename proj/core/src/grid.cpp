#include "prabhakar/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "prabhakar/errors.hpp"

namespace prabhakar {

std::vector<double> graded_points(double T, int n, double exponent)
{
    if (!(T > 0.0) || !std::isfinite(T))
        throw validation_error("graded_points: T must be positive");
    if (n < 2)
        throw validation_error("graded_points: need at least 2 intervals");
    if (!(exponent >= 1.0))
        throw validation_error("graded_points: grading exponent must be >= 1");

    std::vector<double> t(n + 1);
    for (int i = 0; i <= n; ++i)
        t[i] = T * std::pow(static_cast<double>(i) / n, exponent);
    t[0] = 0.0;
    t[n] = T;
    return t;
}

namespace {
void check_grid(const std::vector<double>& t, const std::vector<double>& v)
{
    if (t.size() != v.size())
        throw validation_error("SampledFunction: grid/value size mismatch");
    if (t.size() < 3)
        throw validation_error("SampledFunction: need at least 3 points");
    if (t.front() != 0.0)
        throw validation_error("SampledFunction: grid must start at 0");
    for (size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            throw validation_error(
                "SampledFunction: grid must be strictly increasing");
    for (double x : v)
        if (!std::isfinite(x))
            throw validation_error("SampledFunction: values must be finite");
}
} // namespace

SampledFunction SampledFunction::from_samples(std::vector<double> t,
                                              std::vector<double> v, bool ac1)
{
    check_grid(t, v);
    SampledFunction s;
    s.t_ = std::move(t);
    s.v_ = std::move(v);
    s.ac1_ = ac1;
    return s;
}

SampledFunction SampledFunction::from_callable(std::function<double(double)> f,
                                               double T, int n, double grading,
                                               bool ac1)
{
    std::vector<double> t = graded_points(T, n, grading);
    std::vector<double> v(t.size());
    for (size_t i = 0; i < t.size(); ++i)
        v[i] = f(t[i]);
    check_grid(t, v);
    SampledFunction s;
    s.t_ = std::move(t);
    s.v_ = std::move(v);
    s.f_ = std::move(f);
    s.ac1_ = ac1;
    return s;
}

SampledFunction SampledFunction::from_callable_on_grid(
    std::function<double(double)> f, std::vector<double> t, bool ac1)
{
    std::vector<double> v(t.size());
    for (size_t i = 0; i < t.size(); ++i)
        v[i] = f(t[i]);
    check_grid(t, v);
    SampledFunction s;
    s.t_ = std::move(t);
    s.v_ = std::move(v);
    s.f_ = std::move(f);
    s.ac1_ = ac1;
    return s;
}

SampledFunction SampledFunction::from_singular_callable(
    std::function<double(double)> f, double left_sing_order, double T, int n,
    double grading)
{
    if (!(left_sing_order > -1.0) || !(left_sing_order <= 0.0))
        throw validation_error(
            "SampledFunction: left singularity order must lie in (-1, 0]");
    std::vector<double> t = graded_points(T, n, grading);
    std::vector<double> v(t.size());
    v[0] = 0.0; // placeholder; the head is always read through the callable
    for (size_t i = 1; i < t.size(); ++i)
        v[i] = f(t[i]);
    SampledFunction s;
    s.t_ = std::move(t);
    s.v_ = std::move(v);
    s.f_ = std::move(f);
    s.sigma_ = left_sing_order;
    return s;
}

double SampledFunction::eval(double t) const
{
    if (f_)
        return f_(t);
    if (t <= t_.front())
        return v_.front();
    if (t >= t_.back())
        return v_.back();
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    size_t hi = static_cast<size_t>(it - t_.begin());
    size_t lo = hi - 1;
    double w = (t - t_[lo]) / (t_[hi] - t_[lo]);
    return v_[lo] + w * (v_[hi] - v_[lo]);
}

double SampledFunction::smooth_part(double t) const
{
    if (sigma_ == 0.0)
        return eval(t);
    return f_(t) * std::pow(t, -sigma_);
}

void write_csv(std::ostream& os, const SampledFunction& f)
{
    os << "t,value\n";
    char buf[64];
    const auto& t = f.grid();
    const auto& v = f.values();
    for (size_t i = 0; i < t.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t[i], v[i]);
        os << buf;
    }
}

void write_csv(const std::string& path, const SampledFunction& f)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw validation_error("write_csv: cannot open " + path);
    write_csv(os, f);
}

SampledFunction read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
        throw validation_error("read_csv: empty input");
    if (line.size() && line.back() == '\r')
        line.pop_back();
    if (line != "t,value")
        throw validation_error("read_csv: expected header 't,value', got '" +
                               line + "'");

    std::vector<double> t, v;
    size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.size() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw validation_error("read_csv: line " + std::to_string(lineno) +
                                   " has no comma");
        size_t pos1 = 0, pos2 = 0;
        double a, b;
        try {
            a = std::stod(line.substr(0, comma), &pos1);
            b = std::stod(line.substr(comma + 1), &pos2);
        } catch (const std::exception&) {
            throw validation_error("read_csv: line " + std::to_string(lineno) +
                                   " is not numeric");
        }
        t.push_back(a);
        v.push_back(b);
    }
    return SampledFunction::from_samples(std::move(t), std::move(v));
}

SampledFunction read_csv_file(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw validation_error("read_csv: cannot open " + path);
    return read_csv(is);
}

} // namespace prabhakar

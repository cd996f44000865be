#ifndef PRABHAKAR_GRID_HPP
#define PRABHAKAR_GRID_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace prabhakar {

/// Points t_i = T (i/n)^r for i = 0..n.  r = 1 is uniform; r > 1 clusters
/// points near t = 0 where fractional kernels and their images misbehave.
std::vector<double> graded_points(double T, int n, double exponent = 2.0);

/// A function on [0, T] known on a graded grid, optionally backed by a
/// callable and optionally carrying a power singularity at the origin:
///
///   f(t) = t^sigma * (smooth part),   sigma in (-1, 0]
///
/// Quadrature code evaluates the callable directly when one is present and
/// falls back to piecewise-linear interpolation of the samples otherwise.
/// sigma < 0 requires a callable, since samples cannot represent the head.
class SampledFunction {
public:
    static SampledFunction from_samples(std::vector<double> t,
                                        std::vector<double> v,
                                        bool ac1 = false);

    static SampledFunction from_callable(std::function<double(double)> f,
                                         double T, int n,
                                         double grading = 2.0,
                                         bool ac1 = false);

    /// Callable with a t^sigma head; samples away from 0 are still taken so
    /// grid-driven code sees finite values everywhere (the t = 0 slot holds
    /// 0 and is never read through the singular head).
    static SampledFunction from_singular_callable(
        std::function<double(double)> f, double left_sing_order, double T,
        int n, double grading = 2.0);

    /// Callable sampled on an explicit grid, keeping the callable for
    /// evaluation between the points.
    static SampledFunction from_callable_on_grid(
        std::function<double(double)> f, std::vector<double> t,
        bool ac1 = false);

    const std::vector<double>& grid() const { return t_; }
    const std::vector<double>& values() const { return v_; }
    double domain_end() const { return t_.back(); }
    bool ac1() const { return ac1_; }
    bool has_callable() const { return static_cast<bool>(f_); }
    double left_sing_order() const { return sigma_; }

    /// f(t): callable if present, else linear interpolation of the samples.
    double eval(double t) const;

    /// f(t) / t^sigma for t > 0; equals eval when sigma == 0.
    double smooth_part(double t) const;

    /// Value of f at 0+ (the sample at t = 0); only meaningful when
    /// sigma == 0.
    double value_at_origin() const { return v_.front(); }

private:
    SampledFunction() = default;

    std::vector<double> t_;
    std::vector<double> v_;
    std::function<double(double)> f_;
    double sigma_ = 0.0;
    bool ac1_ = false;
};

/// Two-column CSV with header "t,value"; 17 significant digits, LF endings,
/// so that write -> read reproduces every double bit-for-bit.
void write_csv(std::ostream& os, const SampledFunction& f);
void write_csv(const std::string& path, const SampledFunction& f);
SampledFunction read_csv(std::istream& is);
SampledFunction read_csv_file(const std::string& path);

} // namespace prabhakar

#endif

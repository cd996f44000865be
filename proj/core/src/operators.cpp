#include "prabhakar/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "prabhakar/errors.hpp"
#include "prabhakar/gamma_utils.hpp"
#include "prabhakar/quadrature.hpp"

namespace prabhakar {
namespace {

// Minimum width of the singular tail cell, in units of the width of the cell
// just inside it.  Legendre cells then never come closer to y = t than this
// many local widths, which keeps their error on (t-y)^(mu-1) negligible.
// Only operands with a smooth evaluator can afford the wide span; a
// piecewise-linear operand has interpolation kinks at the grid points, so
// for it the widening stops at roughly one cell (enough to kill slivers,
// crossing at most one kink).
constexpr double kTailSpan = 8.0;
constexpr double kTailSliver = 0.9;
constexpr double kHeadSpan = 2.0;

// Term cap for the tail-cell Mittag-Leffler split below.
constexpr int kMlSplitCap = 64;

// Weighted-cell integral with the Mittag-Leffler factor expanded term by
// term:
//
//   int (1-s)^(mu-1) E^gamma_(rho,mu)(omega h^rho (1-s)^rho) s^sigma g(s) ds
//     = sum_k [(gamma)_k (omega h^rho)^k / (k! Gamma(rho k + mu))]
//           * int (1-s)^(mu + rho k - 1) s^sigma g(s) ds,
//
// each term with its own Jacobi rule, so the fractional powers (1-s)^(rho k)
// are absorbed exactly instead of being pushed through a single fixed
// weight.  h is the cell width, so the series settles in a few terms.
// Returns false, leaving `out` untouched, when the terms have not settled
// within the cap; the caller then falls back to the single-rule path.
template <typename Sampler>
bool ml_split_cell(const PrabhakarParams& p, double h, double sigma_exp,
                   int jacobi_nodes, Sampler&& sample, double& out)
{
    const double w = p.omega * std::pow(h, p.rho);
    double q = 1.0; // (gamma)_k (omega h^rho)^k / k!
    double acc = 0.0;
    double mag = 0.0;
    int settled = 0;
    for (int k = 0; k < kMlSplitCap; ++k) {
        double term = 0.0;
        if (q != 0.0) {
            const double rg = reciprocal_gamma(p.rho * k + p.mu);
            if (rg != 0.0) {
                const QuadratureRule rule = gauss_jacobi_01(
                    jacobi_nodes, p.mu + p.rho * k - 1.0, sigma_exp);
                double cell = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                    cell += rule.weights[i] * sample(rule.nodes[i]);
                term = q * rg * cell;
            }
        }
        acc += term;
        mag += std::fabs(term);
        if (std::fabs(term) <= 1e-17 * mag) {
            if (++settled >= 2) {
                out = acc;
                return true;
            }
        } else {
            settled = 0;
        }
        q *= w * (p.gamma_upper + k) / (k + 1.0);
    }
    return false;
}

void validate_quadrature(const QuadratureConfig& q)
{
    if (q.nodes_per_cell < 2 || q.nodes_per_cell > 64)
        throw validation_error("nodes_per_cell must be in [2, 64]");
    if (q.jacobi_nodes < 2 || q.jacobi_nodes > 128)
        throw validation_error("jacobi_nodes must be in [2, 128]");
}

void validate_order(const HilferOrder& h)
{
    if (!(h.mu > 0.0) || !(h.mu < 1.0))
        throw validation_error("derivative order mu must lie in (0, 1)");
    if (!(h.nu >= 0.0) || !(h.nu <= 1.0))
        throw validation_error("interpolation type nu must lie in [0, 1]");
}

struct CellRules {
    QuadratureRule legendre; // on [-1, 1]
    QuadratureRule tail;     // [0,1], weight (1-s)^(mu-1)
    QuadratureRule head;     // [0,1], weight s^sigma        (sigma < 0 only)
    QuadratureRule both;     // [0,1], weight (1-s)^(mu-1) s^sigma
};

CellRules make_rules(double mu, double sigma, const QuadratureConfig& q)
{
    CellRules r;
    r.legendre = gauss_legendre(q.nodes_per_cell);
    r.tail = gauss_jacobi_01(q.jacobi_nodes, mu - 1.0, 0.0);
    if (sigma != 0.0) {
        r.head = gauss_jacobi_01(q.jacobi_nodes, 0.0, sigma);
        r.both = gauss_jacobi_01(q.jacobi_nodes, mu - 1.0, sigma);
    }
    return r;
}

// One Prabhakar integral by product integration on the operand's grid.  The
// cell touching y = t absorbs (t-y)^(mu-1) into a Jacobi weight; the cell
// touching y = 0 absorbs an operand head y^sigma the same way; a single cell
// covering both ends uses the doubly weighted rule.  The tail cell is
// widened to at least kTailSpan neighbour widths (a sliver would push the
// singular weight onto an unweighted Legendre cell), and a non-constant
// Mittag-Leffler factor on a weighted cell is split term by term.
double product_integral(const PrabhakarParams& p, const PreparedKernel& ker,
                        const SampledFunction& f, double t,
                        const CellRules& r, const QuadratureConfig& q)
{
    const double sigma = f.left_sing_order();
    const auto& g = f.grid();

    std::vector<double> bounds;
    bounds.reserve(g.size() + 1);
    bounds.push_back(0.0);
    const double cut = t * (1.0 - 1e-12);
    for (std::size_t i = 1; i < g.size() && g[i] < cut; ++i)
        bounds.push_back(g[i]);
    bounds.push_back(t);
    // Widen the tail cell, but never let it reach into the head half of the
    // range: a singular operand head there would sit unabsorbed inside the
    // tail rule.  A full collapse to one doubly weighted cell is allowed
    // only deep in the graded head region, where the grid spacing itself
    // certifies that the operand structure across [0, t] is mild.
    const double span_target = f.has_callable() ? kTailSpan : kTailSliver;
    const bool tiny_t =
        t <= g[std::min<std::size_t>(3, g.size() - 1)] * (1.0 + 1e-12);
    while (bounds.size() >= 3) {
        const double span = t - bounds[bounds.size() - 2];
        const double prev =
            bounds[bounds.size() - 2] - bounds[bounds.size() - 3];
        if (span >= span_target * prev)
            break;
        if (bounds.size() == 3) {
            if (!tiny_t)
                break;
        } else if (bounds[bounds.size() - 3] < 0.5 * t) {
            break;
        }
        bounds.erase(bounds.end() - 2);
    }
    // The head cell absorbs y^sigma; its Legendre neighbours need clearance
    // from y = 0 just as tail neighbours do from y = t (less of it, since
    // the head mass is damped by sigma+1 rather than amplified by mu-1).
    if (sigma != 0.0) {
        while (bounds.size() >= 3 && bounds[2] <= 0.5 * t &&
               bounds[1] < kHeadSpan * (bounds[2] - bounds[1]))
            bounds.erase(bounds.begin() + 1);
    }

    const bool split = (p.omega != 0.0 && p.gamma_upper != 0.0);
    const std::size_t cells = bounds.size() - 1;
    double sum = 0.0;
    for (std::size_t c = 0; c < cells; ++c) {
        const double a = bounds[c];
        const double h = bounds[c + 1] - a;
        const bool head = (c == 0 && sigma != 0.0);
        const bool tail = (c + 1 == cells);
        double cell = 0.0;
        if (head && tail) {
            const auto sample = [&](double s) { return f.smooth_part(h * s); };
            if (!(split && ml_split_cell(p, h, sigma, q.jacobi_nodes, sample,
                                         cell))) {
                cell = 0.0;
                for (std::size_t i = 0; i < r.both.nodes.size(); ++i) {
                    const double s = r.both.nodes[i];
                    cell += r.both.weights[i] * ker.ml_factor(h * (1.0 - s)) *
                            f.smooth_part(h * s);
                }
            }
            sum += std::pow(h, p.mu + sigma) * cell;
        } else if (tail) {
            const auto sample = [&](double s) { return f.eval(a + h * s); };
            if (!(split && ml_split_cell(p, h, 0.0, q.jacobi_nodes, sample,
                                         cell))) {
                cell = 0.0;
                for (std::size_t i = 0; i < r.tail.nodes.size(); ++i) {
                    const double s = r.tail.nodes[i];
                    cell += r.tail.weights[i] * ker.ml_factor(h * (1.0 - s)) *
                            f.eval(a + h * s);
                }
            }
            sum += std::pow(h, p.mu) * cell;
        } else if (head) {
            for (std::size_t i = 0; i < r.head.nodes.size(); ++i) {
                const double s = r.head.nodes[i];
                cell += r.head.weights[i] * ker(t - h * s) *
                        f.smooth_part(h * s);
            }
            sum += std::pow(h, sigma + 1.0) * cell;
        } else {
            const double mid = a + 0.5 * h;
            const double half = 0.5 * h;
            for (std::size_t i = 0; i < r.legendre.nodes.size(); ++i) {
                const double y = mid + half * r.legendre.nodes[i];
                cell += r.legendre.weights[i] * ker(t - y) * f.eval(y);
            }
            sum += half * cell;
        }
    }
    if (!std::isfinite(sum))
        throw envelope_error("product integration overflowed");
    return sum;
}

void validate_eval_point(const SampledFunction& f, double t)
{
    if (!std::isfinite(t) || !(t > 0.0))
        throw validation_error("evaluation point t must be positive");
    if (t > f.domain_end() * (1.0 + 1e-12))
        throw validation_error("evaluation point t exceeds the grid domain");
}

// Limit of v(t) as t -> 0+ from samples at three points, through the model
// v = K + c t^eta with eta found by bisection on the sample-difference
// ratio.  Samples flat to within quadrature noise (an exactly constant v
// evaluated numerically) short-circuit to the last value, both up front and
// when the noise happens to mimic no admissible power law.
double power_fit_limit(const std::array<double, 3>& ts,
                       const std::array<double, 3>& vs)
{
    const double d1 = vs[1] - vs[0];
    const double d2 = vs[2] - vs[1];
    const double scale = std::max(
        {std::fabs(vs[0]), std::fabs(vs[1]), std::fabs(vs[2]), 1e-300});
    const double noise = 1e-6 * scale;
    if (std::fabs(d1) <= noise && std::fabs(d2) <= noise)
        return vs[2];

    const std::vector<double> samples{ts[0], vs[0], ts[1],
                                      vs[1], ts[2], vs[2]};
    const double target = d2 / d1;
    auto ratio = [&ts](double eta) {
        const double p1 = std::pow(ts[0], eta);
        const double p2 = std::pow(ts[1], eta);
        const double p3 = std::pow(ts[2], eta);
        return (p3 - p2) / (p2 - p1);
    };

    double lo = 1e-3, hi = 6.0;
    if (!std::isfinite(target) || target <= ratio(lo) || target >= ratio(hi)) {
        if (std::fabs(d1) + std::fabs(d2) <= 10.0 * noise)
            return vs[2];
        throw extrapolation_error(
            "samples do not follow a power law K + c t^eta with eta in "
            "(0.001, 6)",
            samples);
    }
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ratio(mid) < target ? lo : hi) = mid;
    }
    const double eta = 0.5 * (lo + hi);
    const double p1 = std::pow(ts[0], eta);
    const double p2 = std::pow(ts[1], eta);
    const double limit = vs[0] - d1 * p1 / (p2 - p1);
    if (!std::isfinite(limit))
        throw extrapolation_error("power-law extrapolation overflowed",
                                  samples);
    return limit;
}

// Fornberg recursion: weights of the first derivative at x0 from the nodes
// x[0..n-1].
std::vector<double> fd_weights_first(const double* x, int n, double x0)
{
    std::vector<double> c(static_cast<std::size_t>(n) * 2, 0.0);
    c[0] = 1.0;
    double c1 = 1.0;
    double c4 = x[0] - x0;
    for (int i = 1; i < n; ++i) {
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                c[2 * i + 1] =
                    c1 * (c[2 * (i - 1)] - c5 * c[2 * (i - 1) + 1]) / c2;
                c[2 * i] = -c1 * c5 * c[2 * (i - 1)] / c2;
            }
            c[2 * j + 1] = (c4 * c[2 * j + 1] - c[2 * j]) / c3;
            c[2 * j] = c4 * c[2 * j] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] = c[2 * i + 1];
    return w;
}

int stencil_size(std::size_t n)
{
    if (n < 3)
        throw validation_error(
            "derivative stencils need at least 3 grid points");
    return static_cast<int>(std::min<std::size_t>(5, n));
}

SampledFunction subtract_constant(const SampledFunction& f, double c)
{
    if (f.has_callable()) {
        auto inner = [f, c](double t) { return f.eval(t) - c; };
        return SampledFunction::from_callable_on_grid(inner, f.grid(),
                                                      f.ac1());
    }
    std::vector<double> shifted = f.values();
    for (double& v : shifted)
        v -= c;
    return SampledFunction::from_samples(f.grid(), std::move(shifted),
                                         f.ac1());
}

// d/dt of an operand.  With a callable behind f the derivative is taken by
// 5-point stencils (4th order); the step shrinks proportionally to the
// distance from 0 so Hoelder heads like t^mu keep small relative error,
// floored so rounding noise eps/h stays bounded.  A samples-only operand
// falls back to grid stencils.
SampledFunction differentiate(const SampledFunction& f)
{
    if (!f.has_callable())
        return SampledFunction::from_samples(
            f.grid(), derivative_table(f.grid(), f.values()));
    const double T = f.domain_end();
    const double h_cap = T * 1e-3;
    const double h_floor = T * 1e-12;
    auto deriv = [f, T, h_cap, h_floor](double x) {
        const double h =
            std::min(h_cap, std::max(x * 0.125, h_floor));
        double lo = x - 2.0 * h;
        lo = std::min(std::max(lo, 0.0), T - 4.0 * h);
        std::array<double, 5> nodes;
        for (int i = 0; i < 5; ++i)
            nodes[static_cast<std::size_t>(i)] = lo + i * h;
        const auto w = fd_weights_first(nodes.data(), 5, x);
        double acc = 0.0;
        for (int i = 0; i < 5; ++i)
            acc += w[static_cast<std::size_t>(i)] *
                   f.eval(nodes[static_cast<std::size_t>(i)]);
        return acc;
    };
    return SampledFunction::from_callable_on_grid(deriv, f.grid());
}

} // namespace

std::vector<double> derivative_table(const std::vector<double>& t,
                                     const std::vector<double>& v)
{
    if (t.size() != v.size())
        throw validation_error("grid and value arrays differ in length");
    const int s = stencil_size(t.size());
    const std::size_t n = t.size();
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t lo =
            std::min(k > 2 ? k - 2 : 0, n - static_cast<std::size_t>(s));
        const auto w = fd_weights_first(t.data() + lo, s, t[k]);
        double acc = 0.0;
        for (int i = 0; i < s; ++i)
            acc += w[static_cast<std::size_t>(i)] *
                   v[lo + static_cast<std::size_t>(i)];
        d[k] = acc;
    }
    return d;
}

double derivative_at(const std::vector<double>& t,
                     const std::vector<double>& v, double x)
{
    if (t.size() != v.size())
        throw validation_error("grid and value arrays differ in length");
    const int s = stencil_size(t.size());
    const std::size_t n = t.size();
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const std::size_t idx =
        it == t.begin() ? 0 : static_cast<std::size_t>(it - t.begin()) - 1;
    const std::size_t lo =
        std::min(idx > 2 ? idx - 2 : 0, n - static_cast<std::size_t>(s));
    const auto w = fd_weights_first(t.data() + lo, s, x);
    double acc = 0.0;
    for (int i = 0; i < s; ++i)
        acc += w[static_cast<std::size_t>(i)] *
               v[lo + static_cast<std::size_t>(i)];
    return acc;
}

double prabhakar_integral(const PrabhakarParams& p, const SampledFunction& f,
                          double t, const QuadratureConfig& q)
{
    validate_quadrature(q);
    validate_eval_point(f, t);
    const PreparedKernel ker(p);
    const CellRules rules = make_rules(p.mu, f.left_sing_order(), q);
    return product_integral(p, ker, f, t, rules, q);
}

std::vector<double> prabhakar_integral_table(const PrabhakarParams& p,
                                             const SampledFunction& f,
                                             const QuadratureConfig& q)
{
    validate_quadrature(q);
    const PreparedKernel ker(p);
    const double sigma = f.left_sing_order();
    const CellRules rules = make_rules(p.mu, sigma, q);
    const auto& g = f.grid();

    std::vector<double> out(g.size(), 0.0);
    for (std::size_t i = 1; i < g.size(); ++i)
        out[i] = product_integral(p, ker, f, g[i], rules, q);

    const double head_order = p.mu + sigma;
    if (head_order < -1e-12)
        throw envelope_error(
            "the integral diverges as t -> 0+ (order mu + sigma < 0)");
    if (std::fabs(head_order) <= 1e-12 && g.size() >= 4) {
        // The t -> 0+ slot only anchors interpolation over [0, t_1], a cell
        // of negligible mass; when the three-point fit cannot settle, the
        // nearest sample is a sound anchor.  (initial_weighted_limit, the
        // actual limit probe, stays strict.)
        try {
            out[0] = power_fit_limit({g[1], g[2], g[3]},
                                     {out[1], out[2], out[3]});
        } catch (const extrapolation_error&) {
            out[0] = out[1];
        }
    }
    return out;
}

HilferPrabhakarDerivative::HilferPrabhakarDerivative(const HilferOrder& h,
                                                     const PrabhakarBase& b,
                                                     SampledFunction f,
                                                     const QuadratureConfig& q)
    : h_(h), b_(b), q_(q), grid_(f.grid()), outer_identity_(h.nu == 0.0)
{
    validate_order(h_);
    validate_quadrature(q_);
    if (!(b_.rho > 0.0))
        throw validation_error("rho must be positive");
    if (grid_.size() < 5)
        throw validation_error(
            "the operand grid needs at least 5 points for the derivative "
            "stage");

    // A nonzero starting value goes through in closed form; the quadrature
    // and difference stages only ever see the part vanishing at 0.
    if (f.left_sing_order() == 0.0) {
        f0_ = f.value_at_origin();
        if (f0_ != 0.0) {
            f = subtract_constant(f, f0_);
            // For nu < 1 the image of the constant passes through the
            // inner integral and the combined stages give exactly
            // f(0+) t^-mu E^-gamma(rho,1-mu)(omega t^rho).  At nu = 1 the
            // inner stage is the identity and d/dt kills the constant, so
            // there is nothing to add back.
            if (h_.nu < 1.0)
                init_kernel_.emplace(
                    PrabhakarParams{b_.rho, 1.0 - h_.mu, b_.omega,
                                    -b_.gamma_upper});
        }
    }

    if (h_.nu == 1.0) {
        // inner stage of order 0 with upper parameter 0: the identity
        if (f.left_sing_order() != 0.0)
            throw envelope_error(
                "nu = 1 differentiates the operand directly; a singular "
                "head t^sigma has no integrable derivative");
        inner_ = f.values();
        operand_ = differentiate(f);
    } else {
        const PrabhakarParams inner_params{
            b_.rho, (1.0 - h_.nu) * (1.0 - h_.mu), b_.omega,
            -b_.gamma_upper * (1.0 - h_.nu)};
        inner_ = prabhakar_integral_table(inner_params, f, q_);
        if (!outer_identity_)
            operand_ = SampledFunction::from_samples(
                grid_, derivative_table(grid_, inner_));
    }

    if (!outer_identity_)
        outer_params_ = PrabhakarParams{b_.rho, h_.nu * (1.0 - h_.mu),
                                        b_.omega, -b_.gamma_upper * h_.nu};
}

double HilferPrabhakarDerivative::operator()(double t) const
{
    if (!std::isfinite(t) || t < min_t() || t > grid_.back() * (1.0 + 1e-12))
        throw validation_error(
            "evaluation point outside [first positive grid point, T]");
    double value =
        outer_identity_
            ? derivative_at(grid_, inner_, t)
            : prabhakar_integral(*outer_params_, *operand_, t, q_);
    if (init_kernel_)
        value += f0_ * (*init_kernel_)(t);
    return value;
}

double hp_derivative(const HilferOrder& h, const PrabhakarBase& b,
                     const SampledFunction& f, double t,
                     const QuadratureConfig& q)
{
    return HilferPrabhakarDerivative(h, b, f, q)(t);
}

namespace {
SampledFunction regularized_operand(double mu, const PrabhakarBase& b,
                                    const QuadratureConfig& q,
                                    const SampledFunction& f)
{
    if (!(mu > 0.0) || !(mu < 1.0))
        throw validation_error("derivative order mu must lie in (0, 1)");
    if (!(b.rho > 0.0))
        throw validation_error("rho must be positive");
    validate_quadrature(q);
    if (!f.ac1())
        throw validation_error(
            "the regularized derivative needs an absolutely continuous "
            "operand (ac1)");
    return differentiate(f);
}
} // namespace

RegularizedHpDerivative::RegularizedHpDerivative(double mu,
                                                 const PrabhakarBase& b,
                                                 SampledFunction f,
                                                 const QuadratureConfig& q)
    : mu_(mu), b_(b), q_(q), fprime_(regularized_operand(mu, b, q, f))
{
}

double RegularizedHpDerivative::operator()(double t) const
{
    const PrabhakarParams outer{b_.rho, 1.0 - mu_, b_.omega, -b_.gamma_upper};
    return prabhakar_integral(outer, fprime_, t, q_);
}

double hp_derivative_regularized(double mu, const PrabhakarBase& b,
                                 const SampledFunction& f, double t,
                                 const QuadratureConfig& q)
{
    return RegularizedHpDerivative(mu, b, f, q)(t);
}

double initial_weighted_limit(const HilferOrder& h, const PrabhakarBase& b,
                              const SampledFunction& f,
                              const QuadratureConfig& q)
{
    validate_order(h);
    validate_quadrature(q);
    const double sigma = f.left_sing_order();
    if (h.nu == 1.0) {
        if (sigma != 0.0)
            throw envelope_error(
                "with nu = 1 the weighted limit is f(0+), unbounded for a "
                "singular operand");
        return f.value_at_origin();
    }

    const PrabhakarParams inner{b.rho, (1.0 - h.nu) * (1.0 - h.mu), b.omega,
                                -b.gamma_upper * (1.0 - h.nu)};
    const auto& g = f.grid();
    if (g.size() < 4)
        throw validation_error(
            "the weighted limit needs at least 3 positive grid points");
    // Geometric abscissae far below the first grid cell: the fitted power
    // model is exact up to a t^rho correction, so the extrapolation error
    // shrinks like ts[2]^rho while the integrand stays resolvable (the head
    // cell absorbs both weights at any t).
    const double tau = g.back() * 1e-12;
    const std::array<double, 3> ts{tau, 4.0 * tau, 16.0 * tau};
    std::array<double, 3> vs{};
    for (int k = 0; k < 3; ++k)
        vs[static_cast<std::size_t>(k)] =
            prabhakar_integral(inner, f, ts[static_cast<std::size_t>(k)], q);
    return power_fit_limit(ts, vs);
}

} // namespace prabhakar

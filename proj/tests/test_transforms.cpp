#include <doctest.h>

#include <cmath>
#include <complex>

#include "prabhakar/errors.hpp"
#include "prabhakar/transforms.hpp"

#include "oracle.hpp"

using namespace prabhakar;

TEST_CASE("transform of elementary functions")
{
    // S[1] = 1 for every u
    for (double u : {0.05, 0.3, 1.0, 4.0})
        CHECK(sumudu_numeric([](double) { return 1.0; }, u) ==
              doctest::Approx(1.0).epsilon(1e-12));

    // S[t] = u
    for (double u : {0.1, 0.6, 2.0})
        CHECK(sumudu_numeric([](double t) { return t; }, u) ==
              doctest::Approx(u).epsilon(1e-12));

    // S[exp(-t)] = 1/(1+u)
    for (double u : {0.2, 0.9})
        CHECK(sumudu_numeric([](double t) { return std::exp(-t); }, u) ==
              doctest::Approx(1.0 / (1.0 + u)).epsilon(1e-11));

    // S[sin t] = u/(1+u^2)
    for (double u : {0.2, 0.5})
        CHECK(sumudu_numeric([](double t) { return std::sin(t); }, u) ==
              doctest::Approx(u / (1.0 + u * u)).epsilon(1e-10));
}

TEST_CASE("power singularity at the origin is integrated exactly")
{
    // S[t^(-0.3)](u) = u^(-0.3) Gamma(0.7)
    SumuduOptions opts;
    opts.sing_order = -0.3;
    for (double u : {0.25, 0.8}) {
        const double want = std::pow(u, -0.3) * std::tgamma(0.7);
        CHECK(sumudu_numeric([](double t) { return std::pow(t, -0.3); }, u,
                             opts) ==
              doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("numeric transform agrees with an adaptive reference")
{
    auto f = [](double t) { return std::cos(0.7 * t); };
    for (double u : {0.15, 0.45, 0.9}) {
        const double ref = oracle::sumudu(f, u);
        CHECK(sumudu_numeric(f, u) ==
              doctest::Approx(ref).epsilon(1e-10));
        // and the closed form
        CHECK(ref == doctest::Approx(1.0 / (1.0 + 0.49 * u * u))
                         .epsilon(1e-9));
    }
}

TEST_CASE("domain cap: certified when the dropped tail is negligible")
{
    SumuduOptions opts;
    opts.t_cap = 5.0;
    // u = 0.2: dropped mass e^(-25), far under decay_tol
    CHECK(sumudu_numeric([](double) { return 1.0; }, 0.2, opts) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // u = 0.5: dropped mass e^(-10) > decay_tol -- must refuse
    CHECK_THROWS_AS(sumudu_numeric([](double) { return 1.0; }, 0.5, opts),
                    envelope_error);
}

TEST_CASE("non-decaying integrand is refused")
{
    // f(t) = e^(2t) at u = 1: integrand e^(-x) e^(2x) diverges
    CHECK_THROWS_AS(
        sumudu_numeric([](double t) { return std::exp(2.0 * t); }, 1.0),
        envelope_error);
}

TEST_CASE("transform input validation")
{
    CHECK_THROWS_AS(sumudu_numeric([](double) { return 1.0; }, 0.0),
                    validation_error);
    CHECK_THROWS_AS(sumudu_numeric([](double) { return 1.0; }, -1.0),
                    validation_error);
    SumuduOptions opts;
    opts.sing_order = -1.4;
    CHECK_THROWS_AS(sumudu_numeric([](double) { return 1.0; }, 0.5, opts),
                    validation_error);
}

TEST_CASE("convolution identity for an exponential pair")
{
    // f = e^(-0.3 t), g = e^(-0.9 t): S[f] = 1/(1+0.3u), S[g] = 1/(1+0.9u)
    auto f = [](double t) { return std::exp(-0.3 * t); };
    auto g = [](double t) { return std::exp(-0.9 * t); };
    for (double u : {0.2, 0.5, 1.1}) {
        const auto chk = verify_convolution(f, g, u);
        const double closed =
            u / ((1.0 + 0.3 * u) * (1.0 + 0.9 * u));
        CHECK(chk.rhs == doctest::Approx(closed).epsilon(1e-9));
        CHECK(chk.rel_err < 1e-7);
        CHECK(chk.abs_err ==
              doctest::Approx(std::fabs(chk.lhs - chk.rhs)).epsilon(1e-12));
    }
}

TEST_CASE("derivative symbols reduce to their closed forms")
{
    const PrabhakarBase b{0.8, -0.6, 1.1};
    const double F = 0.73, K = 0.21, u = 0.4;
    const double branch = 1.0 - b.omega * std::pow(u, b.rho);

    const HilferOrder h{0.55, 0.35};
    const double want =
        std::pow(u, -h.mu) * std::pow(branch, b.gamma_upper) * F -
        std::pow(u, h.nu * (1.0 - h.mu) - 1.0) *
            std::pow(branch, b.gamma_upper * h.nu) * K;
    CHECK(sumudu_hp_symbol(h, b, F, K, u) ==
          doctest::Approx(want).epsilon(1e-14));

    // regularized symbol == Caputo-flavored (nu = 1) symbol with K = f(0+)
    const double f0 = 0.37;
    CHECK(sumudu_hpreg_symbol(h.mu, b, F, f0, u) ==
          doctest::Approx(sumudu_hp_symbol(HilferOrder{h.mu, 1.0}, b, F, f0,
                                           u))
              .epsilon(1e-14));

    // nu = 0 keeps the branch power off the initial-value term
    const double want0 =
        std::pow(u, -h.mu) * std::pow(branch, b.gamma_upper) * F -
        std::pow(u, -1.0) * K;
    CHECK(sumudu_hp_symbol(HilferOrder{h.mu, 0.0}, b, F, K, u) ==
          doctest::Approx(want0).epsilon(1e-14));
}

TEST_CASE("frequency grid nodes: symmetry and the exact zero")
{
    FrequencyGrid g;
    g.p_max = 4.0;
    g.n_p = 8;
    const auto p = g.p_nodes();
    REQUIRE(p.size() == 9);
    CHECK(p.front() == -4.0);
    CHECK(p.back() == 4.0);
    CHECK(p[4] == 0.0); // exactly
    for (std::size_t i = 0; i < p.size(); ++i)
        CHECK(p[i] == doctest::Approx(-4.0 + i * 1.0).epsilon(1e-15));

    FrequencyGrid bad;
    bad.n_p = 511; // odd: p = 0 would fall between nodes
    CHECK_THROWS_AS(bad.p_nodes(), validation_error);
}

TEST_CASE("Fourier pair on a Gaussian")
{
    auto g = [](double x) { return std::exp(-0.5 * x * x); };
    const auto ghat = fourier_forward(g);
    const auto p = ghat.grid.p_nodes();
    // analytic image: sqrt(2 pi) e^(-p^2/2)
    for (std::size_t i = 0; i < p.size(); i += 37) {
        const double want = std::sqrt(2.0 * M_PI) * std::exp(-0.5 * p[i] * p[i]);
        CHECK(ghat.values[i].real() ==
              doctest::Approx(want).epsilon(1e-9).scale(1.0));
        CHECK(std::fabs(ghat.values[i].imag()) < 1e-12);
    }
    // round trip
    for (double x : {-3.1, -0.4, 0.0, 1.7}) {
        double imag = 0.0;
        CHECK(fourier_inverse(ghat, x, &imag) ==
              doctest::Approx(g(x)).epsilon(1e-8).scale(1.0));
        CHECK(std::fabs(imag) < 1e-9);
    }
}

TEST_CASE("Fourier image of the symmetric indicator")
{
    // half-values at the jump make the trapezoid rule second order again
    auto ind = [](double x) {
        const double a = std::fabs(x);
        if (a < 1.0)
            return 1.0;
        if (a == 1.0)
            return 0.5;
        return 0.0;
    };
    FrequencyGrid grid;
    grid.x_max = 8.0; // +-1 falls exactly on nodes: dx = 16/2048 = 1/128
    const auto ghat = fourier_forward(ind, grid);
    const auto p = ghat.grid.p_nodes();
    for (std::size_t i = 0; i < p.size(); i += 29) {
        const double want =
            (p[i] == 0.0) ? 2.0 : 2.0 * std::sin(p[i]) / p[i];
        CHECK(ghat.values[i].real() ==
              doctest::Approx(want).epsilon(1e-3).scale(1.0));
    }
}

TEST_CASE("imaginary residue flags asymmetric spectra")
{
    FrequencyGrid grid;
    SpectralFunction s;
    s.grid = grid;
    const auto p = grid.p_nodes();
    s.values.resize(p.size());

    // conjugate-symmetric data: residue at rounding level
    for (std::size_t i = 0; i < p.size(); ++i)
        s.values[i] = std::exp(-p[i] * p[i]);
    double imag = 1.0;
    (void)fourier_inverse(s, 0.8, &imag);
    CHECK(std::fabs(imag) < 1e-12);

    // shifted hump: no conjugate symmetry, residue is O(1) relative
    for (std::size_t i = 0; i < p.size(); ++i)
        s.values[i] = std::exp(-(p[i] - 1.0) * (p[i] - 1.0));
    (void)fourier_inverse(s, 0.8, &imag);
    CHECK(std::fabs(imag) > 1e-3);
}

TEST_CASE("inverse transform validates value/grid agreement")
{
    SpectralFunction s;
    s.grid = FrequencyGrid{};
    s.values.resize(3); // wrong size
    CHECK_THROWS_AS(fourier_inverse(s, 0.0), validation_error);
}

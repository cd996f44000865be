#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "prabhakar/errors.hpp"
#include "prabhakar/operators.hpp"

#include "oracle.hpp"

using namespace prabhakar;

namespace {

// Exact integral of the constant 1: t^mu E^gamma_(rho,mu+1)(omega t^rho),
// computed with the long-double oracle.
double integral_of_one(const PrabhakarParams& p, double t)
{
    return std::pow(t, p.mu) *
           oracle::ml3(p.rho, p.mu + 1.0, p.gamma_upper,
                       p.omega * std::pow(t, p.rho));
}

// Exact integral of sin: expand sin y = sum_j (-1)^j y^(2j+1)/(2j+1)! and
// use the monomial image t^(mu+k) E^gamma_(rho,mu+k+1)(omega t^rho) of
// y^k/k!.  Converges like a sine series for moderate t.
double integral_of_sin(const PrabhakarParams& p, double t)
{
    double acc = 0.0;
    for (int j = 0; j < 40; ++j) {
        const double k = 2.0 * j + 1.0;
        const double term =
            ((j % 2 == 0) ? 1.0 : -1.0) * std::pow(t, p.mu + k) *
            oracle::ml3(p.rho, p.mu + k + 1.0, p.gamma_upper,
                        p.omega * std::pow(t, p.rho));
        acc += term;
        if (std::fabs(term) < 1e-18 * std::fabs(acc) && j > 3)
            break;
    }
    return acc;
}

} // namespace

TEST_CASE("integral of the constant matches the closed form")
{
    std::mt19937_64 eng(31337);
    const auto one = SampledFunction::from_callable(
        [](double) { return 1.0; }, 2.0, 64, 2.0, true);
    for (int i = 0; i < 10; ++i) {
        const PrabhakarParams p{
            oracle::uniform(eng, 0.4, 1.2), oracle::uniform(eng, 0.3, 1.5),
            oracle::uniform(eng, -0.8, 0.8), oracle::uniform(eng, -1.0, 1.0)};
        for (double t : {0.35, 1.0, 2.0}) {
            const double want = integral_of_one(p, t);
            CAPTURE(p.rho);
            CAPTURE(p.mu);
            CAPTURE(p.omega);
            CAPTURE(p.gamma_upper);
            CAPTURE(t);
            CHECK(prabhakar_integral(p, one, t) ==
                  doctest::Approx(want).epsilon(1e-8).scale(std::fabs(want) +
                                                            0.1));
        }
    }
}

TEST_CASE("integral refines toward the exact value as the grid refines")
{
    const PrabhakarParams p{0.9, 0.9, -0.5, 0.7};
    const double t = 1.5;
    const double exact = integral_of_sin(p, t);
    double prev_err = -1.0;
    for (int n : {8, 16, 32, 64}) {
        const auto f = SampledFunction::from_callable(
            [](double y) { return std::sin(y); }, 2.0, n, 2.0, true);
        const double err =
            std::fabs(prabhakar_integral(p, f, t) - exact);
        CAPTURE(n);
        if (prev_err >= 0.0 && prev_err > 1e-12)
            CHECK(err < prev_err * 0.7);
        prev_err = err;
    }
    CHECK(prev_err < 1e-9);
}

TEST_CASE("kernel convolution composes orders and upper parameters")
{
    // E^(g1)_(rho,m1) * E^(g2)_(rho,m2) kernels convolve to the
    // (m1+m2, g1+g2) kernel of the same rho/omega
    const double rho = 0.8, om = -0.4;
    const double m1 = 0.7, g1 = 0.6;
    const double m2 = 0.5, g2 = -0.3;
    const PrabhakarParams outer{rho, m1, om, g1};
    const PrabhakarParams inner{rho, m2, om, g2};
    const PrabhakarParams combined{rho, m1 + m2, om, g1 + g2};

    const auto f = SampledFunction::from_singular_callable(
        [&](double y) { return kernel_eval(inner, y); }, m2 - 1.0, 2.0, 200,
        2.5);
    for (double t : {0.5, 1.5}) {
        const double want = kernel_eval(combined, t);
        CHECK(prabhakar_integral(outer, f, t) ==
              doctest::Approx(want).epsilon(2e-6).scale(std::fabs(want)));
    }
}

TEST_CASE("integral table matches pointwise evaluation and anchors zero")
{
    const PrabhakarParams p{0.7, 0.6, -0.5, 0.9};
    const auto f = SampledFunction::from_callable(
        [](double y) { return std::cos(y); }, 1.5, 24, 2.0, true);
    const auto table = prabhakar_integral_table(p, f);
    REQUIRE(table.size() == f.grid().size());
    CHECK(table[0] == 0.0); // mu + sigma > 0: the limit vanishes
    for (std::size_t i = 3; i < table.size(); i += 5)
        CHECK(table[i] ==
              doctest::Approx(prabhakar_integral(p, f, f.grid()[i]))
                  .epsilon(1e-13));
}

TEST_CASE("derivative stencils are exact on cubics")
{
    const auto t = graded_points(2.0, 19, 1.7);
    std::vector<double> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        v[i] = t[i] * t[i] * t[i] - 2.0 * t[i] * t[i] + t[i];
    const auto d = derivative_table(t, v);
    REQUIRE(d.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double want = 3.0 * t[i] * t[i] - 4.0 * t[i] + 1.0;
        CHECK(d[i] == doctest::Approx(want).epsilon(1e-10).scale(1.0));
    }
    // off-grid evaluation interpolates through the same stencils
    CHECK(derivative_at(t, v, 0.777) ==
          doctest::Approx(3.0 * 0.777 * 0.777 - 4.0 * 0.777 + 1.0)
              .epsilon(1e-9)
              .scale(1.0));
}

TEST_CASE("derivative of a constant is the initial-value kernel, exactly")
{
    // the split sends the constant through in closed form: no quadrature
    const HilferOrder h{0.6, 0.3};
    const PrabhakarBase b{0.8, -0.5, 0.9};
    const auto f = SampledFunction::from_callable(
        [](double) { return 5.0; }, 2.0, 40, 2.0, true);
    HilferPrabhakarDerivative D(h, b, f);
    for (double t : {0.2, 0.9, 1.8}) {
        const double want =
            5.0 * kernel_eval(
                      PrabhakarParams{b.rho, 1.0 - h.mu, b.omega,
                                      -b.gamma_upper},
                      t);
        CHECK(D(t) == doctest::Approx(want).epsilon(1e-12).scale(
                          std::fabs(want)));
    }
}

TEST_CASE("classical Riemann-Liouville and Caputo monomial images")
{
    const double mu = 0.45;
    const double rho = 0.9; // irrelevant once gamma = 0
    const PrabhakarBase b{rho, -0.3, 0.0};
    const auto lin = SampledFunction::from_callable(
        [](double y) { return y; }, 2.0, 400, 2.0, true);

    // RL flavor (nu = 0) of t: t^(1-mu)/Gamma(2-mu)
    HilferPrabhakarDerivative rl(HilferOrder{mu, 0.0}, b, lin);
    for (double t : {0.5, 1.2})
        CHECK(rl(t) == doctest::Approx(std::pow(t, 1.0 - mu) /
                                       std::tgamma(2.0 - mu))
                           .epsilon(1e-6));

    // Caputo (regularized) of t: the same image
    RegularizedHpDerivative cap(mu, b, lin);
    for (double t : {0.5, 1.2})
        CHECK(cap(t) == doctest::Approx(std::pow(t, 1.0 - mu) /
                                        std::tgamma(2.0 - mu))
                            .epsilon(1e-8));

    // Caputo of a constant vanishes identically
    const auto c = SampledFunction::from_callable(
        [](double) { return 0.7; }, 2.0, 40, 2.0, true);
    RegularizedHpDerivative capc(mu, b, c);
    for (double t : {0.3, 1.5})
        CHECK(std::fabs(capc(t)) < 1e-12);

    // RL of a constant: c t^-mu/Gamma(1-mu)
    HilferPrabhakarDerivative rlc(HilferOrder{mu, 0.0}, b, c);
    for (double t : {0.3, 1.5})
        CHECK(rlc(t) == doctest::Approx(0.7 * std::pow(t, -mu) /
                                        std::tgamma(1.0 - mu))
                            .epsilon(1e-12));
}

TEST_CASE("nu = 1 flavor coincides with the regularized derivative")
{
    const double mu = 0.55;
    const PrabhakarBase b{0.7, -0.4, 0.8};
    const auto f = SampledFunction::from_callable(
        [](double y) { return std::cos(1.3 * y); }, 2.0, 300, 2.0, true);

    HilferPrabhakarDerivative hp(HilferOrder{mu, 1.0}, b, f);
    RegularizedHpDerivative reg(mu, b, f);
    for (double t : {0.4, 1.0, 1.7})
        CHECK(hp(t) == doctest::Approx(reg(t)).epsilon(1e-10).scale(
                           std::fabs(reg(t)) + 1.0));

    // in particular, constants are annihilated (not mapped to the kernel)
    const auto c = SampledFunction::from_callable(
        [](double) { return 3.0; }, 2.0, 40, 2.0, true);
    HilferPrabhakarDerivative hpc(HilferOrder{mu, 1.0}, b, c);
    for (double t : {0.5, 1.5})
        CHECK(std::fabs(hpc(t)) < 1e-12);
}

TEST_CASE("flavor difference equals the initial-value kernel for nu < 1")
{
    const HilferOrder h{0.5, 0.4};
    const PrabhakarBase b{0.8, -0.5, 0.7};
    const auto f = SampledFunction::from_callable(
        [](double y) { return std::exp(-y); }, 3.0, 300, 3.0, true);
    HilferPrabhakarDerivative hp(h, b, f);
    RegularizedHpDerivative reg(h.mu, b, f);
    for (double t : {0.5, 1.2, 2.0}) {
        const double kernel =
            kernel_eval(PrabhakarParams{b.rho, 1.0 - h.mu, b.omega,
                                        -b.gamma_upper},
                        t);
        CHECK(hp(t) - reg(t) ==
              doctest::Approx(kernel).epsilon(2e-4).scale(std::fabs(kernel) +
                                                          1.0));
    }
}

TEST_CASE("weighted initial limit: smooth operands give zero")
{
    const HilferOrder h{0.6, 0.4};
    const PrabhakarBase b{0.8, -0.3, 0.7};
    const auto f = SampledFunction::from_callable(
        [](double y) { return std::cos(0.9 * y); }, 1.0, 80, 2.5, true);
    CHECK(std::fabs(initial_weighted_limit(h, b, f)) < 2e-3);
}

TEST_CASE("weighted initial limit: the conjugate kernel gives one")
{
    const HilferOrder h{0.55, 0.45};
    const PrabhakarBase b{0.9, -0.4, 0.8};
    // operand e^(gamma(1-nu))_(rho, m2, omega) with m2 = 1-(1-nu)(1-mu):
    // the inner integral of order (1-nu)(1-mu) completes it to
    // t^0 E(...)(t->0) = 1
    const double m2 = 1.0 - (1.0 - h.nu) * (1.0 - h.mu);
    const PrabhakarParams conj{b.rho, m2, b.omega,
                               b.gamma_upper * (1.0 - h.nu)};
    const auto f = SampledFunction::from_singular_callable(
        [&](double y) { return kernel_eval(conj, y); }, m2 - 1.0, 1.0, 80,
        2.5);
    CHECK(initial_weighted_limit(h, b, f) ==
          doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("operator validation")
{
    const auto f = SampledFunction::from_callable(
        [](double y) { return y; }, 1.0, 16, 2.0, true);

    // orders out of range
    CHECK_THROWS_AS(HilferPrabhakarDerivative(HilferOrder{0.0, 0.5},
                                              PrabhakarBase{1.0, 0.0, 0.0},
                                              f),
                    validation_error);
    CHECK_THROWS_AS(HilferPrabhakarDerivative(HilferOrder{1.0, 0.5},
                                              PrabhakarBase{1.0, 0.0, 0.0},
                                              f),
                    validation_error);
    CHECK_THROWS_AS(HilferPrabhakarDerivative(HilferOrder{0.5, 1.5},
                                              PrabhakarBase{1.0, 0.0, 0.0},
                                              f),
                    validation_error);
    CHECK_THROWS_AS(RegularizedHpDerivative(0.5,
                                            PrabhakarBase{-1.0, 0.0, 0.0}, f),
                    validation_error);

    // the regularized flavor requires an ac1 operand
    const auto raw = SampledFunction::from_samples(
        graded_points(1.0, 8, 2.0), std::vector<double>(9, 1.0));
    CHECK_THROWS_AS(RegularizedHpDerivative(0.5,
                                            PrabhakarBase{1.0, 0.0, 0.0},
                                            raw),
                    validation_error);

    // nu = 1 cannot differentiate a singular head
    const auto sing = SampledFunction::from_singular_callable(
        [](double y) { return std::pow(y, -0.3); }, -0.3, 1.0, 16);
    CHECK_THROWS_AS(HilferPrabhakarDerivative(HilferOrder{0.5, 1.0},
                                              PrabhakarBase{1.0, 0.0, 0.0},
                                              sing),
                    envelope_error);

    // evaluation domain
    HilferPrabhakarDerivative D(HilferOrder{0.5, 0.5},
                                PrabhakarBase{1.0, -0.2, 0.5}, f);
    CHECK_THROWS_AS(D(-0.5), validation_error);
    CHECK_THROWS_AS(D(2.0), validation_error);
    CHECK_THROWS_AS(D(0.0), validation_error);
    CHECK(D.min_t() == f.grid()[1]);

    // integral evaluation domain
    const PrabhakarParams p{0.8, 0.7, 0.0, 0.0};
    CHECK_THROWS_AS(prabhakar_integral(p, f, 0.0), validation_error);
    CHECK_THROWS_AS(prabhakar_integral(p, f, 1.5), validation_error);
}

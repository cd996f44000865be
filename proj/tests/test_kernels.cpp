#include <doctest.h>

#include <cmath>
#include <random>

#include "prabhakar/errors.hpp"
#include "prabhakar/kernels.hpp"

#include "oracle.hpp"

using namespace prabhakar;

TEST_CASE("kernel value matches the long-double oracle")
{
    std::mt19937_64 eng(99);
    for (int i = 0; i < 10; ++i) {
        const double rho = oracle::uniform(eng, 0.6, 1.5);
        const double mu = oracle::uniform(eng, 0.2, 2.0);
        const double om = oracle::uniform(eng, -1.0, 1.0);
        const double ga = oracle::uniform(eng, -1.5, 1.5);
        for (double t : {0.3, 1.7}) {
            const double ref = std::pow(t, mu - 1.0) *
                               oracle::ml3(rho, mu, ga, om * std::pow(t, rho));
            CAPTURE(rho);
            CAPTURE(mu);
            CAPTURE(om);
            CAPTURE(ga);
            CAPTURE(t);
            CHECK(kernel_eval(PrabhakarParams{rho, mu, om, ga}, t) ==
                  doctest::Approx(ref).epsilon(1e-12).scale(std::fabs(ref) +
                                                            1e-30));
        }
    }
}

TEST_CASE("Riemann-Liouville collapse at gamma = 0")
{
    for (double t : {0.05, 0.9, 4.0}) {
        const double mu = 0.6;
        CHECK(kernel_eval(PrabhakarParams{0.8, mu, 0.7, 0.0}, t) ==
              doctest::Approx(std::pow(t, mu - 1.0) / std::tgamma(mu))
                  .epsilon(1e-14));
    }
}

TEST_CASE("scaling law in t and omega")
{
    // kernel(t; omega) = c^(mu-1) kernel(t/c; omega c^rho)
    const PrabhakarParams p{0.7, 1.3, -0.8, 0.9};
    const double c = 2.5;
    for (double t : {0.4, 1.1, 3.0}) {
        const PrabhakarParams scaled{p.rho, p.mu, p.omega * std::pow(c, p.rho),
                                     p.gamma_upper};
        const double lhs = kernel_eval(p, t);
        const double rhs =
            std::pow(c, p.mu - 1.0) * kernel_eval(scaled, t / c);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(
                         std::fabs(rhs) + 1e-30));
    }
}

TEST_CASE("prepared kernel agrees with the direct evaluation")
{
    const PrabhakarParams p{0.9, 0.45, -0.6, 1.2};
    PreparedKernel prep(p);
    for (double t : {0.01, 0.2, 1.0, 2.8}) {
        CHECK(prep(t) == doctest::Approx(kernel_eval(p, t))
                             .epsilon(5e-13)
                             .scale(std::fabs(kernel_eval(p, t)) + 1e-30));
        // ml_factor excludes the power head
        CHECK(prep(t) == doctest::Approx(std::pow(t, p.mu - 1.0) *
                                         prep.ml_factor(t))
                             .epsilon(1e-13)
                             .scale(std::fabs(prep(t)) + 1e-30));
    }
}

TEST_CASE("transform symbol: closed form and branch validation")
{
    const PrabhakarParams p{0.6, 0.8, 0.5, -1.1};
    const double u = 0.7;
    const double want = std::pow(u, p.mu - 1.0) *
                        std::pow(1.0 - p.omega * std::pow(u, p.rho),
                                 -p.gamma_upper);
    CHECK(sumudu_symbol(p, u) == doctest::Approx(want).epsilon(1e-14));

    // 1 - omega u^rho <= 0: off the real branch
    CHECK_THROWS_AS(sumudu_symbol(PrabhakarParams{1.0, 1.0, 2.0, 1.0}, 0.6),
                    envelope_error);
    CHECK_THROWS_AS(sumudu_symbol(p, 0.0), validation_error);
    CHECK_THROWS_AS(sumudu_symbol(p, -0.3), validation_error);
}

TEST_CASE("kernel parameter validation")
{
    CHECK_THROWS_AS(kernel_eval(PrabhakarParams{-0.5, 1.0, 0.0, 0.0}, 1.0),
                    validation_error);
    CHECK_THROWS_AS(kernel_eval(PrabhakarParams{0.5, -1.0, 0.0, 0.0}, 1.0),
                    validation_error);
    CHECK_THROWS_AS(kernel_eval(PrabhakarParams{0.5, 1.0, 0.0, 0.0}, -2.0),
                    validation_error);
}

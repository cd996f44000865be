#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "prabhakar/errors.hpp"
#include "prabhakar/mittag_leffler.hpp"

#include "oracle.hpp"

using namespace prabhakar;

TEST_CASE("classical reductions")
{
    // (1,1,1) is exp
    for (double z : {-30.0, -3.0, -0.4, 0.0, 0.7, 5.0, 100.0})
        CHECK(ml3(MLParams{1.0, 1.0, 1.0}, z) ==
              doctest::Approx(std::exp(z)).epsilon(1e-13));

    // even order at z = 4: cosh(2)
    CHECK(ml3(MLParams{2.0, 1.0, 1.0}, 4.0) ==
          doctest::Approx(3.7621956910836314).epsilon(1e-13));

    // (1,2,1): (e^z - 1)/z
    for (double z : {-2.0, 0.3, 1.5})
        CHECK(ml3(MLParams{1.0, 2.0, 1.0}, z) ==
              doctest::Approx(std::expm1(z) / z).epsilon(1e-13));

    // gamma = 0 freezes the series at 1/Gamma(beta) for every z
    for (double z : {-8.0, 0.0, 11.0})
        CHECK(ml3(MLParams{0.7, 1.3, 0.0}, z) ==
              doctest::Approx(1.0 / std::tgamma(1.3)).epsilon(1e-14));

    // beta = 0: the k = 0 term vanishes; (1,0,1) gives z e^z
    for (double z : {-1.2, 0.8})
        CHECK(ml3(MLParams{1.0, 0.0, 1.0}, z) ==
              doctest::Approx(z * std::exp(z)).epsilon(1e-13));
}

TEST_CASE("non-positive integer gamma truncates to a polynomial")
{
    // gamma = -1: 1 + (-1) z / Gamma(alpha + beta) ... exactly two terms
    for (double z : {-0.7, 2.5, 40.0}) {
        const double want = 1.0 - z / std::tgamma(1.8);
        CHECK(ml3(MLParams{0.8, 1.0, -1.0}, z) ==
              doctest::Approx(want).epsilon(1e-14));
    }
    // gamma = -2 at alpha=1,beta=1: 1 - 2z/1! + z^2 (2)_2.../...
    // (−2)_k: k=0:1, k=1:−2, k=2:2, k>=3:0 — cross-check with the oracle
    for (double z : {-1.1, 0.6, 3.0}) {
        const double want = 1.0 - 2.0 * z / std::tgamma(2.0) +
                            z * z / std::tgamma(3.0);
        CHECK(ml3(MLParams{1.0, 1.0, -2.0}, z) ==
              doctest::Approx(want).epsilon(1e-13));
    }
    // term count reflects the truncation: at most m+1 terms inspected plus
    // the convergence confirmation margin
    const auto r = ml3_detailed(MLParams{0.8, 1.0, -3.0}, 5.0);
    CHECK(r.terms <= 4 + 3);
}

TEST_CASE("series value matches a long-double oracle on random draws")
{
    std::mt19937_64 eng(424242);
    int checked = 0;
    int attempts = 0;
    while (checked < 50 && attempts < 2000) {
        ++attempts;
        const double a = oracle::uniform(eng, 0.05, 2.0);
        const double b = oracle::uniform(eng, -3.0, 3.0);
        const double g = oracle::uniform(eng, -3.0, 3.0);
        const double z = oracle::uniform(eng, -10.0, 10.0);
        Ml3Result r;
        try {
            r = ml3_detailed(MLParams{a, b, g}, z);
        } catch (const envelope_error&) {
            continue; // overflow or term budget: outside the double envelope
        }
        const double cancel =
            r.max_abs_term / std::max(std::fabs(r.value), 1e-300);
        if (cancel > 1e4)
            continue; // too ill-conditioned for a 1e-11 comparison
        const double ref = oracle::ml3(a, b, g, z);
        ++checked;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(g);
        CAPTURE(z);
        const double tol = 1e-11 * std::max(1.0, cancel);
        CHECK(std::fabs(r.value - ref) <=
              tol * std::max(std::fabs(ref), 1e-12));
    }
    CHECK(checked == 50);
}

TEST_CASE("cancellation flag fires for strongly alternating sums")
{
    // E_(1/2)(-8): max term ~ e^64, value ~ 0.07 — heavy cancellation
    const auto r = ml3_detailed(MLParams{0.5, 1.0, 1.0}, -8.0);
    CHECK(r.cancellation);
    // benign argument: no flag
    const auto s = ml3_detailed(MLParams{0.9, 1.0, 1.0}, 0.5);
    CHECK_FALSE(s.cancellation);
}

TEST_CASE("validation and convergence errors")
{
    CHECK_THROWS_AS(ml3(MLParams{0.0, 1.0, 1.0}, 1.0), validation_error);
    CHECK_THROWS_AS(ml3(MLParams{-0.3, 1.0, 1.0}, 1.0), validation_error);
    CHECK_THROWS_AS(ml3(MLParams{1.0, 1.0, 1.0},
                        std::numeric_limits<double>::quiet_NaN()),
                    validation_error);

    SeriesControl tight;
    tight.max_terms = 20;
    CHECK_THROWS_AS(ml3(MLParams{0.3, 1.0, 1.0}, 30.0, tight),
                    convergence_error);
    // the exception carries diagnostics
    try {
        ml3(MLParams{0.3, 1.0, 1.0}, 30.0, tight);
    } catch (const convergence_error& e) {
        CHECK(e.terms == 20);
        CHECK(std::isfinite(e.last_term));
    }
}

TEST_CASE("series overflow is reported, not returned")
{
    // alpha tiny, |z| large: terms reach exp(huge) before any decay
    CHECK_THROWS_AS(ml3(MLParams{0.05, 1.0, 1.0}, 10.0), envelope_error);
}

TEST_CASE("prepared evaluator matches the full routine")
{
    std::mt19937_64 eng(7);
    for (int i = 0; i < 10; ++i) {
        const double a = oracle::uniform(eng, 0.3, 1.8);
        const double b = oracle::uniform(eng, 0.2, 2.5);
        const double g = oracle::uniform(eng, -1.5, 1.5);
        PreparedMl3 prep(MLParams{a, b, g});
        for (double z : {-4.0, -1.0, -0.1, 0.0, 0.3, 2.0, 6.0}) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(g);
            CAPTURE(z);
            const double full = ml3(MLParams{a, b, g}, z);
            CHECK(prep.eval(z) ==
                  doctest::Approx(full).epsilon(5e-13).scale(
                      std::fabs(full) + 1e-30));
        }
    }
}

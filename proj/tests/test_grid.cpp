#include <doctest.h>

#include <cmath>
#include <sstream>

#include "prabhakar/errors.hpp"
#include "prabhakar/grid.hpp"

using namespace prabhakar;

TEST_CASE("graded points: endpoints, monotonicity, grading law")
{
    const auto t = graded_points(2.0, 10, 2.5);
    REQUIRE(t.size() == 11);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == 2.0);
    for (std::size_t i = 1; i < t.size(); ++i)
        CHECK(t[i] > t[i - 1]);
    // t_i = T (i/n)^r
    CHECK(t[5] == doctest::Approx(2.0 * std::pow(0.5, 2.5)).epsilon(1e-15));
    // r = 1 is the uniform grid
    const auto u = graded_points(1.0, 4, 1.0);
    CHECK(u[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(u[3] == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("sampled function interpolates linearly between grid points")
{
    std::vector<double> t{0.0, 1.0, 2.0};
    std::vector<double> v{1.0, 3.0, 2.0};
    const auto f = SampledFunction::from_samples(t, v);
    CHECK(f.eval(0.0) == 1.0);
    CHECK(f.eval(1.0) == 3.0);
    CHECK(f.eval(0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(f.eval(1.25) == doctest::Approx(2.75).epsilon(1e-15));
    CHECK(f.value_at_origin() == 1.0);
    CHECK(f.domain_end() == 2.0);
    CHECK_FALSE(f.has_callable());
    CHECK(f.left_sing_order() == 0.0);
}

TEST_CASE("callable-backed functions evaluate the callable between nodes")
{
    const auto f = SampledFunction::from_callable(
        [](double t) { return std::sin(t); }, 3.0, 24, 2.0, true);
    CHECK(f.ac1());
    CHECK(f.eval(1.234567) == doctest::Approx(std::sin(1.234567)).epsilon(0));
    CHECK(f.grid().size() == 25);
    CHECK(f.values()[7] ==
          doctest::Approx(std::sin(f.grid()[7])).epsilon(1e-15));
}

TEST_CASE("singular head: smooth part and direct evaluation")
{
    // f(t) = t^(-0.4) * cos(t)
    const auto f = SampledFunction::from_singular_callable(
        [](double t) { return std::pow(t, -0.4) * std::cos(t); }, -0.4, 2.0,
        16);
    CHECK(f.left_sing_order() == -0.4);
    const double t = 0.37;
    CHECK(f.eval(t) ==
          doctest::Approx(std::pow(t, -0.4) * std::cos(t)).epsilon(1e-15));
    CHECK(f.smooth_part(t) == doctest::Approx(std::cos(t)).epsilon(1e-12));
}

TEST_CASE("explicit-grid sampling keeps the grid")
{
    std::vector<double> pts{0.0, 0.1, 0.5, 1.0};
    const auto f = SampledFunction::from_callable_on_grid(
        [](double t) { return t * t; }, pts);
    CHECK(f.grid() == pts);
    CHECK(f.values()[2] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("sampled-function validation")
{
    // mismatched lengths
    CHECK_THROWS_AS(SampledFunction::from_samples({0.0, 1.0}, {1.0}),
                    validation_error);
    // unsorted grid
    CHECK_THROWS_AS(
        SampledFunction::from_samples({0.0, 2.0, 1.0}, {0.0, 1.0, 2.0}),
        validation_error);
    // grid must start at 0
    CHECK_THROWS_AS(SampledFunction::from_samples({0.5, 1.0}, {1.0, 2.0}),
                    validation_error);
    // singular head requires the callable form and sigma in (-1, 0]
    CHECK_THROWS_AS(SampledFunction::from_singular_callable(
                        [](double t) { return t; }, -1.2, 1.0, 8),
                    validation_error);
}

TEST_CASE("CSV round trip is bit exact")
{
    std::vector<double> t{0.0, 0.1, 0.2, 0.30000000000000004, 1.0};
    std::vector<double> v{M_PI, -0.1, 1e-300, 3.0, -2.5e17};
    const auto f = SampledFunction::from_samples(t, v);

    std::ostringstream os;
    write_csv(os, f);
    const std::string text = os.str();

    // header and LF-only endings
    CHECK(text.rfind("t,value\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);

    std::istringstream is(text);
    const auto g = read_csv(is);
    REQUIRE(g.grid().size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(g.grid()[i] == t[i]);   // bitwise
        CHECK(g.values()[i] == v[i]); // bitwise
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodatlas/asymfit.hpp"
#include "periodatlas/builtins.hpp"
#include "periodatlas/specfun.hpp"

#include <cmath>

using namespace patlas;

namespace {
Func1 half(RealFn f) { return Func1(Func1::Domain::half_line, std::move(f)); }
}

TEST_CASE("single-term exactness on synthetic monomials")
{
    for (double ell : {3.0, -0.7}) {
        for (double al : {-2.0, -0.5, 1.3}) {
            auto fit = fit_power_at_inf(half([=](double x) { return ell * std::pow(x, al); }),
                                        kDefaultFitWindow, 1);
            REQUIRE(fit.terms.size() == 1);
            CHECK(fit.terms[0].first == doctest::Approx(ell).epsilon(1e-6));
            CHECK(std::fabs(fit.terms[0].second - al) <= 1e-6);
            CHECK_FALSE(fit.log_flag);
        }
    }
}

TEST_CASE("two-term peeling: synthetic and built-in")
{
    auto fit = fit_power_at_inf(half([](double x) { return std::pow(x, -2.0) + 5.0 * std::pow(x, -3.0); }),
                                kDefaultFitWindow, 2);
    REQUIRE(fit.terms.size() == 2);
    CHECK(fit.terms[0].first == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::fabs(fit.terms[0].second + 2.0) <= 0.01);
    CHECK(fit.terms[1].first == doctest::Approx(5.0).epsilon(0.01));
    CHECK(std::fabs(fit.terms[1].second + 3.0) <= 0.01);

    // exponent gap 0.5 still recovered at 1%
    auto gap = fit_power_at_inf(half([](double x) { return 2.0 * std::pow(x, -1.0) - 0.8 * std::pow(x, -1.5); }),
                                kDefaultFitWindow, 2);
    REQUIRE(gap.terms.size() == 2);
    CHECK(gap.terms[0].first == doctest::Approx(2.0).epsilon(0.01));
    CHECK(gap.terms[1].first == doctest::Approx(-0.8).epsilon(0.01));

    // the built-in example f is quantifiable at infinity by -2
    auto bf = fit_power_at_inf(builtin_example_f(), kDefaultFitWindow, 1);
    CHECK(bf.terms[0].first == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::fabs(bf.terms[0].second + 2.0) <= 0.02);
}

TEST_CASE("log detection")
{
    // plain power input must not pick the log branch
    auto plain = fit_power_at_inf(half([](double x) { return 3.0 * std::pow(x, -2.0); }),
                                  kDefaultFitWindow, 1);
    CHECK_FALSE(plain.log_flag);

    // log-corrected input picks it and recovers coefficient and exponent
    auto lg = fit_power_at_inf(half([](double x) { return 0.5 * std::log(x) * std::pow(x, -3.0); }),
                               kDefaultFitWindow, 1);
    CHECK(lg.log_flag);
    CHECK(lg.terms[0].first == doctest::Approx(0.5).epsilon(0.02));
    CHECK(std::fabs(lg.terms[0].second + 3.0) <= 0.05);
}

TEST_CASE("fit_log_at_inf")
{
    auto r = fit_log_at_inf(half([](double x) { return 4.0 * std::log(x) / x; }), -1.0,
                            kDefaultFitWindow);
    CHECK(r.coefficient == doctest::Approx(4.0).epsilon(1e-9));

    // no log term: rejected
    CHECK_THROWS_AS(fit_log_at_inf(half([](double x) { return 1.0 / x; }), -1.0, kDefaultFitWindow),
                    FitError);
}

TEST_CASE("fit_at_one translates exponents")
{
    // f(z) = (1-z^2)^(-1/2): leading term (1, 1/2) in the (1-z^2)^(-alpha) convention
    Func1 f(Func1::EvalOm([](double z, double omz) {
        return 1.0 / std::sqrt(omz * (1.0 + z));
    }));
    auto fit = fit_at_one(f, 1);
    CHECK(fit.terms[0].first == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::fabs(fit.terms[0].second - 0.5) <= 0.01);

    // f(z) = 2 + (1-z^2): terms (2, 0) then (1, -1)
    Func1 g(Func1::EvalOm([](double z, double omz) { return 2.0 + omz * (1.0 + z); }));
    auto two = fit_at_one(g, 2);
    REQUIRE(two.terms.size() == 2);
    CHECK(two.terms[0].first == doctest::Approx(2.0).epsilon(0.01));
    CHECK(std::fabs(two.terms[0].second - 0.0) <= 0.01);
    CHECK(two.terms[1].first == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::fabs(two.terms[1].second + 1.0) <= 0.02);
}

TEST_CASE("sign instability rejected")
{
    CHECK_THROWS_AS(fit_power_at_inf(half([](double x) { return std::sin(x) / x; }),
                                     kDefaultFitWindow, 1),
                    FitError);
}

TEST_CASE("operator F case table on synthetic developments")
{
    // alpha > -1: F[f] ~ l G(alpha) x^alpha
    for (double al : {0.5, -0.3, -0.8}) {
        Func1 f = half([al](double x) { return std::pow(1.0 + x * x, 0.5 * al); });
        auto fit = fit_power_at_inf(op_f_fn(f), {1e2, 1e4}, 1, 24);
        CHECK(fit.terms[0].first == doctest::Approx(script_g(al)).epsilon(0.02));
        CHECK(std::fabs(fit.terms[0].second - al) <= 0.02);
    }

    // first momentum nonzero: F[f] ~ M_1[f] x^(-1)
    {
        Func1 f = half([](double x) { return 1.0 / (1.0 + x * x); });
        const double m1 = moment_m(f, 1);
        auto fit = fit_power_at_inf(op_f_fn(f), {1e2, 1e4}, 1, 24);
        CHECK(fit.terms[0].first == doctest::Approx(m1).epsilon(0.02));
        CHECK(std::fabs(fit.terms[0].second + 1.0) <= 0.02);
    }
}

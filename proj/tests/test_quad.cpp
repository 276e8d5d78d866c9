#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodatlas/quad.hpp"
#include "periodatlas/specfun.hpp"

#include <cmath>
#include <random>

using namespace patlas;

TEST_CASE("smooth finite integrals")
{
    auto r = integrate([](double x) { return std::sin(x); }, 0.0, 1.5707963267948966);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));

    r = integrate([](double x) { return x * x; }, -1.0, 2.0);
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("endpoint singularity x^(-1/2)")
{
    auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("Beta integral with singular endpoint matches Gamma ratio")
{
    const double al = 0.5, be = 3.0;
    auto r = integrate([=](double u) { return std::pow(u, al - 1.0) * std::pow(1.0 - u, be - 1.0); },
                       0.0, 1.0);
    const double expect = patlas::gamma(al) * patlas::gamma(be) / patlas::gamma(al + be);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("semi-infinite integrals")
{
    auto r = integrate_to_inf([](double x) { return std::exp(-x); }, 0.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));

    // Beta form: int_0^inf u^(a-1) (1+u)^(-(a+b)) du = Gamma(a)Gamma(b)/Gamma(a+b)
    const double al = 2.0, be = 3.0;
    r = integrate_to_inf([=](double u) { return std::pow(u, al - 1.0) * std::pow(1.0 + u, -(al + be)); },
                         0.0);
    CHECK(r.value == doctest::Approx(patlas::gamma(al) * patlas::gamma(be) / patlas::gamma(al + be)).epsilon(1e-10));
}

TEST_CASE("Beta identity property over random parameters, both routes")
{
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> U(0.1, 4.0);
    for (int i = 0; i < 30; ++i) {
        const double al = U(rng), be = U(rng);
        const double expect = patlas::gamma(al) * patlas::gamma(be) / patlas::gamma(al + be);
        // endpoint-aware form: near u=0 use xc, near u=1 use -xc for 1-u
        auto fin = integrate(EndpointFn([=](double u, double xc) {
                                 const double um = xc > 0.0 ? xc : u;
                                 const double omu = xc > 0.0 ? 1.0 - u : -xc;
                                 return std::pow(um, al - 1.0) * std::pow(omu, be - 1.0);
                             }),
                             0.0, 1.0);
        auto inf = integrate_to_inf(EndpointFn([=](double, double xc) {
                                        return std::exp((al - 1.0) * std::log(xc) -
                                                        (al + be) * std::log1p(xc));
                                    }),
                                    0.0);
        CHECK(fin.value == doctest::Approx(expect).epsilon(1e-9));
        CHECK(inf.value == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("splitting is additive")
{
    auto f = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
    auto whole = integrate(f, 0.0, 2.0);
    auto left = integrate(f, 0.0, 0.7);
    auto right = integrate(f, 0.7, 2.0);
    CHECK(std::fabs(whole.value - (left.value + right.value)) <=
          whole.err_estimate + left.err_estimate + right.err_estimate + 1e-13);

    auto split = integrate_split(f, 0.0, 2.0, {0.7, 1.3});
    CHECK(split.value == doctest::Approx(whole.value).epsilon(1e-11));
}

TEST_CASE("err_estimate non-increasing in max_levels on smooth integrands")
{
    auto f = [](double x) { return std::cos(x) * std::exp(x); };
    double prev = std::numeric_limits<double>::infinity();
    for (int lev = 4; lev <= 16; ++lev) {
        QuadSpec spec;
        spec.max_levels = lev;
        auto r = integrate(f, 0.0, 1.0, spec);
        CHECK(r.err_estimate <= prev + 1e-300);
        prev = r.err_estimate;
    }
}

TEST_CASE("converged flag honours the tolerance invariant")
{
    QuadSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-12;
    auto r = integrate(EndpointFn([](double x, double xc) {
                           const double omx = xc < 0.0 ? -xc : 1.0 - x;
                           return 1.0 / std::sqrt(omx * (1.0 + x));
                       }),
                       0.0, 1.0, spec);
    if (r.converged)
        CHECK(r.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(r.value)));
    CHECK(r.value == doctest::Approx(1.5707963267948966).epsilon(1e-10));
}

TEST_CASE("NaN from integrand raises")
{
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), NumericError);
}

TEST_CASE("limit ladder: plain limits")
{
    CHECK(limit_at_inf([](double x) { return 3.0 + 1.0 / x; }) == doctest::Approx(3.0).epsilon(1e-8));
    // slower x^(-1/2) rate still reaches 1e-4 on the default ladder
    CHECK(limit_at_inf([](double x) { return 2.0 - 5.0 / std::sqrt(x); }) ==
          doctest::Approx(2.0).epsilon(1e-4));
    CHECK_THROWS_AS(limit_at_inf([](double x) { return std::sqrt(x); }), NumericError);
}

TEST_CASE("limit ladder: log-scaled mode")
{
    // f = (4 log x + 7) / x has log-scaled limit 4 at power -1
    auto f = [](double x) { return (4.0 * std::log(x) + 7.0) / x; };
    CHECK(limit_at_inf_log_scaled(f, -1.0) == doctest::Approx(4.0).epsilon(1e-9));
}

#include "periodatlas/specfun.hpp"

#include <cmath>
#include <limits>

namespace patlas {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;

// Lanczos coefficients, g = 7, n = 9 (Godfrey's table).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// Gamma(x) for x >= 0.5 by the Lanczos sum.
double gamma_lanczos(double x)
{
    const double z = x - 1.0;
    double s = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        s += kLanczos[i] / (z + i);
    const double base = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(base, z + 0.5) * std::exp(-base) * s;
}

} // namespace

double sinpi(double x)
{
    const double r = x - std::round(x);
    const double s = std::sin(kPi * r);
    // round(x) odd flips the sign
    const long long n = static_cast<long long>(std::llround(x - r));
    return (n % 2 == 0) ? s : -s;
}

double gamma(double x)
{
    if (is_nonpositive_integer(x))
        throw DomainError("gamma: pole at nonpositive integer");
    if (x >= 0.5)
        return gamma_lanczos(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kPi / (sinpi(x) * gamma_lanczos(1.0 - x));
}

double reciprocal_gamma(double x)
{
    if (is_nonpositive_integer(x))
        return 0.0;
    if (x >= 0.5)
        return 1.0 / gamma_lanczos(x);
    return sinpi(x) * gamma_lanczos(1.0 - x) / kPi;
}

namespace {

constexpr int kSeriesMax = 10000;
constexpr double kSeriesEps = 1e-16;

// 2F1 series on z in [0,1).
double hyp2f1_series(double a, double b, double c, double z)
{
    double term = 1.0;
    double sum = 1.0;
    double peak = 1.0;
    for (int k = 0; k < kSeriesMax; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        peak = std::max(peak, std::fabs(sum));
        if (std::fabs(term) < kSeriesEps * peak)
            return sum;
        if (term == 0.0)
            return sum; // terminating (polynomial) case
    }
    throw NumericError("hyp2f1: series did not converge");
}

// 2F1(a,b;c;z)/Gamma(c) series; coefficients carry 1/Gamma(c+k) so the sum is
// entire in c.  While c+k may still cross nonpositive integers the term is
// kept factored as p * 1/Gamma(c+k); once c+k > 2 the combined recurrence
// term *= (a+k)(b+k) z / ((k+1)(c+k)) avoids overflow of the raw product.
double hyp2f1_reg_series(double a, double b, double c, double z)
{
    double sum = 0.0;
    double peak = 0.0;
    double p = 1.0;       // (a)_k (b)_k z^k / k!, tracked only in the factored phase
    double term = 0.0;
    bool combined = false;
    for (int k = 0; k < kSeriesMax; ++k) {
        const double ck = c + k;
        if (!combined) {
            term = p * reciprocal_gamma(ck);
            if (ck > 2.0) combined = true;
        } else {
            // previous iteration left `term` = p_{k-1} / Gamma(c+k-1)
            term *= (a + k - 1.0) * (b + k - 1.0) * z / (k * (ck - 1.0));
        }
        sum += term;
        peak = std::max(peak, std::fabs(sum));
        if (k > 4 && std::fabs(term) < kSeriesEps * std::max(peak, 1e-300))
            return sum;
        if (!combined) {
            p *= (a + k) * (b + k) / (k + 1.0) * z;
            if (p == 0.0)
                return sum;
            if (std::fabs(p) > 1e280)
                throw NumericError("hyp2f1_regularized: intermediate overflow (c too negative)");
        }
        if (term == 0.0 && combined)
            return sum;
    }
    throw NumericError("hyp2f1_regularized: series did not converge");
}

} // namespace

double hyp2f1(double a, double b, double c, double z)
{
    if (z >= 1.0)
        throw DomainError("hyp2f1: requires z < 1");
    if (is_nonpositive_integer(c))
        throw DomainError("hyp2f1: c is a nonpositive integer (pole)");
    if (z == 0.0)
        return 1.0;
    if (z < 0.0) {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
        return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, z / (z - 1.0));
    }
    return hyp2f1_series(a, b, c, z);
}

double hyp2f1_regularized(double a, double b, double c, double z)
{
    if (z >= 1.0)
        throw DomainError("hyp2f1_regularized: requires z < 1");
    if (z < 0.0)
        return std::pow(1.0 - z, -a) * hyp2f1_reg_series(a, c - b, c, z / (z - 1.0));
    return hyp2f1_reg_series(a, b, c, z);
}

CompensatorValue compensator(double x, double alpha)
{
    if (!(x > 0.0))
        throw DomainError("compensator: requires x > 0");
    const double d = alpha + 1.0;
    CompensatorValue out;
    if (std::fabs(d) <= kCompensatorSwitchTol) {
        out.value = std::log(x);
        out.is_log_branch = true;
    } else {
        out.value = std::expm1(d * std::log(x)) / d;
        out.is_log_branch = false;
    }
    return out;
}

double script_g(double alpha)
{
    const double half = 0.5 * (1.0 + alpha);
    if (is_nonpositive_integer(half))
        throw DomainError("script_g: pole at alpha in {-1,-3,-5,...}");
    return 0.5 * kSqrtPi * gamma(half) * reciprocal_gamma(1.0 + 0.5 * alpha);
}

double omega_big(double x, double alpha)
{
    // (alpha+1) Gamma((1+alpha)/2) = 2 Gamma((3+alpha)/2), so
    // Omega = sqrt(pi) Gamma((3+alpha)/2) / Gamma(1+alpha/2) * omega(x, alpha).
    const double num = 0.5 * (3.0 + alpha);
    if (is_nonpositive_integer(num))
        throw DomainError("omega_big: pole at alpha in {-3,-5,...}");
    return kSqrtPi * gamma(num) * reciprocal_gamma(1.0 + 0.5 * alpha) * compensator(x, alpha).value;
}

} // namespace patlas

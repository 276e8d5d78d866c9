#ifndef PERIODATLAS_SPECFUN_HPP
#define PERIODATLAS_SPECFUN_HPP

#include "periodatlas/quad.hpp"

namespace patlas {

/// sin(pi*x) computed through the reduced argument, exact at integers.
double sinpi(double x);

/// Gamma function by the Lanczos rational approximation (g ~ 7, 9 coefficients),
/// reflection formula for x < 1/2.  Relative error below 1e-12 for |x| <= 50.
/// Throws DomainError at the poles (nonpositive integers).
double gamma(double x);

/// Entire reciprocal 1/Gamma(x); exactly zero at the nonpositive integers.
double reciprocal_gamma(double x);

/// Gauss hypergeometric 2F1(a,b;c;z) for real z < 1. Series for z in [0,1),
/// Pfaff transformation for z < 0.  Throws DomainError for z >= 1 or when c
/// is a nonpositive integer, NumericError if the series fails to converge.
double hyp2f1(double a, double b, double c, double z);

/// Regularized variant 2F1(a,b;c;z)/Gamma(c); entire in c, valid for z < 1.
double hyp2f1_regularized(double a, double b, double c, double z);

struct CompensatorValue {
    double value = 0.0;
    bool is_log_branch = false; // true iff |alpha+1| is within the switch tolerance
};

/// Switch tolerance on |alpha+1| between the power and log branches of omega.
inline constexpr double kCompensatorSwitchTol = 1e-8;

/// Roussarie-Ecalle compensator omega(x, alpha) for x > 0:
/// (x^(alpha+1)-1)/(alpha+1), interpolating to log x at alpha = -1.
CompensatorValue compensator(double x, double alpha);

/// G(alpha) = (sqrt(pi)/2) Gamma((1+alpha)/2) / Gamma(1+alpha/2).
/// Poles at alpha in {-1,-3,-5,...}; zero at alpha in {-2,-4,...}.
double script_g(double alpha);

/// Omega(x, alpha) = (alpha+1) G(alpha) omega(x, alpha), evaluated through
/// sqrt(pi) Gamma((3+alpha)/2)/Gamma(1+alpha/2) * omega so that alpha = -1 is
/// regular (there Omega(x,-1) = log x).
double omega_big(double x, double alpha);

} // namespace patlas

#endif

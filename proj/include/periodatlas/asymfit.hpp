#ifndef PERIODATLAS_ASYMFIT_HPP
#define PERIODATLAS_ASYMFIT_HPP

#include "periodatlas/ops.hpp"

#include <utility>

namespace patlas {

/// A fit could not be established (residual too large, erratic signs, ...).
class FitError : public NumericError {
public:
    explicit FitError(const std::string& what) : NumericError(what) {}
};

/// Fitted asymptotic development.  Terms are (coefficient, exponent) pairs,
/// leading term first.  At +inf a term means c * x^e; at z = 1 it means
/// c * (1-z^2)^(-e) (so larger e = more singular), and the stored exponents
/// decrease along the list in both conventions.
struct AsymFit {
    std::vector<std::pair<double, double>> terms;
    bool log_flag = false;   // leading term carries a log x factor
    double residual = 0.0;   // max relative deviation of the model on the window
    std::pair<double, double> window{0.0, 0.0};
};

/// Largest acceptable residual for a fit.
inline constexpr double kFitAcceptResidual = 0.02;

/// Fit f(x) ~ sum c_i x^(e_i) on a geometric window by least squares on
/// (log x, log |f|), peeling one term at a time.  Stops early when the residue
/// falls below the relative noise floor 1e-9 or two consecutive exponents
/// collide (gap < 0.1).  Throws FitError if the final residual exceeds 2% or
/// the leading term's sign is erratic on the window.
AsymFit fit_power_at_inf(const Func1& f, std::pair<double, double> window, int k_terms,
                         int nodes = 64);

struct LogFit {
    double coefficient = 0.0;
    double residual = 0.0;
};

/// Least squares of f(x) x^(-power) against log x; returns the slope.  The
/// residual is measured relative to the span of the fitted log term, so a
/// pure power input (slope ~ 0) is rejected.
LogFit fit_log_at_inf(const Func1& f, double power, std::pair<double, double> window,
                      int nodes = 64);

/// Development of f at z = 1 in powers of (1-z^2): delegates to
/// fit_power_at_inf of B[f] and translates exponents via e_inf = 2 e_one - 2.
AsymFit fit_at_one(const Func1& f, int k_terms);

/// Default geometric fit window [1e2, 1e4].
inline constexpr std::pair<double, double> kDefaultFitWindow{1e2, 1e4};

} // namespace patlas

#endif

#ifndef PERIODATLAS_QUAD_HPP
#define PERIODATLAS_QUAD_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace patlas {

/// Thrown when a precondition on the inputs is violated.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an iterative numerical procedure fails to converge.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

using RealFn = std::function<double(double)>;

/// Integrand form that also receives the signed distance to the nearer
/// endpoint: xc = x - a on the left half, xc = x - b (negative) on the right.
/// Needed to evaluate endpoint-singular factors such as (1-x)^p accurately
/// when x is double-exponentially close to the endpoint.
using EndpointFn = std::function<double(double x, double xc)>;

struct QuadSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_levels = 12;        // in [4, 16]
    bool left_singular = false;   // informational; the node family handles both
    bool right_singular = false;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    int levels_used = 0;
    bool converged = false;
};

/// Adaptive double-exponential (tanh-sinh) quadrature on a finite interval.
/// Endpoints may carry integrable algebraic or logarithmic singularities;
/// the integrand is evaluated only in the open interval.  NaN from f is an
/// evaluation error.
QuadResult integrate(const EndpointFn& f, double a, double b, const QuadSpec& spec = {});
QuadResult integrate(const RealFn& f, double a, double b, const QuadSpec& spec = {});

/// Same as integrate() but splits at interior breakpoints (kinks of f).
QuadResult integrate_split(const RealFn& f, double a, double b,
                           const std::vector<double>& breaks, const QuadSpec& spec = {});

/// Exp-sinh quadrature on [a, +inf).  f must decay at least like x^(-1-delta);
/// abscissas are capped near 1e150, so the tail beyond is assumed negligible.
QuadResult integrate_to_inf(const EndpointFn& f, double a, const QuadSpec& spec = {});
QuadResult integrate_to_inf(const RealFn& f, double a, const QuadSpec& spec = {});

struct LimitLadder {
    double x0 = 32.0;   // first rung
    double ratio = 2.0; // geometric step
    int rungs = 8;
    double tol = 1e-4;  // requested accuracy of the extrapolated limit
};

/// Numerical limit of f(x) as x -> +inf.  Evaluates f on a geometric ladder
/// and accelerates the sequence with iterated Aitken extrapolation.  Throws
/// NumericError on a diverging ladder or when successive extrapolants
/// disagree by more than 10x tol.
double limit_at_inf(const RealFn& f, const LimitLadder& ladder = {});

/// Limit of f(x) / (x^power * log x) as x -> +inf, assuming f has a leading
/// log-corrected power behaviour.  Computed as the slope of the least-squares
/// line of f(x)*x^(-power) against log x over the ladder, which absorbs the
/// additive constant of the next order.
double limit_at_inf_log_scaled(const RealFn& f, double power, const LimitLadder& ladder = {});

} // namespace patlas

#endif

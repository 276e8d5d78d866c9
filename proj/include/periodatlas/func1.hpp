#ifndef PERIODATLAS_FUNC1_HPP
#define PERIODATLAS_FUNC1_HPP

#include "periodatlas/quad.hpp"

#include <memory>
#include <vector>

namespace patlas {

/// A real function of one variable on [0, +inf) or [0, 1), immutable after
/// construction.  Carries an optional analytic first derivative and a list of
/// known non-smooth points so that integrators can split there.
///
/// Functions on [0,1) whose behaviour near z = 1 matters (momenta N_n, the
/// transfer operator) may supply an endpoint-aware evaluator receiving 1-z
/// exactly; integrators propagate that distance from their own node
/// parametrization, far below what double subtraction from z can resolve.
class Func1 {
public:
    enum class Domain { half_line, unit_interval };

    /// (z, one_minus_z) -> value; one_minus_z is the exact distance to 1.
    using EvalOm = std::function<double(double, double)>;

    Func1() = default;
    Func1(Domain domain, RealFn eval, RealFn deriv = {}, std::vector<double> breakpoints = {});
    /// unit_interval constructor with endpoint-aware evaluator and derivative.
    Func1(EvalOm eval_om, EvalOm deriv_om = {}, std::vector<double> breakpoints = {});

    bool valid() const { return impl_ != nullptr; }
    double operator()(double x) const;
    /// Evaluate with the distance to 1 supplied exactly (unit_interval only;
    /// falls back to the plain evaluator otherwise).
    double eval_om(double z, double one_minus_z) const;
    Domain domain() const;
    bool has_deriv() const;
    /// Analytic derivative; throws if none was supplied.
    double deriv(double x) const;
    /// Endpoint-aware analytic derivative (unit_interval).
    double deriv_om(double z, double one_minus_z) const;
    const std::vector<double>& breakpoints() const;

    /// Upper end of the domain: +inf or 1.
    double domain_sup() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// First derivative: analytic when available, otherwise 4th-order central
/// differences with step h = max(1e-5 |x|, 1e-7) and one Richardson level.
/// Stencil points are kept inside the domain.
double derivative_at(const Func1& f, double x);

/// Cached antiderivative A(x) = int_0^x f, filled lazily on a geometric node
/// ladder (plus f's breakpoints); safe for concurrent use.
///
/// When f is integrable up to +inf, values at large x switch to the form
/// A(x) = A(inf) - int_x^inf f, whose absolute error scales with the tail
/// rather than with the head.  Without this, x * A(x) combinations (bracket
/// iterates) lose all accuracy at large x.
class CumulativeIntegral {
public:
    explicit CumulativeIntegral(Func1 f, double inner_tol = 1e-11);
    double operator()(double x) const;
    const Func1& base() const { return f_; }

private:
    struct Cache;
    Func1 f_;
    double tol_;
    double tail_threshold_;
    std::shared_ptr<Cache> cache_;
    double node_value(double node) const;
    double segment(double lo, double hi) const;
    bool tail_mode(double& total) const;
};

} // namespace patlas

#endif

#ifndef PERIODATLAS_OPS_HPP
#define PERIODATLAS_OPS_HPP

#include "periodatlas/func1.hpp"

#include <limits>

namespace patlas {

/// Exponent tuple (nu_1, ..., nu_n) for the Wronskian operators; entries must
/// be pairwise distinct within 1e-9 and n <= 3.
class NuVector {
public:
    NuVector() = default;
    NuVector(std::initializer_list<double> values);
    explicit NuVector(std::vector<double> values);
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// F[f](x) = int_0^(pi/2) f(x sin t) dt.  Requires 0 <= x < sup(domain of f).
double op_f(const Func1& f, double x, double tol = 1e-11);

/// F[f] packaged as a Func1 on the same domain.
Func1 op_f_fn(const Func1& f, double tol = 1e-11);

/// Bracket iterate [f]_m: [f]_0 = f, [f]_m(x) = x^2 [f]_(m-1)(x) + x int_0^x [f]_(m-1).
/// Cumulative integrals are cached on a geometric node ladder.
Func1 bracket(const Func1& f, int m);

/// n-th momentum M_n[f] = int_0^inf x^(2n-2) f(x) dx  (n >= 1, f on half_line,
/// decay asserted by the caller).  A finite x_cut truncates the upper limit;
/// use it for integrands whose far tail is numerically noise-dominated (the
/// truncation error is then the caller's budget).
double moment_m(const Func1& f, int n, double tol = 1e-11,
                double x_cut = std::numeric_limits<double>::infinity());

/// M[[f]_1] by the integration-by-parts limit
///   lim_R ( (1/2) int_0^R x^2 f + (R^2/2) int_0^R f ),
/// which keeps the divergence cancellation explicit instead of integrating
/// the bracket iterate itself.
double moment_bracket1(const Func1& f, const LimitLadder& ladder = {});

/// Transfer operator B[f](x) = f(phi(x)) / (1+x^2) with phi(x) = x/sqrt(1+x^2);
/// maps unit_interval functions to half_line ones.  Propagates the analytic
/// derivative when f has one.
Func1 op_b(const Func1& f);

/// Wronskian operator L_nu by the recurrence
///   L_(nu_1..nu_n)[f] = c_n ( x L'_(nu_1..nu_(n-1))[f] - nu_n L_(nu_1..nu_(n-1))[f] ),
/// c_1 = 1, c_n = prod_(i<n) (nu_n - nu_i).  Derivatives of intermediate
/// levels fall back to Richardson-extrapolated central differences.
Func1 op_l(const NuVector& nu, const Func1& f);

/// D_nu on [0,1), computed through the conjugation B o D_nu = L_nu o B:
/// D_nu[f](z) = (1+x^2) L_nu[B[f]](x) at x = z/sqrt(1-z^2).  Empty nu is the
/// identity.
Func1 op_d(const NuVector& nu, const Func1& f);

/// n-th momentum N_n[f] = int_0^1 f(z) (1-z^2)^(-1/2) (z^2/(1-z^2))^(n-1) dz.
double moment_n(const Func1& f, int n, double tol = 1e-11);

/// Finite-energy bracket [f]^m(z) = (1/(1-z^2)) [B[f]]_m(z/sqrt(1-z^2)).
Func1 bracket_finite(const Func1& f, int m);

/// M[[L_nu[f]]_1] by the divergence-cancelling limit
///   c_n lim_R ( R^3 L_(n-1)[f](R) - (nu_n+1)/2 R^2 int_0^R L_(n-1)[f]
///               - (nu_n+3)/2 int_0^R x^2 L_(n-1)[f] ),
/// obtained by integrating the recurrence for L_nu by parts.
double moment_l1(const NuVector& nu, const Func1& f, const LimitLadder& ladder = {});

} // namespace patlas

#endif

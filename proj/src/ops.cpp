#include "periodatlas/ops.hpp"

#include <algorithm>
#include <cmath>

namespace patlas {

namespace {
constexpr double kPiHalf = 1.5707963267948966;
constexpr double kPiQuarter = 0.78539816339744831;

// 1 - z for z = x/sqrt(1+x^2), computed without cancellation.
double one_minus_phi(double x)
{
    const double s = std::sqrt(1.0 + x * x);
    return 1.0 / (s * (s + x));
}
} // namespace

NuVector::NuVector(std::initializer_list<double> values) : NuVector(std::vector<double>(values)) {}

NuVector::NuVector(std::vector<double> values) : values_(std::move(values))
{
    if (values_.size() > 3)
        throw DomainError("NuVector: at most 3 exponents are supported");
    for (std::size_t i = 0; i < values_.size(); ++i)
        for (std::size_t j = i + 1; j < values_.size(); ++j)
            if (std::fabs(values_[i] - values_[j]) <= 1e-9)
                throw DomainError("NuVector: exponents must be pairwise distinct");
}

double op_f(const Func1& f, double x, double tol)
{
    if (x < 0.0)
        throw DomainError("op_f: requires x >= 0");
    if (x >= f.domain_sup())
        throw DomainError("op_f: x outside the domain of f");
    if (x == 0.0)
        return kPiHalf * f(0.0);

    QuadSpec spec;
    spec.abs_tol = tol;
    spec.rel_tol = tol;
    const bool unit = f.domain() == Func1::Domain::unit_interval;
    const double omx = unit ? 1.0 - x : 0.0;
    auto integrand = [&](double th) {
        const double arg = x * std::sin(th);
        if (!unit)
            return f(arg);
        // 1 - x sin = (1-x) + x (1-sin), with 1-sin t = 2 sin^2(pi/4 - t/2)
        const double halfdiff = std::sin(kPiQuarter - 0.5 * th);
        return f.eval_om(arg, omx + 2.0 * x * halfdiff * halfdiff);
    };
    std::vector<double> breaks;
    for (double b : f.breakpoints())
        if (b > 0.0 && b < x) breaks.push_back(std::asin(b / x));
    auto r = integrate_split(integrand, 0.0, kPiHalf, breaks, spec);
    if (!r.converged)
        throw NumericError("op_f: quadrature did not converge");
    return r.value;
}

Func1 op_f_fn(const Func1& f, double tol)
{
    return Func1(f.domain(), [f, tol](double x) { return op_f(f, x, tol); });
}

Func1 bracket(const Func1& f, int m)
{
    if (m < 0)
        throw DomainError("bracket: m must be nonnegative");
    if (f.domain() != Func1::Domain::half_line)
        throw DomainError("bracket: f must live on the half line");
    Func1 cur = f;
    for (int level = 0; level < m; ++level) {
        CumulativeIntegral cum(cur);
        Func1 prev = cur;
        RealFn deriv;
        if (prev.has_deriv()) {
            // d/dx (x^2 f + x A) = x^2 f' + 3 x f + A  with A' = f
            deriv = [prev, cum](double x) {
                return x * x * prev.deriv(x) + 3.0 * x * prev(x) + cum(x);
            };
        }
        cur = Func1(Func1::Domain::half_line,
                    [prev, cum](double x) { return x * x * prev(x) + x * cum(x); }, deriv,
                    prev.breakpoints());
    }
    return cur;
}

double moment_m(const Func1& f, int n, double tol, double x_cut)
{
    if (n < 1)
        throw DomainError("moment_m: n >= 1");
    if (f.domain() != Func1::Domain::half_line)
        throw DomainError("moment_m: f must live on the half line");
    QuadSpec spec;
    spec.abs_tol = tol;
    spec.rel_tol = tol;
    const double p = 2.0 * n - 2.0;
    double split_at = 1.0;
    for (double b : f.breakpoints()) split_at = std::max(split_at, b);
    auto head = integrate_split([&](double x) { return std::pow(x, p) * f(x); }, 0.0, split_at,
                                f.breakpoints(), spec);
    QuadResult tail;
    if (std::isfinite(x_cut)) {
        // truncated route for integrands whose far tail is numerically
        // noise-dominated (nested bracket iterates); the caller owns the
        // truncation-error budget
        if (x_cut > split_at)
            tail = integrate([&](double x) { return std::pow(x, p) * f(x); }, split_at, x_cut, spec);
        else
            tail.converged = true;
    } else {
        tail = integrate_to_inf([&](double x) { return std::pow(x, p) * f(x); }, split_at, spec);
    }
    if (!head.converged || !tail.converged)
        throw NumericError("moment_m: quadrature did not converge");
    return head.value + tail.value;
}

double moment_bracket1(const Func1& f, const LimitLadder& ladder)
{
    if (f.domain() != Func1::Domain::half_line)
        throw DomainError("moment_bracket1: f must live on the half line");
    // M[[f]_1] = lim_R ( (1/2) int_0^R x^2 f + (R^2/2) int_0^R f ), the
    // integration-by-parts form that cancels the divergences explicitly
    CumulativeIntegral cum0(f);
    CumulativeIntegral cum2(Func1(Func1::Domain::half_line,
                                  [f](double x) { return x * x * f(x); }, {}, f.breakpoints()));
    auto expr = [&](double R) { return 0.5 * cum2(R) + 0.5 * R * R * cum0(R); };
    return limit_at_inf(expr, ladder);
}

Func1 op_b(const Func1& f)
{
    if (f.domain() != Func1::Domain::unit_interval)
        throw DomainError("op_b: f must live on [0,1)");
    RealFn deriv;
    if (f.has_deriv()) {
        // (B f)'(x) = f'(phi) (1+x^2)^(-5/2) - 2x f(phi) / (1+x^2)^2
        deriv = [f](double x) {
            const double s = 1.0 + x * x;
            const double z = x / std::sqrt(s);
            const double omz = one_minus_phi(x);
            return f.deriv_om(z, omz) * std::pow(s, -2.5) - 2.0 * x * f.eval_om(z, omz) / (s * s);
        };
    }
    std::vector<double> breaks;
    for (double b : f.breakpoints())
        if (b > 0.0 && b < 1.0) breaks.push_back(b / std::sqrt((1.0 - b) * (1.0 + b)));
    return Func1(Func1::Domain::half_line,
                 [f](double x) {
                     const double s = 1.0 + x * x;
                     return f.eval_om(x / std::sqrt(s), one_minus_phi(x)) / s;
                 },
                 deriv, breaks);
}

Func1 op_l(const NuVector& nu, const Func1& f)
{
    if (f.domain() != Func1::Domain::half_line)
        throw DomainError("op_l: f must live on the half line");
    Func1 cur = f;
    for (std::size_t n = 0; n < nu.size(); ++n) {
        double cn = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            cn *= nu[n] - nu[i];
        Func1 prev = cur;
        const double nun = nu[n];
        cur = Func1(Func1::Domain::half_line,
                    [prev, nun, cn](double x) {
                        return cn * (x * derivative_at(prev, x) - nun * prev(x));
                    },
                    {}, prev.breakpoints());
    }
    return cur;
}

Func1 op_d(const NuVector& nu, const Func1& f)
{
    if (f.domain() != Func1::Domain::unit_interval)
        throw DomainError("op_d: f must live on [0,1)");
    if (nu.size() == 0)
        return f;
    Func1 lofb = op_l(nu, op_b(f));
    // note 1 + x^2 = 1/(1-z^2) at x = z/sqrt(1-z^2)
    return Func1(Func1::EvalOm([lofb](double z, double omz) {
                     const double om = omz * (1.0 + z);
                     return lofb(z / std::sqrt(om)) / om;
                 }),
                 {}, f.breakpoints());
}

double moment_n(const Func1& f, int n, double tol)
{
    if (n < 1)
        throw DomainError("moment_n: n >= 1");
    if (f.domain() != Func1::Domain::unit_interval)
        throw DomainError("moment_n: f must live on [0,1)");
    QuadSpec spec;
    spec.abs_tol = tol;
    spec.rel_tol = tol;
    spec.right_singular = true;
    auto piece = [&](double lo, double hi) {
        auto integrand = [&](double z, double xc) {
            const double omz = (hi == 1.0 && xc < 0.0) ? -xc : 1.0 - z;
            const double omz2 = omz * (1.0 + z);
            // interleave the divisions with f so neither factor over/underflows
            // before the (integrable) product is formed
            double term = f.eval_om(z, omz) / std::sqrt(omz2);
            for (int i = 1; i < n; ++i)
                term = term * (z * z) / omz2;
            return term;
        };
        auto r = integrate(EndpointFn(integrand), lo, hi, spec);
        if (!r.converged)
            throw NumericError("moment_n: quadrature did not converge");
        return r.value;
    };
    std::vector<double> pieces{0.0};
    for (double b : f.breakpoints())
        if (b > 0.0 && b < 1.0) pieces.push_back(b);
    pieces.push_back(1.0);
    std::sort(pieces.begin(), pieces.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        total += piece(pieces[i], pieces[i + 1]);
    return total;
}

Func1 bracket_finite(const Func1& f, int m)
{
    if (f.domain() != Func1::Domain::unit_interval)
        throw DomainError("bracket_finite: f must live on [0,1)");
    Func1 br = bracket(op_b(f), m);
    return Func1(Func1::EvalOm([br](double z, double omz) {
                     const double om = omz * (1.0 + z);
                     return br(z / std::sqrt(om)) / om;
                 }),
                 {}, f.breakpoints());
}

double moment_l1(const NuVector& nu, const Func1& f, const LimitLadder& ladder)
{
    if (nu.size() == 0)
        throw DomainError("moment_l1: needs at least one exponent");
    std::vector<double> head(nu.values().begin(), nu.values().end() - 1);
    const double nun = nu[nu.size() - 1];
    double cn = 1.0;
    for (double v : head)
        cn *= nun - v;

    Func1 base = head.empty() ? f : op_l(NuVector(head), f);
    CumulativeIntegral cum0(base);
    CumulativeIntegral cum2(Func1(Func1::Domain::half_line,
                                  [base](double x) { return x * x * base(x); }, {},
                                  base.breakpoints()));
    auto expr = [&](double R) {
        return R * R * R * base(R) - 0.5 * (nun + 1.0) * R * R * cum0(R) -
               0.5 * (nun + 3.0) * cum2(R);
    };
    return cn * limit_at_inf(expr, ladder);
}

} // namespace patlas

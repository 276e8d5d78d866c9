#include "periodatlas/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace patlas {

namespace {

constexpr double kPiHalf = 1.5707963267948966;

double eval_checked(const EndpointFn& f, double x, double xc)
{
    const double v = f(x, xc);
    if (std::isnan(v))
        throw NumericError("quadrature: integrand returned NaN");
    return v;
}

void validate(const QuadSpec& spec)
{
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
        throw DomainError("quadrature: tolerances must be positive");
    if (spec.max_levels < 4 || spec.max_levels > 16)
        throw DomainError("quadrature: max_levels must lie in [4, 16]");
}

} // namespace

QuadResult integrate(const EndpointFn& f, double a, double b, const QuadSpec& spec)
{
    validate(spec);
    if (!(a < b))
        throw DomainError("integrate: requires a < b");

    const double len = b - a;
    const double half = 0.5 * len;
    const double t_cap = 6.11;
    const double min_offset = 1e-280; // fraction of (b-a); beyond this the node is dropped

    // Adds the pair of nodes at +-t.  Returns false once offsets underflow.
    auto add_pair = [&](double t, double& acc) -> bool {
        const double u = kPiHalf * std::sinh(t);
        const double frac = 1.0 / (1.0 + std::exp(2.0 * u)); // (1 - tanh u)/2
        if (frac < min_offset) return false;
        const double ch = std::cosh(u);
        const double w = kPiHalf * std::cosh(t) / (ch * ch);
        const double off = frac * len;
        acc += w * (eval_checked(f, a + off, off) + eval_checked(f, b - off, -off));
        return true;
    };

    double sum = kPiHalf * eval_checked(f, a + half, half); // t = 0 node, weight pi/2
    double h = 1.0;
    for (int k = 1; k * h <= t_cap; ++k)
        if (!add_pair(k * h, sum)) break;

    QuadResult res;
    double prev_value = half * h * sum;
    double prev_diff = std::numeric_limits<double>::infinity();
    res.value = prev_value;
    res.levels_used = 1;

    for (int level = 1; level <= spec.max_levels; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1; k * h <= t_cap; k += 2)
            if (!add_pair(k * h, add)) break;
        sum += add;
        const double value = half * h * sum;
        const double diff = std::fabs(value - prev_value);
        res.value = value;
        res.levels_used = level + 1;
        res.err_estimate = diff;
        const double goal = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
        if (level >= 2 && diff <= goal) {
            res.converged = true;
            return res;
        }
        if (level >= 3 && diff <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(value) &&
            prev_diff <= 64.0 * goal) {
            // rounding plateau
            res.converged = true;
            return res;
        }
        prev_value = value;
        prev_diff = diff;
    }
    res.converged = res.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(res.value));
    return res;
}

QuadResult integrate(const RealFn& f, double a, double b, const QuadSpec& spec)
{
    return integrate(EndpointFn([&f](double x, double) { return f(x); }), a, b, spec);
}

QuadResult integrate_split(const RealFn& f, double a, double b,
                           const std::vector<double>& breaks, const QuadSpec& spec)
{
    std::vector<double> pts;
    pts.push_back(a);
    for (double c : breaks)
        if (c > a && c < b) pts.push_back(c);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    QuadResult total;
    total.converged = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i] < pts[i + 1])) continue;
        QuadResult part = integrate(f, pts[i], pts[i + 1], spec);
        total.value += part.value;
        total.err_estimate += part.err_estimate;
        total.levels_used = std::max(total.levels_used, part.levels_used);
        total.converged = total.converged && part.converged;
    }
    return total;
}

QuadResult integrate_to_inf(const EndpointFn& f, double a, const QuadSpec& spec)
{
    validate(spec);
    // x = a + exp((pi/2) sinh t); abscissas capped at about 1e150 so that
    // integrands built from products of powers cannot hit inf * 0.
    const double t_cap = 6.11;
    const double u_hi = 345.0;   // e^345 ~ 2.8e149
    const double u_lo = -644.0;  // e^-644 ~ 1e-280

    auto node = [&](double t, double& x, double& xc, double& w) -> bool {
        const double u = kPiHalf * std::sinh(t);
        if (u < u_lo || u > u_hi) return false;
        const double e = std::exp(u);
        x = a + e;
        xc = e;
        w = kPiHalf * std::cosh(t) * e;
        return true;
    };

    double x, xc, w;
    node(0.0, x, xc, w);
    double sum = w * eval_checked(f, x, xc);
    double h = 1.0;
    for (int sgn : {+1, -1})
        for (int k = 1; k * h <= t_cap; ++k) {
            if (!node(sgn * k * h, x, xc, w)) break;
            sum += w * eval_checked(f, x, xc);
        }

    QuadResult res;
    double prev_value = h * sum;
    res.value = prev_value;
    res.levels_used = 1;

    for (int level = 1; level <= spec.max_levels; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int sgn : {+1, -1})
            for (int k = 1; k * h <= t_cap; k += 2) {
                if (!node(sgn * k * h, x, xc, w)) break;
                add += w * eval_checked(f, x, xc);
            }
        sum += add;
        const double value = h * sum;
        const double diff = std::fabs(value - prev_value);
        res.value = value;
        res.levels_used = level + 1;
        res.err_estimate = diff;
        const double goal = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
        if (level >= 2 && diff <= goal) {
            res.converged = true;
            return res;
        }
        prev_value = value;
    }
    res.converged = res.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(res.value));
    return res;
}

QuadResult integrate_to_inf(const RealFn& f, double a, const QuadSpec& spec)
{
    return integrate_to_inf(EndpointFn([&f](double x, double) { return f(x); }), a, spec);
}

namespace {

// One pass of Aitken's delta-squared acceleration.
std::vector<double> aitken(const std::vector<double>& v)
{
    if (v.size() < 3) return v;
    std::vector<double> out;
    out.reserve(v.size() - 2);
    for (std::size_t k = 0; k + 2 < v.size(); ++k) {
        const double d1 = v[k + 1] - v[k];
        const double d2 = v[k + 2] - 2.0 * v[k + 1] + v[k];
        if (d2 == 0.0)
            out.push_back(v[k + 2]);
        else
            out.push_back(v[k] - d1 * d1 / d2);
    }
    return out;
}

} // namespace

double limit_at_inf(const RealFn& f, const LimitLadder& ladder)
{
    if (ladder.rungs < 4)
        throw DomainError("limit_at_inf: need at least 4 rungs");
    std::vector<double> v(ladder.rungs);
    double x = ladder.x0;
    for (int k = 0; k < ladder.rungs; ++k, x *= ladder.ratio) {
        v[k] = f(x);
        if (!std::isfinite(v[k]))
            throw NumericError("limit_at_inf: non-finite ladder value");
    }
    // divergence guard: Aitken maps a diverging geometric sequence to a
    // spurious constant, so reject persistently growing differences first
    int growing = 0;
    for (std::size_t k = 0; k + 2 < v.size(); ++k) {
        const double d0 = std::fabs(v[k + 1] - v[k]);
        const double d1 = std::fabs(v[k + 2] - v[k + 1]);
        growing = (d1 > 1.2 * d0 && d1 > ladder.tol) ? growing + 1 : 0;
    }
    if (growing >= 3)
        throw NumericError("limit_at_inf: ladder diverges");

    std::vector<double> prev = v;
    std::vector<double> cur = aitken(v);
    while (cur.size() >= 3) {
        prev = cur;
        cur = aitken(cur);
    }
    const double est = cur.back();
    const double check = prev.back();
    const double scale = std::max(1.0, std::fabs(est));
    if (std::fabs(est - check) > 10.0 * ladder.tol * scale)
        throw NumericError("limit_at_inf: ladder did not settle within tolerance");
    return est;
}

double limit_at_inf_log_scaled(const RealFn& f, double power, const LimitLadder& ladder)
{
    if (ladder.rungs < 4)
        throw DomainError("limit_at_inf_log_scaled: need at least 4 rungs");
    // least squares of f(x) x^{-power} = a log x + b
    double sl = 0, sll = 0, sy = 0, sly = 0;
    const int n = ladder.rungs;
    double x = ladder.x0;
    for (int k = 0; k < n; ++k, x *= ladder.ratio) {
        const double lx = std::log(x);
        const double y = f(x) * std::pow(x, -power);
        if (!std::isfinite(y))
            throw NumericError("limit_at_inf_log_scaled: non-finite ladder value");
        sl += lx;
        sll += lx * lx;
        sy += y;
        sly += lx * y;
    }
    const double det = n * sll - sl * sl;
    return (n * sly - sl * sy) / det;
}

} // namespace patlas

#include "periodatlas/func1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace patlas {

struct Func1::Impl {
    Domain domain;
    RealFn eval;
    EvalOm eval_om;
    RealFn deriv;
    EvalOm deriv_om;
    std::vector<double> breakpoints;
};

Func1::Func1(Domain domain, RealFn eval, RealFn deriv, std::vector<double> breakpoints)
{
    auto impl = std::make_shared<Impl>();
    impl->domain = domain;
    impl->eval = std::move(eval);
    impl->deriv = std::move(deriv);
    impl->breakpoints = std::move(breakpoints);
    std::sort(impl->breakpoints.begin(), impl->breakpoints.end());
    impl_ = std::move(impl);
}

Func1::Func1(EvalOm eval_om, EvalOm deriv_om, std::vector<double> breakpoints)
{
    auto impl = std::make_shared<Impl>();
    impl->domain = Domain::unit_interval;
    impl->eval_om = std::move(eval_om);
    impl->deriv_om = std::move(deriv_om);
    impl->breakpoints = std::move(breakpoints);
    std::sort(impl->breakpoints.begin(), impl->breakpoints.end());
    impl_ = std::move(impl);
}

double Func1::operator()(double x) const
{
    if (impl_->eval_om)
        return impl_->eval_om(x, 1.0 - x);
    return impl_->eval(x);
}

double Func1::eval_om(double z, double one_minus_z) const
{
    if (impl_->eval_om)
        return impl_->eval_om(z, one_minus_z);
    return impl_->eval(z);
}

Func1::Domain Func1::domain() const { return impl_->domain; }

bool Func1::has_deriv() const
{
    return impl_ && (static_cast<bool>(impl_->deriv) || static_cast<bool>(impl_->deriv_om));
}

double Func1::deriv(double x) const
{
    if (!has_deriv())
        throw DomainError("Func1::deriv: no analytic derivative available");
    if (impl_->deriv_om)
        return impl_->deriv_om(x, 1.0 - x);
    return impl_->deriv(x);
}

double Func1::deriv_om(double z, double one_minus_z) const
{
    if (!has_deriv())
        throw DomainError("Func1::deriv_om: no analytic derivative available");
    if (impl_->deriv_om)
        return impl_->deriv_om(z, one_minus_z);
    return impl_->deriv(z);
}

const std::vector<double>& Func1::breakpoints() const { return impl_->breakpoints; }

double Func1::domain_sup() const
{
    return impl_->domain == Domain::half_line ? std::numeric_limits<double>::infinity() : 1.0;
}

namespace {

double central_diff4(const Func1& f, double x, double h)
{
    return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h);
}

} // namespace

double derivative_at(const Func1& f, double x)
{
    if (f.has_deriv())
        return f.deriv(x);
    double h = std::max(1e-5 * std::fabs(x), 1e-7);
    const double sup = f.domain_sup();
    if (x == 0.0) {
        h = 1e-7;
        return (-25.0 * f(0.0) + 48.0 * f(h) - 36.0 * f(2 * h) + 16.0 * f(3 * h) - 3.0 * f(4 * h)) /
               (12.0 * h);
    }
    if (x - 2.0 * h < 0.0)
        h = std::max(x / 2.5, 1e-9);
    if (std::isfinite(sup) && x + 2.0 * h >= sup)
        h = (sup - x) / 2.5;
    const double d1 = central_diff4(f, x, h);
    const double d2 = central_diff4(f, x, 0.5 * h);
    const double rich = (16.0 * d2 - d1) / 15.0;
    if (!std::isfinite(rich))
        throw NumericError("derivative_at: finite-difference stencil failed");
    return rich;
}

struct CumulativeIntegral::Cache {
    std::mutex mtx;
    std::map<double, double> nodes; // node -> int_0^node f
    int tail_state = 0;             // 0 unknown, 1 usable, -1 not integrable
    double total = 0.0;             // int_0^inf f when tail_state == 1
};

CumulativeIntegral::CumulativeIntegral(Func1 f, double inner_tol)
    : f_(std::move(f)), tol_(inner_tol), cache_(std::make_shared<Cache>())
{
    double maxbp = 1.0;
    for (double b : f_.breakpoints()) maxbp = std::max(maxbp, b);
    tail_threshold_ = std::max(8.0, 4.0 * maxbp);
}

bool CumulativeIntegral::tail_mode(double& total) const
{
    {
        std::lock_guard<std::mutex> lock(cache_->mtx);
        if (cache_->tail_state != 0) {
            total = cache_->total;
            return cache_->tail_state == 1;
        }
    }
    int state = -1;
    double value = 0.0;
    try {
        QuadSpec spec;
        spec.abs_tol = tol_;
        spec.rel_tol = tol_;
        auto tail = integrate_to_inf([this](double x) { return f_(x); }, tail_threshold_, spec);
        if (tail.converged) {
            value = segment(0.0, tail_threshold_) + tail.value;
            state = 1;
        }
    } catch (const NumericError&) {
        state = -1;
    }
    std::lock_guard<std::mutex> lock(cache_->mtx);
    if (cache_->tail_state == 0) {
        cache_->tail_state = state;
        cache_->total = value;
    }
    total = cache_->total;
    return cache_->tail_state == 1;
}

double CumulativeIntegral::segment(double lo, double hi) const
{
    if (!(lo < hi)) return 0.0;
    QuadSpec spec;
    spec.abs_tol = tol_;
    spec.rel_tol = tol_;
    auto r = integrate_split([this](double x) { return f_(x); }, lo, hi, f_.breakpoints(), spec);
    return r.value;
}

double CumulativeIntegral::node_value(double node) const
{
    {
        std::lock_guard<std::mutex> lock(cache_->mtx);
        auto it = cache_->nodes.find(node);
        if (it != cache_->nodes.end()) return it->second;
    }
    double below = 0.0, below_val = 0.0;
    {
        std::lock_guard<std::mutex> lock(cache_->mtx);
        auto it = cache_->nodes.lower_bound(node);
        if (it != cache_->nodes.begin()) {
            --it;
            below = it->first;
            below_val = it->second;
        }
    }
    // computed outside the lock; a concurrent duplicate just recomputes the
    // same pure value
    const double val = below_val + segment(below, node);
    std::lock_guard<std::mutex> lock(cache_->mtx);
    cache_->nodes.emplace(node, val);
    return val;
}

double CumulativeIntegral::operator()(double x) const
{
    if (x <= 0.0) return 0.0;
    if (x >= tail_threshold_) {
        double total = 0.0;
        if (tail_mode(total)) {
            QuadSpec spec;
            spec.abs_tol = tol_;
            spec.rel_tol = tol_;
            auto tail = integrate_to_inf([this](double t) { return f_(t); }, x, spec);
            if (tail.converged)
                return total - tail.value;
        }
    }
    // largest ladder node <= x: breakpoints plus powers of 2 from 1/4 upward
    double node = 0.0;
    if (x >= 0.25) {
        node = 0.25;
        while (node * 2.0 <= x) node *= 2.0;
    }
    for (double b : f_.breakpoints())
        if (b <= x && b > node) node = b;
    const double base = node > 0.0 ? node_value(node) : 0.0;
    return base + segment(node, x);
}

} // namespace patlas

#include "periodatlas/asymfit.hpp"

#include <algorithm>
#include <cmath>

namespace patlas {

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys)
{
    const std::size_t n = xs.size();
    double sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sxx += xs[i] * xs[i];
        sy += ys[i];
        sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    LineFit lf;
    lf.slope = (n * sxy - sx * sy) / det;
    lf.intercept = (sy - lf.slope * sx) / n;
    return lf;
}

double rms_dev(const std::vector<double>& xs, const std::vector<double>& ys, double a, double b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = ys[i] - (a * xs[i] + b);
        s += d * d;
    }
    return std::sqrt(s / xs.size());
}

} // namespace

AsymFit fit_power_at_inf(const Func1& f, std::pair<double, double> window, int k_terms, int nodes)
{
    if (!(window.first > 0.0) || !(window.second > window.first))
        throw DomainError("fit_power_at_inf: invalid window");
    if (window.second / window.first < 100.0)
        throw DomainError("fit_power_at_inf: window must span at least two decades");
    if (k_terms < 1)
        throw DomainError("fit_power_at_inf: k_terms >= 1");

    std::vector<double> xs(nodes), lxs(nodes), vals(nodes);
    const double ratio = std::pow(window.second / window.first, 1.0 / (nodes - 1));
    for (int i = 0; i < nodes; ++i) {
        xs[i] = window.first * std::pow(ratio, i);
        lxs[i] = std::log(xs[i]);
        vals[i] = f(xs[i]);
        if (!std::isfinite(vals[i]))
            throw FitError("fit_power_at_inf: non-finite sample");
    }

    AsymFit out;
    out.window = window;
    double scale0 = 0.0;
    for (double v : vals) scale0 = std::max(scale0, std::fabs(v));
    if (scale0 == 0.0) {
        out.terms.emplace_back(0.0, 0.0);
        return out;
    }

    // model value of term t at node i
    auto term_model = [&](std::size_t t, std::size_t i) {
        double m = out.terms[t].first * std::exp(out.terms[t].second * lxs[i]);
        if (t == 0 && out.log_flag) m *= lxs[i];
        return m;
    };
    auto residue_without = [&](std::size_t skip, std::vector<double>& res) {
        res = vals;
        for (std::size_t t = 0; t < out.terms.size(); ++t) {
            if (t == skip) continue;
            for (std::size_t i = 0; i < res.size(); ++i)
                res[i] -= term_model(t, i);
        }
    };
    // The leading term is cleanest high in the window, later terms low.  The
    // fit uses the longest constant-sign run anchored at the relevant end, so
    // contamination from not-yet-converged partner terms cannot block it.
    auto subset_range = [&](std::size_t t, const std::vector<double>& res, std::size_t& lo,
                            std::size_t& hi) -> bool {
        const std::size_t n = static_cast<std::size_t>(nodes);
        const std::size_t min_run = std::max<std::size_t>(8, n / 6);
        if (t == 0) {
            hi = n;
            const double s = res[n - 1];
            if (s == 0.0) return false;
            lo = n - 1;
            while (lo > n / 3 && res[lo - 1] * s > 0.0) --lo;
            return n - lo >= min_run;
        }
        lo = 0;
        const double s = res[0];
        if (s == 0.0) return false;
        hi = 1;
        while (hi < 2 * n / 3 && res[hi] * s > 0.0) ++hi;
        return hi >= min_run;
    };
    // least squares of log |res| over the node subset; false when no clean run
    auto fit_one = [&](std::size_t t, const std::vector<double>& res, double& c, double& e,
                       bool with_log) -> bool {
        std::size_t lo, hi;
        if (!subset_range(t, res, lo, hi)) return false;
        const double sign = res[lo] > 0.0 ? 1.0 : -1.0;
        std::vector<double> sub_lx, sub_ly;
        for (std::size_t i = lo; i < hi; ++i) {
            if (res[i] == 0.0) return false;
            sub_lx.push_back(lxs[i]);
            sub_ly.push_back(std::log(std::fabs(res[i])) - (with_log ? std::log(lxs[i]) : 0.0));
        }
        LineFit lf = least_squares(sub_lx, sub_ly);
        c = sign * std::exp(lf.intercept);
        e = lf.slope;
        return true;
    };

    std::vector<double> res;
    while (static_cast<int>(out.terms.size()) < k_terms) {
        residue_without(out.terms.size(), res);
        double rmax = 0.0;
        for (double r : res) rmax = std::max(rmax, std::fabs(r));
        if (rmax < 1e-9 * scale0)
            break; // residue at the noise floor

        double c, e;
        bool ok = fit_one(out.terms.size(), res, c, e, false);
        if (!ok) {
            if (out.terms.empty())
                throw FitError("fit_power_at_inf: sign instability on the window");
            break; // later residues may dip through zero; stop peeling
        }
        if (out.terms.empty()) {
            // log-corrected alternative, picked when it shrinks the ln-space
            // misfit by 5x or more
            std::size_t lo, hi;
            if (subset_range(0, res, lo, hi) && lxs[lo] > 0.0) {
                double cl, el;
                if (fit_one(0, res, cl, el, true)) {
                    std::vector<double> sub_lx, sub_ly;
                    for (std::size_t i = lo; i < hi; ++i) {
                        sub_lx.push_back(lxs[i]);
                        sub_ly.push_back(std::log(std::fabs(res[i])));
                    }
                    const double r_plain = rms_dev(sub_lx, sub_ly, e, std::log(std::fabs(c)));
                    double r_log = 0.0;
                    for (std::size_t i = 0; i < sub_lx.size(); ++i) {
                        const double d = sub_ly[i] - (el * sub_lx[i] + std::log(std::fabs(cl)) +
                                                      std::log(sub_lx[i]));
                        r_log += d * d;
                    }
                    r_log = std::sqrt(r_log / sub_lx.size());
                    if (r_log * 5.0 <= r_plain) {
                        out.log_flag = true;
                        c = cl;
                        e = el;
                    }
                }
            }
        }
        bool collide = false;
        for (const auto& t : out.terms)
            if (std::fabs(e - t.second) < 0.1) collide = true;
        if (collide)
            break; // exponent collision: the peeled residue is not a clean power
        out.terms.emplace_back(c, e);

        // refinement sweeps: each term refitted against the others' residue
        for (int sweep = 0; sweep < 6; ++sweep) {
            for (std::size_t t = 0; t < out.terms.size(); ++t) {
                residue_without(t, res);
                double ct, et;
                if (fit_one(t, res, ct, et, t == 0 && out.log_flag)) {
                    out.terms[t].first = ct;
                    out.terms[t].second = et;
                }
            }
        }
        if (out.log_flag)
            break; // peel only the leading term in the log branch
    }

    if (out.terms.empty())
        throw FitError("fit_power_at_inf: no term could be fitted");
    if (!out.log_flag)
        std::sort(out.terms.begin(), out.terms.end(),
                  [](const auto& a, const auto& b) { return a.second > b.second; });

    double worst = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double model = 0.0;
        for (std::size_t t = 0; t < out.terms.size(); ++t) {
            double m = out.terms[t].first * std::exp(out.terms[t].second * lxs[i]);
            if (t == 0 && out.log_flag) m *= lxs[i];
            model += m;
        }
        if (vals[i] != 0.0)
            worst = std::max(worst, std::fabs(vals[i] - model) / std::fabs(vals[i]));
    }
    out.residual = worst;
    if (worst > kFitAcceptResidual)
        throw FitError("fit_power_at_inf: residual " + std::to_string(worst) + " rejected");
    return out;
}

LogFit fit_log_at_inf(const Func1& f, double power, std::pair<double, double> window, int nodes)
{
    if (!(window.first > 1.0) || !(window.second > window.first))
        throw DomainError("fit_log_at_inf: invalid window");
    std::vector<double> lxs(nodes), ys(nodes);
    const double ratio = std::pow(window.second / window.first, 1.0 / (nodes - 1));
    double x = window.first;
    for (int i = 0; i < nodes; ++i, x *= ratio) {
        lxs[i] = std::log(x);
        ys[i] = f(x) * std::pow(x, -power);
        if (!std::isfinite(ys[i]))
            throw FitError("fit_log_at_inf: non-finite sample");
    }
    LineFit lf = least_squares(lxs, ys);
    LogFit out;
    out.coefficient = lf.slope;
    double worst = 0.0;
    for (int i = 0; i < nodes; ++i)
        worst = std::max(worst, std::fabs(ys[i] - (lf.slope * lxs[i] + lf.intercept)));
    const double span = std::fabs(lf.slope) * (lxs[nodes - 1] - lxs[0]);
    out.residual = span > 0.0 ? worst / span : std::numeric_limits<double>::infinity();
    if (out.residual > kFitAcceptResidual)
        throw FitError("fit_log_at_inf: residual rejected (no log term present?)");
    return out;
}

AsymFit fit_at_one(const Func1& f, int k_terms)
{
    if (f.domain() != Func1::Domain::unit_interval)
        throw DomainError("fit_at_one: f must live on [0,1)");
    AsymFit fit = fit_power_at_inf(op_b(f), kDefaultFitWindow, k_terms);
    // translate via: f ~ a (1-z^2)^(-alpha)  <=>  B[f] ~ a x^(2 alpha - 2)
    for (auto& t : fit.terms)
        t.second = 0.5 * (t.second + 2.0);
    return fit;
}

} // namespace patlas

#include "periodatlas/builtins.hpp"

#include <cmath>

namespace patlas {

namespace {

Func1 piecewise_example(double tail_expo, double slope, double intercept)
{
    auto eval = [=](double x) {
        if (x >= 1.0)
            return std::pow(x, -2.0) + std::pow(x, tail_expo);
        return slope * x + intercept;
    };
    auto deriv = [=](double x) {
        if (x >= 1.0)
            return -2.0 * std::pow(x, -3.0) + tail_expo * std::pow(x, tail_expo - 1.0);
        return slope;
    };
    return Func1(Func1::Domain::half_line, eval, deriv, {1.0});
}

} // namespace

Func1 builtin_example_f() { return piecewise_example(-2.5, 22.0 / 3.0, -16.0 / 3.0); }
Func1 builtin_example_g() { return piecewise_example(-5.0, 13.0 / 2.0, -9.0 / 2.0); }
Func1 builtin_example_h() { return piecewise_example(-3.0, 7.0, -5.0); }

Func1 builtin_by_name(const std::string& name)
{
    if (name == "example-f") return builtin_example_f();
    if (name == "example-g") return builtin_example_g();
    if (name == "example-h") return builtin_example_h();
    throw DomainError("unknown built-in function: " + name);
}

} // namespace patlas

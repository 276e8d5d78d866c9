#ifndef PERIODATLAS_BUILTINS_HPP
#define PERIODATLAS_BUILTINS_HPP

#include "periodatlas/func1.hpp"

namespace patlas {

/// Built-in piecewise test functions on [0,+inf): each decays like x^-2 plus
/// a faster power, with the linear part on [0,1) tuned so the first momentum
/// vanishes.  They exercise the momentum case analysis of the operator F.
///   example_f: x^-2 + x^-(5/2)  /  (22/3) x - 16/3
///   example_g: x^-2 + x^-5      /  (13/2) x - 9/2
///   example_h: x^-2 + x^-3      /  7 x - 5
Func1 builtin_example_f();
Func1 builtin_example_g();
Func1 builtin_example_h();

/// Lookup by name ("example-f", "example-g", "example-h"); throws DomainError
/// for unknown names.
Func1 builtin_by_name(const std::string& name);

} // namespace patlas

#endif

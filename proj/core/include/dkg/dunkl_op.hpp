#pragma once

#include <functional>

namespace dkg::dunkl {

using ScalarFunction = std::function<double(double)>;

/// (Rf)(x) = f(-x)
ScalarFunction reflect(ScalarFunction f);

/// One-dimensional Dunkl derivative f'(x) + (mu/x)(f(x) - f(-x)).
/// f' is a fourth-order central difference with h = max(1e-4, 1e-4 |x|).
/// Throws EvaluationAtOrigin for x = 0.
double dunkl_derivative(const ScalarFunction& f, double x, double mu);

/// The fourth-order central difference used above, exposed for tests.
double central_difference(const ScalarFunction& f, double x);

}  // namespace dkg::dunkl

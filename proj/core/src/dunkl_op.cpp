#include "dkg/dunkl_op.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dkg/errors.hpp"

namespace dkg::dunkl {

ScalarFunction reflect(ScalarFunction f) {
  return [g = std::move(f)](double x) { return g(-x); };
}

double central_difference(const ScalarFunction& f, double x) {
  const double h = std::max(1e-4, 1e-4 * std::abs(x));
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

double dunkl_derivative(const ScalarFunction& f, double x, double mu) {
  if (x == 0.0)
    throw Error(ErrorCode::EvaluationAtOrigin, "the Dunkl derivative at x = 0 is a limit; not evaluated");
  return central_difference(f, x) + mu / x * (f(x) - f(-x));
}

}  // namespace dkg::dunkl

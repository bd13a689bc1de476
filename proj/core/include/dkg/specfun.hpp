#pragma once

#include <complex>

namespace dkg::specfun {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Principal value of log Gamma(z): the imaginary part is reduced to (-pi, pi].
/// Lanczos approximation for Re z >= 1/2, reflection formula below that.
/// Throws PoleAtNonPositiveInteger on z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Kummer's confluent hypergeometric function M(a, b; z) = sum (a)_k/(b)_k z^k/k!.
///
/// The series is summed term by term until three consecutive terms fall
/// below 1e-17 of the partial sum. If the largest term exceeds the result
/// by more than three orders of magnitude the sum is repeated in 50-digit
/// arithmetic. For a = -n the series is the exact degree-n polynomial.
///
/// Throws ParameterPole when b is a non-positive integer not shielded by
/// a shorter polynomial, NonConvergence for |z| > 500 or when the term
/// budget is exhausted.
Complex kummer_m(Complex a, Complex b, Complex z);
double kummer_m(double a, double b, double z);

/// Jacobi polynomial P_n^{(alpha, beta)}(x) by the three-term recurrence.
double jacobi_p(int n, double alpha, double beta, double x);

/// Whittaker M_{alpha,beta}(z) = z^{beta+1/2} e^{-z/2} M(beta - alpha + 1/2, 1 + 2 beta; z)
/// on the principal branch of z^{beta+1/2}. Inputs on the negative real
/// axis are rejected with BranchCutInput.
Complex whittaker_m(Complex alpha, Complex beta, Complex z);

/// log cosh(y) without overflow.
double log_cosh(double y) noexcept;

}  // namespace dkg::specfun

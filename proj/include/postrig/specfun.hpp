#ifndef POSTRIG_SPECFUN_HPP
#define POSTRIG_SPECFUN_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace postrig {

/// A named constant solved from its defining equation.
struct SpecialConstant
{
    std::string name;
    double value = 0.0;
    std::string route;
    double residual = 0.0;   // |f| at the reported root
    double tol = 0.0;        // residual bound the solver guarantees
    std::optional<double> cross_route_value; // root of the independent second route
};

using ScalarFunction = std::function<double(double)>;

/// Gamma function, relative accuracy ~1e-15 on (0, 20]; reflection below 1/2.
double gamma_fn(double x);

/// 2F3(a1, a2; b1, b2, b3; z) by direct summation with a term-ratio
/// recurrence. Stops after five consecutive terms below 1e-16 of the partial
/// sum.
double hyp2f3(double a1, double a2, double b1, double b2, double b3, double z);

struct QuadratureResult
{
    double value = 0.0;
    double error_estimate = 0.0;
    int levels = 0;
    int evaluations = 0;
};

/// Tanh-sinh quadrature on [a, b]; integrable algebraic endpoint
/// singularities are fine. Points are placed as a + delta or b - delta so
/// that an integrand singular at a = 0 sees the exact distance.
QuadratureResult quad_singular_detailed(const ScalarFunction& f, double a, double b,
                                        double tol = 1e-12);
double quad_singular(const ScalarFunction& f, double a, double b, double tol = 1e-12);

/// Brent's bracketing root finder. Requires f(lo) f(hi) <= 0.
double brent_root(const ScalarFunction& f, double lo, double hi, double tol = 1e-10);

/// int_0^{3 pi / 2} t^{-alpha} cos t (1 - 2t / (3 pi))^d dt by quadrature.
double weighted_cosine_integral(double alpha, double d);

/// Closed forms of the integral above (P) and of its d = 0 case (K) through
/// 2F3, and the series h with P = K + h.
double P_closed(double alpha, double d);
double K_closed(double alpha);
double h_corr(double alpha, double d);

/// The 2F3 factor of P_closed alone; it has the same zeros in alpha.
double P_hypergeometric_factor(double alpha, double d);

/// Littlewood-Salem-Izumi constant: root in (0, 1) of
/// int_0^{3 pi / 2} t^{-alpha} cos t dt.
SpecialConstant alpha0();

/// Root in [0, 1) of weighted_cosine_integral(alpha, d). Throws
/// RootOutOfRange when there is no sign change (d beyond 1 - alpha0).
SpecialConstant alpha0_prime(double d);

struct ExpansionFit
{
    SpecialConstant beta0;
    SpecialConstant beta1;
    double constant_term = 0.0;
    double cubic_term = 0.0;
    std::vector<double> d_samples;
    std::vector<double> alpha_samples;
};

/// Least-squares cubic in d through alpha0_prime(d), d = 0, 0.02, ..., 0.2.
ExpansionFit expansion_fit();

/// Bessel function of the first kind by its ascending series, 0 <= t <= 30.
double bessel_j(double nu, double t);

/// t^{-nu} J_nu(t): entire in t, finite at 0 for every nu > -1.
double bessel_j_scaled(double nu, double t);

/// m-th positive zero of J_nu.
double bessel_zero(double nu, int m);

/// int_0^{j_{alpha,2}} t^{-alpha} J_alpha(t) dt, by quadrature and by
/// termwise integration of the series.
double bessel_integral(double alpha);
double bessel_integral_series(double alpha);

/// lambda' = alpha' + 1/2 with alpha' the root of bessel_integral.
SpecialConstant lambda_prime();

} // namespace postrig

#endif

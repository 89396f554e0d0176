#ifndef POSTRIG_ORTHOSUM_HPP
#define POSTRIG_ORTHOSUM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postrig/seqkit.hpp"

namespace postrig {

double chebyshev_T(int k, double t);
double gegenbauer_C(int k, double lambda, double x);
double jacobi_P(int k, double a, double b, double x);

/// T_0(t) + T_1(t) + sum_{k=2}^{n} T_k(t) / ((k+alpha)^lambda (k+beta)^mu), |t| < 1.
double chebyshev_qk_sum(int n, double alpha, double beta, double lambda, double mu, double t);

/// sum_{k=0}^{n} C_k^lambda(x), |x| < 1.
double gegenbauer_fejer_sum(int n, double lambda, double x);

/// sum_{k=0}^{n} a_k C_k^lambda(x) / C_k^lambda(1); needs n < a.size().
double gegenbauer_normalized_sum(const CoefficientSequence& a, int n, double lambda, double x);

struct NegativeHit
{
    int n = 0;
    double x = 0.0;
    double value = 0.0;
};

/// Smallest n <= n_max for which sum_{k<=n} C_k(x)/C_k(1) < 0 at some
/// x = cos(theta), theta on an equispaced grid of (0, pi); ties go to the
/// largest x. nullopt when every partial sum stays non-negative.
std::optional<NegativeHit> first_negative_normalized_sum(double lambda, int n_max, int grid,
                                                          int threads = 1);

struct SeriesCoefficients
{
    std::vector<double> coeffs;
    int truncation = 0;
    std::map<std::string, double> params;
    double tail_bound = 0.0;
};

/// Power-series coefficients F_0..F_N of (1 - omega z)^{-(b+1)} (1 - z)^{-(b+1)}
/// as a Cauchy product. |omega| = 1 is accepted as an algebraic identity case.
SeriesCoefficients opuc_coeffs(double b, double omega, int N);

/// Coefficients of (1 - (omega+1) z + omega z^2)^{-(b+1)} by the power
/// recurrence for a quadratic; equal to opuc_coeffs by factorization.
SeriesCoefficients opuc_quadratic_coeffs(double b, double omega, int N);

/// Coefficients of (1 - z)^{-(b+2)} (1 - omega z)^{-(b+1)} = exp(g) from
/// (n+1) psi_{n+1} = sum_m g'_m psi_{n-m}, g'_m = (b+2) + (b+1) omega^{m+1}.
/// These are the cumulative sums of opuc_coeffs.
SeriesCoefficients opuc_cumulative_log_route(double b, double omega, int N);

/// Positivity of every cumulative sum sum_{k<=n} F_k, n <= N. Runs the direct
/// and the log-derivative route; a disagreement makes the report fail.
CriterionReport opuc_cumulative_positive(double b, double omega, int N);

/// sum_k a_k F_k(b, omega) over k < a.size().
double opuc_weighted_sum(const std::vector<double>& a, double b, double omega);

/// | sum_{k=0}^{n} (1+lp)_{n-k}/(1+delta)_{n-k} (1+lp)_k/(1+delta)_k
///   P_k^{(a,b)}(x)/P_k^{(a,b)}(1) e^{i k angle} |
double jacobi_sum_check(int n, double lp, double delta, double a, double b, double x,
                        double angle);

} // namespace postrig

#endif

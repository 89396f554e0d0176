#ifndef POSTRIG_TRIGEVAL_HPP
#define POSTRIG_TRIGEVAL_HPP

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

namespace postrig {

/// sum_{k=0}^{n} [ c_k cos((stride k + shift) t) + s_k sin((stride k + shift) t) ]
/// with c_0 = a0 / 2, c_k = cos_coeffs[k-1], s_0 = b0 / 2, s_k = sin_coeffs[k-1].
///
/// With shift = 0 and stride = 1 this is the Fourier partial sum
/// a0/2 + sum (a_k cos kt + b_k sin kt); b0 only matters for shifted sine
/// sums, where the k = 0 term sin(shift t) does not vanish.
struct TrigPolynomial
{
    double a0 = 0.0;
    double b0 = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
    double shift = 0.0;
    int stride = 1;

    std::size_t degree() const { return std::max(cos_coeffs.size(), sin_coeffs.size()); }
};

enum class SumKind
{
    cosine,
    sine
};

/// Throws DomainError on non-finite coefficients, stride outside {1, 2},
/// shift outside [0, 1) or an identically empty polynomial.
void validate(const TrigPolynomial& poly);

TrigPolynomial cosine_polynomial(double a0, std::vector<double> coeffs);
TrigPolynomial sine_polynomial(std::vector<double> coeffs);

/// sum_{k=0}^{n} e_k cos((stride k + shift) t) and the sine analogue; e_0
/// is stored doubled in a0 (resp. b0) so the a0/2 convention reproduces it.
TrigPolynomial shifted_cosine(std::span<const double> e, double shift, int stride = 1);
TrigPolynomial shifted_sine(std::span<const double> e, double shift, int stride = 1);

/// Sum_{k=first}^{first+w.size()-1} w[k-first] (cos k phi, sin k phi) by the
/// Reinsch-modified Clenshaw recurrence.
std::pair<double, double> clenshaw_cos_sin(std::span<const double> w, int first, double phi);

/// sum_{k=1}^{n} coeffs[k-1] sin(k theta).
double eval_sine_sum(std::span<const double> coeffs, double theta);

/// a0/2 + sum_{k=1}^{n} coeffs[k-1] cos(k theta).
double eval_cosine_sum(double a0, std::span<const double> coeffs, double theta);

/// Cosine part (a0, cos_coeffs) or sine part (b0, sin_coeffs) of a shifted
/// polynomial, evaluated through the angle-addition decomposition into
/// unshifted sums at stride * theta.
double eval_shifted_sum(const TrigPolynomial& poly, double theta, SumKind kind);

/// Full value of a TrigPolynomial (both parts).
double evaluate(const TrigPolynomial& poly, double theta);

/// Value and derivatives up to a fixed order at arbitrary points, plus the
/// uniform bounds M_j = sum_k omega_k^j (|c_k| + |s_k|) >= sup |f^(j)|.
class DerivativeEvaluator
{
public:
    DerivativeEvaluator(const TrigPolynomial& poly, int max_order);

    int max_order() const { return max_order_; }

    /// out[j] = f^(j)(theta), j = 0..max_order.
    void evaluate(double theta, std::span<double> out) const;
    double value(double theta) const;

    /// Valid for 0 <= order <= max_order + 1.
    double bound(int order) const { return bounds_[static_cast<std::size_t>(order)]; }

private:
    int max_order_;
    int stride_;
    double shift_;
    // scaled_[j] holds (c_k omega_k^j) followed by (s_k omega_k^j), k = 0..n.
    std::vector<std::vector<double>> cos_scaled_;
    std::vector<std::vector<double>> sin_scaled_;
    std::vector<double> bounds_;
};

/// Analytic derivative of cos(t/2) (1 + cos t + sum_{k=2}^n cos kt / (k w_k)),
/// w_k = (k+alpha)^lambda (k+beta)^mu.
double eval_theorem26_derivative(int n, double alpha, double beta, double lambda, double mu,
                                 double theta);

/// The negated derivative above rewritten as a half-frequency sine sum
/// sum_{j=0}^{n} e_j sin((j + 1/2) t), ready for certification.
TrigPolynomial theorem26_negated_derivative(int n, double alpha, double beta, double lambda,
                                            double mu);

/// sigma_k(x) = sum_{j=1}^{k} (k - j + 1) sin(jx).
double fejer_sigma(int k, double x);

/// h_k(x) = sin x + ... + sin((k-1)x) + sin(kx)/2.
double fejer_h(int k, double x);

/// Right-hand side of Abel's summation-by-parts identity for sum b_k c_k.
double abel_resum(std::span<const double> b, std::span<const double> c);

} // namespace postrig

#endif

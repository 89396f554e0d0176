#include "postrig/trigeval.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "postrig/error.hpp"

namespace postrig {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

bool all_zero(std::span<const double> v)
{
    for (double x : v)
        if (x != 0.0)
            return false;
    return true;
}

// c_0 .. c_n of one part of a polynomial (k = 0 term halved).
std::vector<double> full_list(double zeroth, const std::vector<double>& rest)
{
    std::vector<double> w;
    w.reserve(rest.size() + 1);
    w.push_back(zeroth / 2.0);
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
}

} // namespace

void validate(const TrigPolynomial& poly)
{
    if (poly.stride != 1 && poly.stride != 2)
        throw DomainError("TrigPolynomial: stride must be 1 or 2");
    if (!(poly.shift >= 0.0 && poly.shift < 1.0))
        throw DomainError("TrigPolynomial: shift must lie in [0, 1)");
    if (!std::isfinite(poly.a0) || !std::isfinite(poly.b0))
        throw DomainError("TrigPolynomial: non-finite constant term");
    for (double x : poly.cos_coeffs)
        if (!std::isfinite(x))
            throw DomainError("TrigPolynomial: non-finite cosine coefficient");
    for (double x : poly.sin_coeffs)
        if (!std::isfinite(x))
            throw DomainError("TrigPolynomial: non-finite sine coefficient");
    if (poly.cos_coeffs.empty() && poly.sin_coeffs.empty() && poly.a0 == 0.0
        && poly.b0 == 0.0)
        throw DomainError("TrigPolynomial: empty polynomial");
}

TrigPolynomial cosine_polynomial(double a0, std::vector<double> coeffs)
{
    TrigPolynomial p;
    p.a0 = a0;
    p.cos_coeffs = std::move(coeffs);
    return p;
}

TrigPolynomial sine_polynomial(std::vector<double> coeffs)
{
    TrigPolynomial p;
    p.sin_coeffs = std::move(coeffs);
    return p;
}

TrigPolynomial shifted_cosine(std::span<const double> e, double shift, int stride)
{
    if (e.empty())
        throw SizeError("shifted_cosine: empty coefficient list");
    TrigPolynomial p;
    p.a0 = 2.0 * e[0];
    p.cos_coeffs.assign(e.begin() + 1, e.end());
    p.shift = shift;
    p.stride = stride;
    validate(p);
    return p;
}

TrigPolynomial shifted_sine(std::span<const double> e, double shift, int stride)
{
    if (e.empty())
        throw SizeError("shifted_sine: empty coefficient list");
    TrigPolynomial p;
    p.b0 = 2.0 * e[0];
    p.sin_coeffs.assign(e.begin() + 1, e.end());
    p.shift = shift;
    p.stride = stride;
    validate(p);
    return p;
}

std::pair<double, double> clenshaw_cos_sin(std::span<const double> w, int first, double phi)
{
    if (w.empty())
        return {0.0, 0.0};
    phi = std::remainder(phi, two_pi);
    const double c = std::cos(phi);
    const int n = first + static_cast<int>(w.size()) - 1;
    auto coef = [&](int k) { return k >= first ? w[static_cast<std::size_t>(k - first)] : 0.0; };

    // Reinsch's modification: run the recurrence on d_k = b_k -/+ b_{k+1},
    // which stays accurate for phi near 0 and near pi.
    double b = 0.0, d = 0.0, b1 = 0.0;
    if (c >= 0.0) {
        const double s2 = std::sin(0.5 * phi);
        const double lam = -4.0 * s2 * s2;
        for (int k = n; k >= 0; --k) {
            d = coef(k) + lam * b + d;
            b1 = b;
            b = d + b;
        }
        // b now holds b_0, b1 holds b_1, d holds d_0.
        return {d - 0.5 * lam * b1, b1 * std::sin(phi)};
    }
    const double c2 = std::cos(0.5 * phi);
    const double lam = 4.0 * c2 * c2;
    for (int k = n; k >= 0; --k) {
        d = coef(k) + lam * b - d;
        b1 = b;
        b = d - b;
    }
    return {d - 0.5 * lam * b1, b1 * std::sin(phi)};
}

double eval_sine_sum(std::span<const double> coeffs, double theta)
{
    return clenshaw_cos_sin(coeffs, 1, theta).second;
}

double eval_cosine_sum(double a0, std::span<const double> coeffs, double theta)
{
    return 0.5 * a0 + clenshaw_cos_sin(coeffs, 1, theta).first;
}

double eval_shifted_sum(const TrigPolynomial& poly, double theta, SumKind kind)
{
    const bool cosine = kind == SumKind::cosine;
    if (poly.shift == 0.0)
        return cosine ? eval_cosine_sum(poly.a0, poly.cos_coeffs, poly.stride * theta)
                      : eval_sine_sum(poly.sin_coeffs, poly.stride * theta);
    const std::vector<double> e =
        full_list(cosine ? poly.a0 : poly.b0, cosine ? poly.cos_coeffs : poly.sin_coeffs);
    const auto [cs, sn] = clenshaw_cos_sin(e, 0, poly.stride * theta);
    const double cl = std::cos(poly.shift * theta);
    const double sl = std::sin(poly.shift * theta);
    // cos(x + y) = cos x cos y - sin x sin y, sin(x + y) = sin x cos y + cos x sin y
    return cosine ? cs * cl - sn * sl : sn * cl + cs * sl;
}

double evaluate(const TrigPolynomial& poly, double theta)
{
    return eval_shifted_sum(poly, theta, SumKind::cosine)
           + eval_shifted_sum(poly, theta, SumKind::sine);
}

DerivativeEvaluator::DerivativeEvaluator(const TrigPolynomial& poly, int max_order)
    : max_order_(max_order), stride_(poly.stride), shift_(poly.shift)
{
    validate(poly);
    if (max_order < 0)
        throw DomainError("DerivativeEvaluator: negative derivative order");
    const std::vector<double> c = full_list(poly.a0, poly.cos_coeffs);
    const std::vector<double> s = full_list(poly.b0, poly.sin_coeffs);
    const bool has_c = !all_zero(c);
    const bool has_s = !all_zero(s);
    const std::size_t n = std::max(c.size(), s.size());

    cos_scaled_.resize(static_cast<std::size_t>(max_order) + 1);
    sin_scaled_.resize(static_cast<std::size_t>(max_order) + 1);
    bounds_.assign(static_cast<std::size_t>(max_order) + 2, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double omega = stride_ * static_cast<double>(k) + shift_;
        const double ck = k < c.size() ? c[k] : 0.0;
        const double sk = k < s.size() ? s[k] : 0.0;
        double pw = 1.0;
        for (int j = 0; j <= max_order + 1; ++j) {
            bounds_[static_cast<std::size_t>(j)] += pw * (std::abs(ck) + std::abs(sk));
            if (j <= max_order) {
                if (has_c)
                    cos_scaled_[static_cast<std::size_t>(j)].push_back(ck * pw);
                if (has_s)
                    sin_scaled_[static_cast<std::size_t>(j)].push_back(sk * pw);
            }
            pw *= omega;
        }
    }
}

void DerivativeEvaluator::evaluate(double theta, std::span<double> out) const
{
    const double phi = stride_ * theta;
    const std::complex<double> rot =
        shift_ == 0.0 ? std::complex<double>(1.0, 0.0)
                      : std::complex<double>(std::cos(shift_ * theta), std::sin(shift_ * theta));
    for (int j = 0; j <= max_order_; ++j) {
        const auto [cc, cs] = clenshaw_cos_sin(cos_scaled_[static_cast<std::size_t>(j)], 0, phi);
        const auto [sc, ss] = clenshaw_cos_sin(sin_scaled_[static_cast<std::size_t>(j)], 0, phi);
        // sum (c_k - i s_k) e^{i k phi}
        const std::complex<double> z(cc + ss, cs - sc);
        // d^j/dt^j e^{i omega t} = (i omega)^j e^{i omega t}; omega^j is in the lists.
        static constexpr std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        out[static_cast<std::size_t>(j)] = (ipow[j % 4] * rot * z).real();
    }
}

double DerivativeEvaluator::value(double theta) const
{
    const auto [cc, cs] = clenshaw_cos_sin(cos_scaled_[0], 0, stride_ * theta);
    const auto [sc, ss] = clenshaw_cos_sin(sin_scaled_[0], 0, stride_ * theta);
    if (shift_ == 0.0)
        return cc + ss;
    const double cl = std::cos(shift_ * theta), sl = std::sin(shift_ * theta);
    return (cc + ss) * cl - (cs - sc) * sl;
}

double eval_theorem26_derivative(int n, double alpha, double beta, double lambda, double mu,
                                 double theta)
{
    if (n < 1)
        throw DomainError("eval_theorem26_derivative: n must be >= 1");
    std::vector<double> ccoef{1.0};
    std::vector<double> scoef{1.0};
    for (int k = 2; k <= n; ++k) {
        const double w = std::pow(k + alpha, lambda) * std::pow(k + beta, mu);
        ccoef.push_back(1.0 / (k * w));
        scoef.push_back(1.0 / w);
    }
    const double big_c = eval_cosine_sum(2.0, ccoef, theta);
    const double big_s = eval_sine_sum(scoef, theta);
    return -0.5 * std::sin(0.5 * theta) * big_c - std::cos(0.5 * theta) * big_s;
}

TrigPolynomial theorem26_negated_derivative(int n, double alpha, double beta, double lambda,
                                            double mu)
{
    if (n < 1)
        throw DomainError("theorem26_negated_derivative: n must be >= 1");
    const auto un = static_cast<std::size_t>(n);
    // C(t) = sum C_k cos kt, S(t) = sum S_k sin kt.
    std::vector<double> C(un + 1), S(un + 1, 0.0);
    C[0] = 1.0;
    C[1] = 1.0;
    S[1] = 1.0;
    for (std::size_t k = 2; k <= un; ++k) {
        const double kk = static_cast<double>(k);
        const double w = std::pow(kk + alpha, lambda) * std::pow(kk + beta, mu);
        C[k] = 1.0 / (kk * w);
        S[k] = 1.0 / w;
    }
    // sin(t/2) cos kt = (sin(k+1/2)t - sin(k-1/2)t) / 2
    // cos(t/2) sin kt = (sin(k+1/2)t + sin(k-1/2)t) / 2
    std::vector<double> e(un + 1, 0.0);
    for (std::size_t k = 0; k <= un; ++k) {
        e[k] += 0.25 * C[k] + 0.5 * S[k];
        const double lower = -0.25 * C[k] + 0.5 * S[k];
        if (k == 0)
            e[0] -= lower; // sin(-t/2) = -sin(t/2)
        else
            e[k - 1] += lower;
    }
    return shifted_sine(e, 0.5, 1);
}

double fejer_sigma(int k, double x)
{
    if (k < 1)
        throw DomainError("fejer_sigma: k must be >= 1");
    double s = 0.0;
    for (int j = 1; j <= k; ++j)
        s += (k - j + 1) * std::sin(j * x);
    return s;
}

double fejer_h(int k, double x)
{
    if (k < 1)
        throw DomainError("fejer_h: k must be >= 1");
    double s = 0.0;
    for (int j = 1; j < k; ++j)
        s += std::sin(j * x);
    return s + 0.5 * std::sin(k * x);
}

double abel_resum(std::span<const double> b, std::span<const double> c)
{
    if (b.size() != c.size())
        throw SizeError("abel_resum: length mismatch");
    if (b.empty())
        throw SizeError("abel_resum: empty input");
    double partial = 0.0;
    double total = 0.0;
    const std::size_t n = b.size() - 1;
    for (std::size_t k = 0; k < n; ++k) {
        partial += c[k];
        total += (b[k] - b[k + 1]) * partial;
    }
    partial += c[n];
    return total + b[n] * partial;
}

} // namespace postrig

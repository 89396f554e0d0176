#include "postrig/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "postrig/error.hpp"

namespace postrig {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double three_half_pi = 1.5 * pi;
constexpr double hyp_argument = -9.0 * pi * pi / 16.0;

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// sin(pi x) without the loss of accuracy near integers.
double sin_pi(double x)
{
    const double r = std::round(x);
    const double s = std::sin(pi * (x - r));
    return std::fmod(r, 2.0) == 0.0 ? s : -s;
}

double lanczos_gamma(double x)
{
    // g = 7, n = 9.
    static constexpr std::array<double, 9> p{
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    x -= 1.0;
    double a = p[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i)
        a += p[static_cast<std::size_t>(i)] / (x + i);
    // t^(x+0.5) split in two halves to delay overflow.
    const double half = std::pow(t, 0.5 * (x + 0.5));
    return std::sqrt(2.0 * pi) * half * (half * std::exp(-t)) * a;
}

} // namespace

double gamma_fn(double x)
{
    if (!std::isfinite(x))
        throw DomainError("gamma_fn: non-finite argument");
    if (is_nonpositive_integer(x))
        throw PoleError("gamma_fn: pole at non-positive integer");
    if (x == std::floor(x) && x <= 171.0) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(x); ++k)
            f *= k;
        return f;
    }
    if (x < 0.5)
        return pi / (sin_pi(x) * lanczos_gamma(1.0 - x));
    return lanczos_gamma(x);
}

double hyp2f3(double a1, double a2, double b1, double b2, double b3, double z)
{
    if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2) || is_nonpositive_integer(b3))
        throw PoleError("hyp2f3: denominator parameter is a non-positive integer");
    double term = 1.0;
    double sum = 1.0;
    int small = 0;
    for (int k = 0; k < 10000; ++k) {
        term *= (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (b3 + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) {
            if (++small >= 5)
                return sum;
        } else {
            small = 0;
        }
    }
    throw ConvergenceError("hyp2f3: no convergence after 10000 terms");
}

QuadratureResult quad_singular_detailed(const ScalarFunction& f, double a, double b, double tol)
{
    if (!(a < b))
        throw DomainError("quad_singular: requires a < b");
    const double half = 0.5 * (b - a);
    constexpr int max_level = 10;
    QuadratureResult res;

    // Contribution of the abscissa at parameter t: weight * f(x).
    auto node = [&](double t) -> double {
        const double u = 0.5 * pi * std::sinh(t);
        const double e = std::exp(-2.0 * std::abs(u));
        const double dist = half * 2.0 * e / (1.0 + e); // distance to the near endpoint
        if (dist < 1e-300)
            return 0.0;
        const double x = t < 0.0 ? a + dist : b - dist;
        if (x == a || x == b)
            return 0.0;
        // w = half * (pi/2) cosh t / cosh^2 u, with 1/cosh^2 u = 4e / (1+e)^2
        const double w = half * 0.5 * pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        ++res.evaluations;
        const double fx = f(x);
        return w * fx;
    };
    // Sum over t = k h for a sequence of k until contributions die out.
    auto sweep = [&](double h, int first, int step) {
        double s = 0.0;
        for (int k = first;; k += step) {
            const double t = k * h;
            if (t > 7.0)
                break;
            const double up = node(t);
            const double dn = node(-t);
            s += up + dn;
            if (t > 1.0 && up == 0.0 && dn == 0.0)
                break;
        }
        return s;
    };

    double h = 1.0;
    double sum = node(0.0) + sweep(h, 1, 1);
    double prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += sweep(h, 1, 2);
        const double cur = sum * h;
        const double diff = std::abs(cur - prev);
        res.value = cur;
        res.error_estimate = diff;
        res.levels = level;
        if (!std::isfinite(cur))
            throw ConvergenceError("quad_singular: non-finite integrand sum");
        if (level >= 3 && diff <= tol)
            return res;
        prev = cur;
    }
    throw ConvergenceError("quad_singular: tolerance not met at maximum level");
}

double quad_singular(const ScalarFunction& f, double a, double b, double tol)
{
    return quad_singular_detailed(f, a, b, tol).value;
}

double brent_root(const ScalarFunction& f, double lo, double hi, double tol)
{
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError("brent_root: f(lo) and f(hi) have the same sign");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // Inverse quadratic interpolation or secant.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw ConvergenceError("brent_root: iteration limit reached");
}

double weighted_cosine_integral(double alpha, double d)
{
    if (!(alpha < 1.0))
        throw DomainError("weighted_cosine_integral: alpha must be < 1");
    if (!(d >= 0.0))
        throw DomainError("weighted_cosine_integral: d must be >= 0");
    auto f = [alpha, d](double t) {
        double v = std::cos(t);
        if (alpha != 0.0)
            v *= std::pow(t, -alpha);
        if (d != 0.0)
            v *= std::pow((three_half_pi - t) / three_half_pi, d);
        return v;
    };
    return quad_singular(f, 0.0, three_half_pi, 1e-13);
}

double P_hypergeometric_factor(double alpha, double d)
{
    return hyp2f3(0.5 * (1.0 - alpha), 1.0 - 0.5 * alpha, 0.5, 0.5 * (2.0 - alpha + d),
                  0.5 * (3.0 - alpha + d), hyp_argument);
}

double P_closed(double alpha, double d)
{
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw DomainError("P_closed: alpha must lie in [0, 1)");
    if (!(d >= 0.0))
        throw DomainError("P_closed: d must be >= 0");
    const double pre = gamma_fn(1.0 + d) * gamma_fn(1.0 - alpha) / gamma_fn(2.0 - alpha + d)
                       * std::pow(three_half_pi, 1.0 - alpha);
    return pre * P_hypergeometric_factor(alpha, d);
}

double K_closed(double alpha)
{
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw DomainError("K_closed: alpha must lie in [0, 1)");
    const double pre =
        gamma_fn(1.0 - alpha) / gamma_fn(2.0 - alpha) * std::pow(three_half_pi, 1.0 - alpha);
    return pre * P_hypergeometric_factor(alpha, 0.0);
}

double h_corr(double alpha, double d)
{
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw DomainError("h_corr: alpha must lie in [0, 1)");
    if (!(d >= 0.0))
        throw DomainError("h_corr: d must be >= 0");
    const double g = gamma_fn(1.0 + d);
    double coef = 1.0; // ((1-a)/2)_k (1-a/2)_k 4^k / ((1/2)_k k!) z^k
    double u = 1.0 / gamma_fn(2.0 - alpha + d);
    double v = 1.0 / gamma_fn(2.0 - alpha);
    double sum = coef * (g * u - v);
    int small = 0;
    for (int k = 0; k < 10000; ++k) {
        const double kk = k;
        coef *= (0.5 * (1.0 - alpha) + kk) * (1.0 - 0.5 * alpha + kk) * 4.0
                / ((0.5 + kk) * (kk + 1.0)) * hyp_argument;
        u /= (2.0 - alpha + d + 2.0 * kk) * (3.0 - alpha + d + 2.0 * kk);
        v /= (2.0 - alpha + 2.0 * kk) * (3.0 - alpha + 2.0 * kk);
        const double term = coef * (g * u - v);
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) {
            if (++small >= 5)
                return std::pow(three_half_pi, 1.0 - alpha) * gamma_fn(1.0 - alpha) * sum;
        } else {
            small = 0;
        }
    }
    throw ConvergenceError("h_corr: series did not converge");
}

SpecialConstant alpha0()
{
    constexpr double root_tol = 1e-13;
    auto integral = [](double a) { return weighted_cosine_integral(a, 0.0); };
    SpecialConstant c;
    c.name = "alpha0";
    c.route = "quadrature-root";
    c.value = brent_root(integral, 0.2, 0.4, root_tol);
    c.residual = std::abs(integral(c.value));
    c.tol = 1e-8;
    c.cross_route_value = brent_root([](double a) { return K_closed(a); }, 0.2, 0.4, root_tol);
    return c;
}

SpecialConstant alpha0_prime(double d)
{
    if (!(d >= 0.0) || !std::isfinite(d))
        throw DomainError("alpha0_prime: d must be >= 0");
    constexpr double root_tol = 1e-13;
    constexpr double zero_tol = 1e-12;
    auto integral = [d](double a) { return weighted_cosine_integral(a, d); };

    SpecialConstant c;
    c.name = "alpha0_prime";
    c.route = "quadrature-root";
    c.tol = 1e-8;

    const double f0 = integral(0.0);
    if (std::abs(f0) <= zero_tol) {
        c.value = 0.0;
        c.residual = std::abs(f0);
        c.cross_route_value = 0.0;
        return c;
    }
    const double top = 1.0 - 1e-6;
    if (f0 > 0.0 || P_closed(top, d) <= 0.0)
        throw RootOutOfRange("alpha0_prime: no sign change of the defining integral in [0, 1)");

    // The integral grows like Gamma(1 - alpha) near 1; 0.9 brackets every
    // root with a sign change at 0.
    double hi = 0.9;
    if (integral(hi) <= 0.0)
        hi = top;
    c.value = brent_root(integral, 0.0, hi, root_tol);
    c.residual = std::abs(integral(c.value));
    c.cross_route_value =
        brent_root([d](double a) { return P_hypergeometric_factor(a, d); }, 0.0, hi, root_tol);
    return c;
}

ExpansionFit expansion_fit()
{
    ExpansionFit fit;
    constexpr int samples = 11;
    Eigen::MatrixXd design(samples, 4);
    Eigen::VectorXd rhs(samples);
    for (int i = 0; i < samples; ++i) {
        const double d = 0.02 * i;
        const double a = alpha0_prime(d).value;
        fit.d_samples.push_back(d);
        fit.alpha_samples.push_back(a);
        design(i, 0) = 1.0;
        design(i, 1) = d;
        design(i, 2) = d * d;
        design(i, 3) = d * d * d;
        rhs(i) = a;
    }
    const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(rhs);
    const double rms = std::sqrt((design * coef - rhs).squaredNorm() / samples);

    fit.constant_term = coef(0);
    fit.cubic_term = coef(3);
    fit.beta0 = {"beta0", -coef(1), "expansion-fit", rms, 1e-6, std::nullopt};
    fit.beta1 = {"beta1", -coef(2), "expansion-fit", rms, 1e-6, std::nullopt};
    return fit;
}

double bessel_j_scaled(double nu, double t)
{
    if (!(nu > -1.0))
        throw DomainError("bessel_j: order must exceed -1");
    if (!(std::abs(t) <= 30.0))
        throw DomainError("bessel_j: argument outside the validated range [0, 30]");
    // Extended precision absorbs most of the cancellation for large t.
    const long double q = 0.25L * t * t;
    long double term = 1.0L / (std::pow(2.0L, static_cast<long double>(nu)) * gamma_fn(nu + 1.0));
    long double sum = term;
    for (int m = 0; m < 500; ++m) {
        term *= -q / ((m + 1.0L) * (nu + m + 1.0L));
        sum += term;
        if (m > q && std::abs(term) <= 1e-20L * std::abs(sum))
            return static_cast<double>(sum);
        if (term == 0.0L)
            return static_cast<double>(sum);
    }
    throw ConvergenceError("bessel_j: series did not converge");
}

double bessel_j(double nu, double t)
{
    if (!(t >= 0.0 && t <= 30.0))
        throw DomainError("bessel_j: argument outside the validated range [0, 30]");
    if (t == 0.0) {
        if (nu < 0.0)
            throw DomainError("bessel_j: J_nu(0) is unbounded for nu < 0");
        return nu == 0.0 ? 1.0 : 0.0;
    }
    return std::pow(t, nu) * bessel_j_scaled(nu, t);
}

double bessel_zero(double nu, int m)
{
    if (m < 1)
        throw DomainError("bessel_zero: m must be >= 1");
    auto f = [nu](double t) { return bessel_j_scaled(nu, t); };
    constexpr double step = 0.05;
    double lo = 0.0;
    double flo = f(lo);
    int found = 0;
    for (double hi = step; hi <= 30.0; hi += step) {
        const double fhi = f(hi);
        if ((flo > 0.0) != (fhi > 0.0) || fhi == 0.0) {
            if (++found == m)
                return brent_root(f, lo, hi, 1e-15);
        }
        lo = hi;
        flo = fhi;
    }
    throw DomainError("bessel_zero: zero lies beyond the validated range");
}

double bessel_integral(double alpha)
{
    const double j2 = bessel_zero(alpha, 2);
    return quad_singular([alpha](double t) { return bessel_j_scaled(alpha, t); }, 0.0, j2,
                         1e-14);
}

double bessel_integral_series(double alpha)
{
    const double j2 = bessel_zero(alpha, 2);
    const double q = 0.25 * j2 * j2;
    // sum_m (-1)^m j^{2m+1} / (2^{nu+2m} m! Gamma(nu+m+1) (2m+1))
    double term = j2 / (std::pow(2.0, alpha) * gamma_fn(alpha + 1.0));
    double sum = term;
    for (int m = 0; m < 500; ++m) {
        term *= -q / ((m + 1.0) * (alpha + m + 1.0));
        const double add = term / (2.0 * m + 3.0);
        sum += add;
        if (m > q && std::abs(add) <= 1e-17 * std::abs(sum))
            return sum;
    }
    throw ConvergenceError("bessel_integral_series: series did not converge");
}

SpecialConstant lambda_prime()
{
    constexpr double root_tol = 1e-13;
    const double root = brent_root([](double a) { return bessel_integral(a); }, -0.5, 0.0,
                                   root_tol);
    SpecialConstant c;
    c.name = "lambda_prime";
    c.route = "bessel-quadrature-root";
    c.value = root + 0.5;
    c.residual = std::abs(bessel_integral(root));
    c.tol = 1e-8;
    c.cross_route_value =
        brent_root([](double a) { return bessel_integral_series(a); }, -0.5, 0.0, root_tol)
        + 0.5;
    return c;
}

} // namespace postrig

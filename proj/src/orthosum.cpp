#include "postrig/orthosum.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "postrig/error.hpp"
#include "postrig/parallel.hpp"

namespace postrig {

namespace {

void require_order(int k, const char* what)
{
    if (k < 0)
        throw DomainError(std::string(what) + ": degree must be >= 0");
}

void require_lambda(double lambda, const char* what)
{
    if (!(lambda > 0.0))
        throw DomainError(std::string(what) + ": lambda must be > 0");
}

// (m+1)-th binomial coefficient of (1 - w z)^{-(b+1)} from the m-th.
std::vector<double> binomial_series(double b, double w, int N)
{
    std::vector<double> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1.0;
    for (int m = 0; m < N; ++m)
        c[static_cast<std::size_t>(m) + 1] = c[static_cast<std::size_t>(m)] * (b + 1.0 + m) / (m + 1.0) * w;
    return c;
}

double tail_estimate(const std::vector<double>& c)
{
    const double last = std::abs(c.back());
    if (c.size() < 2 || c[c.size() - 2] == 0.0)
        return last;
    return last * std::abs(c.back() / c[c.size() - 2]);
}

void require_opuc(double b, double omega, int N, const char* what)
{
    if (!(b > -1.0))
        throw DomainError(std::string(what) + ": b must be > -1");
    if (!(std::abs(omega) <= 1.0))
        throw DomainError(std::string(what) + ": |omega| must be <= 1");
    if (N < 0)
        throw DomainError(std::string(what) + ": N must be >= 0");
}

SeriesCoefficients make_series(std::vector<double> c, double b, double omega)
{
    SeriesCoefficients s;
    s.truncation = static_cast<int>(c.size()) - 1;
    s.params = {{"b", b}, {"omega", omega}};
    s.tail_bound = tail_estimate(c);
    s.coeffs = std::move(c);
    return s;
}

// P_0..P_n of the Jacobi family at x.
std::vector<double> jacobi_values(int n, double a, double b, double x)
{
    std::vector<double> P(static_cast<std::size_t>(n) + 1);
    P[0] = 1.0;
    if (n >= 1)
        P[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for (int j = 1; j < n; ++j) {
        const double s = 2.0 * j + a + b;
        const auto uj = static_cast<std::size_t>(j);
        P[uj + 1] = ((s + 1.0) * ((s + 2.0) * s * x + a * a - b * b) * P[uj]
                     - 2.0 * (j + a) * (j + b) * (s + 2.0) * P[uj - 1])
                    / (2.0 * (j + 1.0) * (j + a + b + 1.0) * s);
    }
    return P;
}

} // namespace

double chebyshev_T(int k, double t)
{
    require_order(k, "chebyshev_T");
    if (k == 0)
        return 1.0;
    double prev = 1.0, cur = t;
    for (int j = 1; j < k; ++j) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double gegenbauer_C(int k, double lambda, double x)
{
    require_order(k, "gegenbauer_C");
    require_lambda(lambda, "gegenbauer_C");
    if (k == 0)
        return 1.0;
    double prev = 1.0, cur = 2.0 * lambda * x;
    for (int j = 1; j < k; ++j) {
        const double next = (2.0 * x * (j + lambda) * cur - (j + 2.0 * lambda - 1.0) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double jacobi_P(int k, double a, double b, double x)
{
    require_order(k, "jacobi_P");
    if (!(a > -1.0) || !(b > -1.0))
        throw DomainError("jacobi_P: parameters must exceed -1");
    return jacobi_values(k, a, b, x).back();
}

double chebyshev_qk_sum(int n, double alpha, double beta, double lambda, double mu, double t)
{
    if (n < 1)
        throw DomainError("chebyshev_qk_sum: n must be >= 1");
    if (!(std::abs(t) < 1.0))
        throw DomainError("chebyshev_qk_sum: |t| must be < 1");
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw DomainError("chebyshev_qk_sum: alpha and beta must be >= 0");
    if (!(lambda + mu >= 1.0))
        throw DomainError("chebyshev_qk_sum: lambda + mu >= 1 violated");
    double prev = 1.0, cur = t;
    double sum = prev + cur;
    for (int k = 2; k <= n; ++k) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
        sum += cur * std::pow(k + alpha, -lambda) * std::pow(k + beta, -mu);
    }
    return sum;
}

double gegenbauer_fejer_sum(int n, double lambda, double x)
{
    require_order(n, "gegenbauer_fejer_sum");
    require_lambda(lambda, "gegenbauer_fejer_sum");
    if (!(std::abs(x) < 1.0))
        throw DomainError("gegenbauer_fejer_sum: |x| must be < 1");
    double prev = 1.0, cur = 2.0 * lambda * x;
    double sum = n == 0 ? prev : prev + cur;
    for (int j = 1; j < n; ++j) {
        const double next = (2.0 * x * (j + lambda) * cur - (j + 2.0 * lambda - 1.0) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
        sum += cur;
    }
    return sum;
}

double gegenbauer_normalized_sum(const CoefficientSequence& a, int n, double lambda, double x)
{
    require_order(n, "gegenbauer_normalized_sum");
    require_lambda(lambda, "gegenbauer_normalized_sum");
    if (!(std::abs(x) <= 1.0))
        throw DomainError("gegenbauer_normalized_sum: |x| must be <= 1");
    if (static_cast<std::size_t>(n) >= a.size())
        throw SizeError("gegenbauer_normalized_sum: need n + 1 coefficients");
    double prev = 1.0, cur = 2.0 * lambda * x;
    double at_one = 1.0; // (2 lambda)_k / k!
    double sum = a[0];
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            const int j = k - 1;
            const double next = (2.0 * x * (j + lambda) * cur - (j + 2.0 * lambda - 1.0) * prev) / (j + 1.0);
            prev = cur;
            cur = next;
        }
        at_one *= (2.0 * lambda + k - 1.0) / k;
        sum += a[static_cast<std::size_t>(k)] * cur / at_one;
    }
    return sum;
}

std::optional<NegativeHit> first_negative_normalized_sum(double lambda, int n_max, int grid,
                                                          int threads)
{
    require_lambda(lambda, "first_negative_normalized_sum");
    if (n_max < 1 || grid < 2)
        throw DomainError("first_negative_normalized_sum: n_max >= 1 and grid >= 2 required");
    const auto g = static_cast<std::size_t>(grid);
    std::vector<NegativeHit> hits(g);
    parallel_for(g, resolve_threads(threads), [&](std::size_t i) {
        const double theta = std::numbers::pi * static_cast<double>(i + 1) / static_cast<double>(g + 1);
        const double x = std::cos(theta);
        double prev = 1.0, cur = 2.0 * lambda * x, at_one = 2.0 * lambda;
        double sum = 1.0 + cur / at_one;
        NegativeHit h{n_max + 1, x, 0.0};
        if (sum < 0.0) {
            hits[i] = {1, x, sum};
            return;
        }
        for (int j = 1; j < n_max; ++j) {
            const double next = (2.0 * x * (j + lambda) * cur - (j + 2.0 * lambda - 1.0) * prev) / (j + 1.0);
            prev = cur;
            cur = next;
            at_one *= (2.0 * lambda + j) / (j + 1.0);
            sum += cur / at_one;
            if (sum < 0.0) {
                h = {j + 1, x, sum};
                break;
            }
        }
        hits[i] = h;
    });
    std::optional<NegativeHit> best;
    for (const auto& h : hits) // theta increasing, so x decreasing
        if (h.n <= n_max && (!best || h.n < best->n))
            best = h;
    return best;
}

SeriesCoefficients opuc_coeffs(double b, double omega, int N)
{
    require_opuc(b, omega, N, "opuc_coeffs");
    const auto u = binomial_series(b, omega, N);
    const auto v = binomial_series(b, 1.0, N);
    std::vector<double> F(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::size_t k = 0; k < F.size(); ++k)
        for (std::size_t m = 0; m <= k; ++m)
            F[k] += u[m] * v[k - m];
    return make_series(std::move(F), b, omega);
}

SeriesCoefficients opuc_quadratic_coeffs(double b, double omega, int N)
{
    require_opuc(b, omega, N, "opuc_quadratic_coeffs");
    // P(z)^g with P = 1 + p1 z + p2 z^2: n u_n = sum_{j=1,2} ((g+1) j - n) p_j u_{n-j}
    const double g = -(b + 1.0);
    const double p[3] = {1.0, -(omega + 1.0), omega};
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    c[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        double s = 0.0;
        for (int j = 1; j <= std::min(n, 2); ++j)
            s += ((g + 1.0) * j - n) * p[j] * c[static_cast<std::size_t>(n - j)];
        c[static_cast<std::size_t>(n)] = s / n;
    }
    return make_series(std::move(c), b, omega);
}

SeriesCoefficients opuc_cumulative_log_route(double b, double omega, int N)
{
    require_opuc(b, omega, N, "opuc_cumulative_log_route");
    std::vector<double> gp(static_cast<std::size_t>(N) + 1);
    double wpow = omega;
    for (std::size_t m = 0; m < gp.size(); ++m) {
        gp[m] = (b + 2.0) + (b + 1.0) * wpow;
        wpow *= omega;
    }
    std::vector<double> psi(static_cast<std::size_t>(N) + 1, 0.0);
    psi[0] = 1.0;
    for (std::size_t n = 0; n + 1 < psi.size(); ++n) {
        double s = 0.0;
        for (std::size_t m = 0; m <= n; ++m)
            s += gp[m] * psi[n - m];
        psi[n + 1] = s / static_cast<double>(n + 1);
    }
    return make_series(std::move(psi), b, omega);
}

CriterionReport opuc_cumulative_positive(double b, double omega, int N)
{
    if (!(b > -0.5))
        throw DomainError("opuc_cumulative_positive: b must be > -1/2");
    if (!(std::abs(omega) < 1.0))
        throw DomainError("opuc_cumulative_positive: |omega| must be < 1");
    const auto F = opuc_coeffs(b, omega, N).coeffs;
    const auto psi = opuc_cumulative_log_route(b, omega, N).coeffs;

    CriterionReport r;
    std::vector<double> sums;
    sums.reserve(F.size());
    double cum = 0.0;
    double margin = std::numeric_limits<double>::infinity();
    bool agree = true;
    for (std::size_t n = 0; n < F.size(); ++n) {
        cum += F[n];
        sums.push_back(cum);
        margin = std::min(margin, cum);
        // strict positivity is the claim, so no roundoff allowance here
        if (!(cum > 0.0) && !r.first_violation_index)
            r.first_violation_index = n;
        if (std::abs(cum - psi[n]) > 1e-10 * std::max(1.0, std::abs(cum)))
            agree = false;
        if ((cum > 0.0) != (psi[n] > 0.0))
            agree = false;
    }
    // every g'_m > 0 makes exp(g) absolutely monotonic
    bool log_positive = true;
    double wpow = omega;
    for (int m = 0; m <= N; ++m, wpow *= omega)
        if (!((b + 2.0) + (b + 1.0) * wpow > 0.0))
            log_positive = false;

    r.satisfied = !r.first_violation_index && agree;
    r.margin = margin;
    r.partial_sums = std::move(sums);
    if (!agree) {
        r.note = "direct and log-derivative routes disagree";
        if (!r.first_violation_index)
            r.first_violation_index = 0;
    } else if (!log_positive) {
        r.note = "log-derivative coefficients are not all positive";
    }
    return r;
}

double opuc_weighted_sum(const std::vector<double>& a, double b, double omega)
{
    if (a.empty())
        throw SizeError("opuc_weighted_sum: empty weight list");
    const auto F = opuc_coeffs(b, omega, static_cast<int>(a.size()) - 1).coeffs;
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += a[k] * F[k];
    return s;
}

double jacobi_sum_check(int n, double lp, double delta, double a, double b, double x,
                        double angle)
{
    require_order(n, "jacobi_sum_check");
    if (!(delta > -1.0) || !(lp > -1.0))
        throw DomainError("jacobi_sum_check: lambda and delta must exceed -1");
    if (!(std::abs(x) <= 1.0))
        throw DomainError("jacobi_sum_check: |x| must be <= 1");
    if (!(a > -1.0) || !(b > -1.0))
        throw DomainError("jacobi_sum_check: Jacobi parameters must exceed -1");
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> ratio(un + 1); // (1+lp)_j / (1+delta)_j
    ratio[0] = 1.0;
    for (std::size_t j = 1; j <= un; ++j)
        ratio[j] = ratio[j - 1] * (lp + static_cast<double>(j)) / (delta + static_cast<double>(j));

    const auto P = jacobi_values(n, a, b, x);
    std::complex<double> sum = 0.0;
    double at_one = 1.0; // (a+1)_k / k!
    for (std::size_t k = 0; k <= un; ++k) {
        const double kk = static_cast<double>(k);
        if (k > 0)
            at_one *= (a + kk) / kk;
        sum += ratio[un - k] * ratio[k] * (P[k] / at_one) * std::polar(1.0, kk * angle);
    }
    return std::abs(sum);
}

} // namespace postrig

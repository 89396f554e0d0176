#include "postrig/seqkit.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "postrig/error.hpp"

namespace postrig {

namespace {

void require_finite(const std::vector<double>& v, const char* what)
{
    for (double x : v)
        if (!std::isfinite(x))
            throw DomainError(std::string(what) + ": non-finite coefficient");
}

void require_positive(std::span<const double> v, const char* what)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!(v[i] > 0.0)) {
            std::ostringstream os;
            os << what << ": entry " << i << " = " << v[i] << " is not positive";
            throw DomainError(os.str());
        }
}

// Accumulates slacks of a family of inequalities "slack >= 0".
class SlackTracker
{
public:
    void add(double slack, std::size_t index)
    {
        if (slack < min_slack_)
            min_slack_ = slack;
        if (slack < criterion_tolerance && (!violation_ || index < *violation_))
            violation_ = index;
    }

    CriterionReport report() const
    {
        CriterionReport r;
        r.satisfied = !violation_.has_value();
        r.first_violation_index = violation_;
        double m = std::isfinite(min_slack_) ? min_slack_ : 0.0;
        if (r.satisfied && m < 0.0)
            m = 0.0;
        r.margin = m;
        return r;
    }

private:
    double min_slack_ = std::numeric_limits<double>::infinity();
    std::optional<std::size_t> violation_;
};

bool starts_at_a0(Family f)
{
    return f == Family::vietoris || f == Family::qk || f == Family::koumandos
           || f == Family::ck;
}

} // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::vietoris: return "vietoris";
    case Family::qk: return "qk";
    case Family::ratio_qk: return "ratio-qk";
    case Family::koumandos: return "koumandos";
    case Family::ck: return "ck";
    case Family::custom: return "custom";
    }
    return "custom";
}

double pochhammer(double x, int k)
{
    if (k < 0)
        throw DomainError("pochhammer: negative order");
    double p = 1.0;
    for (int j = 0; j < k; ++j)
        p *= x + j;
    return p;
}

CoefficientSequence vietoris_gamma(int n)
{
    if (n < 0)
        throw DomainError("vietoris_gamma: n must be >= 0");
    CoefficientSequence s;
    s.family = Family::vietoris;
    s.params["n"] = n;
    s.values.resize(static_cast<std::size_t>(n) + 1);
    double pair = 1.0; // (1/2)_k / k!
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0)
            pair *= (k - 0.5) / k;
        s.values[2 * k] = pair;
        if (2 * k + 1 <= n)
            s.values[2 * k + 1] = pair;
    }
    return s;
}

CoefficientSequence qk_sequence(int n, double alpha, double beta, double lambda, double mu)
{
    if (n < 1)
        throw DomainError("qk_sequence: n must be >= 1");
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw DomainError("qk_sequence: alpha and beta must be >= 0");
    CoefficientSequence s;
    s.family = Family::qk;
    s.params = {{"n", n}, {"alpha", alpha}, {"beta", beta}, {"lambda", lambda}, {"mu", mu}};
    s.values.reserve(static_cast<std::size_t>(n) + 1);
    s.values.push_back(2.0);
    s.values.push_back(1.0);
    for (int k = 2; k <= n; ++k) {
        if (k + alpha <= 0.0 || k + beta <= 0.0)
            throw DomainError("qk_sequence: k + alpha and k + beta must be positive");
        s.values.push_back(std::pow(k + alpha, -lambda) * std::pow(k + beta, -mu));
    }
    require_finite(s.values, "qk_sequence");
    return s;
}

CoefficientSequence ratio_qk_sequence(int n, double alpha, double beta, double lambda,
                                      double mu)
{
    if (n < 1)
        throw DomainError("ratio_qk_sequence: n must be >= 1");
    if (!(alpha > 0.0) || !(beta > 0.0) || !(lambda > 0.0) || !(mu > 0.0))
        throw DomainError("ratio_qk_sequence: alpha, beta, lambda, mu must be > 0");
    if (!(alpha < beta))
        throw DomainError("ratio_qk_sequence: alpha < beta violated");
    if (!(mu >= 1.0 + lambda))
        throw DomainError("ratio_qk_sequence: mu >= 1 + lambda violated");
    if (!(lambda * beta - alpha * mu < 0.0))
        throw DomainError("ratio_qk_sequence: lambda*beta - alpha*mu < 0 violated");
    CoefficientSequence s;
    s.family = Family::ratio_qk;
    s.params = {{"n", n}, {"alpha", alpha}, {"beta", beta}, {"lambda", lambda}, {"mu", mu}};
    s.values.reserve(static_cast<std::size_t>(n));
    s.values.push_back(1.0);
    for (int k = 2; k <= n; ++k)
        s.values.push_back(std::pow(k + alpha, lambda) / std::pow(k + beta, mu));
    return s;
}

CoefficientSequence koumandos_bk(int n, double alpha)
{
    if (n < 0)
        throw DomainError("koumandos_bk: n must be >= 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("koumandos_bk: alpha must lie in (0, 1)");
    CoefficientSequence s;
    s.family = Family::koumandos;
    s.params = {{"n", n}, {"alpha", alpha}};
    s.values.resize(static_cast<std::size_t>(n) + 1);
    double pair = 1.0; // (1-alpha)_k / k!
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0)
            pair *= (k - alpha) / k;
        s.values[2 * k] = pair;
        if (2 * k + 1 <= n)
            s.values[2 * k + 1] = pair;
    }
    return s;
}

CoefficientSequence ck_sequence(int n, double alpha, double b, double c)
{
    if (n < 0)
        throw DomainError("ck_sequence: n must be >= 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("ck_sequence: alpha must lie in (0, 1)");
    if (!(c > 0.0))
        throw DomainError("ck_sequence: c must be > 0");
    if (!(b >= c))
        throw DomainError("ck_sequence: b >= c violated");

    // B_0 = 1, B_k = (b)_k / (c)_k * (1 + b - c) / b.
    std::vector<double> B(static_cast<std::size_t>(n) + 1);
    B[0] = 1.0;
    double ratio = 1.0;
    const double tail = (1.0 + b - c) / b;
    for (int k = 1; k <= n; ++k) {
        ratio *= (b + k - 1) / (c + k - 1);
        B[k] = ratio * tail;
    }

    CoefficientSequence s;
    s.family = Family::ck;
    s.params = {{"n", n}, {"alpha", alpha}, {"b", b}, {"c", c}};
    s.values.resize(2 * static_cast<std::size_t>(n) + 2);
    double koum = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            koum *= (k - alpha) / k;
        const double v = B[n - k] / B[n] * koum;
        s.values[2 * k] = v;
        s.values[2 * k + 1] = v;
    }
    require_finite(s.values, "ck_sequence");
    return s;
}

CoefficientSequence custom_sequence(std::vector<double> values)
{
    if (values.empty())
        throw SizeError("custom_sequence: empty coefficient list");
    require_finite(values, "custom_sequence");
    CoefficientSequence s;
    s.values = std::move(values);
    s.family = Family::custom;
    return s;
}

std::vector<double> pair_values(const CoefficientSequence& seq)
{
    std::vector<double> e;
    e.reserve((seq.size() + 1) / 2);
    for (std::size_t i = 0; i < seq.size(); i += 2)
        e.push_back(seq.values[i]);
    return e;
}

std::vector<double> sine_part(const CoefficientSequence& seq)
{
    if (starts_at_a0(seq.family))
        return {seq.values.begin() + (seq.values.empty() ? 0 : 1), seq.values.end()};
    return seq.values;
}

CriterionReport check_vietoris(const CoefficientSequence& seq)
{
    const auto& a = seq.values;
    if (a.empty())
        throw SizeError("check_vietoris: empty sequence");
    require_positive(a, "check_vietoris");
    SlackTracker t;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        t.add(a[i] - a[i + 1], i + 1);
    for (std::size_t k = 1; 2 * k < a.size(); ++k) {
        const double even = static_cast<double>(2 * k);
        t.add((even - 1.0) * a[2 * k - 1] - even * a[2 * k], 2 * k);
    }
    return t.report();
}

CriterionReport check_belov(std::span<const double> a)
{
    if (a.size() < 2)
        throw SizeError("check_belov: need at least 2 coefficients");
    require_positive(a, "check_belov");
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i + 1] > a[i])
            monotone = false;

    SlackTracker t;
    std::vector<double> sums;
    sums.reserve(a.size() - 1);
    double s = a[0]; // m = 1
    for (std::size_t m = 2; m <= a.size(); ++m) {
        const double term = static_cast<double>(m) * a[m - 1];
        s += (m % 2 == 0) ? -term : term;
        sums.push_back(s);
        t.add(s, m);
    }
    CriterionReport r = t.report();
    r.partial_sums = std::move(sums);
    if (!monotone)
        r.note = "warning: coefficients are not non-increasing; the Belov criterion "
                 "assumes a decreasing sequence";
    return r;
}

CriterionReport check_belov(const CoefficientSequence& seq)
{
    const auto a = sine_part(seq);
    return check_belov(std::span<const double>(a));
}

CriterionReport check_chain_condition(const CoefficientSequence& seq, double alpha,
                                      double beta, double lambda, double mu)
{
    const auto& a = seq.values;
    if (a.size() < 2)
        throw SizeError("check_chain_condition: need a_0 and a_1");
    require_positive(a, "check_chain_condition");
    SlackTracker t;
    t.add(a[0] / 2.0 - a[1], 1);
    double prev = a[1];
    for (std::size_t k = 2; k < a.size(); ++k) {
        const double kk = static_cast<double>(k);
        const double w = std::pow(kk + alpha, lambda) * std::pow(kk + beta, mu);
        const double cur = w * a[k];
        t.add(prev - cur, k);
        prev = cur;
    }
    return t.report();
}

CriterionReport check_cor34_condition(const CoefficientSequence& seq, double b, double c,
                                      double alpha)
{
    const auto& a = seq.values;
    if (a.empty())
        throw SizeError("check_cor34_condition: empty sequence");
    if (!(c > 0.0) || !(b >= c))
        throw DomainError("check_cor34_condition: requires b >= c > 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("check_cor34_condition: alpha must lie in (0, 1)");
    require_positive(a, "check_cor34_condition");
    const double n = static_cast<double>(a.size() - 1);
    SlackTracker t;
    for (std::size_t k = 1; k < a.size(); ++k) {
        const double kk = static_cast<double>(k);
        t.add(a[k - 1] - a[k], k);
        t.add((c + n - kk) * (kk - alpha) * a[k - 1] - (b + n - kk) * kk * a[k], k);
    }
    return t.report();
}

} // namespace postrig

#include "postrig/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

#include "postrig/error.hpp"
#include "postrig/parallel.hpp"
#include "postrig/specfun.hpp"

namespace postrig {

namespace {

constexpr int taylor_order = 3;
constexpr double vanish_rel = 1e-12;

struct Sample
{
    double x = 0.0;
    std::array<double, taylor_order + 1> d{};
};

struct Cell
{
    std::size_t left = 0;
    std::size_t right = 0;
    int depth = 0;
};

Sample sample_at(const DerivativeEvaluator& ev, double x)
{
    Sample s;
    s.x = x;
    ev.evaluate(x, s.d);
    return s;
}

// Minimum over delta in [0, h] of c0 + c1 d + c2 d^2 / 2 + c3 d^3 / 6.
double cubic_min(double c0, double c1, double c2, double c3, double h)
{
    auto p = [&](double t) { return c0 + t * (c1 + t * (c2 / 2.0 + t * c3 / 6.0)); };
    double m = std::min(p(0.0), p(h));
    // p'(t) = c1 + c2 t + c3 t^2 / 2
    const double A = c3 / 2.0, B = c2, C = c1;
    auto consider = [&](double t) {
        if (t > 0.0 && t < h)
            m = std::min(m, p(t));
    };
    if (A == 0.0) {
        if (B != 0.0)
            consider(-C / B);
    } else {
        const double disc = B * B - 4.0 * A * C;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            const double q = -0.5 * (B + (B >= 0.0 ? sq : -sq));
            consider(q / A);
            if (q != 0.0)
                consider(C / q);
        }
    }
    return m;
}

struct Bounder
{
    double lipschitz;
    double m4;
    double rounding;

    double operator()(const Sample& a, const Sample& b) const
    {
        const double h = b.x - a.x;
        const double rem = m4 * h * h * h * h / 24.0;
        const double lip = 0.5 * (a.d[0] + b.d[0]) - 0.5 * lipschitz * h;
        const double left = cubic_min(a.d[0], a.d[1], a.d[2], a.d[3], h) - rem;
        const double right = cubic_min(b.d[0], -b.d[1], b.d[2], -b.d[3], h) - rem;
        double lb = std::max({lip, left, right}) - rounding;
        return std::min({lb, a.d[0], b.d[0]});
    }
};

bool better_witness(double v, double x, double bv, double bx)
{
    return v < bv || (v == bv && x < bx);
}

// Inspects an endpoint; dir = +1 looks right of lo, -1 looks left of hi.
EndpointInfo analyze_endpoint(const DerivativeEvaluator& ev, double e, int dir, double eps)
{
    EndpointInfo info;
    info.theta = e;
    std::array<double, taylor_order + 1> d{};
    ev.evaluate(e, d);
    info.value = d[0];
    if (std::abs(d[0]) > vanish_rel * ev.bound(0))
        return info;
    info.vanishes = true;
    // one-sided derivatives in the inward direction
    for (int j = 1; j <= taylor_order; j += 2)
        d[static_cast<std::size_t>(j)] *= dir;
    for (int j = 1; j <= taylor_order; ++j) {
        if (std::abs(d[static_cast<std::size_t>(j)]) > vanish_rel * ev.bound(j)) {
            info.order = j;
            info.slope = d[static_cast<std::size_t>(j)];
            break;
        }
    }
    if (info.order == 0 || info.slope < 0.0)
        return info;

    // f(e + dir t) >= t^m [ d_m/m! - sum_{j>m} |d_j| t^{j-m}/j! - M4 t^{4-m}/24 ]
    const int m = info.order;
    const double m4 = ev.bound(taylor_order + 1);
    auto lead = [&](double t) {
        double fact = 1.0;
        for (int j = 2; j <= m; ++j)
            fact *= j;
        double g = info.slope / fact;
        for (int j = m + 1; j <= taylor_order; ++j) {
            fact *= j;
            g -= std::abs(d[static_cast<std::size_t>(j)]) * std::pow(t, j - m) / fact;
        }
        return g - m4 * std::pow(t, 4 - m) / 24.0;
    };
    double t = eps;
    for (int i = 0; i < 60 && t > 0.0; ++i, t *= 0.5) {
        if (lead(t) > 0.0) {
            info.margin = t;
            return info;
        }
    }
    return info;
}

std::optional<Witness> endpoint_witness(const TrigPolynomial& poly, double e, int dir, double width)
{
    for (int j = 0; j < 60; ++j) {
        const double x = e + dir * std::ldexp(width, -j);
        const double v = evaluate(poly, x);
        if (v <= 0.0)
            return Witness{x, v};
    }
    return std::nullopt;
}

std::string describe(const EndpointInfo& e, const char* name)
{
    std::ostringstream os;
    os.precision(17);
    os << name << "=" << e.theta << ": ";
    if (!e.vanishes) {
        os << "value " << e.value << " (does not vanish)";
        return os.str();
    }
    os << "sum vanishes";
    if (e.order == 0) {
        os << "; derivatives up to order " << taylor_order << " vanish too, not settled";
        return os.str();
    }
    os << "; first non-vanishing inward derivative has order " << e.order << ", value "
       << e.slope;
    if (e.slope < 0.0)
        os << " (negative: sum dips below zero next to the endpoint)";
    else if (e.margin > 0.0)
        os << "; positive on a strip of width " << e.margin << " by Taylor bound";
    else
        os << "; Taylor bound could not settle a strip";
    return os.str();
}

bool is_pure_sine(const TrigPolynomial& p)
{
    return p.shift == 0.0 && p.stride == 1 && p.a0 == 0.0
           && std::all_of(p.cos_coeffs.begin(), p.cos_coeffs.end(), [](double c) { return c == 0.0; });
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::certified_positive: return "certified-positive";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

double lipschitz_bound(const TrigPolynomial& poly)
{
    return DerivativeEvaluator(poly, 0).bound(1);
}

double sine_slope_at_zero(const TrigPolynomial& poly)
{
    double s = 0.0;
    for (std::size_t k = 0; k < poly.sin_coeffs.size(); ++k)
        s += static_cast<double>(k + 1) * poly.sin_coeffs[k];
    return s;
}

double sine_slope_at_pi(const TrigPolynomial& poly)
{
    double s = 0.0;
    for (std::size_t k = 0; k < poly.sin_coeffs.size(); ++k) {
        const double t = static_cast<double>(k + 1) * poly.sin_coeffs[k];
        s += (k % 2 == 0) ? t : -t;
    }
    return s;
}

PositivityReport certify_positive(const TrigPolynomial& poly, double lo, double hi,
                                  const CertifyOptions& opts)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw DomainError("certify_positive: requires finite lo < hi");
    if (!(opts.boundary_eps > 0.0) || !(opts.boundary_eps < (hi - lo) / 4.0))
        throw DomainError("certify_positive: boundary margin must lie in (0, (hi - lo) / 4)");
    if (opts.grid < 1 || opts.max_depth < 0)
        throw DomainError("certify_positive: grid must be >= 1 and depth >= 0");

    const DerivativeEvaluator ev(poly, taylor_order);
    const int threads = resolve_threads(opts.threads);

    PositivityReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.lipschitz = ev.bound(1);
    rep.lo_end = analyze_endpoint(ev, lo, +1, opts.boundary_eps);
    rep.hi_end = analyze_endpoint(ev, hi, -1, opts.boundary_eps);
    {
        std::ostringstream os;
        os.precision(17);
        os << describe(rep.lo_end, "lo") << "; " << describe(rep.hi_end, "hi");
        if (is_pure_sine(poly))
            os << "; sine slopes: at 0 sum k b_k = " << sine_slope_at_zero(poly)
               << ", at pi sum (-1)^(k-1) k b_k = " << sine_slope_at_pi(poly);
        rep.boundary_notes = os.str();
    }

    // A vanishing endpoint with a negative inward derivative refutes at once.
    for (const auto* end : {&rep.lo_end, &rep.hi_end}) {
        if (end->vanishes && end->order > 0 && end->slope < 0.0) {
            const int dir = end == &rep.lo_end ? +1 : -1;
            rep.witness = endpoint_witness(poly, end->theta, dir, (hi - lo) / 4.0);
            rep.verdict = rep.witness ? Verdict::refuted : Verdict::inconclusive;
            return rep;
        }
    }
    bool ends_settled = true;
    for (const auto* end : {&rep.lo_end, &rep.hi_end})
        if (end->vanishes && end->margin == 0.0)
            ends_settled = false;

    // Settled strips are excluded from the grid; unsettled ones fall back to eps.
    auto inset = [&](const EndpointInfo& e) {
        if (!e.vanishes)
            return 0.0;
        return e.margin > 0.0 ? e.margin : opts.boundary_eps;
    };
    const double a = lo + inset(rep.lo_end);
    const double b = hi - inset(rep.hi_end);

    const Bounder bound{rep.lipschitz, ev.bound(taylor_order + 1),
                        64.0 * std::numeric_limits<double>::epsilon() * ev.bound(0)};

    const auto n0 = static_cast<std::size_t>(opts.grid);
    std::vector<Sample> samples(n0 + 1);
    parallel_for(n0 + 1, threads, [&](std::size_t i) {
        const double x = i == n0 ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n0);
        samples[i] = sample_at(ev, x);
    });
    std::vector<Cell> pending(n0);
    for (std::size_t i = 0; i < n0; ++i)
        pending[i] = {i, i + 1, 0};

    double min_lb = std::numeric_limits<double>::infinity();
    double wv = std::numeric_limits<double>::infinity(), wx = 0.0;
    std::size_t scanned = 0;
    for (int depth = 0;; ++depth) {
        for (; scanned < samples.size(); ++scanned) {
            const auto& s = samples[scanned];
            if (better_witness(s.d[0], s.x, wv, wx)) {
                wv = s.d[0];
                wx = s.x;
            }
        }
        rep.grid_points = static_cast<long>(samples.size());
        rep.refinement_depth = depth;
        if (wv <= 0.0) {
            rep.verdict = Verdict::refuted;
            rep.witness = Witness{wx, wv};
            return rep;
        }
        std::vector<Cell> failing;
        for (const auto& c : pending) {
            const double lb = bound(samples[c.left], samples[c.right]);
            if (lb > 0.0)
                min_lb = std::min(min_lb, lb);
            else
                failing.push_back(c);
        }
        if (failing.empty()) {
            rep.lower_bound = min_lb;
            rep.verdict = ends_settled ? Verdict::certified_positive : Verdict::inconclusive;
            return rep;
        }
        if (depth == opts.max_depth) {
            double worst = min_lb;
            for (const auto& c : failing)
                worst = std::min(worst, bound(samples[c.left], samples[c.right]));
            rep.lower_bound = worst;
            rep.verdict = Verdict::inconclusive;
            return rep;
        }
        const std::size_t base = samples.size();
        samples.resize(base + failing.size());
        parallel_for(failing.size(), threads, [&](std::size_t i) {
            const double x = 0.5 * (samples[failing[i].left].x + samples[failing[i].right].x);
            samples[base + i] = sample_at(ev, x);
        });
        pending.clear();
        for (std::size_t i = 0; i < failing.size(); ++i) {
            pending.push_back({failing[i].left, base + i, depth + 1});
            pending.push_back({base + i, failing[i].right, depth + 1});
        }
    }
}

MinResult find_min(const TrigPolynomial& poly, double lo, double hi, const CertifyOptions& opts)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw DomainError("find_min: requires finite lo < hi");
    validate(poly);
    const DerivativeEvaluator ev(poly, 0);
    auto f = [&](double x) { return ev.value(x); };
    const double tol = vanish_rel * ev.bound(0);
    const double eps = std::min(opts.boundary_eps, (hi - lo) / 4.0);
    const double a = std::abs(f(lo)) <= tol ? lo + eps : lo;
    const double b = std::abs(f(hi)) <= tol ? hi - eps : hi;

    const auto n = static_cast<std::size_t>(std::max(opts.grid, 2));
    std::vector<double> xs(n + 1), vs(n + 1);
    parallel_for(n + 1, resolve_threads(opts.threads), [&](std::size_t i) {
        xs[i] = i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
        vs[i] = f(xs[i]);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (vs[i] < vs[best])
            best = i;

    // Golden section on the two cells around the best sample.
    double l = xs[best == 0 ? 0 : best - 1];
    double r = xs[best == n ? n : best + 1];
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = r - g * (r - l), x2 = l + g * (r - l);
    double f1 = f(x1), f2 = f(x2);
    while (r - l > 1e-10) {
        if (f1 <= f2) {
            r = x2;
            x2 = x1;
            f2 = f1;
            x1 = r - g * (r - l);
            f1 = f(x1);
        } else {
            l = x1;
            x1 = x2;
            f1 = f2;
            x2 = l + g * (r - l);
            f2 = f(x2);
        }
    }
    double xm = 0.5 * (l + r);
    double fm = f(xm);

    // Values are flat to roundoff within ~sqrt(eps) of a smooth minimum, so
    // the argmin is polished by bisection on f'.
    const DerivativeEvaluator dev(poly, 1);
    auto df = [&](double x) {
        double d[2];
        dev.evaluate(x, d);
        return d[1];
    };
    double bl = std::max(a, xm - 1e-7), br = std::min(b, xm + 1e-7);
    if (df(bl) < 0.0 && df(br) > 0.0) {
        for (int it = 0; it < 80 && br - bl > 1e-15 * std::max(1.0, std::abs(xm)); ++it) {
            const double mid = 0.5 * (bl + br);
            (df(mid) < 0.0 ? bl : br) = mid;
        }
        const double xr = 0.5 * (bl + br);
        const double fr = f(xr);
        if (fr <= fm + 4.0 * std::numeric_limits<double>::epsilon() * ev.bound(0)) {
            xm = xr;
            fm = fr;
        }
    }
    if (better_witness(fm, xm, vs[best], xs[best]))
        return {xm, fm};
    return {xs[best], vs[best]};
}

TrigPolynomial zero_polynomial(ZeroKind kind, const std::vector<double>& a)
{
    if (a.empty())
        throw SizeError("zero_polynomial: empty coefficient list");
    TrigPolynomial poly;
    const std::size_t len = a.size();
    if (kind == ZeroKind::p) {
        // sum_j a_{n-j} cos(j theta), n = len - 1
        poly.a0 = 2.0 * a[len - 1];
        for (std::size_t j = 1; j < len; ++j)
            poly.cos_coeffs.push_back(a[len - 1 - j]);
    } else {
        // sum_j a_{len-j} sin(j theta), j = 1..len
        for (std::size_t j = 1; j <= len; ++j)
            poly.sin_coeffs.push_back(a[len - j]);
    }
    return poly;
}

ZeroBracketList bracket_zeros(ZeroKind kind, const std::vector<double>& a, double lo, double hi,
                              int grid)
{
    if (a.empty())
        throw SizeError("bracket_zeros: empty coefficient list");
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw DomainError("bracket_zeros: requires finite lo < hi");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!std::isfinite(a[k]) || !(a[k] > 0.0))
            throw DomainError("bracket_zeros: coefficients must be positive");
        if (k == 1 && !(a[0] > a[1]))
            throw DomainError("bracket_zeros: a_0 > a_1 violated");
        if (k > 1 && !(a[k - 1] >= a[k]))
            throw DomainError("bracket_zeros: coefficients must be non-increasing");
    }
    const long n = kind == ZeroKind::p ? static_cast<long>(a.size()) - 1 : static_cast<long>(a.size());
    if (grid == 0)
        grid = static_cast<int>(std::max<long>(16 * n, 1024));
    if (grid < 16 * n || grid < 2)
        throw DomainError("bracket_zeros: grid must be at least 16 n");

    const TrigPolynomial poly = zero_polynomial(kind, a);
    double total = 0.0;
    for (double x : a)
        total += x;
    const double zero_tol = 1e-14 * total;
    auto f = [&](double x) { return evaluate(poly, x); };

    ZeroBracketList out;
    out.kind = kind;
    const auto N = static_cast<std::size_t>(grid);
    std::optional<std::pair<double, double>> last; // last sample that is clearly non-zero
    for (std::size_t i = 0; i <= N; ++i) {
        const double x = i == N ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(N);
        const double v = f(x);
        if (std::abs(v) <= zero_tol)
            continue;
        if (last && (last->second > 0.0) != (v > 0.0)) {
            ZeroBracket br;
            br.lo = last->first;
            br.hi = x;
            br.sign_lo = last->second > 0.0 ? 1 : -1;
            br.sign_hi = v > 0.0 ? 1 : -1;
            br.root = brent_root(f, br.lo, br.hi, 1e-14);
            out.brackets.push_back(br);
        }
        last = {x, v};
    }
    return out;
}

int resolve_threads(int requested)
{
    if (const char* env = std::getenv("POSTRIG_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(std::min<long>(v, 256));
    }
    if (requested <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return requested;
}

} // namespace postrig

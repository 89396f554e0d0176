#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "postrig/certify.hpp"
#include "postrig/error.hpp"
#include "postrig/seqkit.hpp"

using namespace postrig;
using std::numbers::pi;

namespace {

TrigPolynomial fig1_sine(int n)
{
    const auto q = qk_sequence(n, .2, .4, .3, .7).values;
    return sine_polynomial({q.begin() + 1, q.end()});
}

TrigPolynomial fig1_cosine(int n)
{
    const auto q = qk_sequence(n, .2, .4, .3, .7).values;
    return cosine_polynomial(q[0], {q.begin() + 1, q.end()});
}

// Minimum over a uniform grid ten times finer than the certifier's, on the
// part of the interval the report covers by sampling.
double finer_scan_min(const TrigPolynomial& p, const PositivityReport& r, int grid)
{
    const double a = r.lo + r.lo_end.margin;
    const double b = r.hi - r.hi_end.margin;
    const int m = 10 * grid;
    double lo = INFINITY;
    for (int i = 0; i <= m; ++i)
        lo = std::min(lo, evaluate(p, a + (b - a) * i / m));
    return lo;
}

} // namespace

TEST_CASE("lipschitz_bound")
{
    CHECK(lipschitz_bound(sine_polynomial({1, 0.5})) == 2.0);
    CHECK(lipschitz_bound(cosine_polynomial(3.0, {})) == 0.0);
    CHECK(lipschitz_bound(shifted_cosine(std::vector<double>{1, 1}, 0.25, 2)) == doctest::Approx(0.25 + 2.25));

    const auto q = qk_sequence(40, .2, .4, .3, .7).values;
    const auto p = fig1_cosine(40);
    const double L = lipschitz_bound(p);
    double brute = 0, sampled = 0;
    for (std::size_t k = 1; k < q.size(); ++k)
        brute += static_cast<double>(k) * std::abs(q[k]);
    for (int i = 0; i <= 10000; ++i) {
        const double t = 2 * pi * i / 10000;
        double d = 0;
        for (std::size_t k = 1; k < q.size(); ++k)
            d -= static_cast<double>(k) * q[k] * std::sin(static_cast<double>(k) * t);
        sampled = std::max(sampled, std::abs(d));
    }
    CHECK(L == doctest::Approx(brute).epsilon(1e-14));
    CHECK(L >= sampled);
}

TEST_CASE("sine slopes")
{
    const auto p = sine_polynomial({1, 1});
    CHECK(sine_slope_at_zero(p) == 3.0);
    CHECK(sine_slope_at_pi(p) == -1.0);
}

TEST_CASE("certify sin on (0, pi)")
{
    const auto p = sine_polynomial({1});
    const auto r = certify_positive(p, 0, pi);
    CHECK(r.verdict == Verdict::certified_positive);
    CHECK(r.lower_bound > 0.99 * std::sin(1e-4));
    CHECK(r.lo_end.vanishes);
    CHECK(r.hi_end.vanishes);
    CHECK(r.lo_end.order == 1);
    CHECK(r.lipschitz == 1.0);
    CHECK_FALSE(r.witness);
    CHECK_FALSE(r.boundary_notes.empty());
}

TEST_CASE("certify figure 1 sums")
{
    for (int n : {20, 30, 40}) {
        for (const auto& p : {fig1_sine(n), fig1_cosine(n)}) {
            const auto r = certify_positive(p, 0, pi);
            INFO("n = " << n);
            REQUIRE(r.verdict == Verdict::certified_positive);
            CHECK(r.lower_bound > 0);
            CHECK(finer_scan_min(p, r, 4096) >= r.lower_bound);
        }
    }
}

TEST_CASE("refutation of sin t + sin 2t")
{
    const auto p = sine_polynomial({1, 1});
    const auto r = certify_positive(p, 0, pi);
    REQUIRE(r.verdict == Verdict::refuted);
    REQUIRE(r.witness);
    CHECK(r.witness->value <= 0);
    CHECK(r.witness->theta >= 0);
    CHECK(r.witness->theta <= pi);
    CHECK(r.witness->theta > 2 * pi / 3);
    CHECK(evaluate(p, r.witness->theta) <= 0);
    // closed form sin t (1 + 2 cos t)
    const double t = r.witness->theta;
    CHECK(r.witness->value == doctest::Approx(std::sin(t) * (1 + 2 * std::cos(t))).epsilon(1e-12));
}

TEST_CASE("refutation through a vanishing endpoint with negative slope")
{
    // sum b_k sin kt with a negative slope at pi only
    const auto p = sine_polynomial({1, 0.6});
    CHECK(sine_slope_at_pi(p) < 0);
    const auto r = certify_positive(p, 0, pi);
    REQUIRE(r.verdict == Verdict::refuted);
    CHECK(evaluate(p, r.witness->theta) <= 0);
    CHECK(r.witness->theta > pi / 2);
}

TEST_CASE("interior strict positivity with no vanishing endpoints")
{
    const auto p = cosine_polynomial(3.0, {1.0}); // 1.5 + cos t
    const auto r = certify_positive(p, 0, 2 * pi);
    REQUIRE(r.verdict == Verdict::certified_positive);
    CHECK(r.lower_bound <= 0.5);
    CHECK(r.lower_bound > 0.49);
    CHECK_FALSE(r.lo_end.vanishes);
    CHECK(r.lo_end.margin == 0.0);
}

TEST_CASE("near-touching minimum ends inconclusive")
{
    // (cos t - cos 1)^2 + 1e-13, min 1e-13 at t = 1
    const double c = std::cos(1.0);
    const auto p = cosine_polynomial(2 * (0.5 + c * c + 1e-13), {-2 * c, 0.5});
    CertifyOptions o;
    o.grid = 64;
    o.max_depth = 2;
    const auto r = certify_positive(p, 0.5, 1.7, o);
    CHECK(r.verdict == Verdict::inconclusive);
    CHECK_FALSE(r.witness);
    CHECK(r.refinement_depth <= 2);
}

TEST_CASE("certify argument errors")
{
    const auto p = sine_polynomial({1});
    CHECK_THROWS_AS(certify_positive(p, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(certify_positive(p, 2.0, 1.0), DomainError);
    CertifyOptions o;
    o.boundary_eps = 1.0;
    CHECK_THROWS_AS(certify_positive(p, 0, pi, o), DomainError);
    o.boundary_eps = 0.0;
    CHECK_THROWS_AS(certify_positive(p, 0, pi, o), DomainError);
}

TEST_CASE("reports are identical across thread counts")
{
    const auto p = fig1_sine(40);
    CertifyOptions o;
    o.threads = 1;
    const auto r1 = certify_positive(p, 0, pi, o);
    for (int t : {2, 4, 8}) {
        o.threads = t;
        const auto rt = certify_positive(p, 0, pi, o);
        CHECK(rt.verdict == r1.verdict);
        CHECK(rt.lower_bound == r1.lower_bound);
        CHECK(rt.grid_points == r1.grid_points);
        CHECK(rt.refinement_depth == r1.refinement_depth);
        CHECK(rt.boundary_notes == r1.boundary_notes);
    }
}

TEST_CASE("theorem 2.6 negated derivative certified")
{
    for (int n : {1, 2, 5, 20, 100}) {
        const auto p = theorem26_negated_derivative(n, .2, .4, .3, .7);
        const auto r = certify_positive(p, 0, pi);
        INFO("n = " << n);
        CHECK(r.verdict == Verdict::certified_positive);
    }
}

TEST_CASE("find_min")
{
    const auto s = find_min(sine_polynomial({1}), 0, pi);
    CHECK(s.theta == doctest::Approx(1e-4).epsilon(1e-6));
    CHECK(s.value == doctest::Approx(std::sin(1e-4)).epsilon(1e-6));

    const auto c = find_min(cosine_polynomial(0, {1}), 0, pi);
    CHECK(c.theta == doctest::Approx(pi).epsilon(1e-8));
    CHECK(c.value == doctest::Approx(-1.0).epsilon(1e-12));

    // interior minimum against a dense scan plus the closed form
    const auto q = find_min(cosine_polynomial(0, {1}), 1, 5);
    CHECK(std::abs(q.theta - pi) <= 1e-8);

    const auto p = fig1_cosine(30);
    const auto m = find_min(p, 0, pi);
    double dense = INFINITY;
    for (int i = 0; i <= 200000; ++i)
        dense = std::min(dense, evaluate(p, pi * i / 200000));
    CHECK(m.value > 0);
    CHECK(m.value <= dense + 1e-12);
    CHECK(m.value >= dense - 1e-6);
}

TEST_CASE("find_min prefers the smallest theta among ties")
{
    // cos 2t has equal minima at pi/2 and 3pi/2
    const auto r = find_min(cosine_polynomial(0, {0, 1}), 0, 2 * pi);
    CHECK(r.theta == doctest::Approx(pi / 2).epsilon(1e-8));
}

TEST_CASE("bracket_zeros examples")
{
    const auto none = bracket_zeros(ZeroKind::p, {1}, 0, 2 * pi);
    CHECK(none.brackets.empty());

    const auto q = bracket_zeros(ZeroKind::q, {1}, 0.1, 2 * pi - 0.1);
    REQUIRE(q.brackets.size() == 1);
    CHECK(q.brackets[0].lo < pi);
    CHECK(q.brackets[0].hi > pi);
    CHECK(q.brackets[0].root == doctest::Approx(pi).epsilon(1e-12));

    const auto p = bracket_zeros(ZeroKind::p, {2, 1}, 0, 2 * pi);
    REQUIRE(p.brackets.size() == 2);
    CHECK(p.brackets[0].root == doctest::Approx(2 * pi / 3).epsilon(1e-12));
    CHECK(p.brackets[1].root == doctest::Approx(4 * pi / 3).epsilon(1e-12));

    CHECK_THROWS_AS(bracket_zeros(ZeroKind::p, {1, 2}, 0, 2 * pi), DomainError);
    CHECK_THROWS_AS(bracket_zeros(ZeroKind::p, {1, 1}, 0, 2 * pi), DomainError);
    CHECK_THROWS_AS(bracket_zeros(ZeroKind::p, {2, 1, 0}, 0, 2 * pi), DomainError);
    CHECK_THROWS_AS(bracket_zeros(ZeroKind::p, {3, 2, 1}, 0, 2 * pi, 8), DomainError);
}

TEST_CASE("bracket_zeros invariants")
{
    const auto a = koumandos_bk(20, 0.4).values;
    std::vector<double> coeffs = {2.0};
    coeffs.insert(coeffs.end(), a.begin() + 1, a.end());
    for (auto kind : {ZeroKind::p, ZeroKind::q}) {
        const auto z = bracket_zeros(kind, coeffs, 0.01, 2 * pi - 0.01);
        const auto poly = zero_polynomial(kind, coeffs);
        CHECK_FALSE(z.brackets.empty());
        for (std::size_t i = 0; i < z.brackets.size(); ++i) {
            const auto& b = z.brackets[i];
            CHECK(b.sign_lo * b.sign_hi < 0);
            CHECK(b.lo < b.hi);
            CHECK(b.root >= b.lo);
            CHECK(b.root <= b.hi);
            CHECK(std::abs(evaluate(poly, b.root)) <= 1e-12);
            CHECK((evaluate(poly, b.lo) > 0 ? 1 : -1) == b.sign_lo);
            if (i > 0)
                CHECK(z.brackets[i - 1].hi <= b.lo);
        }
    }
}

TEST_CASE("zero_polynomial layout")
{
    const std::vector<double> a{3, 2, 1};
    const auto p = zero_polynomial(ZeroKind::p, a);
    const auto q = zero_polynomial(ZeroKind::q, a);
    for (double t : {0.3, 1.9, 4.4}) {
        CHECK(evaluate(p, t) == doctest::Approx(3 * std::cos(2 * t) + 2 * std::cos(t) + 1).epsilon(1e-14));
        CHECK(evaluate(q, t) == doctest::Approx(3 * std::sin(3 * t) + 2 * std::sin(2 * t) + std::sin(t)).epsilon(1e-14));
    }
}

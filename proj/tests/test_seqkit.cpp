#include <doctest.h>

#include <cmath>
#include <vector>

#include "postrig/error.hpp"
#include "postrig/seqkit.hpp"
#include "postrig/specfun.hpp"

using namespace postrig;

namespace {

void check_values(const CoefficientSequence& s, const std::vector<double>& expected, double tol = 1e-15)
{
    REQUIRE(s.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(s[i] == doctest::Approx(expected[i]).epsilon(tol));
}

} // namespace

TEST_CASE("pochhammer forward product")
{
    CHECK(pochhammer(0.5, 0) == 1.0);
    CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
    CHECK(pochhammer(-2.0, 3) == 0.0);
    // Gamma-ratio cross-check on positive arguments
    for (double x : {0.3, 1.7, 4.2})
        for (int k : {1, 5, 12})
            CHECK(pochhammer(x, k) == doctest::Approx(gamma_fn(x + k) / gamma_fn(x)).epsilon(1e-12));
}

TEST_CASE("vietoris_gamma")
{
    check_values(vietoris_gamma(1), {1, 1});
    check_values(vietoris_gamma(3), {1, 1, 0.5, 0.5});
    check_values(vietoris_gamma(5), {1, 1, 0.5, 0.5, 0.375, 0.375});
    CHECK(vietoris_gamma(0).size() == 1);
    CHECK(vietoris_gamma(4).family == Family::vietoris);
}

TEST_CASE("qk_sequence")
{
    check_values(qk_sequence(2, 0, 0, 1, 0), {2, 1, 0.5});
    check_values(qk_sequence(3, 0, 0, 0, 0), {2, 1, 1, 1});
    const auto s = qk_sequence(4, .2, .4, .3, .7);
    REQUIRE(s.size() == 5);
    for (int k = 2; k <= 4; ++k) {
        const double direct = std::pow(k + .2, -.3) * std::pow(k + .4, -.7);
        const double via_log = std::exp(-.3 * std::log(k + .2) - .7 * std::log(k + .4));
        CHECK(s[static_cast<std::size_t>(k)] == doctest::Approx(direct).epsilon(1e-15));
        CHECK(s[static_cast<std::size_t>(k)] == doctest::Approx(via_log).epsilon(1e-14));
    }
    CHECK(s.params.at("alpha") == .2);
    CHECK_THROWS_AS(qk_sequence(0, 0, 0, 1, 0), DomainError);
    CHECK_THROWS_AS(qk_sequence(3, -1, 0, 1, 0), DomainError);
}

TEST_CASE("ratio_qk_sequence")
{
    check_values(ratio_qk_sequence(2, 1, 2, .5, 1.5), {1, std::sqrt(3.0) / std::pow(4.0, 1.5)});
    const auto s = ratio_qk_sequence(3, 1, 2, .5, 1.5);
    CHECK(s[2] == doctest::Approx(2.0 / std::pow(5.0, 1.5)));
    CHECK(s[0] > s[1]);
    CHECK(s[1] > s[2]);
    CHECK_THROWS_AS(ratio_qk_sequence(3, 2, 1, .5, 1.5), DomainError);
    CHECK_THROWS_AS(ratio_qk_sequence(3, 1, 2, .5, 1.2), DomainError);
    CHECK_THROWS_AS(ratio_qk_sequence(3, 1, 2, 2.0, 3.0), DomainError);
}

TEST_CASE("ratio_qk_sequence decreases on random admissible parameters")
{
    doctest::String fail;
    for (double a : {0.1, 0.5, 2.0})
        for (double gap : {0.2, 1.0})
            for (double l : {0.1, 0.7}) {
                const double b = a + gap;
                const double m = 1.0 + l + 0.3;
                if (l * b - a * m >= 0)
                    continue;
                const auto s = ratio_qk_sequence(200, a, b, l, m);
                for (std::size_t k = 1; k < s.size(); ++k)
                    CHECK(s[k] < s[k - 1]);
            }
}

TEST_CASE("koumandos_bk")
{
    check_values(koumandos_bk(3, 0.5), {1, 1, 0.5, 0.5});
    const auto t = koumandos_bk(3, 1 - 1e-12);
    CHECK(t[2] == doctest::Approx(1e-12).epsilon(1e-3));
    CHECK(t[3] == t[2]);
    const auto s = koumandos_bk(5, 0.3084437);
    const double x = 0.6915563;
    CHECK(s[4] == doctest::Approx(x * (x + 1) / 2).epsilon(1e-14));
    CHECK(s[4] == doctest::Approx(gamma_fn(x + 2) / gamma_fn(x) / 2).epsilon(1e-12));
    CHECK_THROWS_AS(koumandos_bk(3, 0.0), DomainError);
    CHECK_THROWS_AS(koumandos_bk(3, 1.0), DomainError);
}

TEST_CASE("ck_sequence")
{
    SUBCASE("b = c = 1 reproduces koumandos")
    {
        for (int n : {0, 1, 7, 40})
            for (double a : {0.2, 0.5, 0.9}) {
                const auto ck = ck_sequence(n, a, 1, 1);
                const auto kb = koumandos_bk(2 * n + 1, a);
                REQUIRE(ck.size() == kb.size());
                for (std::size_t i = 0; i < ck.size(); ++i)
                    CHECK(ck[i] == doctest::Approx(kb[i]).epsilon(1e-14));
            }
    }
    SUBCASE("hand evaluation n = 1, b = 2, c = 1")
    {
        check_values(ck_sequence(1, 0.5, 2, 1), {1, 1, 0.25, 0.25});
    }
    SUBCASE("b = c = 2 doubles only the last pair")
    {
        const double a = 0.4;
        const int n = 5;
        const auto ck = ck_sequence(n, a, 2, 2);
        const auto kb = koumandos_bk(2 * n + 1, a);
        for (std::size_t i = 0; i + 2 < ck.size(); ++i)
            CHECK(ck[i] == doctest::Approx(kb[i]).epsilon(1e-14));
        CHECK(ck[2 * n] == doctest::Approx(2 * kb[2 * n]).epsilon(1e-14));
        CHECK(ck[2 * n + 1] == doctest::Approx(2 * kb[2 * n + 1]).epsilon(1e-14));
    }
    CHECK(ck_sequence(6, 0.3, 2, 1).size() == 14);
    CHECK_THROWS_AS(ck_sequence(3, 0.3, 1, 2), DomainError);
    CHECK_THROWS_AS(ck_sequence(3, 0.3, 1, 0), DomainError);
    CHECK_THROWS_AS(ck_sequence(3, 1.3, 2, 1), DomainError);
}

TEST_CASE("pairing is bit exact")
{
    auto pairs_equal = [](const CoefficientSequence& s) {
        for (std::size_t k = 0; 2 * k + 1 < s.size(); ++k)
            if (s[2 * k] != s[2 * k + 1])
                return false;
        return true;
    };
    CHECK(pairs_equal(vietoris_gamma(2001)));
    CHECK(pairs_equal(koumandos_bk(999, 0.37)));
    CHECK(pairs_equal(ck_sequence(300, 0.61, 2.7, 1.3)));
    CHECK(pairs_equal(ck_sequence(300, 0.05, 1.0, 1.0)));
}

TEST_CASE("ck strictly decreases across odd to even steps when b > c")
{
    for (double b : {1.1, 1.5, 2.0, 3.0})
        for (double a : {0.1, 0.5, 0.9}) {
            const auto s = ck_sequence(60, a, b, 1.0);
            for (int k = 1; k <= 60; ++k)
                CHECK(s[static_cast<std::size_t>(2 * k - 1)] > s[static_cast<std::size_t>(2 * k)]);
        }
}

TEST_CASE("pair_values and sine_part")
{
    const auto s = ck_sequence(2, 0.5, 1, 1);
    const auto e = pair_values(s);
    REQUIRE(e.size() == 3);
    CHECK(e[0] == s[0]);
    CHECK(e[2] == s[4]);
    CHECK(sine_part(s).size() == s.size() - 1);
    CHECK(sine_part(ratio_qk_sequence(4, 1, 2, .5, 1.5)).size() == 4);
}

TEST_CASE("check_vietoris")
{
    const auto r = check_vietoris(vietoris_gamma(5));
    CHECK(r.satisfied);
    CHECK(r.margin == 0.0);
    CHECK_FALSE(r.first_violation_index);

    const auto bad = check_vietoris(custom_sequence({1, 1, 0.9}));
    CHECK_FALSE(bad.satisfied);
    REQUIRE(bad.first_violation_index);
    CHECK(*bad.first_violation_index == 2);
    CHECK(bad.margin < 0);

    // a_k = 1/k for k >= 1 saturates 2k a_{2k} <= (2k-1) a_{2k-1}
    const auto h = check_vietoris(qk_sequence(50, 0, 0, 1, 0));
    CHECK(h.satisfied);
    CHECK(h.margin == doctest::Approx(0.0).epsilon(1e-14));

    CHECK_THROWS_AS(check_vietoris(custom_sequence({1, 0, 0})), DomainError);
    CHECK_THROWS_AS(check_vietoris(custom_sequence({})), SizeError);
}

TEST_CASE("check_vietoris on vietoris_gamma up to 2000")
{
    for (int n : {1, 2, 3, 10, 101, 1000, 1999, 2000}) {
        const auto r = check_vietoris(vietoris_gamma(n));
        CHECK(r.satisfied);
        CHECK(r.margin == 0.0);
    }
}

TEST_CASE("check_belov")
{
    std::vector<double> harmonic;
    for (int k = 1; k <= 30; ++k)
        harmonic.push_back(1.0 / k);
    const auto r = check_belov(custom_sequence(harmonic));
    CHECK(r.satisfied);
    REQUIRE(r.partial_sums);
    REQUIRE(r.partial_sums->size() == 29);
    for (std::size_t i = 0; i < r.partial_sums->size(); ++i)
        CHECK((*r.partial_sums)[i] == doctest::Approx(i % 2 == 0 ? 0.0 : 1.0));

    const auto bad = check_belov(custom_sequence({1, 1}));
    CHECK_FALSE(bad.satisfied);
    REQUIRE(bad.first_violation_index);
    CHECK(*bad.first_violation_index == 2);
    CHECK((*bad.partial_sums)[0] == -1.0);

    CHECK(check_belov(ck_sequence(20, 0.6, 2, 1)).satisfied);
    CHECK_THROWS_AS(check_belov(custom_sequence({1})), SizeError);

    const auto warn = check_belov(custom_sequence({1, 0.2, 0.5}));
    CHECK_FALSE(warn.note.empty());
}

TEST_CASE("check_belov brute-force oracle")
{
    const auto s = ck_sequence(15, 0.42, 1.8, 1.0);
    const auto r = check_belov(s);
    const auto b = sine_part(s);
    REQUIRE(r.partial_sums);
    double acc = 0;
    for (std::size_t k = 1; k <= b.size(); ++k) {
        acc += (k % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(k) * b[k - 1];
        if (k >= 2)
            CHECK((*r.partial_sums)[k - 2] == doctest::Approx(acc).epsilon(1e-13));
    }
}

TEST_CASE("check_belov on koumandos_bk for alpha >= 1/2")
{
    for (double a : {0.5, 0.6, 0.9})
        CHECK(check_belov(koumandos_bk(2000, a)).satisfied);
    CHECK_FALSE(check_belov(koumandos_bk(2000, 0.45)).satisfied);
}

TEST_CASE("check_chain_condition")
{
    const auto q = qk_sequence(60, .2, .4, .3, .7);
    const auto r = check_chain_condition(q, .2, .4, .3, .7);
    CHECK(r.satisfied);
    CHECK(r.margin == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_FALSE(check_chain_condition(custom_sequence({2, 1, 1}), 0, 0, 1, 0).satisfied);

    std::vector<double> g;
    for (int k = 0; k < 30; ++k)
        g.push_back(2 * std::pow(4.0, -k));
    CHECK(check_chain_condition(custom_sequence(g), 0, 0, .5, .5).satisfied);

    CHECK_FALSE(check_chain_condition(custom_sequence({1, 0.9, 0.1}), 0, 0, 1, 0).satisfied);
    CHECK_THROWS_AS(check_chain_condition(custom_sequence({1, -1}), 0, 0, 1, 0), DomainError);
}

TEST_CASE("check_cor34_condition")
{
    for (int n : {1, 5, 20})
        for (double a : {0.2, 0.5, 0.8}) {
            const auto e = pair_values(koumandos_bk(2 * n + 1, a));
            CHECK(check_cor34_condition(custom_sequence(e), 1, 1, a).satisfied);
        }
    for (double b : {1.0, 1.5, 2.5})
        for (double a : {0.3, 0.7}) {
            const auto e = pair_values(ck_sequence(25, a, b, 1.0));
            CHECK(check_cor34_condition(custom_sequence(e), b, 1.0, a).satisfied);
        }
    const auto bad = check_cor34_condition(custom_sequence({1, 1}), 1, 1, 0.5);
    CHECK_FALSE(bad.satisfied);
    REQUIRE(bad.first_violation_index);
    CHECK(*bad.first_violation_index == 1);
    CHECK_THROWS_AS(check_cor34_condition(custom_sequence({1, 0.5}), 1, 2, 0.5), DomainError);
    CHECK_THROWS_AS(check_cor34_condition(custom_sequence({1, 0.5}), 1, 1, 1.5), DomainError);
}

TEST_CASE("report invariant: satisfied iff no violation index")
{
    const std::vector<CriterionReport> reports = {
        check_vietoris(custom_sequence({1, 1, 0.9})), check_vietoris(vietoris_gamma(9)),
        check_belov(custom_sequence({1, 1})),         check_belov(koumandos_bk(50, 0.7)),
        check_chain_condition(custom_sequence({2, 1, 1}), 0, 0, 1, 0),
    };
    for (const auto& r : reports)
        CHECK(r.satisfied == !r.first_violation_index.has_value());
}

#ifndef POSTRIG_CERTIFY_HPP
#define POSTRIG_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "postrig/trigeval.hpp"

namespace postrig {

enum class Verdict
{
    certified_positive,
    refuted,
    inconclusive
};

std::string to_string(Verdict v);

struct Witness
{
    double theta = 0.0;
    double value = 0.0;
};

/// One endpoint of the interval. When the sum vanishes there, order is the
/// first non-vanishing one-sided derivative and slope its value (taken in
/// the inward direction); margin is the width of the analytically settled
/// strip next to the endpoint.
struct EndpointInfo
{
    double theta = 0.0;
    double value = 0.0;
    bool vanishes = false;
    int order = 0;
    double slope = 0.0;
    double margin = 0.0;
};

struct PositivityReport
{
    Verdict verdict = Verdict::inconclusive;
    double lower_bound = 0.0;  // meaningful for certified_positive only
    std::optional<Witness> witness;
    long grid_points = 0;      // samples evaluated, all levels
    int refinement_depth = 0;  // deepest bisection level used
    double lipschitz = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    EndpointInfo lo_end;
    EndpointInfo hi_end;
    std::string boundary_notes;
};

struct CertifyOptions
{
    int grid = 4096;
    int max_depth = 8;
    double boundary_eps = 1e-4;
    int threads = 1;
};

/// sum_k (stride k + shift) (|c_k| + |s_k|): bounds |f'| uniformly.
double lipschitz_bound(const TrigPolynomial& poly);

/// Certifies f > 0 on the open interval (lo, hi) or produces a witness
/// f(theta) <= 0. Cells of an equispaced grid are bounded below by the
/// larger of the Lipschitz bound and third-order Taylor models from each
/// cell end; undecided cells are bisected up to max_depth. Endpoints where f
/// vanishes are settled from the first non-vanishing derivative there.
PositivityReport certify_positive(const TrigPolynomial& poly, double lo, double hi,
                                  const CertifyOptions& opts = {});

/// Sum of (-1)^(k-1) k b_k: f'(pi) up to sign for a pure sine sum.
double sine_slope_at_pi(const TrigPolynomial& poly);
/// Sum of k b_k: f'(0) of a pure sine sum.
double sine_slope_at_zero(const TrigPolynomial& poly);

struct MinResult
{
    double theta = 0.0;
    double value = 0.0;
};

/// Grid scan plus golden-section refinement. Endpoints where f vanishes are
/// moved inward by opts.boundary_eps, as in certify_positive.
MinResult find_min(const TrigPolynomial& poly, double lo, double hi,
                   const CertifyOptions& opts = {});

enum class ZeroKind
{
    p, // sum a_k cos((n-k) theta), n = len - 1
    q  // sum a_k sin((n-k) theta), n = len
};

struct ZeroBracket
{
    double lo = 0.0;
    double hi = 0.0;
    int sign_lo = 0;
    int sign_hi = 0;
    double root = 0.0;
};

struct ZeroBracketList
{
    ZeroKind kind = ZeroKind::p;
    std::vector<ZeroBracket> brackets;
};

/// Requires a_0 > a_1 >= ... >= a_n > 0 and grid >= 16 n (0 picks a default).
ZeroBracketList bracket_zeros(ZeroKind kind, const std::vector<double>& coeffs, double lo,
                              double hi, int grid = 0);

/// The p or q polynomial of bracket_zeros as a TrigPolynomial.
TrigPolynomial zero_polynomial(ZeroKind kind, const std::vector<double>& coeffs);

} // namespace postrig

#endif

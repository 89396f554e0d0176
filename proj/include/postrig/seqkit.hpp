#ifndef POSTRIG_SEQKIT_HPP
#define POSTRIG_SEQKIT_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace postrig {

enum class Family
{
    vietoris,
    qk,
    ratio_qk,
    koumandos,
    ck,
    custom
};

std::string to_string(Family f);

/// A finite coefficient list together with the family and parameters that
/// produced it.
///
/// Indexing follows the families' own conventions: for vietoris, qk,
/// koumandos and ck the first entry is a_0; for ratio_qk the first entry is
/// the coefficient of sin(x).
struct CoefficientSequence
{
    std::vector<double> values;
    Family family = Family::custom;
    std::map<std::string, double> params;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Outcome of a coefficient-side criterion.
struct CriterionReport
{
    bool satisfied = true;
    std::optional<std::size_t> first_violation_index;
    /// Smallest slack across the checked inequalities. Raw slacks inside the
    /// roundoff tolerance count as zero, so margin >= 0 whenever satisfied.
    double margin = 0.0;
    std::optional<std::vector<double>> partial_sums;
    std::string note;
};

/// Slacks at or above this value are accepted.
inline constexpr double criterion_tolerance = -1e-12;

/// Rising factorial (x)_k by forward product.
double pochhammer(double x, int k);

CoefficientSequence vietoris_gamma(int n);
CoefficientSequence qk_sequence(int n, double alpha, double beta, double lambda, double mu);
CoefficientSequence ratio_qk_sequence(int n, double alpha, double beta, double lambda,
                                      double mu);
CoefficientSequence koumandos_bk(int n, double alpha);
CoefficientSequence ck_sequence(int n, double alpha, double b, double c);

/// Wraps user supplied values (no positivity requirement).
CoefficientSequence custom_sequence(std::vector<double> values);

/// The shared values e_k = values[2k] = values[2k+1] of a pairwise-constant
/// sequence (ck, koumandos, vietoris). Trailing unpaired entries are kept.
std::vector<double> pair_values(const CoefficientSequence& seq);

/// The sine coefficients a_1, a_2, ... of a sequence. Families that start
/// at a_0 drop their first entry; ratio_qk and custom are returned whole.
std::vector<double> sine_part(const CoefficientSequence& seq);

CriterionReport check_vietoris(const CoefficientSequence& seq);

/// Belov partial sums sum_{k=1}^{m} (-1)^{k-1} k a_k for m >= 2, read from
/// sine_part(seq). first_violation_index is the offending m.
CriterionReport check_belov(const CoefficientSequence& seq);
CriterionReport check_belov(std::span<const double> sine_coeffs);

/// Weighted chain w_{k+1} a_{k+1} <= w_k a_k <= ... <= w_2 a_2 <= a_1 with
/// w_k = (k+alpha)^lambda (k+beta)^mu, plus a_1 <= a_0 / 2.
CriterionReport check_chain_condition(const CoefficientSequence& seq, double alpha,
                                      double beta, double lambda, double mu);

/// Monotone plus (b+n-k) k a_k <= (c+n-k)(k-alpha) a_{k-1} for 1 <= k <= n,
/// n = seq.size() - 1.
CriterionReport check_cor34_condition(const CoefficientSequence& seq, double b, double c,
                                      double alpha);

} // namespace postrig

#endif

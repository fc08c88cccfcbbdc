#pragma once

// Inverse formal degree of a one-dimensional Hecke character as a truncated weighted
// Poincare series over the extended affine Weyl group.

#include "hcov/hecke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcov {

struct DegreeSeries {
    Rational q;
    int L = 0;
    LengthSelector grading = LengthSelector::GQn;
    std::vector<std::uint64_t> counts;   // elements per length
    std::vector<Rational> contributions; // c_l
    std::vector<Rational> partial_sums;  // S_l
    std::optional<Rational> ratio;       // c_L / c_{L-1}
    Rational relative_tail;              // c_L / S_L
    Rational limit_estimate;             // S_L + c_L r / (1 - r) when r < 1, else S_L
    bool converged = false;
    bool diverging = false;
    std::string diagnostic;
};

constexpr double default_tolerance = 1e-8;

/// Partial sums and convergence certificate from per-length contributions.
DegreeSeries summarize_series(std::vector<Rational> contributions, std::vector<std::uint64_t> counts,
                              const Rational& q, double tol = default_tolerance);

/// term(w) = q^{-l_GQn(w)} sigma(E_w) sigma(E_{w^{-1}}) = q^{#q - #(-1)} over a reduced word.
Rational linear_term(const HeckeCharacter& chi, const BallEntry& entry, const Rational& q);

/// sigma(e_w) for the genuine basis element, as a Laurent monomial in v, via s'w = z s''
/// with z dominant and the dominant-translation and finite cases of the comparison with E_w.
LaurentPoly cover_character_value(const AffineWeylGroup& group, const HeckeCharacter& chi, const AffineElement& w);
/// q^{-l_G(w)} sigma(e_w) sigma(e_{w^{-1}}).
Rational cover_term(const AffineWeylGroup& group, const HeckeCharacter& chi, const AffineElement& w, const Rational& q);

/// Sum over the ball of radius L, graded by the selected length. Throws ValidationError
/// for q <= 1, and for a character that is not square integrable when required.
DegreeSeries formal_degree_inverse(const AffineWeylGroup& group, const HeckeCharacter& chi, const Rational& q,
                                   int L, double tol = default_tolerance,
                                   LengthSelector grading = LengthSelector::GQn,
                                   bool require_discrete_series = true);

/// Same series with every term computed on the cover side (cover_term).
DegreeSeries formal_degree_inverse_cover_side(const AffineWeylGroup& group, const HeckeCharacter& chi,
                                              const Rational& q, int L, double tol = default_tolerance,
                                              LengthSelector grading = LengthSelector::GQn);

/// q^{-|Phi+|} (1 - q^{-1})^rank.
Rational canonical_measure_constant(const RootDatum& datum, const Rational& q);
/// The same constant as a Laurent polynomial in v.
LaurentPoly canonical_measure_polynomial(const RootDatum& datum);

/// constant^{-1} / limit. Throws NotConverged when the series has no certificate.
Rational degree_with_canonical_measure(const DegreeSeries& series, const Rational& constant);

} // namespace hcov

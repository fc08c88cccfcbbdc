#include "hcov/formal_degree.hpp"

#include "hcov/errors.hpp"

#include <algorithm>
#include <functional>

namespace hcov {

namespace {

void require_q(const Rational& q)
{
    if (q <= 1)
        throw ValidationError("q must be a rational number > 1, got " + q.get_str());
}

} // namespace

DegreeSeries summarize_series(std::vector<Rational> contributions, std::vector<std::uint64_t> counts,
                              const Rational& q, double tol)
{
    if (contributions.empty())
        throw ValidationError("empty series");
    DegreeSeries s;
    s.q = q;
    s.L = static_cast<int>(contributions.size()) - 1;
    s.contributions = std::move(contributions);
    s.counts = std::move(counts);
    Rational acc = 0;
    for (const Rational& c : s.contributions) {
        if (c < 0)
            throw InvariantViolation("negative contribution in a series of positive terms");
        acc += c;
        s.partial_sums.push_back(acc);
    }
    const Rational& cL = s.contributions.back();
    const Rational& SL = s.partial_sums.back();
    s.relative_tail = cL / SL;
    s.limit_estimate = SL;
    if (s.L >= 1 && s.contributions[static_cast<std::size_t>(s.L - 1)] > 0) {
        s.ratio = cL / s.contributions[static_cast<std::size_t>(s.L - 1)];
        if (*s.ratio < 1)
            s.limit_estimate = SL + cL * *s.ratio / (1 - *s.ratio);
    }
    if (s.L >= 2) {
        s.diverging = true;
        for (int l = s.L / 2 + 1; l <= s.L; ++l)
            if (s.contributions[static_cast<std::size_t>(l)] < s.contributions[static_cast<std::size_t>(l - 1)])
                s.diverging = false;
    }
    const Rational tolr(tol);
    if (s.diverging) {
        s.diagnostic = "contributions are nondecreasing over lengths " + std::to_string(s.L / 2) + ".." +
                       std::to_string(s.L) + "; the series diverges";
    } else if (!s.ratio || *s.ratio >= 1) {
        s.diagnostic = "no geometric tail bound: last ratio " + (s.ratio ? s.ratio->get_str() : std::string("undefined"));
    } else if (s.relative_tail >= tolr) {
        s.diagnostic = "relative tail c_L/S_L = " + std::to_string(s.relative_tail.get_d()) + " above tolerance " +
                       std::to_string(tol) + "; increase L";
    } else {
        s.converged = true;
        s.diagnostic = "converged";
    }
    return s;
}

Rational linear_term(const HeckeCharacter& chi, const BallEntry& entry, const Rational& q)
{
    const LetterCounts lc = letter_counts(chi, entry.word);
    return rational_pow(q, lc.q - lc.minus_one);
}

LaurentPoly cover_character_value(const AffineWeylGroup& group, const HeckeCharacter& chi, const AffineElement& w)
{
    const RootDatum& rd = group.datum();
    HeckeAlgebra H(group);
    // walk y to the dominant chamber; each step raises l_G by one
    AffineElement cur = w;
    SmallMatrix s_prime = SmallMatrix::identity(rd.rank());
    std::int64_t lcur = group.length_G(cur);
    for (;;) {
        int i = 0;
        while (i < rd.rank() && rd.pair_simple(i, cur.y) >= 0)
            ++i;
        if (i == rd.rank())
            break;
        AffineElement next = group.generator(i + 1) * cur;
        const std::int64_t lnext = group.length_G(next);
        if (lnext != lcur + 1)
            throw InvariantViolation("l_G does not increase along the walk to the dominant chamber at " +
                                     group.format_element(cur));
        cur = std::move(next);
        lcur = lnext;
        s_prime = rd.simple_reflection(i) * s_prime;
    }
    const LatticeVector& z = cur.y;
    const SmallMatrix& s_dd = cur.s;
    const AffineElement tz = group.translation(z);
    const AffineElement fin_dd{LatticeVector(static_cast<std::size_t>(rd.rank()), 0), s_dd};
    const AffineElement fin_p{LatticeVector(static_cast<std::size_t>(rd.rank()), 0), s_prime};
    if (lcur != group.length_G(tz) + group.length_G(fin_dd))
        throw InvariantViolation("l_G(s'w) != l_G(z) + l_G(s'') for " + group.format_element(w));

    const Rational shift = rd.rho_pairing(z) * 2 - Rational(H.two_rho_qn_pairing(z));
    if (shift.get_den() != 1)
        throw InvariantViolation("non-integral exponent shift");
    const LaurentPoly sigma_ez = character_value(group, chi, tz).shifted(static_cast<int>(shift.get_num().get_si()));
    return (sigma_ez * character_value(group, chi, fin_dd)).divided_by_monomial(character_value(group, chi, fin_p));
}

Rational cover_term(const AffineWeylGroup& group, const HeckeCharacter& chi, const AffineElement& w, const Rational& q)
{
    const LaurentPoly a = cover_character_value(group, chi, w);
    const LaurentPoly b = cover_character_value(group, chi, w.inverse());
    const auto lg = group.length_G(w);
    return (a * b).shifted(static_cast<int>(-2 * lg)).eval_q(q);
}

namespace {

DegreeSeries graded_sum(const AffineWeylGroup& group, int L, LengthSelector grading, const Rational& q, double tol,
                        const std::function<Rational(const BallEntry&)>& term)
{
    const auto ball = group.enumerate_ball(L, grading);
    std::vector<Rational> contrib(static_cast<std::size_t>(L) + 1, 0);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(L) + 1, 0);
    for (const auto& e : ball) {
        const int l = grading == LengthSelector::GQn ? e.l_GQn : e.l_G;
        contrib[static_cast<std::size_t>(l)] += term(e);
        ++counts[static_cast<std::size_t>(l)];
    }
    DegreeSeries s = summarize_series(std::move(contrib), std::move(counts), q, tol);
    s.grading = grading;
    return s;
}

} // namespace

DegreeSeries formal_degree_inverse(const AffineWeylGroup& group, const HeckeCharacter& chi, const Rational& q, int L,
                                   double tol, LengthSelector grading, bool require_discrete_series)
{
    require_q(q);
    if (L < 0)
        throw ValidationError("truncation length L must be >= 0");
    validate_character(group, chi);
    if (require_discrete_series && !is_square_integrable(group, chi))
        throw ValidationError("character " + character_label(group, chi) +
                              " is not square integrable; its formal-degree series diverges");
    return graded_sum(group, L, grading, q, tol, [&](const BallEntry& e) { return linear_term(chi, e, q); });
}

DegreeSeries formal_degree_inverse_cover_side(const AffineWeylGroup& group, const HeckeCharacter& chi,
                                              const Rational& q, int L, double tol, LengthSelector grading)
{
    require_q(q);
    validate_character(group, chi);
    return graded_sum(group, L, grading, q, tol, [&](const BallEntry& e) { return cover_term(group, chi, e.w, q); });
}

Rational canonical_measure_constant(const RootDatum& datum, const Rational& q)
{
    require_q(q);
    return rational_pow(q, -static_cast<long>(datum.num_positive_roots())) *
           rational_pow(1 - 1 / q, datum.rank());
}

LaurentPoly canonical_measure_polynomial(const RootDatum& datum)
{
    LaurentPoly p = LaurentPoly::q_power(-static_cast<int>(datum.num_positive_roots()));
    const LaurentPoly f = LaurentPoly(1L) - LaurentPoly::q_power(-1);
    for (int i = 0; i < datum.rank(); ++i)
        p *= f;
    return p;
}

Rational degree_with_canonical_measure(const DegreeSeries& series, const Rational& constant)
{
    if (!series.converged)
        throw NotConverged("series not converged (" + series.diagnostic + ")" +
                           (series.ratio ? "; last ratio " + series.ratio->get_str() : std::string()));
    if (constant == 0)
        throw ValidationError("measure constant must be nonzero");
    return 1 / (constant * series.limit_estimate);
}

} // namespace hcov

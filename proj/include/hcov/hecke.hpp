#pragma once

// Affine Iwahori-Hecke algebra of Y_{Q,n} x| W over Q[v, 1/v] (q = v^2), in the basis
// E_w with Iwahori-Matsumoto multiplication, its Bernstein elements T_y and its
// one-dimensional characters.

#include "hcov/affine_weyl.hpp"
#include "hcov/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace hcov {

class HeckeElement {
public:
    using Terms = std::map<AffineElement, LaurentPoly>;

    HeckeElement() = default;
    static HeckeElement basis(const AffineElement& w, const LaurentPoly& c = LaurentPoly(1L));

    void add(const AffineElement& w, const LaurentPoly& c);
    const Terms& terms() const noexcept { return terms_; }
    LaurentPoly coefficient(const AffineElement& w) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t support_size() const noexcept { return terms_.size(); }

    HeckeElement& operator+=(const HeckeElement& rhs);
    HeckeElement& operator-=(const HeckeElement& rhs);
    HeckeElement& operator*=(const LaurentPoly& c);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(HeckeElement a, const LaurentPoly& c) { return a *= c; }
    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

private:
    Terms terms_;
};

class HeckeAlgebra {
public:
    /// The group must outlive the algebra.
    explicit HeckeAlgebra(const AffineWeylGroup& group) : g_(&group) {}

    const AffineWeylGroup& group() const noexcept { return *g_; }

    HeckeElement unit() const;
    HeckeElement basis(const AffineElement& w) const { return HeckeElement::basis(w); }
    HeckeElement generator(int i) const { return basis(g_->generator(i)); }

    /// T_s * h for the Coxeter generator s = generator(i).
    HeckeElement left_multiply_generator(int i, const HeckeElement& h) const;
    /// T_s^{-1} * h, with T_s^{-1} = q^{-1} T_s + (q^{-1} - 1).
    HeckeElement left_multiply_generator_inverse(int i, const HeckeElement& h) const;
    /// T_omega * h for a length-zero omega.
    HeckeElement left_multiply_omega(const AffineElement& omega, const HeckeElement& h) const;

    /// h * T_s and h * T_s^{-1}.
    HeckeElement right_multiply_generator(const HeckeElement& h, int i) const;
    HeckeElement right_multiply_generator_inverse(const HeckeElement& h, int i) const;

    HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
    /// E_w^{-1}.
    HeckeElement inverse_basis(const AffineElement& w) const;

    /// Sum of the rescaled positive coroots; dominant and regular in Y_{Q,n}.
    const LatticeVector& regular_dominant() const;
    /// Smallest k >= 0 with y + k * regular_dominant() dominant.
    std::int64_t dominant_shift(const LatticeVector& y) const;
    /// T_y = v^{-2<y, rho_{Q,n}>} E_{y + k d} E_{k d}^{-1}, with k = dominant_shift(y) + extra_shift.
    HeckeElement bernstein_t(const LatticeVector& y, std::int64_t extra_shift = 0) const;
    /// 2<y, rho_{Q,n}> = sum over positive roots of <alpha, y> / n_alpha.
    std::int64_t two_rho_qn_pairing(const LatticeVector& y) const;

private:
    const AffineWeylGroup* g_;
    mutable LatticeVector regular_;
};

enum class Xi { Q, MinusOne };

/// One-dimensional character, given by its value on each affine Coxeter generator
/// (index 0 = affine node, i = s_i). Length-zero elements act trivially.
struct HeckeCharacter {
    std::vector<Xi> xi;
    std::string label;
    bool is_discrete_series = false;

    int size() const { return static_cast<int>(xi.size()); }
};

/// Classes of affine generators joined by braid relations of odd order or conjugate under a
/// length-zero element, ordered as
/// xi_1, xi_2, ...: with two classes the class of the affine node comes first; with three
/// classes the affine node's class is last, preceded by the class adjacent to it.
std::vector<std::vector<int>> odd_braid_classes(const AffineWeylGroup& group);

/// Throws ValidationError unless chi is constant on odd-braid classes.
void validate_character(const AffineWeylGroup& group, const HeckeCharacter& chi);

HeckeCharacter make_character(const AffineWeylGroup& group, const std::vector<Xi>& per_class);
HeckeCharacter steinberg_character(const AffineWeylGroup& group);
HeckeCharacter trivial_character(const AffineWeylGroup& group);
/// Every assignment of {q, -1} to the odd-braid classes.
std::vector<HeckeCharacter> all_characters(const AffineWeylGroup& group);
/// "steinberg", "trivial", "xi(-1,1,-1)" or "(-1,1,-1)" (1 and q both denote the value q).
HeckeCharacter parse_character(const AffineWeylGroup& group, const std::string& text);
std::string character_label(const AffineWeylGroup& group, const HeckeCharacter& chi);

struct LetterCounts {
    int q = 0;
    int minus_one = 0;
};
/// Letters of a reduced word of w on which chi is q, resp. -1.
LetterCounts letter_counts(const AffineWeylGroup& group, const HeckeCharacter& chi, const AffineElement& w);
LetterCounts letter_counts(const HeckeCharacter& chi, const std::vector<int>& word);

/// sigma(E_w) = q^{#q} (-1)^{#(-1)} along a reduced word.
LaurentPoly character_value(const AffineWeylGroup& group, const HeckeCharacter& chi, const AffineElement& w);
/// Linear extension to the algebra.
LaurentPoly character_value(const AffineWeylGroup& group, const HeckeCharacter& chi, const HeckeElement& h);

/// Square-integrability test for a one-dimensional character: on every fundamental
/// coweight ray y, a reduced word of the translation t_y has fewer q-letters than (-1)-letters.
bool is_square_integrable(const AffineWeylGroup& group, const HeckeCharacter& chi);

/// Discrete-series characters of an oasitic cover, Steinberg first.
/// Throws ValidationError for non-oasitic covers.
std::vector<HeckeCharacter> discrete_series_characters(const AffineWeylGroup& group);

} // namespace hcov

#pragma once

// Whittaker dimensions of one-dimensional discrete series of oasitic covers:
// multiplicities of linear Weyl characters in eta_X (x) eps_W, with eta_X the
// permutation character of W on Y/nY, and the closed-form polynomials they match.

#include "hcov/hecke.hpp"

#include <array>
#include <string>
#include <vector>

namespace hcov {

/// Linear character of W: a sign per length class of simple reflections
/// (class 0 = short or simply-laced, class 1 = long).
struct LinearWeylCharacter {
    std::array<int, 2> class_value{1, 1};
    std::string label;

    int operator()(const WeylElement& w) const;
    friend bool operator==(const LinearWeylCharacter& a, const LinearWeylCharacter& b)
    {
        return a.class_value == b.class_value;
    }
};

/// "trivial", "sign", "sign_short" (sign on short reflections only) or "sign_long".
LinearWeylCharacter make_linear_character(const RootDatum& datum, int short_value, int long_value);
LinearWeylCharacter sign_character(const RootDatum& datum);
/// All linear characters, sign first.
std::vector<LinearWeylCharacter> linear_characters(const RootDatum& datum);

/// |{y in Y/nY : w y = y}|.
Integer fixed_point_count(const WeylElement& w, long n);

/// W with the elementary divisors of (w - 1) cached per element.
class WhittakerContext {
public:
    explicit WhittakerContext(const RootDatum& datum, std::uint64_t cap = default_weyl_cap);

    const RootDatum& datum() const noexcept { return datum_; }
    const std::vector<WeylElement>& elements() const noexcept { return elements_; }
    Integer fixed_points(std::size_t k, long n) const;

    /// (1/|W|) sum_w Fix(w) eps(w) chi(w); throws InvariantViolation unless it is a
    /// nonnegative integer.
    Integer multiplicity(long n, const LinearWeylCharacter& chi) const;

private:
    RootDatum datum_;
    std::vector<WeylElement> elements_;
    std::vector<std::vector<Integer>> divisors_;
};

/// Brute-force Whittaker dimension for an oasitic cover. Throws ValidationError for
/// non-oasitic covers and CapExceeded when W is too large.
Integer whittaker_dimension_bruteforce(const CoverDatum& cover, const LinearWeylCharacter& chi);
Integer whittaker_dimension_bruteforce(const WhittakerContext& ctx, long n, const LinearWeylCharacter& chi);

/// Closed-form polynomial in n divided by |W|, dispatched on the discrete-series character.
Integer whittaker_dimension_closed_form(const AffineWeylGroup& group, const HeckeCharacter& sigma);

enum class SignConvention {
    Direct,  // xi = -1 on a class gives -1, xi = q gives +1
    Swapped, // the values of the short and long classes exchanged
};
std::string to_string(SignConvention c);

/// The restriction of sigma to the finite generators at q -> 1, under a convention.
LinearWeylCharacter finite_restriction(const AffineWeylGroup& group, const HeckeCharacter& sigma,
                                       SignConvention convention);

struct ConventionCalibration {
    SignConvention convention = SignConvention::Direct;
    long calibration_n = 0; // 0 when the two conventions never differ for n <= max_n
    std::string character_label;
};

/// Smallest oasitic n > 1 at which the two conventions give different brute-force values
/// for some discrete-series character; the convention matching the closed form there wins.
/// Throws InvariantViolation if neither matches.
ConventionCalibration calibrate_convention(const CartanSpec& spec, long max_n = 30);

/// Finite restriction under the calibrated convention for the cover's type; the
/// calibration runs once per type and is then frozen for the process.
LinearWeylCharacter resolve_character_convention(const AffineWeylGroup& group, const HeckeCharacter& sigma);
const ConventionCalibration& frozen_convention(const CartanSpec& spec);

struct WhittakerReport {
    std::string cover;
    std::string character;
    std::string weyl_character;
    Integer brute_force_dimension;
    Integer closed_form_dimension;
    bool agree = false;
};

/// One row per discrete-series character of an oasitic cover.
std::vector<WhittakerReport> whittaker_reports(const AffineWeylGroup& group);

} // namespace hcov

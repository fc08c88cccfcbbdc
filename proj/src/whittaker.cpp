#include "hcov/whittaker.hpp"

#include "hcov/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace hcov {

int LinearWeylCharacter::operator()(const WeylElement& w) const
{
    int v = 1;
    for (int c = 0; c < 2; ++c)
        if (class_value[static_cast<std::size_t>(c)] == -1 && ((w.class_parity >> c) & 1))
            v = -v;
    return v;
}

LinearWeylCharacter make_linear_character(const RootDatum& datum, int short_value, int long_value)
{
    if ((short_value != 1 && short_value != -1) || (long_value != 1 && long_value != -1))
        throw ValidationError("linear character values must be +1 or -1");
    if (datum.spec().simply_laced() && short_value != long_value)
        throw ValidationError("simply-laced types have a single class of reflections");
    LinearWeylCharacter chi;
    chi.class_value = {short_value, long_value};
    if (short_value == 1 && long_value == 1)
        chi.label = "trivial";
    else if (short_value == -1 && long_value == -1)
        chi.label = "sign";
    else
        chi.label = short_value == -1 ? "sign_short" : "sign_long";
    return chi;
}

LinearWeylCharacter sign_character(const RootDatum& datum)
{
    return make_linear_character(datum, -1, -1);
}

std::vector<LinearWeylCharacter> linear_characters(const RootDatum& datum)
{
    std::vector<LinearWeylCharacter> out{sign_character(datum)};
    if (!datum.spec().simply_laced()) {
        out.push_back(make_linear_character(datum, -1, 1));
        out.push_back(make_linear_character(datum, 1, -1));
    }
    out.push_back(make_linear_character(datum, 1, 1));
    return out;
}

namespace {

IntMatrix minus_identity(const WeylElement& w)
{
    const IntMatrix m = w.matrix.to_int_matrix();
    return m - IntMatrix::identity(m.rows());
}

} // namespace

Integer fixed_point_count(const WeylElement& w, long n)
{
    if (n < 1)
        throw ValidationError("n must be >= 1");
    return solution_count_mod_n(minus_identity(w), Integer(n));
}

WhittakerContext::WhittakerContext(const RootDatum& datum, std::uint64_t cap)
    : datum_(datum), elements_(enumerate_weyl_group(datum, cap))
{
    divisors_.reserve(elements_.size());
    for (const auto& w : elements_)
        divisors_.push_back(elementary_divisors(minus_identity(w)));
}

Integer WhittakerContext::fixed_points(std::size_t k, long n) const
{
    return solution_count_from_divisors(divisors_[k], static_cast<std::size_t>(datum_.rank()), Integer(n));
}

Integer WhittakerContext::multiplicity(long n, const LinearWeylCharacter& chi) const
{
    if (n < 1)
        throw ValidationError("n must be >= 1");
    Integer sum = 0;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        const int s = elements_[k].sign() * chi(elements_[k]);
        if (s > 0)
            sum += fixed_points(k, n);
        else
            sum -= fixed_points(k, n);
    }
    const Integer order(static_cast<unsigned long>(elements_.size()));
    if (sum % order != 0 || sum < 0)
        throw InvariantViolation("average of Fix * eps * chi over W is " + sum.get_str() + "/" + order.get_str() +
                                 " for " + datum_.spec().name() + " n=" + std::to_string(n) + ", " + chi.label);
    return sum / order;
}

Integer whittaker_dimension_bruteforce(const WhittakerContext& ctx, long n, const LinearWeylCharacter& chi)
{
    return ctx.multiplicity(n, chi);
}

Integer whittaker_dimension_bruteforce(const CoverDatum& cover, const LinearWeylCharacter& chi)
{
    if (!is_oasitic(cover))
        throw ValidationError(cover.name() + " is not oasitic (requires " + oasitic_condition(cover.base().spec()) + ")");
    const WhittakerContext ctx(cover.base());
    return ctx.multiplicity(static_cast<long>(cover.n()), chi);
}

namespace {

bool finite_part_all_minus(const HeckeCharacter& sigma)
{
    for (std::size_t i = 1; i < sigma.xi.size(); ++i)
        if (sigma.xi[i] != Xi::MinusOne)
            return false;
    return true;
}

bool is_discrete_series(const AffineWeylGroup& group, const HeckeCharacter& sigma)
{
    for (const auto& ds : discrete_series_characters(group))
        if (ds.xi == sigma.xi)
            return true;
    return false;
}

} // namespace

Integer whittaker_dimension_closed_form(const AffineWeylGroup& group, const HeckeCharacter& sigma)
{
    validate_character(group, sigma);
    if (!is_discrete_series(group, sigma))
        throw ValidationError("character " + character_label(group, sigma) + " is not a discrete series of " +
                              group.cover().name());
    const RootDatum& rd = group.datum();
    const Integer n(static_cast<long>(group.cover().n()));
    const Integer order(static_cast<unsigned long>(rd.weyl_order()));
    Integer poly = 1;
    const char letter = rd.spec().letter;
    if (finite_part_all_minus(sigma)) {
        for (int m : rd.exponents())
            poly *= n + m;
    } else if (letter == 'B' || letter == 'C') {
        poly = n - 1;
        for (int j = 1; j <= rd.rank() - 1; ++j)
            poly *= n + 2 * j - 1;
    } else if (letter == 'F') {
        poly = (n - 1) * (n - 5) * (n + 1) * (n + 5);
    } else if (letter == 'G') {
        poly = (n - 1) * (n + 1);
    } else {
        throw ValidationError("no closed form for " + character_label(group, sigma) + " in type " + rd.spec().name());
    }
    if (poly % order != 0)
        throw InvariantViolation("closed form " + poly.get_str() + "/" + order.get_str() + " is not integral");
    return poly / order;
}

std::string to_string(SignConvention c)
{
    return c == SignConvention::Direct ? "direct" : "swapped";
}

LinearWeylCharacter finite_restriction(const AffineWeylGroup& group, const HeckeCharacter& sigma,
                                       SignConvention convention)
{
    validate_character(group, sigma);
    const RootDatum& rd = group.datum();
    std::array<int, 2> val{0, 0};
    for (int i = 0; i < rd.rank(); ++i) {
        const int v = sigma.xi[static_cast<std::size_t>(i + 1)] == Xi::MinusOne ? -1 : 1;
        int& slot = val[static_cast<std::size_t>(rd.length_class(i))];
        if (slot != 0 && slot != v)
            throw ValidationError("character is not constant on a length class of finite reflections");
        slot = v;
    }
    if (rd.spec().simply_laced())
        val[1] = val[0];
    if (convention == SignConvention::Swapped)
        std::swap(val[0], val[1]);
    return make_linear_character(rd, val[0], val[1]);
}

ConventionCalibration calibrate_convention(const CartanSpec& spec, long max_n)
{
    const RootDatum rd(spec);
    ConventionCalibration out;
    if (spec.simply_laced())
        return out;
    const WhittakerContext ctx(rd);
    for (long n = 2; n <= max_n; ++n) {
        const CoverDatum cover = build_cover(rd, n, 1);
        if (!is_oasitic(cover))
            continue;
        const AffineWeylGroup group(cover);
        for (const auto& sigma : discrete_series_characters(group)) {
            const Integer direct = ctx.multiplicity(n, finite_restriction(group, sigma, SignConvention::Direct));
            const Integer swapped = ctx.multiplicity(n, finite_restriction(group, sigma, SignConvention::Swapped));
            if (direct == swapped)
                continue;
            const Integer expected = whittaker_dimension_closed_form(group, sigma);
            out.calibration_n = n;
            out.character_label = character_label(group, sigma);
            if (direct == expected)
                out.convention = SignConvention::Direct;
            else if (swapped == expected)
                out.convention = SignConvention::Swapped;
            else
                throw InvariantViolation("neither sign convention matches the closed form for " + spec.name() +
                                         " n=" + std::to_string(n) + " " + out.character_label + ": direct " +
                                         direct.get_str() + ", swapped " + swapped.get_str() + ", expected " +
                                         expected.get_str());
            return out;
        }
    }
    return out;
}

const ConventionCalibration& frozen_convention(const CartanSpec& spec)
{
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<ConventionCalibration>> frozen;
    std::lock_guard lock(mu);
    auto& slot = frozen[spec.name()];
    if (!slot)
        slot = std::make_unique<ConventionCalibration>(calibrate_convention(spec));
    return *slot;
}

LinearWeylCharacter resolve_character_convention(const AffineWeylGroup& group, const HeckeCharacter& sigma)
{
    return finite_restriction(group, sigma, frozen_convention(group.datum().spec()).convention);
}

std::vector<WhittakerReport> whittaker_reports(const AffineWeylGroup& group)
{
    const CoverDatum& cover = group.cover();
    if (!is_oasitic(cover))
        throw ValidationError(cover.name() + " is not oasitic (requires " + oasitic_condition(cover.base().spec()) + ")");
    const WhittakerContext ctx(cover.base());
    std::vector<WhittakerReport> out;
    for (const auto& sigma : discrete_series_characters(group)) {
        WhittakerReport r;
        r.cover = cover.name();
        r.character = character_label(group, sigma);
        const LinearWeylCharacter chi = resolve_character_convention(group, sigma);
        r.weyl_character = chi.label;
        r.brute_force_dimension = ctx.multiplicity(static_cast<long>(cover.n()), chi);
        r.closed_form_dimension = whittaker_dimension_closed_form(group, sigma);
        r.agree = r.brute_force_dimension == r.closed_form_dimension;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace hcov

#include "hcov/cover.hpp"

#include "hcov/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hcov {

std::string FiniteAbelianGroup::to_string() const
{
    if (invariant_factors.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        os << (i ? " x " : "") << "Z/" << invariant_factors[i].get_str();
    return os.str();
}

FiniteAbelianGroup quotient_group(const IntMatrix& relations)
{
    FiniteAbelianGroup g;
    const auto divisors = elementary_divisors(relations);
    if (divisors.size() < relations.cols())
        throw InvariantViolation("quotient_group: relations do not have full rank");
    for (const Integer& d : divisors) {
        if (d == 0)
            throw InvariantViolation("quotient_group: relations do not have full rank");
        if (d != 1)
            g.invariant_factors.push_back(d);
        g.order *= d;
    }
    return g;
}

CoverDatum::CoverDatum(RootDatum base, std::int64_t n, std::int64_t q_short)
    : base_(std::move(base)), n_(n), q_short_(q_short)
{
    if (n_ < 1)
        throw ValidationError("cover degree n must be >= 1, got " + std::to_string(n_));
    if (q_short_ < 1)
        throw ValidationError("q_short must be >= 1, got " + std::to_string(q_short_));
    const int r = base_.rank();

    // W-invariance of B_Q forces Q(a_j^vee) A_ji = Q(a_i^vee) A_ij on every edge.
    std::vector<Rational> qr(static_cast<std::size_t>(r), 0);
    qr[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (i != j && base_.cartan(i, j) != 0 && qr[static_cast<std::size_t>(i)] != 0 &&
                    qr[static_cast<std::size_t>(j)] == 0) {
                    qr[static_cast<std::size_t>(j)] = qr[static_cast<std::size_t>(i)] *
                                                      Rational(base_.cartan(i, j)) / Rational(base_.cartan(j, i));
                    changed = true;
                }
    }
    const Rational lo = *std::min_element(qr.begin(), qr.end());
    for (const Rational& x : qr) {
        const Rational v = x / lo * q_short_;
        if (v.get_den() != 1)
            throw InvariantViolation("non-integral quadratic form on a simple coroot");
        q_simple_.push_back(v.get_num().get_si());
    }

    gram_ = SmallMatrix(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            gram_(i, j) = q_simple_[static_cast<std::size_t>(i)] * base_.cartan(i, j);

    for (const auto& c : base_.positive_coroots()) {
        const std::int64_t qa = quadratic(c);
        const std::int64_t na = n_ / std::gcd(n_, qa);
        n_alpha_.push_back(na);
        LatticeVector rc = c;
        for (auto& x : rc)
            x *= na;
        rescaled_coroots_.push_back(std::move(rc));
    }

    // Y_{Q,n} = {y : G y = 0 mod n}. With U G V = D, y = V z and d_i z_i = 0 mod n.
    const SmithDecomposition snf = smith_normal_form(gram_.to_int_matrix());
    const auto d = snf.divisors();
    IntMatrix gens(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    const Integer nn = static_cast<long>(n_);
    for (std::size_t k = 0; k < static_cast<std::size_t>(r); ++k) {
        Integer g;
        const Integer dk = k < d.size() ? d[k] : Integer(0);
        mpz_gcd(g.get_mpz_t(), dk.get_mpz_t(), nn.get_mpz_t());
        const Integer scale = nn / g;
        for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
            gens(k, i) = snf.V(i, k) * scale;
    }
    y_qn_ = hermite_normal_form(gens);
}

std::int64_t CoverDatum::bilinear(const LatticeVector& y, const LatticeVector& z) const
{
    std::int64_t s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            s += y[static_cast<std::size_t>(i)] * gram_(i, j) * z[static_cast<std::size_t>(j)];
    return s;
}

std::int64_t CoverDatum::quadratic(const LatticeVector& y) const
{
    return bilinear(y, y) / 2;
}

std::int64_t CoverDatum::n_alpha_simple(int i) const
{
    return n_ / std::gcd(n_, q_simple_[static_cast<std::size_t>(i)]);
}

namespace {

std::vector<Integer> to_integers(const LatticeVector& y)
{
    std::vector<Integer> v;
    v.reserve(y.size());
    for (auto x : y)
        v.emplace_back(static_cast<long>(x));
    return v;
}

} // namespace

bool CoverDatum::in_lattice(const LatticeVector& y) const
{
    return lattice_contains(y_qn_, to_integers(y));
}

std::vector<Integer> CoverDatum::lattice_coordinates_of(const LatticeVector& y) const
{
    return lattice_coordinates(y_qn_, to_integers(y));
}

std::string CoverDatum::name() const
{
    std::string s = base_.spec().name() + " n=" + std::to_string(n_);
    if (q_short_ != 1)
        s += " Q=" + std::to_string(q_short_);
    return s;
}

CoverDatum build_cover(const RootDatum& base, std::int64_t n, std::int64_t q_short)
{
    return CoverDatum(base, n, q_short);
}

bool lattice_is_nY(const CoverDatum& cover)
{
    const auto r = static_cast<std::size_t>(cover.rank());
    IntMatrix ny(r, r);
    for (std::size_t i = 0; i < r; ++i)
        ny(i, i) = static_cast<long>(cover.n());
    return hermite_normal_form(ny) == cover.lattice_basis();
}

bool is_oasitic(const CoverDatum& cover)
{
    if (cover.q_short() != 1)
        throw ValidationError("oasitic covers are defined for Q = 1 on short coroots");
    for (long p : cover.base().bad_primes())
        if (cover.n() % p == 0)
            return false;
    return lattice_is_nY(cover);
}

std::string oasitic_condition(const CartanSpec& spec)
{
    switch (spec.letter) {
    case 'A': return "gcd(n, " + std::to_string(spec.rank + 1) + ") = 1";
    case 'B':
    case 'C':
    case 'D': return "n odd";
    case 'E': return spec.rank == 8 ? "2, 3, 5 do not divide n" : "2, 3 do not divide n";
    default: return "2, 3 do not divide n";
    }
}

namespace {

/// Rows: coordinates in the Y_{Q,n} basis of the given vectors.
IntMatrix coordinates_matrix(const CoverDatum& cover, const std::vector<LatticeVector>& vecs)
{
    const auto r = static_cast<std::size_t>(cover.rank());
    IntMatrix m(vecs.size(), r);
    for (std::size_t k = 0; k < vecs.size(); ++k) {
        const auto c = cover.lattice_coordinates_of(vecs[k]);
        for (std::size_t i = 0; i < r; ++i)
            m(k, i) = c[i];
    }
    return m;
}

std::vector<LatticeVector> rescaled_simple_coroots(const CoverDatum& cover)
{
    std::vector<LatticeVector> v;
    for (int i = 0; i < cover.rank(); ++i) {
        LatticeVector e(static_cast<std::size_t>(cover.rank()), 0);
        e[static_cast<std::size_t>(i)] = cover.n_alpha_simple(i);
        v.push_back(std::move(e));
    }
    return v;
}

} // namespace

FiniteAbelianGroup center_group(const CoverDatum& cover)
{
    return quotient_group(coordinates_matrix(cover, rescaled_simple_coroots(cover)));
}

FiniteAbelianGroup heart_center_group(const CoverDatum& cover)
{
    auto gens = rescaled_simple_coroots(cover);
    for (int i = 0; i < cover.rank(); ++i) {
        LatticeVector e(static_cast<std::size_t>(cover.rank()), 0);
        e[static_cast<std::size_t>(i)] = cover.n();
        gens.push_back(std::move(e));
    }
    return quotient_group(coordinates_matrix(cover, gens));
}

} // namespace hcov

#pragma once

// Combinatorial data of an n-fold cover: the quadratic form Q, its bilinear form B_Q,
// the lattice Y_{Q,n}, the rescaling integers n_alpha and the finite center groups.

#include "hcov/exact.hpp"
#include "hcov/root_datum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcov {

struct FiniteAbelianGroup {
    std::vector<Integer> invariant_factors; // each >= 2, each dividing the next
    Integer order = 1;

    bool trivial() const { return invariant_factors.empty(); }
    std::string to_string() const; // "Z/2 x Z/6", or "1"
};

/// Group Z^k / L where L is spanned by the rows of `relations` (k columns).
/// Throws InvariantViolation if L has infinite index.
FiniteAbelianGroup quotient_group(const IntMatrix& relations);

class CoverDatum {
public:
    CoverDatum(RootDatum base, std::int64_t n, std::int64_t q_short);

    const RootDatum& base() const noexcept { return base_; }
    std::int64_t n() const noexcept { return n_; }
    std::int64_t q_short() const noexcept { return q_short_; }
    int rank() const noexcept { return base_.rank(); }

    /// Q on the simple coroots.
    const std::vector<std::int64_t>& q_simple() const noexcept { return q_simple_; }
    /// Gram matrix of B_Q in the simple coroot basis.
    const SmallMatrix& gram() const noexcept { return gram_; }
    std::int64_t bilinear(const LatticeVector& y, const LatticeVector& z) const;
    /// Q(y) = B_Q(y, y) / 2.
    std::int64_t quadratic(const LatticeVector& y) const;

    /// n_alpha per positive root, index-aligned with base().positive_roots().
    const std::vector<std::int64_t>& n_alpha() const noexcept { return n_alpha_; }
    std::int64_t n_alpha_simple(int i) const;
    /// n_alpha alpha^vee per positive root.
    const std::vector<LatticeVector>& rescaled_coroots() const noexcept { return rescaled_coroots_; }

    /// HNF row basis of Y_{Q,n}.
    const IntMatrix& lattice_basis() const noexcept { return y_qn_; }
    bool in_lattice(const LatticeVector& y) const;
    /// Coordinates of y in lattice_basis(); throws InvariantViolation when y is not in Y_{Q,n}.
    std::vector<Integer> lattice_coordinates_of(const LatticeVector& y) const;

    std::string name() const; // "G2 n=5"

private:
    RootDatum base_;
    std::int64_t n_;
    std::int64_t q_short_;
    std::vector<std::int64_t> q_simple_;
    SmallMatrix gram_;
    std::vector<std::int64_t> n_alpha_;
    std::vector<LatticeVector> rescaled_coroots_;
    IntMatrix y_qn_;
};

/// Throws ValidationError when n < 1 or q_short < 1.
CoverDatum build_cover(const RootDatum& base, std::int64_t n, std::int64_t q_short = 1);

/// Y_{Q,n} == nY as lattices.
bool lattice_is_nY(const CoverDatum& cover);

/// Oasitic: Y_{Q,n} = nY and n prime to every coefficient of the highest root.
/// Requires q_short == 1 (ValidationError otherwise).
bool is_oasitic(const CoverDatum& cover);

/// The condition of the table of oasitic covers, stated per type.
std::string oasitic_condition(const CartanSpec& spec);

/// Y_{Q,n} / Y^{sc}_{Q,n}.
FiniteAbelianGroup center_group(const CoverDatum& cover);
/// Y_{Q,n} / (nY + Y^{sc}_{Q,n}).
FiniteAbelianGroup heart_center_group(const CoverDatum& cover);

} // namespace hcov

#pragma once

// The extended affine Weyl group Y_{Q,n} x| W of a cover, its two length functions,
// its Coxeter generators and length-zero subgroup, and bounded enumeration.
//
// (y, s) acts on Y (x) R by x -> y + s(x); the product is (y1, s1)(y2, s2) = (y1 + s1 y2, s1 s2).
// Lengths are measured from the antidominant base alcove, so l(y, 1) = 2<y, rho> for dominant y.

#include "hcov/cover.hpp"
#include "hcov/kernels.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace hcov {

struct AffineElement {
    LatticeVector y;
    SmallMatrix s;

    static AffineElement identity(int rank);
    AffineElement operator*(const AffineElement& rhs) const;
    AffineElement inverse() const;

    friend bool operator==(const AffineElement&, const AffineElement&) = default;
    friend auto operator<=>(const AffineElement& l, const AffineElement& r)
    {
        if (auto c = l.y <=> r.y; c != 0)
            return c;
        return l.s.a <=> r.s.a;
    }
};

struct AffineElementHash {
    std::size_t operator()(const AffineElement& w) const noexcept;
};

/// Which length a ball is bounded by.
enum class LengthSelector { G, GQn };

struct BallEntry {
    AffineElement w;
    int l_G = 0;
    int l_GQn = 0;
    /// Reduced word in the affine Coxeter generators (0 = affine node, i = s_i),
    /// read left to right as a product, followed by omega.
    std::vector<int> word;
    std::size_t omega = 0;
};

class AffineWeylGroup {
public:
    explicit AffineWeylGroup(const CoverDatum& cover);

    const CoverDatum& cover() const noexcept { return cover_; }
    const RootDatum& datum() const noexcept { return cover_.base(); }
    int rank() const noexcept { return cover_.rank(); }

    /// Checks y in Y_{Q,n} and s in W.
    AffineElement make_element(const LatticeVector& y, const SmallMatrix& s) const;
    AffineElement translation(const LatticeVector& y) const;

    std::int64_t length_G(const AffineElement& w) const;
    std::int64_t length_GQn(const AffineElement& w) const;
    LengthPair lengths(const AffineElement& w) const;
    /// Scalar reference path, bypassing SIMD dispatch.
    LengthPair lengths_reference(const AffineElement& w) const;

    /// Generator i: i = 0 is the affine reflection, i = 1..r are the finite simple reflections.
    const AffineElement& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
    int num_generators() const noexcept { return static_cast<int>(gens_.size()); }
    /// Index of the positive root whose reflection underlies the affine generator.
    std::size_t affine_root() const noexcept { return theta_; }
    /// Order of s_i s_j (0 when infinite).
    int braid_order(int i, int j) const { return braid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    /// Length-zero elements; omega(0) is the identity.
    const std::vector<AffineElement>& omega() const noexcept { return omega_; }
    std::size_t omega_index(const AffineElement& w) const; // w must have length zero

    /// w = s_{word[0]} ... s_{word[k-1]} * omega, found by left descent on l_GQn.
    struct Decomposition {
        std::vector<int> word;
        std::size_t omega = 0;
    };
    Decomposition decompose(const AffineElement& w) const;

    /// Every w with the selected length <= L, exactly once, in nondecreasing l_GQn order.
    std::vector<BallEntry> enumerate_ball(int L, LengthSelector which = LengthSelector::GQn) const;

    std::string format_element(const AffineElement& w) const; // "([3], s1)"

private:
    CoverDatum cover_;
    LatticeVector two_rho_vee_;
    LengthKernel kernel_;
    std::vector<AffineElement> gens_;
    std::size_t theta_ = 0;
    std::vector<std::vector<int>> braid_;
    std::vector<AffineElement> omega_;
};

/// Word lengths by breadth-first search in the Cayley graph of the Coxeter generators,
/// extended by the length-zero elements. Uses only group multiplication.
std::unordered_map<AffineElement, int, AffineElementHash> bfs_word_lengths(const AffineWeylGroup& group, int L);

/// "[3, -1]"
std::string format_vector(const LatticeVector& y);
/// Reduced word of a finite Weyl group element, "e" or "s1s2".
std::string format_weyl_word(const RootDatum& datum, const SmallMatrix& s);

} // namespace hcov

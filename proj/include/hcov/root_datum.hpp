#pragma once

// Irreducible split root data in the simply-connected normalization: the cocharacter
// lattice Y is the coroot lattice, with the simple coroots as its standard basis.
// Simple roots are linear functionals on Y; the Cartan matrix entry (i, j) is
// <alpha_i, alpha_j^vee>, Bourbaki numbering.

#include "hcov/exact.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hcov {

using LatticeVector = std::vector<std::int64_t>;

/// Square integer matrix of small entries acting on column vectors.
struct SmallMatrix {
    int dim = 0;
    std::vector<std::int64_t> a;

    SmallMatrix() = default;
    explicit SmallMatrix(int n) : dim(n), a(static_cast<std::size_t>(n) * n, 0) {}
    static SmallMatrix identity(int n);

    std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

    SmallMatrix operator*(const SmallMatrix& rhs) const;
    LatticeVector apply(const LatticeVector& y) const;
    SmallMatrix inverse() const; // unimodular only
    std::int64_t determinant() const;
    bool is_identity() const;
    IntMatrix to_int_matrix() const;

    friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;
    friend auto operator<=>(const SmallMatrix& l, const SmallMatrix& r) { return l.a <=> r.a; }
};

struct SmallMatrixHash {
    std::size_t operator()(const SmallMatrix& m) const noexcept;
};

std::size_t hash_lattice_vector(const LatticeVector& v) noexcept;

struct CartanSpec {
    char letter = 'A';
    int rank = 1;

    /// Throws ValidationError unless (letter, rank) is an irreducible Cartan type.
    void validate() const;
    std::string name() const; // "G2"
    static CartanSpec parse(const std::string& text);
    bool simply_laced() const { return letter == 'A' || letter == 'D' || letter == 'E'; }
    friend bool operator==(const CartanSpec&, const CartanSpec&) = default;
};

/// Element of the finite Weyl group, stored by its action on Y.
struct WeylElement {
    SmallMatrix matrix;
    int length = 0;
    /// bit c = parity of the number of simple reflections of length class c in a
    /// reduced word (class 0 = short or simply-laced, class 1 = long)
    std::uint8_t class_parity = 0;

    int sign() const { return length % 2 == 0 ? 1 : -1; }
};

class RootDatum {
public:
    explicit RootDatum(const CartanSpec& spec);

    const CartanSpec& spec() const noexcept { return spec_; }
    int rank() const noexcept { return spec_.rank; }
    const IntMatrix& cartan_matrix() const noexcept { return cartan_; }
    std::int64_t cartan(int i, int j) const { return cartan_small_(i, j); }

    /// Positive roots as functionals on Y: entry j is <alpha, alpha_j^vee>.
    const std::vector<LatticeVector>& positive_roots() const noexcept { return roots_; }
    /// Positive roots in simple-root coordinates.
    const std::vector<LatticeVector>& positive_root_coords() const noexcept { return root_coords_; }
    /// Positive coroots in Y coordinates, index-aligned with positive_roots().
    const std::vector<LatticeVector>& positive_coroots() const noexcept { return coroots_; }
    std::size_t num_positive_roots() const noexcept { return roots_.size(); }

    const std::vector<int>& exponents() const noexcept { return exponents_; }
    std::uint64_t weyl_order() const noexcept { return weyl_order_; }

    /// Squared length of each simple root, normalized so short roots have 1.
    const std::vector<int>& simple_root_length() const noexcept { return simple_len_; }
    /// 0 for short (or simply-laced) simple roots, 1 for long ones.
    int length_class(int simple) const { return simple_len_[simple] > 1 ? 1 : 0; }
    /// Squared length of a positive root (short = 1).
    int root_length(std::size_t root) const { return root_len_[root]; }

    std::size_t highest_root() const noexcept { return highest_; }
    /// Primes dividing a coefficient of the highest root.
    std::vector<long> bad_primes() const;

    const SmallMatrix& simple_reflection(int i) const { return simple_refl_[i]; }
    /// y -> y - <alpha, y> alpha^vee for the positive root with index `root`.
    SmallMatrix reflection(std::size_t root) const;

    std::int64_t pair(std::size_t root, const LatticeVector& y) const;
    std::int64_t pair_simple(int i, const LatticeVector& y) const;
    /// <y, rho>, rho the half sum of positive roots.
    Rational rho_pairing(const LatticeVector& y) const;
    /// Sum of the positive coroots; strictly dominant, <alpha_i, 2 rho^vee> = 2.
    const LatticeVector& two_rho_vee() const noexcept { return two_rho_vee_; }
    bool is_dominant(const LatticeVector& y) const;

    /// Reduced word (simple reflection indices, applied left to right as a product)
    /// of a finite Weyl group element, found by descent.
    std::vector<int> reduced_word(const SmallMatrix& w) const;
    int coxeter_length(const SmallMatrix& w) const;

private:
    CartanSpec spec_;
    IntMatrix cartan_;
    SmallMatrix cartan_small_;
    std::vector<LatticeVector> roots_;
    std::vector<LatticeVector> root_coords_;
    std::vector<LatticeVector> coroots_;
    std::vector<int> root_len_;
    std::vector<int> exponents_;
    std::vector<int> simple_len_;
    std::uint64_t weyl_order_ = 1;
    std::size_t highest_ = 0;
    std::vector<SmallMatrix> simple_refl_;
    LatticeVector two_rho_vee_;
};

RootDatum build_root_datum(const CartanSpec& spec);

constexpr std::uint64_t default_weyl_cap = 1'000'000;

/// Every element of W exactly once, BFS order (nondecreasing length).
/// Throws CapExceeded when |W| > cap.
std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum,
                                              std::uint64_t cap = default_weyl_cap);

} // namespace hcov

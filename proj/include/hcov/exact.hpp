#pragma once

// Exact integer / rational arithmetic, integer matrices and their normal forms.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hcov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parse "7", "-3/4" into a canonical rational. Throws ValidationError.
Rational parse_rational(const std::string& text);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Integer>& entries() const noexcept { return a_; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    std::vector<Integer> apply(const std::vector<Integer>& x) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    bool is_diagonal() const;
    /// Fraction-free (Bareiss) determinant. Square matrices only.
    Integer determinant() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row_i += k * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
    /// col_i += k * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Integer& k);
    void negate_row(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> a_;
};

/// U * M * V == D with U, V unimodular and D diagonal with d_1 | d_2 | ... (zeros trailing).
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    /// The min(rows, cols) diagonal entries of D.
    std::vector<Integer> divisors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Diagonal of the Smith form only; skips the bookkeeping of U and V.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

/// Number of y in (Z/n)^c with M y == 0 mod n, as prod gcd(d_i, n) (gcd(0, n) = n).
/// Free columns beyond the rank contribute a factor n each.
Integer solution_count_mod_n(const IntMatrix& m, const Integer& n);
Integer solution_count_from_divisors(const std::vector<Integer>& divisors, std::size_t cols, const Integer& n);

/// Row-style Hermite normal form of the lattice spanned by the rows of `generators`.
/// The result is upper-echelon with positive pivots, entries above each pivot reduced
/// into [0, pivot), and zero rows removed. Equal lattices give equal results.
IntMatrix hermite_normal_form(const IntMatrix& generators);

/// Whether `v` lies in the lattice whose HNF row basis is `hnf`.
bool lattice_contains(const IntMatrix& hnf, const std::vector<Integer>& v);

/// Coordinates c with c^T * hnf == v^T. Throws InvariantViolation if v is not in the lattice.
std::vector<Integer> lattice_coordinates(const IntMatrix& hnf, const std::vector<Integer>& v);

} // namespace hcov

#include "hcov/exact.hpp"

#include "hcov/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hcov {

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw ValidationError("empty rational");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw ValidationError("not a rational number: '" + text + "'");
    if (r.get_den() == 0)
        throw ValidationError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries))
{
    if (a_.size() != rows_ * cols_)
        throw ValidationError("IntMatrix: entry count does not match rows x cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ValidationError("IntMatrix: ragged initializer");
        for (long v : r)
            a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw ValidationError("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& aik = (*this)(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += aik * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("IntMatrix: dimension mismatch in difference");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("IntMatrix: dimension mismatch in sum");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const
{
    if (x.size() != cols_)
        throw ValidationError("IntMatrix: vector length mismatch");
    std::vector<Integer> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] += (*this)(i, j) * x[j];
    return y;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0)
                return false;
    return true;
}

Integer IntMatrix::determinant() const
{
    if (rows_ != cols_)
        throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix m = *this;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------- Smith normal form

namespace {

int cmpabs(const Integer& x, const Integer& y)
{
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
}

/// Smallest-|.| nonzero pivot with row/column swaps. U, V are tracked only when
/// the pointers are non-null.
void smith_in_place(IntMatrix& a, IntMatrix* U, IntMatrix* V)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t k_max = std::min(m, n);
    Integer q;

    for (std::size_t t = 0; t < k_max; ++t) {
        for (;;) {
            // locate the smallest nonzero entry of the trailing block
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a(i, j) == 0)
                        continue;
                    if (pi == m || cmpabs(a(i, j), a(pi, pj)) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m)
                return; // trailing block is zero

            a.swap_rows(t, pi);
            if (U)
                U->swap_rows(t, pi);
            a.swap_cols(t, pj);
            if (V)
                V->swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                q = -q;
                a.add_row_multiple(i, t, q);
                if (U)
                    U->add_row_multiple(i, t, q);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                q = -q;
                a.add_col_multiple(j, t, q);
                if (V)
                    V->add_col_multiple(j, t, q);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // divisibility of the trailing block by the pivot
            std::size_t bad_row = m;
            for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == m)
                break;
            a.add_row_multiple(t, bad_row, Integer(1));
            if (U)
                U->add_row_multiple(t, bad_row, Integer(1));
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            if (U)
                U->negate_row(t);
        }
    }
}

} // namespace

std::vector<Integer> SmithDecomposition::divisors() const
{
    std::vector<Integer> d;
    const std::size_t k = std::min(D.rows(), D.cols());
    d.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        d.push_back(D(i, i));
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    if (m.empty())
        throw ValidationError("smith_normal_form: matrix needs at least one row and column");
    SmithDecomposition s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    smith_in_place(s.D, &s.U, &s.V);
    return s;
}

std::vector<Integer> elementary_divisors(const IntMatrix& m)
{
    if (m.empty())
        throw ValidationError("elementary_divisors: matrix needs at least one row and column");
    IntMatrix d = m;
    smith_in_place(d, nullptr, nullptr);
    std::vector<Integer> out;
    const std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(d(i, i));
    return out;
}

Integer solution_count_from_divisors(const std::vector<Integer>& divisors, std::size_t cols,
                                     const Integer& n)
{
    if (n <= 0)
        throw ValidationError("solution_count_mod_n: n must be positive");
    Integer count = 1;
    Integer g;
    for (const Integer& d : divisors) {
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t()); // gcd(0, n) = n
        count *= g;
    }
    for (std::size_t j = divisors.size(); j < cols; ++j)
        count *= n;
    return count;
}

Integer solution_count_mod_n(const IntMatrix& m, const Integer& n)
{
    if (n <= 0)
        throw ValidationError("solution_count_mod_n: n must be positive");
    return solution_count_from_divisors(elementary_divisors(m), m.cols(), n);
}

// ------------------------------------------------------------- Hermite form

IntMatrix hermite_normal_form(const IntMatrix& generators)
{
    IntMatrix a = generators;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    Integer q;

    for (std::size_t c = 0; c < n && pivot_row < m; ++c) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = pivot_row; i < m; ++i)
                if (a(i, c) != 0 && (best == m || cmpabs(a(i, c), a(best, c)) < 0))
                    best = i;
            if (best == m)
                break;
            a.swap_rows(pivot_row, best);
            bool done = true;
            for (std::size_t i = pivot_row + 1; i < m; ++i) {
                if (a(i, c) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(pivot_row, c).get_mpz_t());
                a.add_row_multiple(i, pivot_row, -q);
                if (a(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a(pivot_row, c) == 0)
            continue;
        if (a(pivot_row, c) < 0)
            a.negate_row(pivot_row);
        for (std::size_t i = 0; i < pivot_row; ++i) {
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(pivot_row, c).get_mpz_t());
            a.add_row_multiple(i, pivot_row, -q);
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }

    IntMatrix out(pivot_row, n);
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = a(i, j);
    return out;
}

namespace {

bool solve_echelon(const IntMatrix& hnf, std::vector<Integer> rest, std::vector<Integer>& coords)
{
    coords.assign(hnf.rows(), 0);
    std::size_t col = 0;
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
        while (col < hnf.cols() && hnf(i, col) == 0) {
            if (rest[col] != 0)
                return false;
            ++col;
        }
        if (col == hnf.cols())
            return false;
        if (!mpz_divisible_p(rest[col].get_mpz_t(), hnf(i, col).get_mpz_t()))
            return false;
        Integer k = rest[col] / hnf(i, col);
        coords[i] = k;
        for (std::size_t j = col; j < hnf.cols(); ++j)
            rest[j] -= k * hnf(i, j);
        ++col;
    }
    return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
}

} // namespace

bool lattice_contains(const IntMatrix& hnf, const std::vector<Integer>& v)
{
    if (v.size() != hnf.cols())
        throw ValidationError("lattice_contains: dimension mismatch");
    std::vector<Integer> coords;
    return solve_echelon(hnf, v, coords);
}

std::vector<Integer> lattice_coordinates(const IntMatrix& hnf, const std::vector<Integer>& v)
{
    if (v.size() != hnf.cols())
        throw ValidationError("lattice_coordinates: dimension mismatch");
    std::vector<Integer> coords;
    if (!solve_echelon(hnf, v, coords))
        throw InvariantViolation("vector is not in the lattice");
    return coords;
}

} // namespace hcov

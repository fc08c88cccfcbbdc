#pragma once

#include "hcov/exact.hpp"

#include <map>
#include <string>

namespace hcov {

/// Laurent polynomial in one variable v with rational coefficients.
///
/// Throughout the library v is the square root of the residue cardinality q, so
/// every half-integral power of q is an integral power of v. Zero coefficients are
/// never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c); // NOLINT: constants convert implicitly
    LaurentPoly(long c);            // NOLINT

    static LaurentPoly monomial(const Rational& c, int exponent);
    static LaurentPoly v() { return monomial(1, 1); }
    /// q = v^2
    static LaurentPoly q() { return monomial(1, 2); }
    /// q^k = v^{2k}
    static LaurentPoly q_power(int k) { return monomial(1, 2 * k); }

    const std::map<int, Rational>& terms() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    Rational coefficient(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;
    /// Whether this is c * v^k for a single k.
    bool is_monomial() const noexcept { return c_.size() == 1; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    /// Multiply by v^k.
    LaurentPoly shifted(int k) const;
    /// Exact division by a monomial c * v^k. Throws ValidationError otherwise.
    LaurentPoly divided_by_monomial(const LaurentPoly& m) const;

    /// Substitute v = v0. Rejects v0 = 0 when negative exponents are present.
    Rational eval(const Rational& v0) const;
    /// Substitute q = q0 when only even powers of v occur.
    Rational eval_q(const Rational& q0) const;

    std::string to_string() const;

private:
    void add_term(int exponent, const Rational& c);
    std::map<int, Rational> c_;
};

Rational rational_pow(const Rational& base, long exponent);

} // namespace hcov

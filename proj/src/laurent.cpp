#include "hcov/laurent.hpp"

#include "hcov/errors.hpp"

#include <sstream>

namespace hcov {

LaurentPoly::LaurentPoly(const Rational& c)
{
    add_term(0, c);
}

LaurentPoly::LaurentPoly(long c)
{
    add_term(0, Rational(c));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent)
{
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

void LaurentPoly::add_term(int exponent, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = c_.try_emplace(exponent, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second == 0)
        c_.erase(it);
}

Rational LaurentPoly::coefficient(int exponent) const
{
    auto it = c_.find(exponent);
    return it == c_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const
{
    if (c_.empty())
        throw ValidationError("min_exponent of the zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exponent() const
{
    if (c_.empty())
        throw ValidationError("max_exponent of the zero polynomial");
    return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.c_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.c_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.c_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& rhs)
{
    if (rhs == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [e, c] : c_)
        c *= rhs;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r;
    for (const auto& [e, c] : c_)
        r.c_.emplace_hint(r.c_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::divided_by_monomial(const LaurentPoly& m) const
{
    if (!m.is_monomial())
        throw ValidationError("divided_by_monomial: divisor is not a monomial");
    const auto& [k, c] = *m.c_.begin();
    LaurentPoly r = shifted(-k);
    r *= Rational(1) / c;
    return r;
}

Rational rational_pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw ValidationError("negative power of zero");
        return rational_pow(Rational(1) / base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1u)
            result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

Rational LaurentPoly::eval(const Rational& v0) const
{
    if (v0 == 0 && !c_.empty() && c_.begin()->first < 0)
        throw ValidationError("cannot evaluate a Laurent polynomial with negative exponents at v = 0");
    Rational sum = 0;
    for (const auto& [e, c] : c_)
        sum += c * rational_pow(v0, e);
    return sum;
}

Rational LaurentPoly::eval_q(const Rational& q0) const
{
    if (q0 == 0 && !c_.empty() && c_.begin()->first < 0)
        throw ValidationError("cannot evaluate a Laurent polynomial with negative exponents at q = 0");
    Rational sum = 0;
    for (const auto& [e, c] : c_) {
        if (e % 2 != 0)
            throw ValidationError("eval_q: odd power of v present in " + to_string());
        sum += c * rational_pow(q0, e / 2);
    }
    return sum;
}

std::string LaurentPoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << '*';
        os << 'v';
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

} // namespace hcov

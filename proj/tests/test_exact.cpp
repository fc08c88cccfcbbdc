#include "hcov/errors.hpp"
#include "hcov/exact.hpp"
#include "hcov/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace hcov;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

// literal enumeration of (Z/n)^c
long brute_count(const IntMatrix& m, long n)
{
    const std::size_t c = m.cols();
    std::vector<long> y(c, 0);
    long count = 0;
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < m.rows() && ok; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < c; ++j)
                s += m(i, j) * y[j];
            ok = s % n == 0;
        }
        count += ok;
        std::size_t k = 0;
        while (k < c && ++y[k] == n)
            y[k++] = 0;
        if (k == c)
            return count;
    }
}

LaurentPoly random_laurent(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> e(-4, 4), c(-5, 5), terms(0, 4);
    LaurentPoly p;
    for (int t = terms(rng); t > 0; --t) {
        Rational coef(c(rng), 1 + std::abs(c(rng)));
        coef.canonicalize();
        p += LaurentPoly::monomial(coef, e(rng));
    }
    return p;
}

} // namespace

TEST_CASE("smith normal form examples")
{
    auto s = smith_normal_form(IntMatrix{{6}});
    CHECK(s.D == IntMatrix{{6}});
    CHECK(s.U == IntMatrix{{1}});
    CHECK(s.V == IntMatrix{{1}});

    const IntMatrix m{{2, 4}, {6, 8}};
    s = smith_normal_form(m);
    CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
    CHECK(s.U * m * s.V == s.D);

    s = smith_normal_form(IntMatrix(2, 2));
    CHECK(s.D.is_zero());
}

TEST_CASE("smith normal form on random matrices")
{
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto r = static_cast<std::size_t>(dim(rng));
        const auto c = static_cast<std::size_t>(dim(rng));
        const IntMatrix m = random_matrix(rng, r, c);
        const auto s = smith_normal_form(m);
        REQUIRE(s.U * m * s.V == s.D);
        CHECK(s.D.is_diagonal());
        CHECK(abs(s.U.determinant()) == 1);
        CHECK(abs(s.V.determinant()) == 1);
        const auto d = s.divisors();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (d[i] == 0)
                CHECK(d[i + 1] == 0);
            else
                CHECK(d[i + 1] % d[i] == 0);
        }
        CHECK(elementary_divisors(m) == d);
    }
}

TEST_CASE("solution counts")
{
    CHECK(solution_count_mod_n(IntMatrix(3, 3), 4) == 64);
    CHECK(solution_count_mod_n(IntMatrix::identity(3), 5) == 1);
    CHECK(solution_count_mod_n(IntMatrix{{2}}, 6) == 2);
    CHECK_THROWS_AS(solution_count_mod_n(IntMatrix{{2}}, 0), ValidationError);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 3), nn(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = static_cast<std::size_t>(dim(rng));
        const long n = nn(rng);
        const IntMatrix m = random_matrix(rng, r, r);
        CHECK(solution_count_mod_n(m, n) == brute_count(m, n));
    }
}

TEST_CASE("hermite normal form and lattice membership")
{
    const IntMatrix a{{2, 0}, {0, 3}};
    const IntMatrix b{{2, 3}, {0, 3}, {4, 6}};
    CHECK(hermite_normal_form(a) == hermite_normal_form(IntMatrix{{2, 3}, {2, 0}}));
    CHECK(lattice_contains(hermite_normal_form(a), {4, 9}));
    CHECK_FALSE(lattice_contains(hermite_normal_form(a), {1, 0}));
    const IntMatrix h = hermite_normal_form(b);
    const auto c = lattice_coordinates(h, {6, 6});
    std::vector<Integer> back(2, 0);
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < 2; ++j)
            back[j] += c[i] * h(i, j);
    CHECK(back == std::vector<Integer>{6, 6});
    CHECK_THROWS_AS(lattice_coordinates(h, {1, 0}), InvariantViolation);
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
}

TEST_CASE("laurent polynomial examples")
{
    const LaurentPoly v = LaurentPoly::v();
    const LaurentPoly vi = LaurentPoly::monomial(1, -1);
    CHECK((v + vi) * (v - vi) == LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2));
    CHECK((LaurentPoly::q() - LaurentPoly(1L)).eval(2) == 3);
    CHECK(LaurentPoly::monomial(1, -2).eval(Rational(1, 2)) == 4);
    CHECK_THROWS_AS(LaurentPoly::monomial(1, -2).eval(0), ValidationError);
    CHECK((v - v).is_zero());
    CHECK((v - v).terms().empty());
}

TEST_CASE("laurent ring axioms on random triples")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        const LaurentPoly ab = a * b;
        for (const auto& [e, coef] : ab.terms())
            CHECK(coef != 0);
    }
}

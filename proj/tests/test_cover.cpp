#include "hcov/cover.hpp"
#include "hcov/errors.hpp"

#include <doctest.h>

#include <numeric>

using namespace hcov;

namespace {

bool table_condition(const CartanSpec& s, long n)
{
    switch (s.letter) {
    case 'A':
        return std::gcd(n, static_cast<long>(s.rank + 1)) == 1;
    case 'B':
    case 'C':
    case 'D':
        return n % 2 == 1;
    case 'E':
        if (s.rank == 8)
            return n % 2 && n % 3 && n % 5;
        return n % 2 && n % 3;
    default:
        return n % 2 && n % 3;
    }
}

LatticeVector unit(int r, int i)
{
    LatticeVector e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

std::vector<Integer> big(const LatticeVector& v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("Q on simple coroots")
{
    CHECK(build_cover(RootDatum(CartanSpec{'B', 2}), 1).q_simple() == std::vector<std::int64_t>{1, 2});
    CHECK(build_cover(RootDatum(CartanSpec{'C', 2}), 1).q_simple() == std::vector<std::int64_t>{2, 1});
    CHECK(build_cover(RootDatum(CartanSpec{'G', 2}), 1).q_simple() == std::vector<std::int64_t>{3, 1});
    CHECK(build_cover(RootDatum(CartanSpec{'F', 4}), 1).q_simple() == std::vector<std::int64_t>{1, 1, 2, 2});
    CHECK(build_cover(RootDatum(CartanSpec{'A', 3}), 1, 2).q_simple() == std::vector<std::int64_t>{2, 2, 2});
}

TEST_CASE("bilinear form is symmetric, polarizes Q and is W-invariant")
{
    for (const auto& spec : {CartanSpec{'B', 3}, CartanSpec{'G', 2}, CartanSpec{'F', 4}, CartanSpec{'D', 4}}) {
        const CoverDatum c = build_cover(RootDatum(spec), 6);
        const int r = c.rank();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                const auto ei = unit(r, i), ej = unit(r, j);
                CHECK(c.bilinear(ei, ej) == c.bilinear(ej, ei));
                LatticeVector s(ei);
                s[static_cast<std::size_t>(j)] += 1;
                CHECK(c.bilinear(ei, ej) == c.quadratic(s) - c.quadratic(ei) - c.quadratic(ej));
                for (int k = 0; k < r; ++k) {
                    const SmallMatrix& w = c.base().simple_reflection(k);
                    CHECK(c.bilinear(w.apply(ei), w.apply(ej)) == c.bilinear(ei, ej));
                }
            }
    }
}

TEST_CASE("examples")
{
    const CoverDatum a1 = build_cover(RootDatum(CartanSpec{'A', 1}), 2);
    CHECK(a1.in_lattice({1}));
    CHECK(a1.n_alpha_simple(0) == 2);
    CHECK(a1.rescaled_coroots()[0] == LatticeVector{2});
    for (const auto& spec : {CartanSpec{'E', 6}, CartanSpec{'G', 2}, CartanSpec{'B', 4}}) {
        const CoverDatum c = build_cover(RootDatum(spec), 1);
        CHECK(c.lattice_basis() == IntMatrix::identity(static_cast<std::size_t>(c.rank())));
        for (auto na : c.n_alpha())
            CHECK(na == 1);
        CHECK(c.rescaled_coroots() == c.base().positive_coroots());
    }
    for (long n : {1L, 3L, 5L, 7L}) {
        const CoverDatum c = build_cover(RootDatum(CartanSpec{'C', 3}), n);
        CHECK(lattice_is_nY(c));
    }
    CHECK_THROWS_AS(build_cover(RootDatum(CartanSpec{'A', 1}), 0), ValidationError);
    CHECK_THROWS_AS(build_cover(RootDatum(CartanSpec{'A', 1}), 2, 0), ValidationError);
}

TEST_CASE("Y_Qn against a direct lattice scan")
{
    for (const auto& spec : {CartanSpec{'A', 2}, CartanSpec{'B', 2}, CartanSpec{'C', 2}, CartanSpec{'G', 2}}) {
        for (long n = 1; n <= 8; ++n) {
            const CoverDatum c = build_cover(RootDatum(spec), n);
            for (int a = -2 * static_cast<int>(n); a <= 2 * n; ++a)
                for (int b = -2 * static_cast<int>(n); b <= 2 * n; ++b) {
                    const LatticeVector y{a, b};
                    const bool in = c.bilinear(y, unit(2, 0)) % n == 0 && c.bilinear(y, unit(2, 1)) % n == 0;
                    CHECK(c.in_lattice(y) == in);
                }
        }
    }
}

TEST_CASE("structural invariants")
{
    for (const auto& spec : {CartanSpec{'A', 3}, CartanSpec{'B', 3}, CartanSpec{'C', 3}, CartanSpec{'G', 2},
                             CartanSpec{'F', 4}, CartanSpec{'D', 4}}) {
        for (long n = 1; n <= 12; ++n) {
            CAPTURE(spec.name());
            CAPTURE(n);
            const CoverDatum c = build_cover(RootDatum(spec), n);
            const RootDatum& rd = c.base();
            const int r = c.rank();
            for (int i = 0; i < r; ++i) {
                LatticeVector e = unit(r, i);
                for (auto& x : e)
                    x *= n;
                CHECK(c.in_lattice(e));
            }
            for (const auto& y : c.rescaled_coroots())
                CHECK(c.in_lattice(y));
            const IntMatrix& b = c.lattice_basis();
            for (std::size_t k = 0; k < b.rows(); ++k) {
                LatticeVector v(static_cast<std::size_t>(r));
                for (int j = 0; j < r; ++j)
                    v[static_cast<std::size_t>(j)] = b(k, static_cast<std::size_t>(j)).get_si();
                for (int i = 0; i < r; ++i)
                    CHECK(c.in_lattice(rd.simple_reflection(i).apply(v)));
            }
            Integer index = b.determinant();
            Integer nr = 1;
            for (int i = 0; i < r; ++i)
                nr *= n;
            CHECK(nr % abs(index) == 0);
            for (std::size_t a = 0; a < rd.num_positive_roots(); ++a) {
                CHECK(c.n_alpha()[a] == n / std::gcd(n, c.quadratic(rd.positive_coroots()[a])));
                for (std::size_t b2 = 0; b2 < rd.num_positive_roots(); ++b2)
                    if (rd.root_length(a) == rd.root_length(b2))
                        CHECK(c.n_alpha()[a] == c.n_alpha()[b2]);
            }
        }
    }
}

TEST_CASE("oasitic predicate reproduces the table")
{
    std::vector<CartanSpec> types;
    for (int r = 1; r <= 7; ++r)
        types.push_back({'A', r});
    for (int r = 2; r <= 6; ++r) {
        types.push_back({'B', r});
        types.push_back({'C', r});
    }
    for (int r = 4; r <= 6; ++r)
        types.push_back({'D', r});
    types.push_back({'E', 6});
    types.push_back({'E', 7});
    types.push_back({'E', 8});
    types.push_back({'F', 4});
    types.push_back({'G', 2});
    for (const auto& spec : types) {
        const RootDatum rd(spec);
        for (long n = 1; n <= 30; ++n) {
            CAPTURE(spec.name());
            CAPTURE(n);
            CHECK(is_oasitic(build_cover(rd, n)) == table_condition(spec, n));
        }
    }
    CHECK_THROWS_AS(is_oasitic(build_cover(RootDatum(CartanSpec{'A', 1}), 3, 2)), ValidationError);
}

TEST_CASE("lattice equality alone is not the table condition")
{
    // Y_{Q,n} = nY here although the cover is not in the table
    CHECK(lattice_is_nY(build_cover(RootDatum(CartanSpec{'G', 2}), 2)));
    CHECK_FALSE(is_oasitic(build_cover(RootDatum(CartanSpec{'G', 2}), 2)));
    CHECK(lattice_is_nY(build_cover(RootDatum(CartanSpec{'F', 4}), 3)));
    CHECK_FALSE(is_oasitic(build_cover(RootDatum(CartanSpec{'F', 4}), 3)));
}

TEST_CASE("center groups")
{
    const RootDatum a1(CartanSpec{'A', 1});
    CHECK(center_group(build_cover(a1, 1)).trivial());
    CHECK(heart_center_group(build_cover(a1, 1)).trivial());
    const auto z = center_group(build_cover(a1, 2));
    CHECK(z.invariant_factors == std::vector<Integer>{2});
    CHECK(z.order == 2);
    // Y_{Q,2} = Y, and nY = 2Y = Y^{sc}_{Q,2}: the quotient is Z/2
    CHECK(heart_center_group(build_cover(a1, 2)).invariant_factors == std::vector<Integer>{2});
    for (const auto& spec : {CartanSpec{'G', 2}, CartanSpec{'C', 3}, CartanSpec{'A', 4}}) {
        for (long n : {1L, 5L, 7L}) {
            const CoverDatum c = build_cover(RootDatum(spec), n);
            if (!is_oasitic(c))
                continue;
            CHECK(center_group(c).trivial());
            CHECK(heart_center_group(c).trivial());
        }
    }
    // simply connected base: heart equals center
    for (long n = 1; n <= 10; ++n) {
        const CoverDatum c = build_cover(RootDatum(CartanSpec{'A', 3}), n);
        CHECK(center_group(c).invariant_factors == heart_center_group(c).invariant_factors);
    }
    const auto a2 = center_group(build_cover(RootDatum(CartanSpec{'A', 2}), 3));
    CHECK(a2.order == 3);
    CHECK(a2.to_string() == "Z/3");
    CHECK(quotient_group(IntMatrix{{2, 0}, {0, 6}}).to_string() == "Z/2 x Z/6");
    CHECK(lattice_contains(hermite_normal_form(IntMatrix{{3, 0}, {0, 3}}), big({3, -6})));
}

#include "hcov/errors.hpp"
#include "hcov/formal_degree.hpp"

#include <doctest.h>

using namespace hcov;

namespace {

AffineWeylGroup group_of(char letter, int rank, long n)
{
    return AffineWeylGroup(build_cover(RootDatum(CartanSpec{letter, rank}), n));
}

// prod_i (1 + t + ... + t^{m_i}) / (1 - t^{m_i}) at t = 1/q
Rational bott_limit(const RootDatum& rd, const Rational& q)
{
    const Rational t = 1 / q;
    Rational out = 1;
    for (int m : rd.exponents()) {
        Rational num = 0;
        for (int k = 0; k <= m; ++k)
            num += rational_pow(t, k);
        out *= num / (1 - rational_pow(t, m));
    }
    return out;
}

} // namespace

TEST_CASE("affine A1 Steinberg")
{
    const auto g = group_of('A', 1, 1);
    const auto st = steinberg_character(g);
    const Rational q(4);
    const auto s = formal_degree_inverse(g, st, q, 40);
    CHECK(s.converged);
    CHECK(abs(s.limit_estimate - Rational(5, 3)) < Rational(1, 100000000));
    // 1 + 2/q + 2/q^2 + ...: the ratio is exactly 1/q and the tail estimate is exact
    CHECK(*s.ratio == Rational(1, 4));
    CHECK(s.limit_estimate == Rational(5, 3));
    for (int l = 1; l <= 40; ++l)
        CHECK(s.contributions[static_cast<std::size_t>(l)] == 2 / rational_pow(q, l));
    const auto s0 = formal_degree_inverse(g, st, q, 0);
    CHECK(s0.partial_sums.front() == 1);
    CHECK(s0.L == 0);
    CHECK(1 / s.limit_estimate == Rational(3, 5));
    CHECK(degree_with_canonical_measure(s, 1) == Rational(3, 5));
    CHECK(degree_with_canonical_measure(s, canonical_measure_constant(g.datum(), q)) == Rational(16, 5));
    CHECK_THROWS_AS(degree_with_canonical_measure(s0, 1), NotConverged);
}

TEST_CASE("Steinberg series match BFS counts and the Bott product")
{
    for (auto g : {group_of('G', 2, 1), group_of('B', 2, 1), group_of('A', 2, 1), group_of('G', 2, 5),
                   group_of('B', 2, 3)}) {
        CAPTURE(g.cover().name());
        const Rational q(3);
        const int L = 24;
        const auto s = formal_degree_inverse(g, steinberg_character(g), q, L);
        const auto bfs = bfs_word_lengths(g, 16);
        std::vector<std::uint64_t> counts(17, 0);
        for (const auto& [w, l] : bfs)
            ++counts[static_cast<std::size_t>(l)];
        for (int l = 0; l <= 16; ++l) {
            CHECK(s.counts[static_cast<std::size_t>(l)] == counts[static_cast<std::size_t>(l)]);
            CHECK(s.contributions[static_cast<std::size_t>(l)] == Rational(counts[static_cast<std::size_t>(l)]) / rational_pow(q, l));
        }
        for (int l = 1; l <= L; ++l)
            CHECK(s.partial_sums[static_cast<std::size_t>(l)] > s.partial_sums[static_cast<std::size_t>(l - 1)]);
        REQUIRE(s.ratio);
        CHECK(*s.ratio < 1);
        const Rational bott = bott_limit(g.datum(), q);
        CHECK(s.partial_sums.back() < bott);
        CHECK(abs(s.limit_estimate - bott) / bott < Rational(1, 10000));
    }
}

TEST_CASE("non-Steinberg discrete series converge")
{
    const auto g = group_of('B', 2, 3);
    for (const auto& chi : discrete_series_characters(g)) {
        const auto s = formal_degree_inverse(g, chi, Rational(3), 80);
        CAPTURE(chi.label);
        CHECK(s.converged);
        CHECK_FALSE(s.diverging);
    }
    const auto g2 = group_of('G', 2, 5);
    const auto s = formal_degree_inverse(g2, discrete_series_characters(g2)[1], Rational(5), 60);
    CHECK(s.converged);
}

TEST_CASE("divergence is detected")
{
    const auto g = group_of('A', 1, 1);
    const auto triv = trivial_character(g);
    CHECK_THROWS_AS(formal_degree_inverse(g, triv, Rational(4), 10), ValidationError);
    const auto s = formal_degree_inverse(g, triv, Rational(4), 20, default_tolerance, LengthSelector::GQn, false);
    CHECK(s.diverging);
    CHECK_FALSE(s.converged);
    for (int l = 1; l <= 20; ++l)
        CHECK(s.contributions[static_cast<std::size_t>(l)] >= s.contributions[static_cast<std::size_t>(l - 1)]);
    CHECK_THROWS_AS(degree_with_canonical_measure(s, 1), NotConverged);
}

TEST_CASE("input validation")
{
    const auto g = group_of('A', 1, 1);
    const auto st = steinberg_character(g);
    CHECK_THROWS_AS(formal_degree_inverse(g, st, Rational(1), 5), ValidationError);
    CHECK_THROWS_AS(formal_degree_inverse(g, st, Rational(1, 2), 5), ValidationError);
    CHECK_THROWS_AS(formal_degree_inverse(g, st, Rational(2), -1), ValidationError);
    CHECK_THROWS_AS(canonical_measure_constant(g.datum(), Rational(1)), ValidationError);
}

TEST_CASE("canonical measure constant")
{
    CHECK(canonical_measure_constant(RootDatum(CartanSpec{'A', 1}), 2) == Rational(1, 4));
    CHECK(canonical_measure_constant(RootDatum(CartanSpec{'G', 2}), 2) == Rational(1, 256));
    for (const auto& spec : {CartanSpec{'B', 3}, CartanSpec{'E', 6}})
        for (long qq : {2L, 3L, 7L}) {
            const RootDatum rd(spec);
            CHECK(canonical_measure_polynomial(rd).eval_q(qq) == canonical_measure_constant(rd, qq));
        }
}

TEST_CASE("terms are positive and invariant under inversion")
{
    for (auto g : {group_of('B', 2, 3), group_of('G', 2, 5), group_of('A', 1, 3)}) {
        const Rational q(3);
        for (const auto& chi : all_characters(g))
            for (const auto& e : g.enumerate_ball(6)) {
                const Rational t = linear_term(chi, e, q);
                CHECK(t > 0);
                CHECK(character_value(g, chi, e.w) == character_value(g, chi, e.w.inverse()));
                const auto v = character_value(g, chi, e.w) * character_value(g, chi, e.w.inverse());
                CHECK(v.shifted(-2 * e.l_GQn).eval_q(q) == t);
            }
    }
}

TEST_CASE("cover-side terms equal linear-side terms")
{
    for (auto g : {group_of('A', 1, 1), group_of('A', 1, 3), group_of('A', 1, 2), group_of('A', 2, 2),
                   group_of('B', 2, 3), group_of('G', 2, 5), group_of('C', 3, 3)}) {
        CAPTURE(g.cover().name());
        const Rational q(3);
        const int L = g.rank() == 3 ? 5 : 8;
        for (const auto& chi : all_characters(g)) {
            for (const auto& e : g.enumerate_ball(L)) {
                // e_w carries the length difference as its exponent shift against E_w
                const LaurentPoly ew = cover_character_value(g, chi, e.w);
                const LaurentPoly Ew = character_value(g, chi, e.w);
                CHECK(ew.shifted(-e.l_G) == Ew.shifted(-e.l_GQn));
                CHECK(cover_term(g, chi, e.w, q) == linear_term(chi, e, q));
            }
            const auto a = formal_degree_inverse(g, chi, q, L, default_tolerance, LengthSelector::G, false);
            const auto b = formal_degree_inverse_cover_side(g, chi, q, L, default_tolerance, LengthSelector::G);
            CHECK(a.partial_sums == b.partial_sums);
        }
    }
}

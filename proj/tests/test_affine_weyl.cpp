#include "hcov/affine_weyl.hpp"
#include "hcov/errors.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <random>
#include <unordered_set>

using namespace hcov;

namespace {

struct Case {
    CartanSpec spec;
    long n;
};

std::vector<Case> small_grid()
{
    std::vector<Case> g;
    for (const auto& spec : {CartanSpec{'A', 1}, CartanSpec{'A', 2}, CartanSpec{'B', 2}, CartanSpec{'C', 2},
                             CartanSpec{'G', 2}})
        for (long n : {1L, 2L, 3L, 5L})
            g.push_back({spec, n});
    return g;
}

// prod_i (1 + t + ... + t^{m_i}) / (1 - t^{m_i}), truncated at degree L
std::vector<long> affine_poincare(const std::vector<int>& exps, int L)
{
    std::vector<long> p(static_cast<std::size_t>(L) + 1, 0);
    p[0] = 1;
    for (int m : exps) {
        std::vector<long> q(p.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int k = 0; k <= m && i + static_cast<std::size_t>(k) < p.size(); ++k)
                q[i + static_cast<std::size_t>(k)] += p[i];
        for (std::size_t i = static_cast<std::size_t>(m); i < q.size(); ++i)
            q[i] += q[i - static_cast<std::size_t>(m)];
        p = std::move(q);
    }
    return p;
}

} // namespace

TEST_CASE("group law")
{
    const AffineWeylGroup g(build_cover(RootDatum(CartanSpec{'B', 2}), 3));
    const auto ball = g.enumerate_ball(4);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    const auto e = AffineElement::identity(2);
    for (int t = 0; t < 200; ++t) {
        const auto& a = ball[pick(rng)].w;
        const auto& b = ball[pick(rng)].w;
        const auto& c = ball[pick(rng)].w;
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == e);
        CHECK(a.inverse() * a == e);
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
    }
}

TEST_CASE("length examples")
{
    const AffineWeylGroup a1(build_cover(RootDatum(CartanSpec{'A', 1}), 3));
    const SmallMatrix s = a1.datum().simple_reflection(0);
    CHECK(a1.length_G(AffineElement::identity(1)) == 0);
    CHECK(a1.length_G(a1.make_element({3}, s)) == 7);
    CHECK(a1.length_GQn(a1.make_element({3}, s)) == 3);
    CHECK(a1.length_G(a1.translation({3})) == 6);
    CHECK(a1.length_GQn(a1.translation({3})) == 2);
    CHECK(a1.length_GQn(a1.make_element({0}, s)) == 1);
    CHECK(a1.length_G(a1.make_element({0}, s)) == 1);
    CHECK_THROWS_AS(a1.make_element({1}, s), ValidationError);

    const AffineWeylGroup g2(build_cover(RootDatum(CartanSpec{'G', 2}), 1));
    for (const LatticeVector& y : {LatticeVector{2, 3}, LatticeVector{1, 2}, LatticeVector{4, 7}}) {
        REQUIRE(g2.datum().is_dominant(y));
        CHECK(Rational(g2.length_G(g2.translation(y))) == 2 * g2.datum().rho_pairing(y));
    }
    for (const auto& w : enumerate_weyl_group(g2.datum())) {
        const AffineElement e = g2.make_element({0, 0}, w.matrix);
        CHECK(g2.length_G(e) == w.length);
        CHECK(g2.length_GQn(e) == w.length);
    }
    CHECK(g2.format_element(g2.make_element({1, -2}, g2.datum().simple_reflection(0))) == "([1, -2], s1)");
}

TEST_CASE("formula lengths equal BFS word lengths")
{
    for (const auto& c : small_grid()) {
        CAPTURE(c.spec.name());
        CAPTURE(c.n);
        const AffineWeylGroup g(build_cover(RootDatum(c.spec), c.n));
        const int L = 8;
        const auto bfs = bfs_word_lengths(g, L);
        const auto ball = g.enumerate_ball(L);
        CHECK(ball.size() == bfs.size());
        for (const auto& e : ball) {
            auto it = bfs.find(e.w);
            REQUIRE(it != bfs.end());
            CHECK(it->second == e.l_GQn);
            CHECK(g.length_GQn(e.w) == e.l_GQn);
            CHECK(g.lengths_reference(e.w) == g.lengths(e.w));
            CHECK(static_cast<int>(e.word.size()) == e.l_GQn);
        }
    }
    for (const auto& spec : {CartanSpec{'B', 3}, CartanSpec{'C', 3}, CartanSpec{'A', 3}}) {
        const AffineWeylGroup g(build_cover(RootDatum(spec), 3));
        const auto bfs = bfs_word_lengths(g, 6);
        for (const auto& e : g.enumerate_ball(6))
            CHECK(bfs.at(e.w) == e.l_GQn);
    }
}

TEST_CASE("l_G equals word length in the linear group")
{
    for (const auto& c : small_grid()) {
        CAPTURE(c.spec.name());
        CAPTURE(c.n);
        const RootDatum rd(c.spec);
        const AffineWeylGroup cover(build_cover(rd, c.n));
        const AffineWeylGroup linear(build_cover(rd, 1));
        const int L = 8;
        const auto bfs = bfs_word_lengths(linear, L);
        std::size_t seen = 0;
        for (const auto& e : cover.enumerate_ball(L, LengthSelector::G)) {
            CHECK(bfs.at(e.w) == e.l_G);
            ++seen;
        }
        std::size_t expected = 0;
        for (const auto& [w, l] : bfs)
            expected += cover.cover().in_lattice(w.y) ? 1 : 0;
        CHECK(seen == expected);
    }
}

TEST_CASE("lengths are inversion invariant and the transfer holds")
{
    for (const auto& c : small_grid()) {
        const AffineWeylGroup g(build_cover(RootDatum(c.spec), c.n));
        for (const auto& e : g.enumerate_ball(6)) {
            const auto inv = g.lengths(e.w.inverse());
            CHECK(inv.l_G == e.l_G);
            CHECK(inv.l_GQn == e.l_GQn);
            for (int i = 1; i <= g.rank(); ++i) {
                const auto next = g.lengths(g.generator(i) * e.w);
                CHECK((next.l_G == e.l_G + 1) == (next.l_GQn == e.l_GQn + 1));
            }
        }
    }
}

TEST_CASE("ball counts")
{
    const AffineWeylGroup a1(build_cover(RootDatum(CartanSpec{'A', 1}), 1));
    std::vector<int> counts(6, 0);
    for (const auto& e : a1.enumerate_ball(5))
        ++counts[static_cast<std::size_t>(e.l_GQn)];
    CHECK(counts == std::vector<int>{1, 2, 2, 2, 2, 2});

    for (const auto& spec : {CartanSpec{'G', 2}, CartanSpec{'B', 2}, CartanSpec{'A', 2}, CartanSpec{'B', 3}}) {
        const RootDatum rd(spec);
        const int L = spec.rank == 3 ? 8 : 12;
        const auto expected = affine_poincare(rd.exponents(), L);
        for (long n : {1L, 5L}) {
            const AffineWeylGroup g(build_cover(rd, n));
            if (n > 1 && !is_oasitic(g.cover()))
                continue;
            std::vector<long> c(static_cast<std::size_t>(L) + 1, 0);
            for (const auto& e : g.enumerate_ball(L))
                ++c[static_cast<std::size_t>(e.l_GQn)];
            CHECK(c == expected);
        }
    }
}

TEST_CASE("G2 ball against a box scan of the formula")
{
    const RootDatum rd(CartanSpec{'G', 2});
    const AffineWeylGroup g(build_cover(rd, 1));
    const int L = 12;
    std::vector<long> scan(L + 1, 0);
    const auto weyl = enumerate_weyl_group(rd);
    for (int a = -3 * L; a <= 3 * L; ++a)
        for (int b = -3 * L; b <= 3 * L; ++b)
            for (const auto& w : weyl) {
                const auto l = g.length_G(g.make_element({a, b}, w.matrix));
                if (l <= L)
                    ++scan[static_cast<std::size_t>(l)];
            }
    std::vector<long> ball(L + 1, 0);
    for (const auto& e : g.enumerate_ball(L))
        ++ball[static_cast<std::size_t>(e.l_G)];
    CHECK(scan == ball);
}

TEST_CASE("enumeration is duplicate free and sorted")
{
    const AffineWeylGroup g(build_cover(RootDatum(CartanSpec{'C', 3}), 2));
    const auto ball = g.enumerate_ball(7);
    std::unordered_set<AffineElement, AffineElementHash> seen;
    int last = 0;
    for (const auto& e : ball) {
        CHECK(seen.insert(e.w).second);
        CHECK(e.l_GQn >= last);
        last = e.l_GQn;
    }
}

TEST_CASE("generators and braid orders")
{
    const AffineWeylGroup a1(build_cover(RootDatum(CartanSpec{'A', 1}), 1));
    CHECK(a1.num_generators() == 2);
    CHECK(a1.braid_order(0, 1) == 0);
    const AffineWeylGroup a2(build_cover(RootDatum(CartanSpec{'A', 2}), 1));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(a2.braid_order(i, j) == 3);
    const AffineWeylGroup b2(build_cover(RootDatum(CartanSpec{'B', 2}), 3));
    CHECK(b2.braid_order(1, 2) == 4);
    CHECK(b2.braid_order(0, 2) == 4);
    CHECK(b2.braid_order(0, 1) == 2);
    const AffineWeylGroup g2(build_cover(RootDatum(CartanSpec{'G', 2}), 5));
    std::multiset<int> orders{g2.braid_order(0, 1), g2.braid_order(0, 2), g2.braid_order(1, 2)};
    CHECK(orders == std::multiset<int>{2, 3, 6});
    for (const auto& c : small_grid()) {
        const AffineWeylGroup g(build_cover(RootDatum(c.spec), c.n));
        for (int i = 0; i < g.num_generators(); ++i) {
            CHECK(g.length_GQn(g.generator(i)) == 1);
            CHECK(g.generator(i) * g.generator(i) == AffineElement::identity(g.rank()));
        }
    }
}

TEST_CASE("length-zero subgroup")
{
    struct Expect {
        CartanSpec spec;
        long n;
        std::size_t omega;
    };
    for (const auto& x : {Expect{{'A', 1}, 1, 1}, Expect{{'A', 1}, 2, 2}, Expect{{'A', 2}, 3, 3},
                          Expect{{'D', 4}, 2, 4}, Expect{{'G', 2}, 5, 1}, Expect{{'C', 3}, 3, 1}}) {
        const AffineWeylGroup g(build_cover(RootDatum(x.spec), x.n));
        CHECK(g.omega().size() == x.omega);
        CHECK(g.omega().size() == static_cast<std::size_t>(center_group(g.cover()).order.get_ui()));
        CHECK(g.omega().front() == AffineElement::identity(g.rank()));
        for (const auto& om : g.omega())
            CHECK(g.length_GQn(om) == 0);
        std::size_t zero = 0;
        for (const auto& e : g.enumerate_ball(0)) {
            CHECK(e.l_GQn == 0);
            ++zero;
        }
        CHECK(zero == x.omega);
    }
}

TEST_CASE("decomposition reproduces the element")
{
    const AffineWeylGroup g(build_cover(RootDatum(CartanSpec{'A', 2}), 3));
    for (const auto& e : g.enumerate_ball(6)) {
        const auto d = g.decompose(e.w);
        AffineElement p = AffineElement::identity(2);
        for (int i : d.word)
            p = p * g.generator(i);
        CHECK(p * g.omega()[d.omega] == e.w);
        CHECK(static_cast<int>(d.word.size()) == e.l_GQn);
    }
}

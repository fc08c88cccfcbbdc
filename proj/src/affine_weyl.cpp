#include "hcov/affine_weyl.hpp"

#include "hcov/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hcov {

AffineElement AffineElement::identity(int rank)
{
    return AffineElement{LatticeVector(static_cast<std::size_t>(rank), 0), SmallMatrix::identity(rank)};
}

AffineElement AffineElement::operator*(const AffineElement& rhs) const
{
    AffineElement out{s.apply(rhs.y), s * rhs.s};
    for (std::size_t i = 0; i < y.size(); ++i)
        out.y[i] += y[i];
    return out;
}

AffineElement AffineElement::inverse() const
{
    AffineElement out{LatticeVector{}, s.inverse()};
    out.y = out.s.apply(y);
    for (auto& x : out.y)
        x = -x;
    return out;
}

std::size_t AffineElementHash::operator()(const AffineElement& w) const noexcept
{
    return hash_lattice_vector(w.y) * 31 + hash_lattice_vector(w.s.a);
}

std::string format_vector(const LatticeVector& y)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < y.size(); ++i)
        os << (i ? ", " : "") << y[i];
    os << ']';
    return os.str();
}

std::string format_weyl_word(const RootDatum& datum, const SmallMatrix& s)
{
    const auto word = datum.reduced_word(s);
    if (word.empty())
        return "e";
    std::string out;
    for (int i : word)
        out += "s" + std::to_string(i + 1);
    return out;
}

AffineWeylGroup::AffineWeylGroup(const CoverDatum& cover)
    : cover_(cover), two_rho_vee_(cover.base().two_rho_vee()), kernel_(cover.base(), cover.n_alpha())
{
    const RootDatum& rd = cover_.base();
    const int r = rank();

    // Highest root of the rescaled system {alpha / n_alpha}.
    Rational best = -1;
    for (std::size_t a = 0; a < rd.num_positive_roots(); ++a) {
        Rational h = 0;
        for (int i = 0; i < r; ++i)
            h += Rational(rd.positive_root_coords()[a][static_cast<std::size_t>(i)] * cover_.n_alpha_simple(i));
        h /= Rational(cover_.n_alpha()[a]);
        if (h > best) {
            best = h;
            theta_ = a;
        }
    }
    AffineElement s0{cover_.rescaled_coroots()[theta_], rd.reflection(theta_)};
    for (auto& x : s0.y)
        x = -x;
    gens_.push_back(std::move(s0));
    for (int i = 0; i < r; ++i)
        gens_.push_back(AffineElement{LatticeVector(static_cast<std::size_t>(r), 0), rd.simple_reflection(i)});
    for (const auto& g : gens_)
        if (length_GQn(g) != 1)
            throw InvariantViolation("affine generator of " + cover_.name() + " does not have length 1");

    const int ng = num_generators();
    const AffineElement e = AffineElement::identity(r);
    braid_.assign(static_cast<std::size_t>(ng), std::vector<int>(static_cast<std::size_t>(ng), 1));
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j) {
            if (i == j)
                continue;
            const AffineElement st = generator(i) * generator(j);
            AffineElement p = st;
            int order = 0;
            for (int k = 1; k <= 12; ++k) {
                if (p == e) {
                    order = k;
                    break;
                }
                p = p * st;
            }
            braid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = order;
        }

    // Length-zero elements: one per class of Y_{Q,n} / Y^{sc}_{Q,n}, moved into the base
    // alcove by descent.
    const auto ur = static_cast<std::size_t>(r);
    IntMatrix rel(ur, ur);
    for (int i = 0; i < r; ++i) {
        LatticeVector c(ur, 0);
        c[static_cast<std::size_t>(i)] = cover_.n_alpha_simple(i);
        const auto coords = cover_.lattice_coordinates_of(c);
        for (std::size_t k = 0; k < ur; ++k)
            rel(static_cast<std::size_t>(i), k) = coords[k];
    }
    const SmithDecomposition snf = smith_normal_form(rel);
    SmallMatrix v(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            v(i, j) = snf.V(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_si();
    const SmallMatrix vinv = v.inverse();
    const auto d = snf.divisors();
    std::vector<std::int64_t> k(ur, 0);
    const IntMatrix& basis = cover_.lattice_basis();
    for (;;) {
        // x = k V^{-1} in lattice coordinates, then y = x * basis
        LatticeVector x(ur, 0);
        for (std::size_t i = 0; i < ur; ++i)
            for (std::size_t j = 0; j < ur; ++j)
                x[j] += k[i] * vinv(static_cast<int>(i), static_cast<int>(j));
        LatticeVector y(ur, 0);
        for (std::size_t i = 0; i < ur; ++i)
            for (std::size_t j = 0; j < ur; ++j)
                y[j] += x[i] * basis(i, j).get_si();
        AffineElement w{y, SmallMatrix::identity(r)};
        for (std::int64_t l = length_GQn(w); l > 0;) {
            bool moved = false;
            for (const auto& g : gens_) {
                AffineElement gw = g * w;
                const std::int64_t lg = length_GQn(gw);
                if (lg < l) {
                    w = std::move(gw);
                    l = lg;
                    moved = true;
                    break;
                }
            }
            if (!moved)
                throw InvariantViolation("no descent from an element of positive length");
        }
        if (std::find(omega_.begin(), omega_.end(), w) == omega_.end())
            omega_.push_back(w);
        std::size_t pos = 0;
        while (pos < ur) {
            if (++k[pos] < d[pos].get_si())
                break;
            k[pos] = 0;
            ++pos;
        }
        if (pos == ur)
            break;
    }
    std::sort(omega_.begin(), omega_.end(), [&](const AffineElement& a, const AffineElement& b) {
        if ((a == e) != (b == e))
            return a == e;
        return a < b;
    });
}

AffineElement AffineWeylGroup::make_element(const LatticeVector& y, const SmallMatrix& s) const
{
    if (static_cast<int>(y.size()) != rank() || s.dim != rank())
        throw ValidationError("element has the wrong rank for " + cover_.name());
    if (!cover_.in_lattice(y))
        throw ValidationError("translation " + format_vector(y) + " is not in Y_{Q,n} for " + cover_.name());
    try {
        (void)datum().reduced_word(s);
    } catch (const InvariantViolation&) {
        throw ValidationError("finite part is not a Weyl group element");
    }
    return AffineElement{y, s};
}

AffineElement AffineWeylGroup::translation(const LatticeVector& y) const
{
    return make_element(y, SmallMatrix::identity(rank()));
}

LengthPair AffineWeylGroup::lengths(const AffineElement& w) const
{
    return kernel_(w.y, w.s.apply(two_rho_vee_));
}

LengthPair AffineWeylGroup::lengths_reference(const AffineElement& w) const
{
    return kernel_.scalar(w.y, w.s.apply(two_rho_vee_));
}

std::int64_t AffineWeylGroup::length_G(const AffineElement& w) const
{
    return lengths(w).l_G;
}

std::int64_t AffineWeylGroup::length_GQn(const AffineElement& w) const
{
    return lengths(w).l_GQn;
}

std::size_t AffineWeylGroup::omega_index(const AffineElement& w) const
{
    for (std::size_t i = 0; i < omega_.size(); ++i)
        if (omega_[i] == w)
            return i;
    throw InvariantViolation("element " + format_element(w) + " is not of length zero");
}

AffineWeylGroup::Decomposition AffineWeylGroup::decompose(const AffineElement& w) const
{
    Decomposition out;
    AffineElement cur = w;
    std::int64_t l = length_GQn(cur);
    while (l > 0) {
        bool moved = false;
        for (int i = 0; i < num_generators(); ++i) {
            AffineElement next = generator(i) * cur;
            const std::int64_t ln = length_GQn(next);
            if (ln < l) {
                out.word.push_back(i);
                cur = std::move(next);
                l = ln;
                moved = true;
                break;
            }
        }
        if (!moved)
            throw InvariantViolation("no descent from " + format_element(cur));
    }
    out.omega = omega_index(cur);
    return out;
}

std::vector<BallEntry> AffineWeylGroup::enumerate_ball(int L, LengthSelector which) const
{
    if (L < 0)
        throw ValidationError("ball radius must be >= 0");
    std::vector<BallEntry> out;
    std::unordered_map<AffineElement, std::size_t, AffineElementHash> seen;
    for (std::size_t k = 0; k < omega_.size(); ++k) {
        const LengthPair lp = lengths(omega_[k]);
        out.push_back(BallEntry{omega_[k], static_cast<int>(lp.l_G), 0, {}, k});
        seen.emplace(omega_[k], out.size() - 1);
    }
    // every element of positive length has a left descent, so following ascents suffices
    for (std::size_t head = 0; head < out.size(); ++head) {
        if (out[head].l_GQn >= L)
            continue;
        for (int i = 0; i < num_generators(); ++i) {
            AffineElement x = generator(i) * out[head].w;
            if (seen.count(x))
                continue;
            const LengthPair lp = lengths(x);
            if (lp.l_GQn != out[head].l_GQn + 1)
                continue;
            BallEntry e;
            e.w = std::move(x);
            e.l_G = static_cast<int>(lp.l_G);
            e.l_GQn = static_cast<int>(lp.l_GQn);
            e.word.reserve(out[head].word.size() + 1);
            e.word.push_back(i);
            e.word.insert(e.word.end(), out[head].word.begin(), out[head].word.end());
            e.omega = out[head].omega;
            seen.emplace(e.w, out.size());
            out.push_back(std::move(e));
        }
    }
    if (which == LengthSelector::G) {
        // l_G >= l_GQn, so the l_G-ball is contained in the l_GQn-ball of the same radius
        std::erase_if(out, [L](const BallEntry& e) { return e.l_G > L; });
    }
    return out;
}

std::string AffineWeylGroup::format_element(const AffineElement& w) const
{
    return "(" + format_vector(w.y) + ", " + format_weyl_word(datum(), w.s) + ")";
}

std::unordered_map<AffineElement, int, AffineElementHash> bfs_word_lengths(const AffineWeylGroup& group, int L)
{
    std::unordered_map<AffineElement, int, AffineElementHash> dist;
    std::deque<AffineElement> queue;
    for (const auto& o : group.omega()) {
        dist.emplace(o, 0);
        queue.push_back(o);
    }
    while (!queue.empty()) {
        const AffineElement cur = std::move(queue.front());
        queue.pop_front();
        const int dc = dist.at(cur);
        if (dc >= L)
            continue;
        for (int i = 0; i < group.num_generators(); ++i) {
            AffineElement x = group.generator(i) * cur;
            if (dist.emplace(x, dc + 1).second)
                queue.push_back(std::move(x));
        }
    }
    return dist;
}

} // namespace hcov

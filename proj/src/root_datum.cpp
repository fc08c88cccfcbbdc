#include "hcov/root_datum.hpp"

#include "hcov/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace hcov {

// --------------------------------------------------------------- SmallMatrix

SmallMatrix SmallMatrix::identity(int n)
{
    SmallMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

SmallMatrix SmallMatrix::operator*(const SmallMatrix& rhs) const
{
    SmallMatrix out(dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            const std::int64_t aik = (*this)(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < dim; ++j)
                out(i, j) += aik * rhs(k, j);
        }
    return out;
}

LatticeVector SmallMatrix::apply(const LatticeVector& y) const
{
    LatticeVector out(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < dim; ++j)
            s += (*this)(i, j) * y[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

bool SmallMatrix::is_identity() const
{
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

IntMatrix SmallMatrix::to_int_matrix() const
{
    IntMatrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = static_cast<long>((*this)(i, j));
    return m;
}

std::int64_t SmallMatrix::determinant() const
{
    return to_int_matrix().determinant().get_si();
}

SmallMatrix SmallMatrix::inverse() const
{
    // Gauss-Jordan over the rationals; the entries of the inverse are integers.
    const auto n = static_cast<std::size_t>(dim);
    std::vector<Rational> m(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i * 2 * n + j] = static_cast<long>((*this)(static_cast<int>(i), static_cast<int>(j)));
        m[i * 2 * n + n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p * 2 * n + c] == 0)
            ++p;
        if (p == n)
            throw InvariantViolation("SmallMatrix::inverse: singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < 2 * n; ++j)
                std::swap(m[p * 2 * n + j], m[c * 2 * n + j]);
        Rational piv = m[c * 2 * n + c];
        for (std::size_t j = 0; j < 2 * n; ++j)
            m[c * 2 * n + j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i * 2 * n + c] == 0)
                continue;
            Rational f = m[i * 2 * n + c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                m[i * 2 * n + j] -= f * m[c * 2 * n + j];
        }
    }
    SmallMatrix inv(dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m[i * 2 * n + n + j];
            if (x.get_den() != 1)
                throw InvariantViolation("SmallMatrix::inverse: matrix is not unimodular");
            inv(static_cast<int>(i), static_cast<int>(j)) = x.get_num().get_si();
        }
    return inv;
}

std::size_t hash_lattice_vector(const LatticeVector& v) noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t SmallMatrixHash::operator()(const SmallMatrix& m) const noexcept
{
    return hash_lattice_vector(m.a);
}

// ---------------------------------------------------------------- CartanSpec

void CartanSpec::validate() const
{
    bool ok = false;
    switch (letter) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
    }
    if (!ok)
        throw ValidationError("invalid Cartan type " + std::string(1, letter) + std::to_string(rank) +
                              " (A: rank>=1, B/C: rank>=2, D: rank>=3, E: 6..8, F: 4, G: 2)");
}

std::string CartanSpec::name() const
{
    return std::string(1, letter) + std::to_string(rank);
}

CartanSpec CartanSpec::parse(const std::string& text)
{
    if (text.size() < 2)
        throw ValidationError("cannot parse Cartan type '" + text + "'");
    CartanSpec s;
    s.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    try {
        std::size_t used = 0;
        s.rank = std::stoi(text.substr(1), &used);
        if (used != text.size() - 1)
            throw ValidationError("");
    } catch (const std::exception&) {
        throw ValidationError("cannot parse Cartan type '" + text + "'");
    }
    s.validate();
    return s;
}

// ----------------------------------------------------------------- RootDatum

namespace {

struct DiagramData {
    std::vector<std::pair<int, int>> edges; // 0-based
    std::vector<int> sq_length;             // short = 1
    std::vector<int> exponents;
};

DiagramData diagram_for(const CartanSpec& s)
{
    const int r = s.rank;
    DiagramData d;
    d.sq_length.assign(static_cast<std::size_t>(r), 1);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i)
            d.edges.emplace_back(i, i + 1);
    };
    switch (s.letter) {
    case 'A':
        chain(r);
        for (int i = 1; i <= r; ++i)
            d.exponents.push_back(i);
        break;
    case 'B':
        chain(r);
        for (int i = 0; i + 1 < r; ++i)
            d.sq_length[static_cast<std::size_t>(i)] = 2;
        for (int i = 1; i <= r; ++i)
            d.exponents.push_back(2 * i - 1);
        break;
    case 'C':
        chain(r);
        d.sq_length[static_cast<std::size_t>(r - 1)] = 2;
        for (int i = 1; i <= r; ++i)
            d.exponents.push_back(2 * i - 1);
        break;
    case 'D':
        chain(r - 1);
        d.edges.emplace_back(r - 3, r - 1);
        for (int i = 1; i <= r - 1; ++i)
            d.exponents.push_back(2 * i - 1);
        d.exponents.push_back(r - 1);
        break;
    case 'E':
        d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
        for (int i = 4; i + 1 < r; ++i)
            d.edges.emplace_back(i, i + 1);
        if (r == 6)
            d.exponents = {1, 4, 5, 7, 8, 11};
        else if (r == 7)
            d.exponents = {1, 5, 7, 9, 11, 13, 17};
        else
            d.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
        break;
    case 'F':
        chain(4);
        d.sq_length = {2, 2, 1, 1};
        d.exponents = {1, 5, 7, 11};
        break;
    case 'G':
        chain(2);
        d.sq_length = {1, 3};
        d.exponents = {1, 5};
        break;
    default:
        break;
    }
    std::sort(d.exponents.begin(), d.exponents.end());
    return d;
}

} // namespace

RootDatum::RootDatum(const CartanSpec& spec) : spec_(spec)
{
    spec_.validate();
    const int r = spec_.rank;
    const auto ur = static_cast<std::size_t>(r);
    DiagramData dd = diagram_for(spec_);
    simple_len_ = dd.sq_length;
    exponents_ = dd.exponents;

    cartan_small_ = SmallMatrix(r);
    for (int i = 0; i < r; ++i)
        cartan_small_(i, i) = 2;
    for (auto [i, j] : dd.edges) {
        const int li = simple_len_[static_cast<std::size_t>(i)];
        const int lj = simple_len_[static_cast<std::size_t>(j)];
        const int m = std::max(li, lj);
        cartan_small_(i, j) = -m / lj;
        cartan_small_(j, i) = -m / li;
    }
    cartan_ = cartan_small_.to_int_matrix();

    // Roots with their coroots, by closure of the simple ones under simple reflections.
    struct Entry {
        LatticeVector coords, functional, coroot;
    };
    std::map<LatticeVector, Entry> all;
    std::deque<LatticeVector> queue;
    for (int i = 0; i < r; ++i) {
        Entry e{LatticeVector(ur, 0), LatticeVector(ur, 0), LatticeVector(ur, 0)};
        e.coords[static_cast<std::size_t>(i)] = 1;
        e.coroot[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < r; ++j)
            e.functional[static_cast<std::size_t>(j)] = cartan_small_(i, j);
        queue.push_back(e.coords);
        all.emplace(e.coords, e);
    }
    while (!queue.empty()) {
        const Entry cur = all.at(queue.front());
        queue.pop_front();
        for (int k = 0; k < r; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            const std::int64_t f = cur.functional[uk]; // <beta, alpha_k^vee>
            std::int64_t g = 0;                         // <alpha_k, beta^vee>
            for (int j = 0; j < r; ++j)
                g += cartan_small_(k, j) * cur.coroot[static_cast<std::size_t>(j)];
            Entry nxt = cur;
            nxt.coords[uk] -= f;
            for (int j = 0; j < r; ++j)
                nxt.functional[static_cast<std::size_t>(j)] -= f * cartan_small_(k, j);
            nxt.coroot[uk] -= g;
            if (all.emplace(nxt.coords, nxt).second)
                queue.push_back(nxt.coords);
        }
    }

    std::vector<Entry> pos;
    for (auto& [c, e] : all)
        if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; }))
            pos.push_back(e);
    // order by height, then lexicographically, so the list is stable
    std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
        const auto ha = std::accumulate(a.coords.begin(), a.coords.end(), std::int64_t{0});
        const auto hb = std::accumulate(b.coords.begin(), b.coords.end(), std::int64_t{0});
        if (ha != hb)
            return ha < hb;
        return a.coords > b.coords;
    });
    for (auto& e : pos) {
        // squared length from the invariant form (alpha_i, alpha_j) = A_ij L_j / 2
        Rational len = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                len += Rational(e.coords[static_cast<std::size_t>(i)] * e.coords[static_cast<std::size_t>(j)] *
                                cartan_small_(i, j) * simple_len_[static_cast<std::size_t>(j)]) /
                       2;
        root_len_.push_back(static_cast<int>(len.get_num().get_si()));
        root_coords_.push_back(e.coords);
        roots_.push_back(e.functional);
        coroots_.push_back(e.coroot);
    }
    highest_ = roots_.size() - 1;

    for (int i = 0; i < r; ++i) {
        SmallMatrix s = SmallMatrix::identity(r);
        for (int j = 0; j < r; ++j)
            s(i, j) -= cartan_small_(i, j);
        simple_refl_.push_back(s);
    }

    two_rho_vee_.assign(ur, 0);
    for (const auto& c : coroots_)
        for (std::size_t j = 0; j < ur; ++j)
            two_rho_vee_[j] += c[j];

    weyl_order_ = 1;
    for (int m : exponents_)
        weyl_order_ *= static_cast<std::uint64_t>(m + 1);
}

std::vector<long> RootDatum::bad_primes() const
{
    std::vector<long> primes;
    for (std::int64_t c : root_coords_[highest_])
        for (long p = 2; p <= c; ++p) {
            bool prime = true;
            for (long d = 2; d * d <= p; ++d)
                if (p % d == 0)
                    prime = false;
            if (prime && c % p == 0 && std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
        }
    std::sort(primes.begin(), primes.end());
    return primes;
}

SmallMatrix RootDatum::reflection(std::size_t root) const
{
    const int r = rank();
    SmallMatrix s = SmallMatrix::identity(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            s(i, j) -= coroots_[root][static_cast<std::size_t>(i)] * roots_[root][static_cast<std::size_t>(j)];
    return s;
}

std::int64_t RootDatum::pair(std::size_t root, const LatticeVector& y) const
{
    std::int64_t s = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
        s += roots_[root][j] * y[j];
    return s;
}

std::int64_t RootDatum::pair_simple(int i, const LatticeVector& y) const
{
    std::int64_t s = 0;
    for (int j = 0; j < rank(); ++j)
        s += cartan_small_(i, j) * y[static_cast<std::size_t>(j)];
    return s;
}

Rational RootDatum::rho_pairing(const LatticeVector& y) const
{
    std::int64_t s = 0;
    for (std::size_t a = 0; a < roots_.size(); ++a)
        s += pair(a, y);
    return Rational(s) / 2;
}

bool RootDatum::is_dominant(const LatticeVector& y) const
{
    for (int i = 0; i < rank(); ++i)
        if (pair_simple(i, y) < 0)
            return false;
    return true;
}

std::vector<int> RootDatum::reduced_word(const SmallMatrix& w) const
{
    std::vector<int> word;
    SmallMatrix cur = w;
    for (;;) {
        const LatticeVector z = cur.apply(two_rho_vee_);
        int descent = -1;
        for (int i = 0; i < rank() && descent < 0; ++i)
            if (pair_simple(i, z) < 0)
                descent = i;
        if (descent < 0)
            break;
        if (word.size() >= roots_.size())
            throw InvariantViolation("reduced_word: matrix is not a Weyl group element");
        word.push_back(descent);
        cur = simple_refl_[static_cast<std::size_t>(descent)] * cur;
    }
    if (!cur.is_identity())
        throw InvariantViolation("reduced_word: matrix is not a Weyl group element");
    return word;
}

int RootDatum::coxeter_length(const SmallMatrix& w) const
{
    const LatticeVector z = w.apply(two_rho_vee_);
    int l = 0;
    for (std::size_t a = 0; a < roots_.size(); ++a)
        if (pair(a, z) < 0)
            ++l;
    return l;
}

RootDatum build_root_datum(const CartanSpec& spec)
{
    return RootDatum(spec);
}

std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum, std::uint64_t cap)
{
    if (datum.weyl_order() > cap)
        throw CapExceeded("Weyl group of " + datum.spec().name() + " has " + std::to_string(datum.weyl_order()) +
                              " elements, above the enumeration cap " + std::to_string(cap) +
                              "; rerun with a cap of at least " + std::to_string(datum.weyl_order()),
                          datum.weyl_order());
    const int r = datum.rank();
    std::vector<WeylElement> out;
    out.reserve(datum.weyl_order());
    std::unordered_map<SmallMatrix, std::size_t, SmallMatrixHash> seen;
    seen.reserve(datum.weyl_order() * 2);
    out.push_back(WeylElement{SmallMatrix::identity(r), 0, 0});
    seen.emplace(out.back().matrix, 0);
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int i = 0; i < r; ++i) {
            SmallMatrix m = datum.simple_reflection(i) * out[head].matrix;
            if (seen.count(m))
                continue;
            WeylElement e{std::move(m), out[head].length + 1,
                          static_cast<std::uint8_t>(out[head].class_parity ^ (1u << datum.length_class(i)))};
            seen.emplace(e.matrix, out.size());
            out.push_back(std::move(e));
        }
    }
    if (out.size() != datum.weyl_order())
        throw InvariantViolation("Weyl group enumeration produced " + std::to_string(out.size()) +
                                 " elements, expected " + std::to_string(datum.weyl_order()));
    return out;
}

} // namespace hcov

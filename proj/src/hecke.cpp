#include "hcov/hecke.hpp"

#include "hcov/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hcov {

// -------------------------------------------------------------- HeckeElement

HeckeElement HeckeElement::basis(const AffineElement& w, const LaurentPoly& c)
{
    HeckeElement h;
    h.add(w, c);
    return h;
}

void HeckeElement::add(const AffineElement& w, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

LaurentPoly HeckeElement::coefficient(const AffineElement& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add(w, -c);
    return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_)
        x *= c;
    return *this;
}

// -------------------------------------------------------------- HeckeAlgebra

HeckeElement HeckeAlgebra::unit() const
{
    return basis(AffineElement::identity(g_->rank()));
}

HeckeElement HeckeAlgebra::left_multiply_generator(int i, const HeckeElement& h) const
{
    const AffineElement& s = g_->generator(i);
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly qm1 = q - LaurentPoly(1L);
    HeckeElement out;
    for (const auto& [w, c] : h.terms()) {
        AffineElement sw = s * w;
        if (g_->length_GQn(sw) > g_->length_GQn(w)) {
            out.add(sw, c);
        } else {
            out.add(sw, q * c);
            out.add(w, qm1 * c);
        }
    }
    return out;
}

HeckeElement HeckeAlgebra::left_multiply_generator_inverse(int i, const HeckeElement& h) const
{
    const LaurentPoly qinv = LaurentPoly::q_power(-1);
    HeckeElement out = left_multiply_generator(i, h) * qinv;
    out += h * (qinv - LaurentPoly(1L));
    return out;
}

HeckeElement HeckeAlgebra::right_multiply_generator(const HeckeElement& h, int i) const
{
    const AffineElement& s = g_->generator(i);
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly qm1 = q - LaurentPoly(1L);
    HeckeElement out;
    for (const auto& [w, c] : h.terms()) {
        AffineElement ws = w * s;
        if (g_->length_GQn(ws) > g_->length_GQn(w)) {
            out.add(ws, c);
        } else {
            out.add(ws, q * c);
            out.add(w, qm1 * c);
        }
    }
    return out;
}

HeckeElement HeckeAlgebra::right_multiply_generator_inverse(const HeckeElement& h, int i) const
{
    // E_w E_s^{-1} = E_{ws} when ws < w, else q^{-1} E_{ws} + (q^{-1} - 1) E_w
    const AffineElement& s = g_->generator(i);
    const LaurentPoly qinv = LaurentPoly::q_power(-1);
    const LaurentPoly qinvm1 = qinv - LaurentPoly(1L);
    HeckeElement out;
    for (const auto& [w, c] : h.terms()) {
        AffineElement ws = w * s;
        if (g_->length_GQn(ws) < g_->length_GQn(w)) {
            out.add(ws, c);
        } else {
            out.add(ws, qinv * c);
            out.add(w, qinvm1 * c);
        }
    }
    return out;
}

HeckeElement HeckeAlgebra::left_multiply_omega(const AffineElement& omega, const HeckeElement& h) const
{
    HeckeElement out;
    for (const auto& [w, c] : h.terms())
        out.add(omega * w, c);
    return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const
{
    HeckeElement out;
    for (const auto& [x, c] : a.terms()) {
        const auto dec = g_->decompose(x);
        HeckeElement tmp = left_multiply_omega(g_->omega()[dec.omega], b);
        for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it)
            tmp = left_multiply_generator(*it, tmp);
        out += tmp * c;
    }
    return out;
}

HeckeElement HeckeAlgebra::inverse_basis(const AffineElement& w) const
{
    // w = s_1 ... s_k omega, so E_w^{-1} = E_omega^{-1} E_{s_k}^{-1} ... E_{s_1}^{-1}
    const auto dec = g_->decompose(w);
    HeckeElement out = unit();
    for (int i : dec.word)
        out = left_multiply_generator_inverse(i, out);
    return left_multiply_omega(g_->omega()[dec.omega].inverse(), out);
}

const LatticeVector& HeckeAlgebra::regular_dominant() const
{
    if (regular_.empty()) {
        regular_.assign(static_cast<std::size_t>(g_->rank()), 0);
        for (const auto& c : g_->cover().rescaled_coroots())
            for (std::size_t j = 0; j < c.size(); ++j)
                regular_[j] += c[j];
    }
    return regular_;
}

std::int64_t HeckeAlgebra::dominant_shift(const LatticeVector& y) const
{
    const RootDatum& rd = g_->datum();
    const LatticeVector& d = regular_dominant();
    std::int64_t k = 0;
    for (int i = 0; i < g_->rank(); ++i) {
        const std::int64_t a = rd.pair_simple(i, y);
        const std::int64_t b = rd.pair_simple(i, d); // > 0
        if (a < 0)
            k = std::max(k, (-a + b - 1) / b);
    }
    return k;
}

std::int64_t HeckeAlgebra::two_rho_qn_pairing(const LatticeVector& y) const
{
    const RootDatum& rd = g_->datum();
    std::int64_t s = 0;
    for (std::size_t a = 0; a < rd.num_positive_roots(); ++a) {
        const std::int64_t p = rd.pair(a, y);
        const std::int64_t na = g_->cover().n_alpha()[a];
        if (p % na != 0)
            throw InvariantViolation("<alpha, y> not divisible by n_alpha");
        s += p / na;
    }
    return s;
}

HeckeElement HeckeAlgebra::bernstein_t(const LatticeVector& y, std::int64_t extra_shift) const
{
    if (extra_shift < 0)
        throw ValidationError("bernstein_t: extra_shift must be >= 0");
    const std::int64_t k = dominant_shift(y) + extra_shift;
    const LatticeVector& d = regular_dominant();
    LatticeVector y1 = y;
    LatticeVector y2(y.size(), 0);
    for (std::size_t j = 0; j < y.size(); ++j) {
        y1[j] += k * d[j];
        y2[j] = k * d[j];
    }
    // E_{y1} E_{y2}^{-1} with y2 = s_1 ... s_k omega: right-multiply by E_omega^{-1}, E_{s_k}^{-1}, ...
    const auto dec = g_->decompose(g_->translation(y2));
    HeckeElement out = basis(g_->translation(y1) * g_->omega()[dec.omega].inverse());
    for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it)
        out = right_multiply_generator_inverse(out, *it);
    return out * LaurentPoly::monomial(1, static_cast<int>(-two_rho_qn_pairing(y)));
}

// ---------------------------------------------------------------- characters

std::vector<std::vector<int>> odd_braid_classes(const AffineWeylGroup& group)
{
    const int ng = group.num_generators();
    std::vector<int> parent(static_cast<std::size_t>(ng));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int i = 0; i < ng; ++i)
        for (int j = i + 1; j < ng; ++j)
            if (group.braid_order(i, j) % 2 == 1)
                parent[static_cast<std::size_t>(find(i))] = find(j);
    // T_omega T_s T_omega^{-1} = T_{omega s omega^{-1}}, so conjugate generators share a value
    for (const AffineElement& om : group.omega()) {
        const AffineElement inv = om.inverse();
        for (int i = 0; i < ng; ++i) {
            const AffineElement c = om * group.generator(i) * inv;
            int j = 0;
            while (j < ng && !(group.generator(j) == c))
                ++j;
            if (j == ng)
                throw InvariantViolation("length-zero element does not normalize the Coxeter generators");
            parent[static_cast<std::size_t>(find(i))] = find(j);
        }
    }
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < ng; ++i)
        by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> classes;
    for (auto& [root, members] : by_root)
        classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    // classes.front() now contains the affine node 0
    if (classes.size() == 3) {
        auto adjacent_to_affine = [&](const std::vector<int>& cls) {
            for (int i : cls)
                if (group.braid_order(0, i) != 2)
                    return true;
            return false;
        };
        std::vector<std::vector<int>> ordered;
        std::vector<std::vector<int>> rest(classes.begin() + 1, classes.end());
        std::stable_partition(rest.begin(), rest.end(), adjacent_to_affine);
        ordered.push_back(rest[0]);
        ordered.push_back(rest[1]);
        ordered.push_back(classes.front());
        return ordered;
    }
    return classes;
}

void validate_character(const AffineWeylGroup& group, const HeckeCharacter& chi)
{
    if (chi.size() != group.num_generators())
        throw ValidationError("character has " + std::to_string(chi.size()) + " values, expected " +
                              std::to_string(group.num_generators()));
    for (const auto& cls : odd_braid_classes(group))
        for (int i : cls)
            if (chi.xi[static_cast<std::size_t>(i)] != chi.xi[static_cast<std::size_t>(cls.front())])
                throw ValidationError("character is not constant on generators joined by an odd braid relation "
                                      "or conjugate under a length-zero element");
}

std::string character_label(const AffineWeylGroup& group, const HeckeCharacter& chi)
{
    const bool all_minus = std::all_of(chi.xi.begin(), chi.xi.end(), [](Xi x) { return x == Xi::MinusOne; });
    const bool all_q = std::all_of(chi.xi.begin(), chi.xi.end(), [](Xi x) { return x == Xi::Q; });
    if (all_minus)
        return "steinberg";
    if (all_q)
        return "trivial";
    std::string s = "xi(";
    const auto classes = odd_braid_classes(group);
    for (std::size_t c = 0; c < classes.size(); ++c)
        s += std::string(c ? "," : "") + (chi.xi[static_cast<std::size_t>(classes[c].front())] == Xi::Q ? "1" : "-1");
    return s + ")";
}

HeckeCharacter make_character(const AffineWeylGroup& group, const std::vector<Xi>& per_class)
{
    const auto classes = odd_braid_classes(group);
    if (per_class.size() != classes.size())
        throw ValidationError("expected " + std::to_string(classes.size()) + " values, one per generator class, got " +
                              std::to_string(per_class.size()));
    HeckeCharacter chi;
    chi.xi.assign(static_cast<std::size_t>(group.num_generators()), Xi::Q);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int i : classes[c])
            chi.xi[static_cast<std::size_t>(i)] = per_class[c];
    chi.label = character_label(group, chi);
    return chi;
}

HeckeCharacter steinberg_character(const AffineWeylGroup& group)
{
    return make_character(group, std::vector<Xi>(odd_braid_classes(group).size(), Xi::MinusOne));
}

HeckeCharacter trivial_character(const AffineWeylGroup& group)
{
    return make_character(group, std::vector<Xi>(odd_braid_classes(group).size(), Xi::Q));
}

std::vector<HeckeCharacter> all_characters(const AffineWeylGroup& group)
{
    const std::size_t k = odd_braid_classes(group).size();
    std::vector<HeckeCharacter> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Xi> v(k);
        for (std::size_t c = 0; c < k; ++c)
            v[c] = (mask >> c & 1u) ? Xi::Q : Xi::MinusOne;
        out.push_back(make_character(group, v));
    }
    return out;
}

HeckeCharacter parse_character(const AffineWeylGroup& group, const std::string& text)
{
    if (text == "steinberg" || text == "St")
        return steinberg_character(group);
    if (text == "trivial")
        return trivial_character(group);
    std::string body = text;
    if (body.rfind("xi", 0) == 0)
        body = body.substr(2);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw ValidationError("cannot parse character '" + text + "'; use steinberg, trivial or (v1,v2,...)");
    body = body.substr(1, body.size() - 2);
    std::vector<Xi> v;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t end = body.find(',', start);
        if (end == std::string::npos)
            end = body.size();
        std::string tok = body.substr(start, end - start);
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok == "1" || tok == "q")
            v.push_back(Xi::Q);
        else if (tok == "-1")
            v.push_back(Xi::MinusOne);
        else
            throw ValidationError("character value '" + tok + "' is not one of 1, q, -1");
        start = end + 1;
    }
    return make_character(group, v);
}

LetterCounts letter_counts(const HeckeCharacter& chi, const std::vector<int>& word)
{
    LetterCounts lc;
    for (int i : word) {
        if (chi.xi[static_cast<std::size_t>(i)] == Xi::Q)
            ++lc.q;
        else
            ++lc.minus_one;
    }
    return lc;
}

LetterCounts letter_counts(const AffineWeylGroup& group, const HeckeCharacter& chi, const AffineElement& w)
{
    return letter_counts(chi, group.decompose(w).word);
}

LaurentPoly character_value(const AffineWeylGroup& group, const HeckeCharacter& chi, const AffineElement& w)
{
    const LetterCounts lc = letter_counts(group, chi, w);
    return LaurentPoly::monomial(lc.minus_one % 2 == 0 ? 1 : -1, 2 * lc.q);
}

LaurentPoly character_value(const AffineWeylGroup& group, const HeckeCharacter& chi, const HeckeElement& h)
{
    LaurentPoly s;
    for (const auto& [w, c] : h.terms())
        s += c * character_value(group, chi, w);
    return s;
}

bool is_square_integrable(const AffineWeylGroup& group, const HeckeCharacter& chi)
{
    validate_character(group, chi);
    const RootDatum& rd = group.datum();
    const int r = rd.rank();
    const auto ur = static_cast<std::size_t>(r);
    const Integer det = rd.cartan_matrix().determinant();
    const Integer scale = det * static_cast<long>(group.cover().n());
    for (int i = 0; i < r; ++i) {
        // solve A y = scale * e_i over Q
        std::vector<std::vector<Rational>> m(ur, std::vector<Rational>(ur + 1));
        for (std::size_t a = 0; a < ur; ++a) {
            for (std::size_t b = 0; b < ur; ++b)
                m[a][b] = static_cast<long>(rd.cartan(static_cast<int>(a), static_cast<int>(b)));
            m[a][ur] = a == static_cast<std::size_t>(i) ? Rational(scale) : Rational(0);
        }
        for (std::size_t c = 0; c < ur; ++c) {
            std::size_t p = c;
            while (m[p][c] == 0)
                ++p;
            std::swap(m[p], m[c]);
            for (std::size_t a = 0; a < ur; ++a) {
                if (a == c || m[a][c] == 0)
                    continue;
                const Rational f = m[a][c] / m[c][c];
                for (std::size_t b = c; b <= ur; ++b)
                    m[a][b] -= f * m[c][b];
            }
        }
        LatticeVector y(ur);
        for (std::size_t a = 0; a < ur; ++a) {
            const Rational x = m[a][ur] / m[a][a];
            if (x.get_den() != 1)
                throw InvariantViolation("fundamental coweight multiple is not integral");
            y[a] = x.get_num().get_si();
        }
        const LetterCounts lc = letter_counts(group, chi, group.translation(y));
        if (lc.q >= lc.minus_one)
            return false;
    }
    return true;
}

std::vector<HeckeCharacter> discrete_series_characters(const AffineWeylGroup& group)
{
    const CoverDatum& cover = group.cover();
    if (cover.q_short() != 1 || !is_oasitic(cover))
        throw ValidationError(cover.name() + " is not oasitic; " + cover.base().spec().name() +
                              " requires " + oasitic_condition(cover.base().spec()));
    std::vector<HeckeCharacter> out;
    for (auto& chi : all_characters(group))
        if (is_square_integrable(group, chi)) {
            chi.is_discrete_series = true;
            out.push_back(std::move(chi));
        }
    std::stable_sort(out.begin(), out.end(), [](const HeckeCharacter& a, const HeckeCharacter& b) {
        if ((a.label == "steinberg") != (b.label == "steinberg"))
            return a.label == "steinberg";
        return a.label < b.label;
    });
    return out;
}

} // namespace hcov

#include "hcov/kernels.hpp"

#include "hcov/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hcov {

RootTable::RootTable(const RootDatum& datum, const std::vector<std::int64_t>& na)
    : rank(datum.rank()), roots(static_cast<int>(datum.num_positive_roots()))
{
    padded = (roots + 7) / 8 * 8;
    columns.assign(static_cast<std::size_t>(rank) * padded, 0);
    n_alpha.assign(static_cast<std::size_t>(padded), 1);
    class_mask.assign(static_cast<std::size_t>(padded), 0);
    const auto& pr = datum.positive_roots();
    for (int a = 0; a < roots; ++a) {
        for (int j = 0; j < rank; ++j)
            columns[static_cast<std::size_t>(j) * padded + a] =
                static_cast<std::int32_t>(pr[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)]);
        n_alpha[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(na[static_cast<std::size_t>(a)]);
    }
    const auto [lo, hi] = std::minmax_element(na.begin(), na.end());
    class_n[0] = static_cast<std::int32_t>(*lo);
    class_n[1] = static_cast<std::int32_t>(*hi);
    for (int a = 0; a < roots; ++a) {
        const auto v = na[static_cast<std::size_t>(a)];
        if (v != *lo && v != *hi)
            throw InvariantViolation("RootTable: more than two values of n_alpha");
        if (*lo != *hi && v == *hi)
            class_mask[static_cast<std::size_t>(a)] = -1;
    }
}

namespace kernels {

LengthPair lengths_scalar(const RootTable& t, const std::int64_t* y, const std::int64_t* z)
{
    LengthPair out;
    for (int a = 0; a < t.roots; ++a) {
        std::int64_t p = 0;
        std::int64_t d = 0;
        for (int j = 0; j < t.rank; ++j) {
            const std::int64_t c = t.columns[static_cast<std::size_t>(j) * t.padded + a];
            p += c * y[j];
            d += c * z[j];
        }
        const std::int64_t na = t.n_alpha[static_cast<std::size_t>(a)];
        if (p % na != 0)
            throw InvariantViolation("length_GQn: <alpha, y> not divisible by n_alpha; y is not in Y_{Q,n}");
        const bool neg = d < 0;
        out.l_G += std::llabs(p + (neg ? 1 : 0));
        out.l_GQn += std::llabs(p / na + (neg ? 1 : 0));
    }
    return out;
}

#if !defined(HCOV_HAVE_AVX2)
LengthPair lengths_avx2(const RootTable& t, const std::int64_t* y, const std::int64_t* z)
{
    return lengths_scalar(t, y, z);
}

bool avx2_supported()
{
    return false;
}
#endif

} // namespace kernels

LengthKernel::LengthKernel(const RootDatum& datum, const std::vector<std::int64_t>& n_alpha)
    : table_(datum, n_alpha), use_avx2_(kernels::avx2_supported())
{
}

LengthPair LengthKernel::scalar(const LatticeVector& y, const LatticeVector& z) const
{
    return kernels::lengths_scalar(table_, y.data(), z.data());
}

LengthPair LengthKernel::operator()(const LatticeVector& y, const LatticeVector& z) const
{
    if (use_avx2_) {
        bool small = true;
        for (int j = 0; j < table_.rank && small; ++j)
            small = std::llabs(y[static_cast<std::size_t>(j)]) <= kernels::simd_input_bound &&
                    std::llabs(z[static_cast<std::size_t>(j)]) <= kernels::simd_input_bound;
        if (small)
            return kernels::lengths_avx2(table_, y.data(), z.data());
    }
    return scalar(y, z);
}

} // namespace hcov

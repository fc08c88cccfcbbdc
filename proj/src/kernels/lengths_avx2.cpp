// Compiled with -mavx2; only entered after avx2_supported() returned true.

#include "hcov/kernels.hpp"

#include <immintrin.h>

namespace hcov::kernels {

namespace {

std::int64_t hsum(__m256i v)
{
    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    std::int64_t s = 0;
    for (std::int32_t x : lanes)
        s += x;
    return s;
}

} // namespace

LengthPair lengths_avx2(const RootTable& t, const std::int64_t* y, const std::int64_t* z)
{
    const __m256i one = _mm256_set1_epi32(1);
    __m256i acc_g = _mm256_setzero_si256();
    __m256i acc_q = _mm256_setzero_si256();
    __m256i acc_q1 = _mm256_setzero_si256();
    for (int a = 0; a < t.padded; a += 8) {
        __m256i p = _mm256_setzero_si256();
        __m256i d = _mm256_setzero_si256();
        for (int j = 0; j < t.rank; ++j) {
            const __m256i col = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(t.columns.data() + static_cast<std::size_t>(j) * t.padded + a));
            p = _mm256_add_epi32(p, _mm256_mullo_epi32(col, _mm256_set1_epi32(static_cast<std::int32_t>(y[j]))));
            d = _mm256_add_epi32(d, _mm256_mullo_epi32(col, _mm256_set1_epi32(static_cast<std::int32_t>(z[j]))));
        }
        // padded lanes have p = d = 0 and contribute nothing
        const __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), d);
        const __m256i na = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t.n_alpha.data() + a));
        const __m256i mask1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t.class_mask.data() + a));
        acc_g = _mm256_add_epi32(acc_g, _mm256_abs_epi32(_mm256_add_epi32(p, _mm256_and_si256(neg, one))));
        const __m256i num = _mm256_abs_epi32(_mm256_add_epi32(p, _mm256_and_si256(neg, na)));
        acc_q = _mm256_add_epi32(acc_q, num);
        acc_q1 = _mm256_add_epi32(acc_q1, _mm256_and_si256(num, mask1));
    }
    LengthPair out;
    out.l_G = hsum(acc_g);
    const std::int64_t total = hsum(acc_q);
    const std::int64_t cls1 = hsum(acc_q1);
    out.l_GQn = (total - cls1) / t.class_n[0] + cls1 / t.class_n[1];
    return out;
}

bool avx2_supported()
{
    return __builtin_cpu_supports("avx2");
}

} // namespace hcov::kernels

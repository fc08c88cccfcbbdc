#pragma once

// Batched evaluation of the two affine length functions.
//
// For w = (y, s) both lengths only need, per positive root alpha,
//   p = <alpha, y>   and   d = <alpha, s(2 rho^vee)>   (d < 0 iff s^{-1} alpha < 0),
// so the work is two small matrix-vector products followed by masked absolute sums.

#include "hcov/root_datum.hpp"

#include <cstdint>
#include <vector>

namespace hcov {

struct LengthPair {
    std::int64_t l_G = 0;
    std::int64_t l_GQn = 0;
    friend bool operator==(const LengthPair&, const LengthPair&) = default;
};

/// Positive-root functionals in column-major int32 layout, rows padded to a multiple of 8.
struct RootTable {
    int rank = 0;
    int roots = 0;
    int padded = 0;
    std::vector<std::int32_t> columns;     // columns[j * padded + a] = <alpha_a, alpha_j^vee>
    std::vector<std::int32_t> n_alpha;     // padded entries are 1
    std::vector<std::int32_t> class_mask;  // -1 where n_alpha == class_n[1], else 0
    std::int32_t class_n[2] = {1, 1};      // the (at most two) values of n_alpha

    RootTable() = default;
    RootTable(const RootDatum& datum, const std::vector<std::int64_t>& n_alpha);
};

namespace kernels {

LengthPair lengths_scalar(const RootTable& t, const std::int64_t* y, const std::int64_t* z);
/// Only valid when avx2_supported(); inputs must satisfy |y_j|, |z_j| <= simd_input_bound.
LengthPair lengths_avx2(const RootTable& t, const std::int64_t* y, const std::int64_t* z);
bool avx2_supported();

constexpr std::int64_t simd_input_bound = std::int64_t{1} << 16;

} // namespace kernels

/// Dispatching front end: picks the AVX2 path when the CPU has it and the input is small.
class LengthKernel {
public:
    LengthKernel() = default;
    LengthKernel(const RootDatum& datum, const std::vector<std::int64_t>& n_alpha);

    LengthPair operator()(const LatticeVector& y, const LatticeVector& z) const;
    LengthPair scalar(const LatticeVector& y, const LatticeVector& z) const;
    const RootTable& table() const noexcept { return table_; }

    /// "avx2" or "scalar"
    const char* active_path() const noexcept { return use_avx2_ ? "avx2" : "scalar"; }
    void force_scalar(bool v) noexcept { use_avx2_ = !v && kernels::avx2_supported(); }

private:
    RootTable table_;
    bool use_avx2_ = false;
};

} // namespace hcov

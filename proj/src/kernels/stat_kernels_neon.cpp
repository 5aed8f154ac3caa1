#include "eulerpoly/stat_kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace eulerpoly::kernels::detail {

namespace {

inline uint8x16_t lane_mask(int len)
{
    static const int8_t idx_data[16] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    return vcltq_s8(vld1q_s8(idx_data), vdupq_n_s8(static_cast<int8_t>(len < 0 ? 0 : len)));
}

inline std::uint8_t count(uint8x16_t cmp, uint8x16_t mask) { return vaddvq_u8(vshrq_n_u8(vandq_u8(cmp, mask), 7)); }

inline int8x16_t load(const PermRow& row) { return vld1q_s8(row.v.data()); }

void excedances_neon(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    static const int8_t idx_data[16] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    const int8x16_t idx = vld1q_s8(idx_data);
    const uint8x16_t mask = lane_mask(len);
    for (std::size_t r = 0; r < rows.size(); ++r) out[r] = count(vcgtq_s8(load(rows[r]), idx), mask);
}

void descents_neon(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const uint8x16_t mask = lane_mask(len - 1);
    const int8x16_t zero = vdupq_n_s8(0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int8x16_t v = load(rows[r]);
        out[r] = count(vcgtq_s8(v, vextq_s8(v, zero, 1)), mask);
    }
}

void big_descents_neon(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const uint8x16_t mask = lane_mask(len - 1);
    const int8x16_t zero = vdupq_n_s8(0);
    const int8x16_t one = vdupq_n_s8(1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int8x16_t v = load(rows[r]);
        out[r] = count(vcgtq_s8(v, vaddq_s8(vextq_s8(v, zero, 1), one)), mask);
    }
}

void negatives_neon(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const uint8x16_t mask = lane_mask(len);
    for (std::size_t r = 0; r < rows.size(); ++r) out[r] = count(vcltzq_s8(load(rows[r])), mask);
}

} // namespace

const KernelTable& neon_kernels()
{
    static const KernelTable table{Isa::neon, excedances_neon, descents_neon, big_descents_neon, negatives_neon};
    return table;
}

} // namespace eulerpoly::kernels::detail

#endif

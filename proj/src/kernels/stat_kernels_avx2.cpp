// Built with -mavx2; only reached after a runtime CPU check.
#include "eulerpoly/stat_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace eulerpoly::kernels::detail {

namespace {

// Two rows per 256-bit register. Byte shifts act within each 128-bit half,
// so every row only ever sees its own lanes.
inline std::uint32_t lane_mask2(int len)
{
    const std::uint32_t one = len <= 0 ? 0u : (len >= 16 ? 0xFFFFu : (1u << len) - 1u);
    return one | (one << 16);
}

inline __m256i load2(const PermRow* rows) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows)); }

inline void store2(__m256i cmp, std::uint32_t mask, std::uint8_t* out)
{
    const std::uint32_t bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(cmp)) & mask;
    out[0] = static_cast<std::uint8_t>(__builtin_popcount(bits & 0xFFFFu));
    out[1] = static_cast<std::uint8_t>(__builtin_popcount(bits >> 16));
}

template <class Cmp, class Tail>
void run(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out, std::uint32_t mask, Cmp cmp, Tail tail)
{
    std::size_t r = 0;
    for (; r + 2 <= rows.size(); r += 2) store2(cmp(load2(&rows[r])), mask, &out[r]);
    if (r < rows.size()) tail(rows.subspan(r), len, out.subspan(r));
}

void excedances_avx2(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const __m256i idx = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                                         0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
    run(rows, len, out, lane_mask2(len), [&](__m256i v) { return _mm256_cmpgt_epi8(v, idx); },
        sse2_kernels().excedances);
}

void descents_avx2(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    run(rows, len, out, lane_mask2(len - 1), [](__m256i v) { return _mm256_cmpgt_epi8(v, _mm256_srli_si256(v, 1)); },
        sse2_kernels().descents);
}

void big_descents_avx2(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const __m256i one = _mm256_set1_epi8(1);
    run(rows, len, out, lane_mask2(len - 1),
        [&](__m256i v) { return _mm256_cmpgt_epi8(v, _mm256_add_epi8(_mm256_srli_si256(v, 1), one)); },
        sse2_kernels().big_descents);
}

void negatives_avx2(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const __m256i zero = _mm256_setzero_si256();
    run(rows, len, out, lane_mask2(len), [&](__m256i v) { return _mm256_cmpgt_epi8(zero, v); },
        sse2_kernels().negatives);
}

} // namespace

const KernelTable& avx2_kernels()
{
    static const KernelTable table{Isa::avx2, excedances_avx2, descents_avx2, big_descents_avx2, negatives_avx2};
    return table;
}

} // namespace eulerpoly::kernels::detail

#endif

#include "eulerpoly/stat_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <emmintrin.h>

namespace eulerpoly::kernels::detail {

namespace {

inline unsigned lane_mask(int len) { return len <= 0 ? 0u : (len >= 16 ? 0xFFFFu : (1u << len) - 1u); }

inline std::uint8_t count(__m128i cmp, unsigned mask)
{
    return static_cast<std::uint8_t>(__builtin_popcount(static_cast<unsigned>(_mm_movemask_epi8(cmp)) & mask));
}

inline __m128i load(const PermRow& row) { return _mm_load_si128(reinterpret_cast<const __m128i*>(row.v.data())); }

void excedances_sse2(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const __m128i idx = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
    const unsigned mask = lane_mask(len);
    for (std::size_t r = 0; r < rows.size(); ++r) out[r] = count(_mm_cmpgt_epi8(load(rows[r]), idx), mask);
}

void descents_sse2(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const unsigned mask = lane_mask(len - 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const __m128i v = load(rows[r]);
        out[r] = count(_mm_cmpgt_epi8(v, _mm_srli_si128(v, 1)), mask);
    }
}

void big_descents_sse2(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const unsigned mask = lane_mask(len - 1);
    const __m128i one = _mm_set1_epi8(1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const __m128i v = load(rows[r]);
        out[r] = count(_mm_cmpgt_epi8(v, _mm_add_epi8(_mm_srli_si128(v, 1), one)), mask);
    }
}

void negatives_sse2(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    const unsigned mask = lane_mask(len);
    const __m128i zero = _mm_setzero_si128();
    for (std::size_t r = 0; r < rows.size(); ++r) out[r] = count(_mm_cmpgt_epi8(zero, load(rows[r])), mask);
}

} // namespace

const KernelTable& sse2_kernels()
{
    static const KernelTable table{Isa::sse2, excedances_sse2, descents_sse2, big_descents_sse2, negatives_sse2};
    return table;
}

} // namespace eulerpoly::kernels::detail

#endif

#pragma once

// Per-row permutation statistics used by the enumeration oracles. Each row is
// a permutation (or signed permutation) in one-line notation packed into 16
// signed byte lanes; lanes past `len` are ignored. Every kernel has a scalar
// reference and, where the target allows, SIMD variants chosen at runtime.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace eulerpoly::kernels {

inline constexpr std::size_t kLanes = 16;

struct alignas(16) PermRow {
    std::array<std::int8_t, kLanes> v{};
};

/// out[r] = #{ i < len : row[i] > i }   (0-based values: excedances)
using ExcedanceFn = void (*)(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out);
/// out[r] = #{ i < len-1 : row[i] > row[i+1] }
using DescentFn = void (*)(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out);
/// out[r] = #{ i < len-1 : row[i] >= row[i+1] + 2 }
using BigDescentFn = void (*)(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out);
/// out[r] = #{ i < len : row[i] < 0 }
using NegativeFn = void (*)(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out);

enum class Isa { scalar, sse2, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;
    ExcedanceFn excedances;
    DescentFn descents;
    BigDescentFn big_descents;
    NegativeFn negatives;
};

const KernelTable& scalar_kernels();

/// Variants compiled in and supported by the running CPU, scalar first.
std::vector<Isa> available_isas();

/// Throws std::invalid_argument when isa is not available.
const KernelTable& kernels_for(Isa isa);

/// Best available variant; EULERPOLY_SIMD=scalar|sse2|avx2|neon overrides.
const KernelTable& active_kernels();

namespace detail {
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& sse2_kernels();
const KernelTable& avx2_kernels();
#endif
#if defined(__aarch64__)
const KernelTable& neon_kernels();
#endif
} // namespace detail

} // namespace eulerpoly::kernels

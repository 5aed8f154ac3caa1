#include "eulerpoly/stat_kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eulerpoly::kernels {

namespace {

void excedances_scalar(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint8_t c = 0;
        for (int i = 0; i < len; ++i) c += rows[r].v[i] > i;
        out[r] = c;
    }
}

void descents_scalar(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint8_t c = 0;
        for (int i = 0; i + 1 < len; ++i) c += rows[r].v[i] > rows[r].v[i + 1];
        out[r] = c;
    }
}

void big_descents_scalar(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint8_t c = 0;
        for (int i = 0; i + 1 < len; ++i) c += rows[r].v[i] >= rows[r].v[i + 1] + 2;
        out[r] = c;
    }
}

void negatives_scalar(std::span<const PermRow> rows, int len, std::span<std::uint8_t> out)
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint8_t c = 0;
        for (int i = 0; i < len; ++i) c += rows[r].v[i] < 0;
        out[r] = c;
    }
}

bool cpu_has(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return true;
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::sse2: return true;
    case Isa::avx2: return __builtin_cpu_supports("avx2");
#endif
#if defined(__aarch64__)
    case Isa::neon: return true;
#endif
    default: return false;
    }
}

} // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::sse2: return "sse2";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

const KernelTable& scalar_kernels()
{
    static const KernelTable table{Isa::scalar, excedances_scalar, descents_scalar, big_descents_scalar,
                                   negatives_scalar};
    return table;
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::sse2, Isa::avx2, Isa::neon})
        if (cpu_has(isa)) out.push_back(isa);
    return out;
}

const KernelTable& kernels_for(Isa isa)
{
    if (!cpu_has(isa)) throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) + "' is not available");
    switch (isa) {
    case Isa::scalar: return scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::sse2: return detail::sse2_kernels();
    case Isa::avx2: return detail::avx2_kernels();
#endif
#if defined(__aarch64__)
    case Isa::neon: return detail::neon_kernels();
#endif
    default: break;
    }
    throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) + "' is not compiled in");
}

const KernelTable& active_kernels()
{
    static const KernelTable& chosen = [] () -> const KernelTable& {
        if (const char* forced = std::getenv("EULERPOLY_SIMD")) {
            for (Isa isa : available_isas())
                if (isa_name(isa) == forced) return kernels_for(isa);
        }
        return kernels_for(available_isas().back());
    }();
    return chosen;
}

} // namespace eulerpoly::kernels

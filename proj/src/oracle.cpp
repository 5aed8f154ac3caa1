#include "eulerpoly/oracle.hpp"

#include "eulerpoly/parallel.hpp"
#include "eulerpoly/stat_kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

namespace eulerpoly {

using kernels::PermRow;

namespace {

constexpr std::size_t kBlockRows = 512;

// Counts indexed [row][col], flattened.
struct Tally {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> counts;

    Tally(std::size_t r, std::size_t c) : rows(r), cols(c), counts(r * c, 0) {}
    void add(std::size_t r, std::size_t c) { ++counts[r * cols + c]; }
    Tally& operator+=(const Tally& other)
    {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
        return *this;
    }
};

void require_range(int n, int lo, int hi, const char* what)
{
    if (n < lo || n > hi)
        throw PreconditionError(std::string(what) + ": n = " + std::to_string(n) + " outside [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]");
}

// Visits, in lexicographic order, every permutation of {0..n-1} whose first
// letter is `first`, handing them to `flush` in blocks of rows.
template <class Flush>
void for_each_block(int n, int first, Flush&& flush)
{
    std::vector<PermRow> block;
    block.reserve(kBlockRows);
    PermRow row;
    row.v[0] = static_cast<std::int8_t>(first);
    for (int i = 0, k = 1; i < n; ++i)
        if (i != first) row.v[k++] = static_cast<std::int8_t>(i);
    do {
        block.push_back(row);
        if (block.size() == kBlockRows) {
            flush(std::span<const PermRow>(block));
            block.clear();
        }
    } while (std::next_permutation(row.v.begin() + 1, row.v.begin() + n));
    if (!block.empty()) flush(std::span<const PermRow>(block));
}

int cycle_count(const PermRow& row, int n)
{
    unsigned visited = 0;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (visited & (1u << i)) continue;
        ++cycles;
        for (int j = i; !(visited & (1u << j)); j = row.v[j]) visited |= 1u << j;
    }
    return cycles;
}

// Runs one task per leading letter and merges the task-local tallies.
template <class Task>
Tally partitioned(int n, std::size_t rows, std::size_t cols, Task&& task)
{
    std::vector<Tally> parts(static_cast<std::size_t>(n), Tally(rows, cols));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t first) { task(static_cast<int>(first), parts[first]); });
    Tally total(rows, cols);
    for (const auto& t : parts) total += t;
    return total;
}

Poly tally_to_poly(const Tally& t)
{
    std::vector<Scalar> v(t.rows);
    for (std::size_t i = 0; i < t.rows; ++i) v[i] = BigInt(std::to_string(t.counts[i * t.cols]));
    return Poly(std::move(v));
}

BiPoly tally_to_bipoly(const Tally& t)
{
    BiPoly out(t.rows, t.cols);
    for (std::size_t i = 0; i < t.rows; ++i)
        for (std::size_t j = 0; j < t.cols; ++j) out.at(i, j) = BigInt(std::to_string(t.counts[i * t.cols + j]));
    return out;
}

// Single-statistic distribution over S_n using a descent-type kernel.
Poly descent_like(int n, kernels::DescentFn stat)
{
    const Tally t = partitioned(n, static_cast<std::size_t>(n), 1, [&](int first, Tally& local) {
        std::vector<std::uint8_t> counts(kBlockRows);
        for_each_block(n, first, [&](std::span<const PermRow> rows) {
            stat(rows, n, counts);
            for (std::size_t r = 0; r < rows.size(); ++r) local.add(counts[r], 0);
        });
    });
    return tally_to_poly(t);
}

} // namespace

BiPoly::BiPoly(std::size_t x_size, std::size_t q_size) : coeffs_(x_size, std::vector<BigInt>(q_size)) {}

const BigInt& BiPoly::at(std::size_t x_pow, std::size_t q_pow) const { return coeffs_.at(x_pow).at(q_pow); }

BigInt& BiPoly::at(std::size_t x_pow, std::size_t q_pow) { return coeffs_.at(x_pow).at(q_pow); }

Poly BiPoly::substitute_q(const Scalar& t) const
{
    std::vector<Scalar> v(x_size());
    for (std::size_t i = 0; i < x_size(); ++i) v[i] = eval(x_coefficient(i), t);
    return Poly(std::move(v));
}

Poly BiPoly::x_coefficient(std::size_t x_pow) const
{
    std::vector<Scalar> v(coeffs_.at(x_pow).begin(), coeffs_.at(x_pow).end());
    return Poly(std::move(v));
}

BigInt BiPoly::total() const
{
    BigInt sum = 0;
    for (const auto& row : coeffs_)
        for (const auto& c : row) sum += c;
    return sum;
}

BiPoly qeulerian_bruteforce(int n)
{
    require_range(n, 1, kMaxSymmetricN, "qeulerian_bruteforce");
    const auto& k = kernels::active_kernels();
    const std::size_t un = static_cast<std::size_t>(n);
    const Tally t = partitioned(n, un, un + 1, [&](int first, Tally& local) {
        std::vector<std::uint8_t> exc(kBlockRows);
        for_each_block(n, first, [&](std::span<const PermRow> rows) {
            k.excedances(rows, n, exc);
            for (std::size_t r = 0; r < rows.size(); ++r)
                local.add(exc[r], static_cast<std::size_t>(cycle_count(rows[r], n)));
        });
    });
    return tally_to_bipoly(t);
}

BiPoly typeb_bruteforce(int n)
{
    require_range(n, 1, kMaxHyperoctahedralN, "typeb_bruteforce");
    const auto& k = kernels::active_kernels();
    const std::size_t un = static_cast<std::size_t>(n);
    const unsigned masks = 1u << n;
    const Tally t = partitioned(n, un + 1, un + 1, [&](int first, Tally& local) {
        std::vector<PermRow> signed_rows(masks);
        std::vector<std::uint8_t> des(masks), neg(masks);
        for_each_block(n, first, [&](std::span<const PermRow> rows) {
            for (const auto& perm : rows) {
                // Row layout (0, pi(1), ..., pi(n)) with letters in +-[n].
                for (unsigned m = 0; m < masks; ++m) {
                    auto& s = signed_rows[m].v;
                    s[0] = 0;
                    for (int i = 0; i < n; ++i) {
                        const auto letter = static_cast<std::int8_t>(perm.v[i] + 1);
                        s[i + 1] = (m >> i) & 1u ? static_cast<std::int8_t>(-letter) : letter;
                    }
                }
                k.descents(signed_rows, n + 1, des);
                k.negatives(signed_rows, n + 1, neg);
                for (unsigned m = 0; m < masks; ++m) local.add(des[m], neg[m]);
            }
        });
    });
    return tally_to_bipoly(t);
}

Poly big_descent_bruteforce(int m)
{
    require_range(m, 2, kMaxSymmetricN, "big_descent_bruteforce");
    return descent_like(m, kernels::active_kernels().big_descents);
}

Poly descent_bruteforce(int n)
{
    require_range(n, 1, kMaxSymmetricN, "descent_bruteforce");
    return descent_like(n, kernels::active_kernels().descents);
}

Poly one_over_k_bruteforce(const Scalar& k, int n)
{
    require_range(n, 1, kMaxSymmetricN, "one_over_k_bruteforce");
    if (k <= 0) throw PreconditionError("one_over_k_bruteforce: k must be positive");
    const BiPoly table = qeulerian_bruteforce(n);
    std::vector<Scalar> v(table.x_size());
    for (std::size_t e = 0; e < table.x_size(); ++e) {
        Scalar power = 1;  // k^{n - cyc}, walking cyc downward from n
        for (std::size_t cyc = static_cast<std::size_t>(n) + 1; cyc-- > 0;) {
            v[e] += power * table.at(e, cyc);
            power *= k;
        }
    }
    return Poly(std::move(v));
}

} // namespace eulerpoly

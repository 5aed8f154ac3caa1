#pragma once

#include "eulerpoly/poly.hpp"

#include <vector>

namespace eulerpoly {

/// Coordinates in the basis x^k (1 + x)^{center - 2k}, k = 0..floor(center/2).
/// Center -1 (the b-part of a constant) has no entries.
struct GammaVector {
    std::vector<Scalar> entries;
    long center_degree = 0;

    bool operator==(const GammaVector&) const = default;
    bool nonnegative() const;
    /// Sum_k entries[k] x^k (1 + x)^{center - 2k}.
    Poly expand() const;
};

/// Number of gamma coordinates for a given center (0 when center < 0).
inline std::size_t gamma_length(long center) { return center < 0 ? 0 : static_cast<std::size_t>(center / 2 + 1); }

/// Peels off gamma_k x^k (1+x)^{center-2k} from the lowest power upwards.
/// Entries may be negative. Throws PreconditionError unless p is palindromic
/// about center.
GammaVector gamma_vector(const Poly& p, long center);
/// Uses center = degree(p), or 0 for the zero polynomial.
GammaVector gamma_vector(const Poly& p);

} // namespace eulerpoly

#include "eulerpoly/series.hpp"

#include <utility>

namespace eulerpoly {

namespace {

void require_same_order(const SeriesZ& s, const SeriesZ& t)
{
    if (s.order() != t.order()) throw PreconditionError("SeriesZ: mismatched truncation orders");
}

// (1 - x) / (e^{s (x-1) z} - x), normalized: returns (e^{s(x-1)z} - x) / (1 - x).
SeriesZ brenti_base(const Scalar& s, std::size_t order)
{
    SeriesZ numer = SeriesZ::exp_linear(Poly{-s, s}, order);
    numer[0] = numer[0] - Poly{0, 1};
    return numer.div_one_minus_x();
}

// (1 - x e^{q(1-x)z}) / (1 - x)
SeriesZ hcd_base(const Scalar& q, std::size_t order)
{
    const SeriesZ e = SeriesZ::exp_linear(Poly{q, -q}, order);
    SeriesZ numer(order);
    for (std::size_t j = 0; j <= order; ++j) numer[j] = -e[j].shifted(1);
    numer[0] = numer[0] + Poly::constant(1);
    return numer.div_one_minus_x();
}

} // namespace

SeriesZ::SeriesZ(std::size_t order) : coeffs_(order + 1) {}

SeriesZ::SeriesZ(std::size_t order, std::vector<Poly> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

SeriesZ SeriesZ::exp_linear(const Poly& c, std::size_t order)
{
    SeriesZ out(order);
    out[0] = Poly::constant(1);
    for (std::size_t j = 1; j <= order; ++j) out[j] = Scalar(1, static_cast<unsigned long>(j)) * (out[j - 1] * c);
    return out;
}

SeriesZ operator+(const SeriesZ& s, const SeriesZ& t)
{
    require_same_order(s, t);
    SeriesZ out(s.order());
    for (std::size_t j = 0; j <= s.order(); ++j) out[j] = s[j] + t[j];
    return out;
}

SeriesZ operator*(const SeriesZ& s, const SeriesZ& t)
{
    require_same_order(s, t);
    SeriesZ out(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (s[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= s.order(); ++j) out[i + j] += s[i] * t[j];
    }
    return out;
}

SeriesZ operator*(const Scalar& k, const SeriesZ& s)
{
    SeriesZ out(s.order());
    for (std::size_t j = 0; j <= s.order(); ++j) out[j] = k * s[j];
    return out;
}

SeriesZ SeriesZ::exp() const
{
    if (!coeffs_[0].is_zero()) throw PreconditionError("SeriesZ::exp: constant term must be 0");
    // E' = S' E  =>  m E_m = sum_{j=1}^{m} j S_j E_{m-j}
    SeriesZ out(order());
    out[0] = Poly::constant(1);
    for (std::size_t m = 1; m <= order(); ++m) {
        Poly acc;
        for (std::size_t j = 1; j <= m; ++j)
            if (!coeffs_[j].is_zero()) acc += Scalar(static_cast<unsigned long>(j)) * (coeffs_[j] * out[m - j]);
        out[m] = Scalar(1, static_cast<unsigned long>(m)) * acc;
    }
    return out;
}

SeriesZ SeriesZ::log() const
{
    if (coeffs_[0] != Poly::constant(1)) throw PreconditionError("SeriesZ::log: constant term must be 1");
    // S L' = S'  =>  m L_m = m S_m - sum_{j=1}^{m-1} j L_j S_{m-j}
    SeriesZ out(order());
    for (std::size_t m = 1; m <= order(); ++m) {
        Poly acc = Scalar(static_cast<unsigned long>(m)) * coeffs_[m];
        for (std::size_t j = 1; j < m; ++j)
            if (!out[j].is_zero()) acc -= Scalar(static_cast<unsigned long>(j)) * (out[j] * coeffs_[m - j]);
        out[m] = Scalar(1, static_cast<unsigned long>(m)) * acc;
    }
    return out;
}

SeriesZ SeriesZ::pow(const Scalar& r) const { return (r * log()).exp(); }

SeriesZ SeriesZ::div_one_minus_x() const
{
    SeriesZ out(order());
    for (std::size_t j = 0; j <= order(); ++j) out[j] = eulerpoly::div_one_minus_x(coeffs_[j]);
    return out;
}

std::vector<Poly> egf_coefficients(const FamilySpec& spec, std::size_t order)
{
    validate(spec);
    SeriesZ egf(order);
    switch (spec.kind) {
    case FamilyKind::q_eulerian:
        egf = brenti_base(1, order).pow(-spec.param("q"));
        break;
    case FamilyKind::one_over_k: {
        const Scalar& k = spec.param("k");
        if (k == 0) throw PreconditionError("egf_coefficients: one-over-k needs k > 0");
        egf = brenti_base(k, order).pow(-1 / k);
        break;
    }
    case FamilyKind::hcd_pqr:
        egf = SeriesZ::exp_linear(Poly{spec.param("p"), -spec.param("p")}, order) *
              hcd_base(spec.param("q"), order).pow(-spec.param("r"));
        break;
    default:
        throw PreconditionError("egf_coefficients: no closed form for family '" + std::string(family_name(spec.kind)) + "'");
    }
    std::vector<Poly> out(order + 1);
    BigInt factorial = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) factorial *= static_cast<unsigned long>(n);
        out[n] = Scalar(factorial) * egf[n];
    }
    return out;
}

} // namespace eulerpoly

#ifndef QUINTIC_RESIDUES_HPP
#define QUINTIC_RESIDUES_HPP

/**
 * @file residues.hpp
 * @brief Exact residues of rational functions.
 *
 * Two entry points: residue_simple for a rational function of h at a simple
 * pole, and residue_factored for integrands presented as a polynomial
 * numerator over an explicitly factored denominator (the localization /
 * Duistermaat-Heckman shape), which handles poles of any order via a local
 * series expansion.
 */

#include <utility>
#include <vector>

#include "quintic/ratfunc.hpp"

namespace quintic {

/// Residue of f at h = p.  Returns 0 when f is finite at p; throws
/// MultiplicityError when the pole has order > 1.
inline Rational residue_simple(const RatFuncH& f, const Rational& p) {
    int ord = f.pole_order_at(p);
    if (ord == 0) return Rational(0);
    if (ord > 1) throw MultiplicityError("residue_simple at a pole of order " + std::to_string(ord), ord);
    PolyH dder = f.denominator().derivative();
    return f.numerator().eval(p) / dder.eval(p);
}

/// Residue of N(p) / prod_j (p - a_j)^{m_j} at p = a_which, via the local
/// expansion in s = p - a_which to order m_which - 1.  Repeated centers in
/// the factor list raise MultiplicityError with the combined order.
template <typename T>
T residue_factored(const Poly<T>& numerator,
                   const std::vector<std::pair<T, int>>& factors, size_t which) {
    if (which >= factors.size()) throw StructureError("residue factor index out of range");
    const T& center = factors[which].first;
    int mult = factors[which].second;
    if (mult <= 0) throw StructureError("residue factor with nonpositive multiplicity");
    int combined = mult;
    for (size_t j = 0; j < factors.size(); ++j) {
        if (j == which) continue;
        if ((factors[j].first - center).is_zero()) combined += factors[j].second;
    }
    if (combined != mult)
        throw MultiplicityError("repeated centers make the pole order " + std::to_string(combined),
                                combined);

    const int ord = mult - 1;  // need the s^{mult-1} coefficient
    // Local jet of the numerator: N(s + center), truncated.
    Poly<T> shifted = numerator.shifted(center);
    std::vector<T> jet(static_cast<size_t>(ord) + 1);
    for (int i = 0; i <= ord; ++i) jet[static_cast<size_t>(i)] = shifted.coeff(i);

    // Multiply by (d_j + s)^{-m_j} for every other factor, d_j = center - a_j.
    for (size_t j = 0; j < factors.size(); ++j) {
        if (j == which) continue;
        T d = center - factors[j].first;
        T dinv = T(1) / d;
        for (int rep = 0; rep < factors[j].second; ++rep) {
            // (d + s)^{-1} = d^{-1} (1 - s/d + s^2/d^2 - ...)
            std::vector<T> next(jet.size());
            for (int n = 0; n <= ord; ++n) {
                T acc{};
                T w = dinv;
                for (int i = n; i >= 0; --i) {
                    if (!jet[static_cast<size_t>(i)].is_zero())
                        acc = acc + jet[static_cast<size_t>(i)] * w;
                    w = T() - w * dinv;
                }
                next[static_cast<size_t>(n)] = acc;
            }
            jet = std::move(next);
        }
    }
    return jet[static_cast<size_t>(ord)];
}

}  // namespace quintic

#endif

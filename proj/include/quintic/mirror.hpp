#ifndef QUINTIC_MIRROR_HPP
#define QUINTIC_MIRROR_HPP

/**
 * @file mirror.hpp
 * @brief Mirror transformation: normalize the hypergeometric series to the
 *        J-candidate and extract the Yukawa coupling.
 *
 * The coordinate change is ln Q = ln q + g(q) with g = f1/f0; its inverse is
 * materialized as ghat with ghat(Q) + g(Q e^{ghat(Q)}) = 0.  Acting on the
 * stripped series, the change contributes the exact nilpotent prefactor
 * e^{P ghat(Q)/h} alongside division by f0 and the argument substitution.
 */

#include "quintic/hypergeom.hpp"

namespace quintic {

struct MirrorMap {
    TruncSeries<Rational> g;   // f1/f0, zero constant term
    TruncSeries<Rational> f0;  // constant term 1
};

/// g = f1 * invert(f0) from the closed-form scalar series.
MirrorMap build_mirror_map(int q_order);

/// Mirror-transformed, f0-normalized stripped series in the flat coordinate.
struct JSeries {
    StrippedSeries z_j;
};

/// e^{P ghat(Q)/h} * (Z/f0)(Q e^{ghat(Q)}).  The result must satisfy the
/// normalization invariants (scalar part == 1, P-linear part == 0); their
/// failure throws ConsistencyError since the theorem guarantees them.
JSeries apply_mirror(const StrippedSeries& z, const MirrorMap& m);

/// K(Q) = 5 + sum_d K_d Q^d with K_d the h^0 part of <(P + d h)^2 [Q^d]Z_J, P>.
/// Nonvanishing negative-h parts in the pairing throw ConsistencyError.
TruncSeries<Rational> yukawa(const JSeries& j, int q_order);

}  // namespace quintic

#endif

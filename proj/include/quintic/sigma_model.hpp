#ifndef QUINTIC_SIGMA_MODEL_HPP
#define QUINTIC_SIGMA_MODEL_HPP

/**
 * @file sigma_model.hpp
 * @brief The linear sigma-model series L(q,z), computed two independent ways.
 *
 * Path one: fixed-point residues of e^{pz} 5p prod_{j=1}^{5d}(5p - j h) over
 * prod_{i=0}^{d}(p - i h)^5 (the Duistermaat-Heckman shape).  Path two: the
 * pairing <e^{Pz} Z(q e^{hz}, h), Z(q, -h)> of hypergeometric series.  The
 * two must agree coefficient by coefficient as rational functions of h.
 */

#include <vector>

#include "quintic/hypergeom.hpp"

namespace quintic {

/// Residue path.  Every (q^a, z^b) coefficient is checked to be a polynomial
/// in h; a non-polynomial value throws ConsistencyError (arithmetic bug).
TruncSeries<RatFuncH> l_series_dh(int q_order, int z_order);

/// Pairing path applied to a caller-supplied stripped series.
TruncSeries<RatFuncH> l_series_pairing_of(const StrippedSeries& z, int q_order, int z_order);

/// Pairing path applied to the hypergeometric series itself.
TruncSeries<RatFuncH> l_series_pairing(int q_order, int z_order);

struct SigmaModelMismatch {
    int q_degree = 0;
    int z_degree = 0;
    RatFuncH dh_value;
    RatFuncH pairing_value;
};
struct SigmaModelReport {
    bool pass = true;
    std::vector<SigmaModelMismatch> mismatches;
};

/// Coefficientwise exact comparison of two (q,z) series on the common window.
SigmaModelReport compare_l_series(const TruncSeries<RatFuncH>& dh,
                                  const TruncSeries<RatFuncH>& pairing);

/// Full check: both paths computed fresh, then compared.
SigmaModelReport verify_theorem_a(int q_order, int z_order);

}  // namespace quintic

#endif

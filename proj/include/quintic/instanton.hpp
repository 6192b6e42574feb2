#ifndef QUINTIC_INSTANTON_HPP
#define QUINTIC_INSTANTON_HPP

/**
 * @file instanton.hpp
 * @brief From Yukawa coupling to sphere counts: divide out the d^3 factor,
 *        Mobius-invert the multiple-cover sum, verify integrality, and
 *        resum as a consistency round trip.
 */

#include <vector>

#include "quintic/mirror.hpp"

namespace quintic {

/// Mobius function by trial factorization.
int mobius(int m);

/// N_d = K_d / d^3 for d = 1..K.q_order(); requires K_0 = 5.
std::vector<Rational> gw_from_yukawa(const TruncSeries<Rational>& k);

/// n_d = sum_{m|d} mu(m) m^{-3} N_{d/m}; every n_d must be an integer.
std::vector<Rational> invert_multicover(const std::vector<Rational>& n_gw);

/// Forward resummation 5 + sum_d n_d d^3 q^d/(1 - q^d), truncated.
TruncSeries<Rational> resum_check(const std::vector<Rational>& n, int q_order);

struct InstantonRow {
    int d = 0;
    Rational gw;     // N_d
    Rational count;  // n_d, integral
};
struct InstantonTable {
    TruncSeries<Rational> yukawa_series;
    std::vector<InstantonRow> rows;
};

/// Full pipeline at the given degree: hypergeometric series, mirror
/// transform, Yukawa, inversion, and the resummation round trip.
InstantonTable instanton_table(int max_degree);

}  // namespace quintic

#endif

#ifndef QUINTIC_HYPERGEOM_HPP
#define QUINTIC_HYPERGEOM_HPP

/**
 * @file hypergeom.hpp
 * @brief The quintic hypergeometric series, its equivariant localization,
 *        the scalar components f0/f1, and the order-4 ODE check.
 *
 * Everything is phrased for the stripped series Z (the exponential prefactor
 * e^{P ln q / h} is never materialized); the ODE is conjugated accordingly.
 */

#include <utility>
#include <vector>

#include "quintic/cohomology.hpp"
#include "quintic/series.hpp"

namespace quintic {

/// Cohomology-valued stripped series in q (z_order = 0).
using StrippedSeries = TruncSeries<CohomH>;

/// The five fixed-point localizations of the stripped equivariant series.
struct LocalizedSeries {
    WeightSpec weights;
    std::array<TruncSeries<RatFuncH>, kFixedPoints> z_alpha;
};

/// q^d coefficient = prod_{m=1}^{5d}(5P+mh) * prod_{m=1}^{d}(P+mh)^{-5} in Q(h)[P]/(P^4).
StrippedSeries i_series(int q_order);

/// Component alpha, q^d coefficient:
///   prod_{m=1}^{5d}(5 l_a + m h) / (d! h^d prod_{m=1}^{d} prod_{b!=a}(l_a - l_b + m h)).
LocalizedSeries i_series_equivariant(int q_order, const WeightSpec& w);

/// Closed-form scalar series: f0[d] = (5d)!/(d!)^5 and
/// f1[d] = f0[d] * sum_{m=d+1}^{5d} 5/m (f1[0] = 0).
std::pair<TruncSeries<Rational>, TruncSeries<Rational>> extract_f0_f1(int q_order);

/// The holomorphic solution of the order-4 ODE normalized to 1 at q = 0:
/// a_0 = 1, d^4 a_d = 5 (5d-1)(5d-2)(5d-3)(5d-4) a_{d-1}.
TruncSeries<Rational> ode_recurrence_solution(int q_order);

/// The stripped series is homogeneous of degree 0 in (P, h): its q^d
/// coefficient is exactly f0 + f1 P/h + f2 P^2/h^2 + f3 P^3/h^3.
/// Throws StructureError if the input violates that shape.
struct SeriesComponents {
    TruncSeries<Rational> f0, f1, f2, f3;
};
SeriesComponents split_components(const StrippedSeries& z);

/// Degreewise check of the conjugated ODE
///   (P + hD)^4 Z = 5 q prod_{m=1}^{4} (5P + 5hD + m h) Z,  D = q d/dq.
struct OdeCheck {
    int degree = 0;
    bool pass = false;
    std::string detail;  // empty when passing
};
struct OdeReport {
    bool pass = true;
    int first_failure_degree = -1;
    std::vector<OdeCheck> checks;
};
OdeReport verify_ode(const StrippedSeries& z, int q_order);

}  // namespace quintic

#endif

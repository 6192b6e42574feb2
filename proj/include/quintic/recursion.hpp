#ifndef QUINTIC_RECURSION_HPP
#define QUINTIC_RECURSION_HPP

/**
 * @file recursion.hpp
 * @brief The proof engine: recursion-coefficient extraction, reconstruction,
 *        polynomiality verification, mirror covariance, and the uniqueness
 *        solver that pins a solution from coefficients plus anchors.
 *
 * The localized coefficient [q^d]Z_a is R_{a,d}(h) h^{-d} plus, for every
 * other fixed point b and 1 <= m <= d, a simple-pole term
 *   C_a^b(m) / (l_a - l_b + m h) * ([q^{d-m}]Z_b evaluated at h=(l_b-l_a)/m).
 * C_a^b(m) is read off as m times the residue of [q^m]Z_a at that pole.
 */

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "quintic/hypergeom.hpp"
#include "quintic/mirror.hpp"

namespace quintic {

/// Evidence that the weight tuple keeps the recursion machinery nondegenerate
/// up to degree d_max: per-fixed-point pole candidates (l_b - l_a)/m are
/// simple (pairwise distinct), evaluation points stay off poles, and no pole
/// collides with a numerator zero of the hypergeometric coefficients.
struct GenericityCertificate {
    WeightSpec w;
    int d_max = 0;
    std::vector<std::string> checks;  // human-readable summaries of what was enumerated
};

/// Throws DegenerateWeightsError (naming the collision) when any condition fails.
GenericityCertificate validate_weights(const WeightSpec& w, int d_max);

struct RecursionData {
    WeightSpec w;
    int d_max = 0;
    std::map<std::tuple<int, int, int>, Rational> c;  // (alpha, beta, m) -> C_a^b(m)
    std::map<std::pair<int, int>, PolyH> r;           // (alpha, d) -> R_{a,d}, degree <= d
};

/// Read C as pole residues and R as the regular remainder (times h^d).
/// A remainder that is not a polynomial of degree <= d throws StructureError.
RecursionData extract_recursion(const LocalizedSeries& z, const WeightSpec& w, int d_max);

/// Rebuild the series order by order from recursion data.
LocalizedSeries reconstruct(const RecursionData& data, int d_max);

/// The double-construction pairing
///   sum_a (5 l_a / e_a) e^{l_a z} Z_a(q e^{hz}, h) Z_a(q, -h),
/// whose coefficients must be polynomial in h for a polynomial solution.
TruncSeries<RatFuncH> polynomiality_series(const LocalizedSeries& z, const WeightSpec& w,
                                           int q_order, int z_order);

struct PolynomialityViolation {
    int q_degree = 0;
    int z_degree = 0;
    RatFuncH non_polynomial_part;  // proper part of the offending coefficient
};
struct PolynomialityReport {
    bool pass = true;
    std::vector<PolynomialityViolation> violations;
};
/// Needs only a valid WeightSpec (no genericity certificate): the pairing
/// never extracts residues or evaluates at pole locations.
PolynomialityReport verify_polynomiality(const LocalizedSeries& z, const WeightSpec& w,
                                         int q_order, int z_order);

/// Componentwise mirror transform e^{l_a ghat(Q)/h} (Z_a/f0)(Q e^{ghat(Q)}).
/// Asserts covariance — identical extracted C values and polynomiality of the
/// result — and throws TheoremViolationError if either fails.
LocalizedSeries mirror_transform_localized(const LocalizedSeries& z, const MirrorMap& m,
                                           const WeightSpec& w);

/// Per-(alpha, d) values of the h^0 and h^{-1} coefficients at h = infinity,
/// the data that pins down the two-parameter freedom the pairing cannot see.
struct AnchorData {
    int d_max = 0;
    std::array<std::vector<Rational>, kFixedPoints> a0;  // index d-1, d = 1..d_max
    std::array<std::vector<Rational>, kFixedPoints> a1;
};
AnchorData anchors_from(const LocalizedSeries& z, int d_max);

struct SolveUniqueResult {
    LocalizedSeries z;
    /// Nullspace dimension of the polynomiality constraints alone, per degree
    /// (index d-1); the expected value is 2 per fixed point, i.e. 10.
    std::vector<int> pre_anchor_nullity;
    /// Free coefficient positions (alpha, j) before anchoring, per degree;
    /// expected: exactly { (a, d), (a, d-1) } for each fixed point a.
    std::vector<std::vector<std::pair<int, int>>> pre_anchor_free;
};

/// Degree-by-degree linear solve: unknown R-coefficients are constrained by
/// vanishing negative-h parts of the pairing at q^d, z^0..z^{z_order}, then
/// pinned by the anchors.  Residual freedom after anchoring throws
/// InsufficientZOrderError (raise z_order); inconsistency, or a finite-pole
/// part no coefficient choice can cancel, throws NoPolynomialSolutionError.
SolveUniqueResult solve_unique(const RecursionData& data, const AnchorData& anchors, int d_max,
                               int z_order);

}  // namespace quintic

#endif

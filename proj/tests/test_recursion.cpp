#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <utility>

#include "quintic/recursion.hpp"

using namespace quintic;

namespace {

constexpr unsigned kSeed = 0x4ec5u;

/// Scalar weight of a fixed point in the double construction: 5 l_a / e_a.
Rational point_weight(const WeightSpec& w, int a) {
    return Rational(5) * w.lambda(a) / w.euler(a);
}

}  // namespace

TEST_CASE("weight validation: worked-example tuple is shallow, default is deep") {
    GenericityCertificate c1 = validate_weights(WeightSpec::standard(), 1);
    CHECK(c1.d_max == 1);
    CHECK(c1.checks.size() == 3);
    // (l_1 - l_0)/1 == (l_2 - l_0)/2 == 1 collides at depth 2.
    CHECK_THROWS_AS(validate_weights(WeightSpec::standard(), 2), DegenerateWeightsError);
    try {
        validate_weights(WeightSpec::standard(), 2);
    } catch (const DegenerateWeightsError& e) {
        CHECK(std::string(e.what()).find("pole collision") != std::string::npos);
    }
    CHECK_NOTHROW(validate_weights(WeightSpec::generic_default(), 10));
}

TEST_CASE("extracted residue at the worked example value") {
    WeightSpec w = WeightSpec::standard();
    RecursionData data = extract_recursion(i_series_equivariant(1, w), w, 1);
    // C_0^1(1) = 30240 / (1 * (-1) * 3 * 7) = -1440, by hand.
    CHECK(data.c.at({0, 1, 1}) == Rational(-1440));
    // Degree-0 remainders are the constant 1.
    for (int a = 0; a < kFixedPoints; ++a) CHECK(data.r.at({a, 0}) == PolyH::one());
    // Remainder degree bound: deg R_{a,d} <= d.
    for (const auto& [key, poly] : data.r) CHECK(poly.degree() <= key.second);
}

TEST_CASE("extraction and reconstruction are mutually inverse") {
    WeightSpec w = WeightSpec::generic_default();
    const int d_max = 3;
    LocalizedSeries z = i_series_equivariant(d_max, w);
    RecursionData data = extract_recursion(z, w, d_max);
    LocalizedSeries back = reconstruct(data, d_max);
    for (int a = 0; a < kFixedPoints; ++a)
        CHECK(back.z_alpha[static_cast<size_t>(a)] == z.z_alpha[static_cast<size_t>(a)]);
}

TEST_CASE("extraction rejects mismatched weights") {
    LocalizedSeries z = i_series_equivariant(1, WeightSpec::standard());
    CHECK_THROWS_AS(extract_recursion(z, WeightSpec::generic_default(), 1),
                    RingMismatchError);
}

TEST_CASE("extraction commutes with relabeling the fixed points") {
    std::mt19937 g(kSeed);
    std::array<int, kFixedPoints> perm{1, 4, 0, 2, 3};
    WeightSpec w = WeightSpec::generic_default();
    std::array<Rational, kFixedPoints> pl;
    for (int i = 0; i < kFixedPoints; ++i)
        pl[static_cast<size_t>(i)] = w.lambda(perm[static_cast<size_t>(i)]);
    WeightSpec wp(pl);
    const int d_max = 2;
    RecursionData data = extract_recursion(i_series_equivariant(d_max, w), w, d_max);
    RecursionData datap = extract_recursion(i_series_equivariant(d_max, wp), wp, d_max);
    for (int a = 0; a < kFixedPoints; ++a) {
        for (int b = 0; b < kFixedPoints; ++b) {
            if (a == b) continue;
            for (int m = 1; m <= d_max; ++m)
                CHECK(datap.c.at({a, b, m}) ==
                      data.c.at({perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)], m}));
        }
        for (int d = 0; d <= d_max; ++d)
            CHECK(datap.r.at({a, d}) == data.r.at({perm[static_cast<size_t>(a)], d}));
    }
    (void)g;
}

TEST_CASE("double-construction pairing is polynomial for the true series") {
    WeightSpec w = WeightSpec::standard();
    PolynomialityReport rep = verify_polynomiality(i_series_equivariant(3, w), w, 3, 3);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
}

TEST_CASE("seeded h^{-2} perturbation is detected at its own degree and above") {
    WeightSpec w = WeightSpec::standard();
    LocalizedSeries z = i_series_equivariant(3, w);
    auto& z0 = z.z_alpha[0];
    z0.set(2, 0, z0.coeff_q(2) + RatFuncH::hbar(1).pow(-2));
    PolynomialityReport rep = verify_polynomiality(z, w, 3, 3);
    REQUIRE(!rep.pass);
    std::set<std::pair<int, int>> where;
    for (const auto& v : rep.violations) {
        where.insert({v.q_degree, v.z_degree});
        CHECK(!v.non_polynomial_part.is_polynomial());
    }
    std::set<std::pair<int, int>> expected;
    for (int q = 2; q <= 3; ++q)
        for (int l = 0; l <= 3; ++l) expected.insert({q, l});
    CHECK(where == expected);
    // Frozen leading violation: proper part (5/12) h^{-2} at (q^2, z^0),
    // which is w_0 * h^{-2} + w_0 * (-h)^{-2} with w_0 = 5/24.
    RatFuncH lead = RatFuncH::hbar(1).pow(-2) * (point_weight(w, 0) * Rational(2));
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.q_degree == 2 && v.z_degree == 0) {
            CHECK(v.non_polynomial_part == lead);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("an h^0 perturbation below the top degree is caught one degree up") {
    WeightSpec w = WeightSpec::standard();
    LocalizedSeries z = i_series_equivariant(3, w);
    z.z_alpha[0].set(2, 0, z.z_alpha[0].coeff_q(2) + RatFuncH(1));
    PolynomialityReport rep = verify_polynomiality(z, w, 3, 3);
    REQUIRE(!rep.pass);
    for (const auto& v : rep.violations) CHECK(v.q_degree == 3);
    CHECK(rep.violations.size() == 4);
}

TEST_CASE("the pairing alone leaves a two-parameter family per point and degree") {
    // h^0 and h^{-1} shifts of the top-degree coefficient pass every window
    // the perturbation can reach: this is precisely the freedom the anchors
    // remove, so the check documents why anchors exist rather than a defect.
    WeightSpec w = WeightSpec::standard();
    for (int k : {0, -1}) {
        LocalizedSeries z = i_series_equivariant(3, w);
        z.z_alpha[2].set(3, 0, z.z_alpha[2].coeff_q(3) + RatFuncH::hbar(1).pow(k));
        CHECK(verify_polynomiality(z, w, 3, 3).pass);
    }
}

TEST_CASE("mirror transform preserves couplings and polynomiality") {
    WeightSpec w = WeightSpec::generic_default();
    const int d_max = 2;
    LocalizedSeries z = i_series_equivariant(d_max, w);
    LocalizedSeries t = mirror_transform_localized(z, build_mirror_map(d_max), w);
    RecursionData before = extract_recursion(z, w, d_max);
    RecursionData after = extract_recursion(t, w, d_max);
    CHECK(before.c == after.c);   // couplings are invariants of the transform
    CHECK(before.r != after.r);   // remainders are not
    CHECK(verify_polynomiality(t, w, d_max, 3).pass);
    // The transform genuinely changes the series.
    CHECK(t.z_alpha[0] != z.z_alpha[0]);
}

TEST_CASE("anchors are the two leading coefficients at h = infinity") {
    WeightSpec w = WeightSpec::generic_default();
    LocalizedSeries z = i_series_equivariant(2, w);
    AnchorData anchors = anchors_from(z, 2);
    CHECK(anchors.d_max == 2);
    for (int a = 0; a < kFixedPoints; ++a)
        for (int d = 1; d <= 2; ++d) {
            const RatFuncH& v = z.z_alpha[static_cast<size_t>(a)].coeff_q(d);
            CHECK(anchors.a0[static_cast<size_t>(a)][static_cast<size_t>(d - 1)] ==
                  v.infinity_coeff(0));
            CHECK(anchors.a1[static_cast<size_t>(a)][static_cast<size_t>(d - 1)] ==
                  v.infinity_coeff(1));
        }
}

TEST_CASE("uniqueness solve reproduces the transformed series") {
    WeightSpec w = WeightSpec::generic_default();
    const int d_max = 2, z_order = 4;
    LocalizedSeries z = i_series_equivariant(d_max, w);
    LocalizedSeries t = mirror_transform_localized(z, build_mirror_map(d_max), w);
    RecursionData data = extract_recursion(t, w, d_max);
    AnchorData anchors = anchors_from(t, d_max);
    SolveUniqueResult res = solve_unique(data, anchors, d_max, z_order);
    for (int a = 0; a < kFixedPoints; ++a)
        CHECK(res.z.z_alpha[static_cast<size_t>(a)] == t.z_alpha[static_cast<size_t>(a)]);
    REQUIRE(res.pre_anchor_nullity.size() == 2);
    for (int d = 1; d <= d_max; ++d) {
        CHECK(res.pre_anchor_nullity[static_cast<size_t>(d - 1)] == 2 * kFixedPoints);
        // Free positions are exactly (a, d-1) and (a, d) for every point.
        std::vector<std::pair<int, int>> expected;
        for (int a = 0; a < kFixedPoints; ++a) {
            expected.push_back({a, d - 1});
            expected.push_back({a, d});
        }
        std::vector<std::pair<int, int>> got = res.pre_anchor_free[static_cast<size_t>(d - 1)];
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
    }
}

TEST_CASE("solve also pins the untransformed series from its own data") {
    WeightSpec w = WeightSpec::generic_default();
    const int d_max = 2;
    LocalizedSeries z = i_series_equivariant(d_max, w);
    RecursionData data = extract_recursion(z, w, d_max);
    AnchorData anchors = anchors_from(z, d_max);
    SolveUniqueResult res = solve_unique(data, anchors, d_max, 4);
    for (int a = 0; a < kFixedPoints; ++a)
        CHECK(res.z.z_alpha[static_cast<size_t>(a)] == z.z_alpha[static_cast<size_t>(a)]);
}

TEST_CASE("too few z powers is reported as such, not as a wrong answer") {
    WeightSpec w = WeightSpec::generic_default();
    const int d_max = 2;
    LocalizedSeries z = i_series_equivariant(d_max, w);
    RecursionData data = extract_recursion(z, w, d_max);
    AnchorData anchors = anchors_from(z, d_max);
    CHECK_THROWS_AS(solve_unique(data, anchors, d_max, 3), InsufficientZOrderError);
}

TEST_CASE("corrupted coupling data admits no polynomial solution") {
    WeightSpec w = WeightSpec::generic_default();
    const int d_max = 2;
    LocalizedSeries z = i_series_equivariant(d_max, w);
    RecursionData data = extract_recursion(z, w, d_max);
    AnchorData anchors = anchors_from(z, d_max);
    data.c.at({0, 1, 1}) += Rational(1);
    CHECK_THROWS_AS(solve_unique(data, anchors, d_max, 4), NoPolynomialSolutionError);
}

TEST_CASE("pairing linearization matches the uniqueness constraint rows") {
    // Perturb one R-coefficient r_{a,j} at degree d by +-1 and take the exact
    // central difference of the pairing; because the pairing is quadratic,
    // this isolates the linear response.  Its h^{-t} Laurent coefficients at
    // (q^d, z^l) must equal the independently restated row entries
    //   (w_a / l!) ([h^{d-j-t}] (l_a + d h)^l + [d-j-t = 0] (-1)^{d-j} l_a^l).
    WeightSpec w = WeightSpec::generic_default();
    const int z_window = 4;
    for (int d = 1; d <= 2; ++d) {
        LocalizedSeries z = i_series_equivariant(d, w);
        TruncSeries<RatFuncH> base = polynomiality_series(z, w, d, z_window);
        for (int a = 0; a < kFixedPoints; ++a) {
            for (int j = 0; j <= d; ++j) {
                RatFuncH delta = RatFuncH::hbar(1).pow(j - d);
                LocalizedSeries zp = z, zm = z;
                auto& sp = zp.z_alpha[static_cast<size_t>(a)];
                auto& sm = zm.z_alpha[static_cast<size_t>(a)];
                sp.set(d, 0, sp.coeff_q(d) + delta);
                sm.set(d, 0, sm.coeff_q(d) - delta);
                TruncSeries<RatFuncH> plus = polynomiality_series(zp, w, d, z_window);
                TruncSeries<RatFuncH> minus = polynomiality_series(zm, w, d, z_window);
                Rational la = w.lambda(a);
                for (int l = 0; l <= z_window; ++l) {
                    RatFuncH response =
                        (plus.coeff(d, l) - minus.coeff(d, l)) * RatFuncH(Rational(1, 2));
                    PolyH shift = PolyH::linear(la, Rational(d)).pow(l);
                    Rational scale = point_weight(w, a) / Rational::factorial(static_cast<unsigned long>(l));
                    for (int t = 1; t <= d; ++t) {
                        Rational entry = shift.coeff(d - j - t);
                        if (d - j - t == 0) {
                            Rational parity = la.pow(l);
                            if ((d - j) % 2 != 0) parity = -parity;
                            entry += parity;
                        }
                        CHECK(response.laurent_at_zero(-t) == scale * entry);
                    }
                }
            }
        }
    }
}

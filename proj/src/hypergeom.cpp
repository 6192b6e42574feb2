#include "quintic/hypergeom.hpp"

#include "quintic/parallel.hpp"

namespace quintic {
namespace {

// a + b*P as a cohomology class over Q(h).
CohomH linear_in_p(RatFuncH a, RatFuncH b) {
    CohomH r(std::move(a));
    r.set_c(1, std::move(b));
    return r;
}

// m * h as a rational function.
RatFuncH mh(long m) { return RatFuncH::hbar() * RatFuncH(m); }

}  // namespace

StrippedSeries i_series(int q_order) {
    StrippedSeries z(q_order, 0);
    z.set(0, 0, CohomH(1L));
    CohomH coeff(1L);
    for (int d = 1; d <= q_order; ++d) {
        // Incremental ratio: prod_{m=5d-4}^{5d}(5P + m h) * (P + d h)^{-5}.
        for (long m = 5L * d - 4; m <= 5L * d; ++m)
            coeff *= linear_in_p(mh(m), RatFuncH(5));
        CohomH inv = linear_in_p(mh(d), RatFuncH(1)).inverse();
        CohomH inv5 = inv * inv;
        inv5 *= inv5;
        coeff *= inv5 * inv;
        z.set(d, 0, coeff);
    }
    return z;
}

LocalizedSeries i_series_equivariant(int q_order, const WeightSpec& w) {
    LocalizedSeries out{w, {}};
    for (auto& s : out.z_alpha) s = TruncSeries<RatFuncH>(q_order, 0);
    parallel_for(kFixedPoints, [&](int a) {
        out.z_alpha[static_cast<size_t>(a)].set(0, 0, RatFuncH(1));
        PolyH num = PolyH::one();
        PolyH den = PolyH::one();
        for (int d = 1; d <= q_order; ++d) {
            for (long m = 5L * d - 4; m <= 5L * d; ++m)
                num = num * PolyH::linear(Rational(5) * w.lambda(a), Rational(m));
            den = den * PolyH::linear(Rational(0), Rational(d));  // the d h factor
            for (int b = 0; b < kFixedPoints; ++b) {
                if (b == a) continue;
                den = den * PolyH::linear(w.lambda(a) - w.lambda(b), Rational(d));
            }
            out.z_alpha[static_cast<size_t>(a)].set(d, 0, RatFuncH(num, den));
        }
    });
    return out;
}

std::pair<TruncSeries<Rational>, TruncSeries<Rational>> extract_f0_f1(int q_order) {
    TruncSeries<Rational> f0(q_order, 0), f1(q_order, 0);
    for (int d = 0; d <= q_order; ++d) {
        Rational a = Rational::factorial(5UL * static_cast<unsigned long>(d)) /
                     Rational::factorial(static_cast<unsigned long>(d)).pow(5);
        f0.set(d, 0, a);
        if (d >= 1) {
            Rational s;
            for (long m = d + 1; m <= 5L * d; ++m) s += Rational(5, m);
            f1.set(d, 0, a * s);
        }
    }
    return {f0, f1};
}

TruncSeries<Rational> ode_recurrence_solution(int q_order) {
    TruncSeries<Rational> f(q_order, 0);
    Rational a(1);
    f.set(0, 0, a);
    for (long d = 1; d <= q_order; ++d) {
        a *= Rational(5) * Rational(5 * d - 1) * Rational(5 * d - 2) * Rational(5 * d - 3) *
             Rational(5 * d - 4) / Rational(d).pow(4);
        f.set(static_cast<int>(d), 0, a);
    }
    return f;
}

SeriesComponents split_components(const StrippedSeries& z) {
    int qo = z.q_order();
    SeriesComponents out{TruncSeries<Rational>(qo, 0), TruncSeries<Rational>(qo, 0),
                         TruncSeries<Rational>(qo, 0), TruncSeries<Rational>(qo, 0)};
    std::array<TruncSeries<Rational>*, 4> slot{&out.f0, &out.f1, &out.f2, &out.f3};
    for (int d = 0; d <= qo; ++d) {
        CohomH c = z.coeff_q(d);
        for (int k = 0; k < kPPowerCount; ++k) {
            // Degree-0 homogeneity: the P^k part must be (constant) * h^{-k}.
            RatFuncH t = c.c(k) * RatFuncH::hbar(k);
            if (!t.is_constant() && !t.is_zero())
                throw StructureError("q^" + std::to_string(d) + " P^" + std::to_string(k) +
                                     " component is not homogeneous of degree 0: " +
                                     c.c(k).to_string());
            slot[static_cast<size_t>(k)]->set(d, 0, t.is_zero() ? Rational(0) : t.as_constant());
        }
    }
    return out;
}

OdeReport verify_ode(const StrippedSeries& z, int q_order) {
    if (z.q_order() < q_order)
        throw TruncationError("series order too small for the requested check");
    OdeReport report;
    for (int d = 0; d <= q_order; ++d) {
        // LHS coefficient: (P + d h)^4 z_d.
        CohomH lhs = z.coeff_q(d);
        CohomH op = linear_in_p(mh(d), RatFuncH(1));
        for (int rep = 0; rep < 4; ++rep) lhs *= op;
        // RHS coefficient: 5 * prod_{m=1}^{4}(5P + (5(d-1)+m) h) z_{d-1}; zero at d = 0.
        CohomH rhs;
        if (d >= 1) {
            rhs = z.coeff_q(d - 1) * RatFuncH(5);
            for (long m = 1; m <= 4; ++m) rhs *= linear_in_p(mh(5L * (d - 1) + m), RatFuncH(5));
        }
        OdeCheck check;
        check.degree = d;
        check.pass = (lhs == rhs);
        if (!check.pass) {
            for (int k = 0; k < kPPowerCount; ++k) {
                if (lhs.c(k) == rhs.c(k)) continue;
                check.detail = "P^" + std::to_string(k) + " component differs by " +
                               (lhs.c(k) - rhs.c(k)).to_string();
                break;
            }
            report.pass = false;
            if (report.first_failure_degree < 0) report.first_failure_degree = d;
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace quintic

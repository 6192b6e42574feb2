#include "quintic/sigma_model.hpp"

#include "quintic/parallel.hpp"
#include "quintic/residues.hpp"

namespace quintic {
namespace {

// Pairing of coefficient series: L_{a+a', b} += <A_{a,b}, B_{a',0}>.
TruncSeries<RatFuncH> pair_series(const TruncSeries<CohomH>& a, const TruncSeries<CohomH>& b) {
    TruncSeries<RatFuncH> out(std::min(a.q_order(), b.q_order()),
                              std::min(a.z_order(), b.z_order()));
    for (const auto& [ka, va] : a.terms()) {
        if (ka.first > out.q_order() || ka.second > out.z_order()) continue;
        for (const auto& [kb, vb] : b.terms()) {
            int qd = ka.first + kb.first, zd = ka.second + kb.second;
            if (qd > out.q_order() || zd > out.z_order()) continue;
            out.add(qd, zd, pair_quintic(va, vb));
        }
    }
    return out;
}

StrippedSeries negate_hbar(const StrippedSeries& z) {
    StrippedSeries out(z.q_order(), z.z_order());
    for (const auto& [k, v] : z.terms()) {
        CohomH c;
        for (int i = 0; i < kPPowerCount; ++i) c.set_c(i, v.c(i).negate_variable());
        out.set(k.first, k.second, c);
    }
    return out;
}

}  // namespace

TruncSeries<RatFuncH> l_series_dh(int q_order, int z_order) {
    TruncSeries<RatFuncH> out(q_order, z_order);
    std::vector<std::vector<RatFuncH>> slices(static_cast<size_t>(q_order) + 1);
    parallel_for(q_order + 1, [&](int d) {
        // Numerator 5p prod_{j=1}^{5d}(5p - j h); poles at p = 0, h, ..., d h, order 5 each.
        PolyR num = PolyR::linear(RatFuncH(0), RatFuncH(5));
        for (long j = 1; j <= 5L * d; ++j)
            num = num * PolyR::linear(RatFuncH::hbar() * RatFuncH(-j), RatFuncH(5));
        std::vector<std::pair<RatFuncH, int>> factors;
        for (int i = 0; i <= d; ++i) factors.emplace_back(RatFuncH::hbar() * RatFuncH(i), 5);

        auto& slice = slices[static_cast<size_t>(d)];
        slice.assign(static_cast<size_t>(z_order) + 1, RatFuncH());
        Rational inv_fact(1);
        PolyR num_b = num;  // num * p^b / b!
        for (int b = 0; b <= z_order; ++b) {
            if (b > 0) {
                inv_fact /= Rational(b);
                num_b = num_b * PolyR::linear(RatFuncH(0), RatFuncH(1));
            }
            RatFuncH total;
            for (size_t k = 0; k < factors.size(); ++k)
                total += residue_factored(num_b, factors, k);
            total *= RatFuncH(inv_fact);
            if (!total.is_polynomial())
                throw ConsistencyError("sigma-model coefficient (q^" + std::to_string(d) + ", z^" +
                                       std::to_string(b) + ") is not polynomial in h: " +
                                       total.to_string());
            slice[static_cast<size_t>(b)] = total;
        }
    });
    for (int d = 0; d <= q_order; ++d)
        for (int b = 0; b <= z_order; ++b)
            out.set(d, b, slices[static_cast<size_t>(d)][static_cast<size_t>(b)]);
    return out;
}

TruncSeries<RatFuncH> l_series_pairing_of(const StrippedSeries& z, int q_order, int z_order) {
    if (z.q_order() < q_order) throw TruncationError("stripped series too short for pairing");
    StrippedSeries zl = z.truncated(q_order, 0).with_z_order(z_order);

    // q -> q e^{hz}: substitute with E = exp(h z).
    TruncSeries<CohomH> hz(q_order, z_order);
    hz.set(0, 1, CohomH(RatFuncH::hbar()));
    TruncSeries<CohomH> shifted = series_substitute_q_scaled(zl, series_exp(hz));

    // Multiply by e^{Pz} (P nilpotent, finite sum).
    TruncSeries<CohomH> pz(q_order, z_order);
    pz.set(0, 1, CohomH::p());
    TruncSeries<CohomH> left = series_exp(pz) * shifted;

    StrippedSeries right = negate_hbar(zl);
    return pair_series(left, right);
}

TruncSeries<RatFuncH> l_series_pairing(int q_order, int z_order) {
    return l_series_pairing_of(i_series(q_order), q_order, z_order);
}

SigmaModelReport compare_l_series(const TruncSeries<RatFuncH>& dh,
                                  const TruncSeries<RatFuncH>& pairing) {
    SigmaModelReport report;
    int qo = std::min(dh.q_order(), pairing.q_order());
    int zo = std::min(dh.z_order(), pairing.z_order());
    for (int a = 0; a <= qo; ++a) {
        for (int b = 0; b <= zo; ++b) {
            RatFuncH x = dh.coeff(a, b), y = pairing.coeff(a, b);
            if (x == y) continue;
            report.pass = false;
            report.mismatches.push_back({a, b, x, y});
        }
    }
    return report;
}

SigmaModelReport verify_theorem_a(int q_order, int z_order) {
    return compare_l_series(l_series_dh(q_order, z_order), l_series_pairing(q_order, z_order));
}

}  // namespace quintic

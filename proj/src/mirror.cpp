#include "quintic/mirror.hpp"

namespace quintic {
namespace {

TruncSeries<CohomH> lift_scalar(const TruncSeries<Rational>& s, int q_order) {
    TruncSeries<CohomH> out(q_order, 0);
    for (const auto& [k, v] : s.terms())
        if (k.first <= q_order) out.set(k.first, 0, CohomH(v));
    return out;
}

}  // namespace

MirrorMap build_mirror_map(int q_order) {
    auto [f0, f1] = extract_f0_f1(q_order);
    return {f1 * series_invert(f0), f0};
}

JSeries apply_mirror(const StrippedSeries& z, const MirrorMap& m) {
    int qo = std::min(z.q_order(), std::min(m.g.q_order(), m.f0.q_order()));
    StrippedSeries w = z.truncated(qo, 0) * lift_scalar(series_invert(m.f0), qo);

    TruncSeries<Rational> ghat = inverse_shift(m.g, qo);
    StrippedSeries shifted = series_substitute_q_scaled(w, lift_scalar(series_exp(ghat), qo));

    // e^{P ghat/h}: nilpotent coefficient, exact exponential.
    TruncSeries<CohomH> arg(qo, 0);
    for (const auto& [k, v] : ghat.terms())
        arg.set(k.first, 0, CohomH::p() * (RatFuncH(v) * RatFuncH::hbar(-1)));
    JSeries j{series_exp(arg) * shifted};

    SeriesComponents c = split_components(j.z_j);
    for (int d = 0; d <= qo; ++d) {
        Rational want_f0 = d == 0 ? Rational(1) : Rational(0);
        if (c.f0.coeff_q(d) != want_f0)
            throw ConsistencyError("mirror normalization: scalar part at q^" + std::to_string(d) +
                                   " is " + c.f0.coeff_q(d).to_string());
        if (!c.f1.coeff_q(d).is_zero())
            throw ConsistencyError("mirror normalization: P-linear part at q^" +
                                   std::to_string(d) + " is " + c.f1.coeff_q(d).to_string());
    }
    return j;
}

TruncSeries<Rational> yukawa(const JSeries& j, int q_order) {
    if (j.z_j.q_order() < q_order) throw TruncationError("J-series too short for Yukawa order");
    TruncSeries<Rational> k(q_order, 0);
    for (int d = 0; d <= q_order; ++d) {
        CohomH op(RatFuncH::hbar() * RatFuncH(d));
        op.set_c(1, RatFuncH(1));  // P + d h
        RatFuncH r = pair_quintic(op * op * j.z_j.coeff_q(d), CohomH::p());
        if (!r.proper_part().is_zero())
            throw ConsistencyError("Yukawa pairing at Q^" + std::to_string(d) +
                                   " has negative h powers: " + r.to_string());
        k.set(d, 0, r.polynomial_part().coeff(0));
    }
    return k;
}

}  // namespace quintic

#include "quintic/cohomology.hpp"

#include <sstream>

namespace quintic {

WeightSpec::WeightSpec(std::array<Rational, kFixedPoints> lambdas) : lambdas_(std::move(lambdas)) {
    Rational sum;
    for (const auto& l : lambdas_) sum += l;
    if (!sum.is_zero())
        throw DegenerateWeightsError("weights must sum to zero, got sum " + sum.to_string());
    for (int a = 0; a < kFixedPoints; ++a)
        for (int b = a + 1; b < kFixedPoints; ++b)
            if (lambdas_[static_cast<size_t>(a)] == lambdas_[static_cast<size_t>(b)])
                throw DegenerateWeightsError("weights " + std::to_string(a) + " and " +
                                             std::to_string(b) + " coincide at " +
                                             lambdas_[static_cast<size_t>(a)].to_string());
    for (int a = 0; a < kFixedPoints; ++a) {
        Rational e(1);
        for (int b = 0; b < kFixedPoints; ++b)
            if (b != a) e *= lambdas_[static_cast<size_t>(a)] - lambdas_[static_cast<size_t>(b)];
        euler_[static_cast<size_t>(a)] = e;
    }
}

WeightSpec WeightSpec::parse(const std::string& text) {
    std::array<Rational, kFixedPoints> ls;
    std::stringstream ss(text);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= kFixedPoints)
            throw StructureError("expected " + std::to_string(kFixedPoints) + " weights, got more in '" + text + "'");
        try {
            ls[static_cast<size_t>(i)] = Rational::parse(part);
        } catch (const Error& e) {
            throw StructureError("weight " + std::to_string(i) + " ('" + part + "'): " + e.what());
        }
        ++i;
    }
    if (i != kFixedPoints)
        throw StructureError("expected " + std::to_string(kFixedPoints) + " weights, got " +
                             std::to_string(i) + " in '" + text + "'");
    return WeightSpec(ls);
}

WeightSpec WeightSpec::standard() {
    return WeightSpec({Rational(1), Rational(2), Rational(3), Rational(-1), Rational(-5)});
}

WeightSpec WeightSpec::generic_default() {
    return WeightSpec({Rational(19), Rational(16), Rational(5), Rational(-18), Rational(-22)});
}

std::string WeightSpec::to_string() const {
    std::string s;
    for (int a = 0; a < kFixedPoints; ++a) {
        if (a) s += ",";
        s += lambdas_[static_cast<size_t>(a)].to_string();
    }
    return s;
}

FixedPointClass to_fixed_point(const CohomH& phi, const WeightSpec& w) {
    FixedPointClass out;
    for (int a = 0; a < kFixedPoints; ++a)
        out.v[static_cast<size_t>(a)] = phi.eval_p(RatFuncH(w.lambda(a)));
    return out;
}

RatFuncH pair_equivariant(const FixedPointClass& phi, const FixedPointClass& psi,
                          const WeightSpec& w) {
    RatFuncH s;
    for (int a = 0; a < kFixedPoints; ++a) {
        RatFuncH term = phi.v[static_cast<size_t>(a)] * psi.v[static_cast<size_t>(a)];
        if (term.is_zero()) continue;
        s += term * RatFuncH(Rational(5) * w.lambda(a) / w.euler(a));
    }
    return s;
}

}  // namespace quintic

#ifndef QUINTIC_COHOMOLOGY_HPP
#define QUINTIC_COHOMOLOGY_HPP

/**
 * @file cohomology.hpp
 * @brief Cohomology of projective 4-space and its torus-equivariant version.
 *
 * Cohom<S> models S[P]/(P^4), the cohomology of P^4 with coefficients in S
 * (typically Q(h)).  The equivariant side replaces P by one of five fixed
 * point weights; classes there are 5-tuples of values and the intersection
 * pairing becomes a weighted fixed-point sum.
 */

#include <array>
#include <string>

#include "quintic/error.hpp"
#include "quintic/ratfunc.hpp"

namespace quintic {

inline constexpr int kFixedPoints = 5;  // torus fixed points on P^4
inline constexpr int kPPowerCount = 4;  // 1, P, P^2, P^3 span the ring

template <typename S>
class Cohom {
public:
    Cohom() = default;
    explicit Cohom(long v) { c_[0] = S(v); }
    explicit Cohom(Rational v) { c_[0] = S(std::move(v)); }
    explicit Cohom(S scalar) { c_[0] = std::move(scalar); }

    static Cohom p_power(int k) {
        if (k < 0) throw StructureError("negative power of the hyperplane class");
        Cohom r;
        if (k < kPPowerCount) r.c_[static_cast<size_t>(k)] = S(1);
        return r;  // P^4 = 0
    }
    static Cohom p() { return p_power(1); }

    const S& c(int k) const { return c_.at(static_cast<size_t>(k)); }
    void set_c(int k, S v) { c_.at(static_cast<size_t>(k)) = std::move(v); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    Cohom operator-() const {
        Cohom r;
        for (int k = 0; k < kPPowerCount; ++k) r.c_[static_cast<size_t>(k)] = S() - c_[static_cast<size_t>(k)];
        return r;
    }
    Cohom operator+(const Cohom& o) const {
        Cohom r;
        for (int k = 0; k < kPPowerCount; ++k)
            r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] + o.c_[static_cast<size_t>(k)];
        return r;
    }
    Cohom operator-(const Cohom& o) const { return *this + (-o); }
    Cohom operator*(const Cohom& o) const {
        Cohom r;
        for (int i = 0; i < kPPowerCount; ++i) {
            if (c_[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j < kPPowerCount; ++j)
                r.c_[static_cast<size_t>(i + j)] =
                    r.c_[static_cast<size_t>(i + j)] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
        return r;
    }
    Cohom operator*(const S& s) const {
        Cohom r = *this;
        for (auto& v : r.c_) v = v * s;
        return r;
    }
    Cohom& operator+=(const Cohom& o) { return *this = *this + o; }
    Cohom& operator-=(const Cohom& o) { return *this = *this - o; }
    Cohom& operator*=(const Cohom& o) { return *this = *this * o; }
    bool operator==(const Cohom& o) const {
        for (int k = 0; k < kPPowerCount; ++k)
            if (!(c_[static_cast<size_t>(k)] - o.c_[static_cast<size_t>(k)]).is_zero()) return false;
        return true;
    }
    bool operator!=(const Cohom& o) const { return !(*this == o); }

    /// Inverse of a unit (invertible scalar part): geometric series in the
    /// nilpotent part, exact because P^4 = 0.
    Cohom inverse() const {
        const S& a = c_[0];
        if (a.is_zero()) throw DivisionError("cohomology class with nilpotent scalar part has no inverse");
        S ainv = S(1) / a;
        Cohom n = *this;  // n := 1 - this/a  (nilpotent)
        n = Cohom(S(1)) - n * ainv;
        Cohom r(S(1)), pw = n;
        for (int k = 1; k < kPPowerCount; ++k) {
            r += pw;
            pw *= n;
        }
        return r * ainv;
    }

    /// Substitute P -> x (an S scalar).
    S eval_p(const S& x) const {
        S r{};
        for (int k = kPPowerCount - 1; k >= 0; --k) r = r * x + c_[static_cast<size_t>(k)];
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (int k = 0; k < kPPowerCount; ++k) {
            if (c_[static_cast<size_t>(k)].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[static_cast<size_t>(k)].to_string() + ")";
            if (k == 1) s += "*P";
            if (k > 1) s += "*P^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }

private:
    std::array<S, kPPowerCount> c_{};
};

/// Intersection pairing on the quintic hypersurface: <a, b> = 5 [P^3](a*b).
template <typename S>
S pair_quintic(const Cohom<S>& a, const Cohom<S>& b) {
    return (a * b).c(3) * S(5);
}

using CohomH = Cohom<RatFuncH>;

/// Five distinct torus weights with zero sum.
class WeightSpec {
public:
    explicit WeightSpec(std::array<Rational, kFixedPoints> lambdas);

    /// Comma-separated rationals, e.g. "1,2,3,-1,-5".
    static WeightSpec parse(const std::string& text);
    /// The tuple used by the worked low-degree examples.
    static WeightSpec standard();
    /// A tuple whose recursion data stays nondegenerate through degree 10.
    static WeightSpec generic_default();

    const Rational& lambda(int alpha) const { return lambdas_.at(static_cast<size_t>(alpha)); }
    /// Euler factor at a fixed point: e_alpha = prod_{beta != alpha} (l_a - l_b).
    const Rational& euler(int alpha) const { return euler_.at(static_cast<size_t>(alpha)); }

    bool operator==(const WeightSpec& o) const { return lambdas_ == o.lambdas_; }
    bool operator!=(const WeightSpec& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::array<Rational, kFixedPoints> lambdas_;
    std::array<Rational, kFixedPoints> euler_;
};

/// A class on equivariant P^4 presented by its fixed-point values.
struct FixedPointClass {
    std::array<RatFuncH, kFixedPoints> v{};
};

/// Restrict a polynomial class in P to the fixed points (P -> lambda_alpha).
FixedPointClass to_fixed_point(const CohomH& phi, const WeightSpec& w);

/// Equivariant pairing: sum_alpha 5 lambda_alpha phi_alpha psi_alpha / e_alpha.
RatFuncH pair_equivariant(const FixedPointClass& phi, const FixedPointClass& psi,
                          const WeightSpec& w);

}  // namespace quintic

#endif

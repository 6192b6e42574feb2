#ifndef QUINTIC_RATFUNC_HPP
#define QUINTIC_RATFUNC_HPP

/**
 * @file ratfunc.hpp
 * @brief Exact rational functions in one variable h (read: h-bar).
 *
 * Canonical form: numerator and denominator coprime, denominator monic,
 * zero stored as 0/1.  Denominators that are pure monomials c*h^k (the
 * common case in localization work) reduce by valuation shifts instead of
 * a full gcd, which keeps large series manipulations cheap.
 */

#include <string>
#include <vector>

#include "quintic/poly.hpp"

namespace quintic {

class RatFuncH {
public:
    RatFuncH() : num_(), den_(PolyH::one()) {}
    RatFuncH(long v) : num_(PolyH(Rational(v))), den_(PolyH::one()) {}  // NOLINT: implicit by design
    RatFuncH(int v) : RatFuncH(static_cast<long>(v)) {}                 // NOLINT: implicit by design
    RatFuncH(Rational v) : num_(PolyH(std::move(v))), den_(PolyH::one()) {}  // NOLINT
    explicit RatFuncH(PolyH p) : num_(std::move(p)), den_(PolyH::one()) {}
    RatFuncH(PolyH num, PolyH den);

    /// h^k for any integer k (negative k gives 1/h^{-k}).
    static RatFuncH hbar(int k = 1);

    const PolyH& numerator() const { return num_; }
    const PolyH& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == PolyH::one(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Constant term as a Rational; throws StructureError if not constant.
    Rational as_constant() const;

    RatFuncH operator-() const;
    RatFuncH operator+(const RatFuncH& o) const;
    RatFuncH operator-(const RatFuncH& o) const;
    RatFuncH operator*(const RatFuncH& o) const;
    RatFuncH operator/(const RatFuncH& o) const;
    RatFuncH& operator+=(const RatFuncH& o) { return *this = *this + o; }
    RatFuncH& operator-=(const RatFuncH& o) { return *this = *this - o; }
    RatFuncH& operator*=(const RatFuncH& o) { return *this = *this * o; }
    RatFuncH& operator/=(const RatFuncH& o) { return *this = *this / o; }
    bool operator==(const RatFuncH& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFuncH& o) const { return !(*this == o); }

    RatFuncH inverse() const;
    RatFuncH pow(int e) const;

    /// Evaluate at h = x; throws SubstitutionError when x is a pole.
    Rational eval(const Rational& x) const;
    /// f(-h).
    RatFuncH negate_variable() const;
    /// f(c*h) for nonzero rational c.
    RatFuncH scale_variable(const Rational& c) const;

    bool has_pole_at(const Rational& a) const;
    /// Multiplicity of h = a as a pole (0 when finite there).
    int pole_order_at(const Rational& a) const;
    int pole_order_at_zero() const { return poly_valuation(den_); }

    /// Coefficient of h^j in the Laurent expansion around h = 0 (j may be negative).
    Rational laurent_at_zero(int j) const;

    /// Leading exponent at infinity: f ~ c * h^d with c != 0; zero input returns INT_MIN substitute.
    int degree_at_infinity() const;
    /// Coefficient of h^{-k} in the expansion at infinity (k may be negative).
    Rational infinity_coeff(int k) const;

    /// Euclidean split f = polynomial_part + proper_part with deg num < deg den.
    PolyH polynomial_part() const;
    RatFuncH proper_part() const;

    std::string to_string(const std::string& var = "h") const;

private:
    PolyH num_;
    PolyH den_;  // monic, coprime with num_, never zero

    void reduce();
};

inline RatFuncH operator+(long a, const RatFuncH& b) { return RatFuncH(a) + b; }
inline RatFuncH operator-(long a, const RatFuncH& b) { return RatFuncH(a) - b; }
inline RatFuncH operator*(long a, const RatFuncH& b) { return RatFuncH(a) * b; }
inline RatFuncH operator*(const Rational& a, const RatFuncH& b) { return RatFuncH(a) * b; }

using PolyR = Poly<RatFuncH>;  // polynomials in a second variable over Q(h)

}  // namespace quintic

#endif

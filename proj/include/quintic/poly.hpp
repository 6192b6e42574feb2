#ifndef QUINTIC_POLY_HPP
#define QUINTIC_POLY_HPP

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * The coefficient type T needs: default construction (= zero), +, -, *,
 * is_zero().  Division-based helpers (divrem, gcd, monic) additionally need
 * T to be a field with operator/.  PolyH (coefficients in Rational, variable
 * read as h-bar) is the workhorse instantiation.
 */

#include <string>
#include <vector>

#include "quintic/error.hpp"
#include "quintic/rational.hpp"

namespace quintic {

template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(T c) { c_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(T coeff, int k) {
        std::vector<T> v(static_cast<size_t>(k) + 1);
        v[static_cast<size_t>(k)] = std::move(coeff);
        return Poly(std::move(v));
    }
    static Poly one() { return Poly(T(1)); }
    /// a + b*x
    static Poly linear(T a, T b) { return Poly(std::vector<T>{std::move(a), std::move(b)}); }

    /// Degree, with deg 0 = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T();
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<T>& coeffs() const { return c_; }
    T leading() const { return c_.empty() ? T() : c_.back(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = T() - c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<T> v(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size()) v[i] = v[i] + c_[i];
            if (i < o.c_.size()) v[i] = v[i] + o.c_[i];
        }
        return Poly(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> v(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly operator*(const T& s) const {
        Poly r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }
    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] - o.c_[i]).is_zero()) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const {
        if (e < 0) throw Error("Poly::pow with negative exponent");
        Poly r = one(), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    T eval(const T& x) const {
        T r{};
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(v));
    }

    /// p(x + a), by Horner on the shifted variable.
    Poly shifted(const T& a) const {
        Poly r;
        Poly x_plus_a = linear(a, T(1));
        for (size_t i = c_.size(); i-- > 0;) r = r * x_plus_a + Poly(c_[i]);
        return r;
    }

    std::string to_string(const std::string& var = "h") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].to_string() + ")";
            if (i == 1) s += "*" + var;
            if (i > 1) s += "*" + var + "^" + std::to_string(i);
        }
        return s;
    }

private:
    std::vector<T> c_;  // c_[i] * x^i, no trailing zeros

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Quotient and remainder over a field; throws DivisionError for den == 0.
template <typename T>
Poly<T> poly_divrem(const Poly<T>& num, const Poly<T>& den, Poly<T>* rem_out = nullptr) {
    if (den.is_zero()) throw DivisionError("polynomial division by zero");
    std::vector<T> r(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) {
        if (rem_out) *rem_out = num;
        return Poly<T>();
    }
    std::vector<T> q(static_cast<size_t>(dn - dd) + 1);
    T lead_inv = T(1) / den.leading();
    for (int k = dn - dd; k >= 0; --k) {
        T c = r[static_cast<size_t>(k + dd)] * lead_inv;
        q[static_cast<size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<size_t>(k + j)] = r[static_cast<size_t>(k + j)] - c * den.coeff(j);
    }
    if (rem_out) {
        r.resize(static_cast<size_t>(std::max(dd, 0)));
        *rem_out = Poly<T>(std::move(r));
    }
    return Poly<T>(std::move(q));
}

/// Monic rescale; reports the leading coefficient that was divided out.
template <typename T>
Poly<T> poly_monic(const Poly<T>& p, T* lead_out = nullptr) {
    if (p.is_zero()) {
        if (lead_out) *lead_out = T(1);
        return p;
    }
    T lead = p.leading();
    if (lead_out) *lead_out = lead;
    return p * (T(1) / lead);
}

/// Monic gcd by the Euclidean algorithm (exact field coefficients).
template <typename T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        b = poly_monic(b);
        Poly<T> r;
        poly_divrem(a, b, &r);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

using PolyH = Poly<Rational>;

/// Rational-coefficient gcd via a primitive pseudo-remainder sequence over
/// the integers, which sidesteps the coefficient blowup of field Euclid.
PolyH poly_gcd(const PolyH& a, const PolyH& b);

/// True when p = c * x^k for some k (including constants and zero).
bool poly_is_monomial(const PolyH& p);
/// Valuation: largest k with x^k dividing p; 0 for p = 0.
int poly_valuation(const PolyH& p);

}  // namespace quintic

#endif

#ifndef QUINTIC_SERIES_HPP
#define QUINTIC_SERIES_HPP

/**
 * @file series.hpp
 * @brief Sparse truncated power series in q and z over an exact ring R.
 *
 * A series carries explicit truncation orders: coefficients are trusted for
 * q-exponent <= q_order and z-exponent <= z_order.  Binary operations keep
 * the minimum of the operand orders in each variable; products silently drop
 * terms beyond the result's orders, while explicit reads or writes outside
 * the trusted window throw TruncationError.
 *
 * R needs: default construction (= 0), construction from Rational and long,
 * +, -, *, is_zero(); series_invert additionally needs member inverse().
 */

#include <map>
#include <string>
#include <utility>

#include "quintic/error.hpp"
#include "quintic/rational.hpp"

namespace quintic {

template <typename R>
class TruncSeries {
public:
    using Key = std::pair<int, int>;  // (q exponent, z exponent)
    using TermMap = std::map<Key, R>;

    TruncSeries() : q_order_(0), z_order_(0) {}
    TruncSeries(int q_order, int z_order) : q_order_(q_order), z_order_(z_order) {
        if (q_order < 0 || z_order < 0) throw TruncationError("negative truncation order");
    }
    static TruncSeries constant(R v, int q_order, int z_order) {
        TruncSeries s(q_order, z_order);
        s.set(0, 0, std::move(v));
        return s;
    }
    static TruncSeries one(int q_order, int z_order) {
        return constant(R(1), q_order, z_order);
    }

    int q_order() const { return q_order_; }
    int z_order() const { return z_order_; }
    const TermMap& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    bool in_window(int qd, int zd) const {
        return qd >= 0 && zd >= 0 && qd <= q_order_ && zd <= z_order_;
    }

    R coeff(int qd, int zd) const {
        require_window(qd, zd, "coefficient read");
        auto it = c_.find({qd, zd});
        return it == c_.end() ? R() : it->second;
    }
    /// Coefficient of q^qd for a series with no z dependence.
    R coeff_q(int qd) const { return coeff(qd, 0); }

    void set(int qd, int zd, R v) {
        require_window(qd, zd, "coefficient write");
        if (v.is_zero())
            c_.erase({qd, zd});
        else
            c_[{qd, zd}] = std::move(v);
    }
    void add(int qd, int zd, const R& v) {
        require_window(qd, zd, "coefficient update");
        add_clipped(qd, zd, v);
    }

    /// Re-declare truncation orders.  Raising an order is a *claim* that the
    /// series is exact beyond its old window (e.g. lifting a pure-q series
    /// into a z context); lowering drops terms.
    TruncSeries with_orders(int q_order, int z_order) const {
        TruncSeries s(q_order, z_order);
        for (const auto& [k, v] : c_)
            if (s.in_window(k.first, k.second)) s.c_[k] = v;
        return s;
    }
    TruncSeries with_z_order(int z_order) const { return with_orders(q_order_, z_order); }
    TruncSeries with_q_order(int q_order) const { return with_orders(q_order, z_order_); }
    /// Shrink-only variant: guards against accidentally widening the claim.
    TruncSeries truncated(int q_order, int z_order) const {
        if (q_order > q_order_ || z_order > z_order_)
            throw TruncationError("truncated() cannot widen the trusted window");
        return with_orders(q_order, z_order);
    }

    TruncSeries operator-() const {
        TruncSeries s = *this;
        for (auto& [k, v] : s.c_) v = R() - v;
        return s;
    }
    TruncSeries operator+(const TruncSeries& o) const {
        TruncSeries s(std::min(q_order_, o.q_order_), std::min(z_order_, o.z_order_));
        for (const auto& [k, v] : c_) s.add_clipped(k.first, k.second, v);
        for (const auto& [k, v] : o.c_) s.add_clipped(k.first, k.second, v);
        return s;
    }
    TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }
    TruncSeries operator*(const TruncSeries& o) const {
        TruncSeries s(std::min(q_order_, o.q_order_), std::min(z_order_, o.z_order_));
        for (const auto& [ka, va] : c_) {
            if (ka.first > s.q_order_ || ka.second > s.z_order_) continue;
            for (const auto& [kb, vb] : o.c_) {
                int qd = ka.first + kb.first, zd = ka.second + kb.second;
                if (qd > s.q_order_ || zd > s.z_order_) continue;
                s.add_clipped(qd, zd, va * vb);
            }
        }
        return s;
    }
    TruncSeries operator*(const R& v) const {
        TruncSeries s(q_order_, z_order_);
        for (const auto& [k, c] : c_) s.add_clipped(k.first, k.second, c * v);
        return s;
    }
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    /// Equality of trusted windows and coefficients.
    bool operator==(const TruncSeries& o) const {
        return q_order_ == o.q_order_ && z_order_ == o.z_order_ && c_ == o.c_;
    }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    /// Multiply by q^a z^b, dropping shifted-out terms.
    TruncSeries shifted(int a, int b) const {
        TruncSeries s(q_order_, z_order_);
        for (const auto& [k, v] : c_) {
            int qd = k.first + a, zd = k.second + b;
            if (qd < 0 || zd < 0) throw TruncationError("negative exponent after shift");
            if (qd <= q_order_ && zd <= z_order_) s.c_[{qd, zd}] = v;
        }
        return s;
    }

    std::string to_string(const std::string& qv = "q", const std::string& zv = "z") const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [k, v] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + v.to_string() + ")";
            if (k.first > 0) s += "*" + qv + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second > 0) s += "*" + zv + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        return s;
    }

private:
    int q_order_;
    int z_order_;
    TermMap c_;  // nonzero terms only

    void require_window(int qd, int zd, const char* what) const {
        if (!in_window(qd, zd))
            throw TruncationError(std::string(what) + " at q^" + std::to_string(qd) + " z^" +
                                  std::to_string(zd) + " outside trusted window (" +
                                  std::to_string(q_order_) + ", " + std::to_string(z_order_) + ")");
    }
    void add_clipped(int qd, int zd, const R& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = c_.try_emplace({qd, zd}, v);
        if (!inserted) {
            it->second = it->second + v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
};

/// Multiplicative inverse; the (q^0, z^0) coefficient must be invertible in R.
template <typename R>
TruncSeries<R> series_invert(const TruncSeries<R>& a) {
    R c0 = a.coeff(0, 0);
    if (c0.is_zero()) throw DivisionError("series inverse needs a unit constant term");
    R c0inv = c0.inverse();
    TruncSeries<R> b(a.q_order(), a.z_order());
    b.set(0, 0, c0inv);
    // Graded recurrence on total degree: b_k = -c0^{-1} * sum_{0<j<=k} a_j b_{k-j}.
    for (int n = 1; n <= a.q_order() + a.z_order(); ++n) {
        for (int qd = 0; qd <= std::min(n, a.q_order()); ++qd) {
            int zd = n - qd;
            if (zd > a.z_order()) continue;
            R s;
            for (const auto& [k, av] : a.terms()) {
                if (k.first == 0 && k.second == 0) continue;
                int iq = qd - k.first, iz = zd - k.second;
                if (iq < 0 || iz < 0) continue;
                R bv = b.coeff(iq, iz);
                if (!bv.is_zero()) s = s + av * bv;
            }
            if (!s.is_zero()) b.set(qd, zd, R() - c0inv * s);
        }
    }
    return b;
}

/// exp of a series with zero constant term (positive valuation or nilpotent
/// coefficients make the sum finite within the trusted window).
template <typename R>
TruncSeries<R> series_exp(const TruncSeries<R>& s) {
    if (!s.coeff(0, 0).is_zero())
        throw StructureError("series exp needs zero constant term");
    TruncSeries<R> acc = TruncSeries<R>::one(s.q_order(), s.z_order());
    TruncSeries<R> term = acc;
    int limit = s.q_order() + s.z_order() + 8;  // +8 absorbs nilpotent coefficient depth
    for (int k = 1; k <= limit; ++k) {
        term = term * s * R(Rational(1, k));
        if (term.is_zero()) return acc;
        acc += term;
    }
    throw StructureError("series exp did not terminate within the trusted window");
}

/// Substitute q -> q * E(q, z) term by term: sum c_{d,m} q^d z^m E^d.
template <typename R>
TruncSeries<R> series_substitute_q_scaled(const TruncSeries<R>& s, const TruncSeries<R>& E) {
    TruncSeries<R> out(std::min(s.q_order(), E.q_order()), std::min(s.z_order(), E.z_order()));
    TruncSeries<R> Ed = TruncSeries<R>::one(E.q_order(), E.z_order());
    for (int d = 0; d <= out.q_order(); ++d) {
        for (const auto& [k, v] : s.terms()) {
            if (k.first != d || k.second > out.z_order()) continue;
            for (const auto& [ke, ve] : Ed.terms()) {
                int qd = d + ke.first, zd = k.second + ke.second;
                if (qd > out.q_order() || zd > out.z_order()) continue;
                out.add(qd, zd, v * ve);
            }
        }
        if (d < out.q_order()) Ed *= E;
    }
    return out;
}

/// Solve ghat(Q) + g(Q e^{ghat(Q)}) = 0 for ghat, iterating to q-adic fixpoint.
template <typename R>
TruncSeries<R> inverse_shift(const TruncSeries<R>& g, int order) {
    if (g.z_order() != 0) throw StructureError("inverse shift expects a pure-q series");
    if (!g.coeff(0, 0).is_zero())
        throw StructureError("inverse shift needs a series with zero constant term");
    if (g.q_order() < order) throw TruncationError("inverse shift beyond trusted q order");
    TruncSeries<R> gq = g.truncated(order, 0);
    TruncSeries<R> ghat(order, 0);
    for (int n = 0; n < order; ++n)
        ghat = -series_substitute_q_scaled(gq, series_exp(ghat));
    return ghat;
}

}  // namespace quintic

#endif

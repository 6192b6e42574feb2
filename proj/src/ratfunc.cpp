#include "quintic/ratfunc.hpp"

#include <limits>

namespace quintic {
namespace {

// Power-series inverse of a (a[0] != 0) through degree `order`.
std::vector<Rational> invert_power_series(const std::vector<Rational>& a, int order) {
    std::vector<Rational> b(static_cast<size_t>(order) + 1);
    Rational lead_inv = a[0].inverse();
    b[0] = lead_inv;
    for (int n = 1; n <= order; ++n) {
        Rational s;
        for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i)
            s += a[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
        b[static_cast<size_t>(n)] = -(lead_inv * s);
    }
    return b;
}

// Reversed coefficient list: q_i = p_{deg - i}.
std::vector<Rational> reversed_coeffs(const PolyH& p) {
    std::vector<Rational> v(p.coeffs().rbegin(), p.coeffs().rend());
    if (v.empty()) v.push_back(Rational(0));
    return v;
}

}  // namespace

RatFuncH::RatFuncH(PolyH num, PolyH den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
    reduce();
}

RatFuncH RatFuncH::hbar(int k) {
    if (k >= 0) return RatFuncH(PolyH::monomial(Rational(1), k));
    RatFuncH r;
    r.num_ = PolyH::one();
    r.den_ = PolyH::monomial(Rational(1), -k);
    return r;
}

void RatFuncH::reduce() {
    if (num_.is_zero()) {
        den_ = PolyH::one();
        return;
    }
    if (den_.is_constant()) {
        if (!(den_.coeff(0) == Rational(1))) {
            num_ = num_ * den_.coeff(0).inverse();
            den_ = PolyH::one();
        }
        return;
    }
    if (poly_is_monomial(den_)) {
        // den = c * h^k: cancel h-powers by valuation, then normalize c away.
        int k = den_.degree();
        Rational c = den_.leading();
        int shift = std::min(poly_valuation(num_), k);
        if (shift > 0) {
            std::vector<Rational> v(num_.coeffs().begin() + shift, num_.coeffs().end());
            num_ = PolyH(std::move(v));
            k -= shift;
        }
        if (!(c == Rational(1))) num_ = num_ * c.inverse();
        den_ = PolyH::monomial(Rational(1), k);
        return;
    }
    PolyH g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divrem(num_, g);
        den_ = poly_divrem(den_, g);
    }
    Rational lead;
    den_ = poly_monic(den_, &lead);
    num_ = num_ * lead.inverse();
}

Rational RatFuncH::as_constant() const {
    if (!is_constant()) throw StructureError("rational function is not a constant: " + to_string());
    return num_.coeff(0);
}

RatFuncH RatFuncH::operator-() const {
    RatFuncH r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncH RatFuncH::operator+(const RatFuncH& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFuncH(num_ + o.num_, den_);
    return RatFuncH(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFuncH RatFuncH::operator-(const RatFuncH& o) const { return *this + (-o); }

RatFuncH RatFuncH::operator*(const RatFuncH& o) const {
    if (is_zero() || o.is_zero()) return RatFuncH();
    return RatFuncH(num_ * o.num_, den_ * o.den_);
}

RatFuncH RatFuncH::operator/(const RatFuncH& o) const {
    if (o.is_zero()) throw DivisionError("rational function division by zero");
    if (is_zero()) return RatFuncH();
    return RatFuncH(num_ * o.den_, den_ * o.num_);
}

RatFuncH RatFuncH::inverse() const {
    if (is_zero()) throw DivisionError("inverse of zero rational function");
    return RatFuncH(den_, num_);
}

RatFuncH RatFuncH::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFuncH r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational RatFuncH::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero())
        throw SubstitutionError("evaluation at pole h = " + x.to_string() + " of " + to_string());
    return num_.eval(x) / d;
}

RatFuncH RatFuncH::negate_variable() const { return scale_variable(Rational(-1)); }

RatFuncH RatFuncH::scale_variable(const Rational& c) const {
    if (c.is_zero()) throw StructureError("variable scale by zero");
    auto scale = [&c](const PolyH& p) {
        std::vector<Rational> v(p.coeffs());
        Rational ck(1);
        for (size_t i = 0; i < v.size(); ++i) {
            v[i] *= ck;
            ck *= c;
        }
        return PolyH(std::move(v));
    };
    return RatFuncH(scale(num_), scale(den_));
}

bool RatFuncH::has_pole_at(const Rational& a) const { return den_.eval(a).is_zero(); }

int RatFuncH::pole_order_at(const Rational& a) const {
    // num_ and den_ are coprime, so the multiplicity in den_ is the pole order.
    int order = 0;
    PolyH d = den_;
    PolyH lin = PolyH::linear(-a, Rational(1));
    while (d.eval(a).is_zero()) {
        PolyH rem;
        d = poly_divrem(d, lin, &rem);
        ++order;
    }
    return order;
}

Rational RatFuncH::laurent_at_zero(int j) const {
    if (is_zero()) return Rational(0);
    int k = poly_valuation(den_);
    int order = j + k;
    if (order < 0) return Rational(0);
    std::vector<Rational> d0(den_.coeffs().begin() + k, den_.coeffs().end());
    std::vector<Rational> inv = invert_power_series(d0, order);
    Rational s;
    for (int i = 0; i <= order && i <= num_.degree(); ++i)
        s += num_.coeff(i) * inv[static_cast<size_t>(order - i)];
    return s;
}

int RatFuncH::degree_at_infinity() const {
    if (is_zero()) return std::numeric_limits<int>::min();
    return num_.degree() - den_.degree();
}

Rational RatFuncH::infinity_coeff(int k) const {
    if (is_zero()) return Rational(0);
    int dinf = degree_at_infinity();
    int order = dinf + k;
    if (order < 0) return Rational(0);
    std::vector<Rational> rn = reversed_coeffs(num_);
    std::vector<Rational> rd = reversed_coeffs(den_);
    std::vector<Rational> inv = invert_power_series(rd, order);
    Rational s;
    for (int i = 0; i <= order && i < static_cast<int>(rn.size()); ++i)
        s += rn[static_cast<size_t>(i)] * inv[static_cast<size_t>(order - i)];
    return s;
}

PolyH RatFuncH::polynomial_part() const { return poly_divrem(num_, den_); }

RatFuncH RatFuncH::proper_part() const {
    PolyH rem;
    poly_divrem(num_, den_, &rem);
    return RatFuncH(rem, den_);
}

std::string RatFuncH::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace quintic

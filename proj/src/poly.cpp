#include "quintic/poly.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace quintic {

namespace {

void trim_zeros(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Divide out the integer content (gcd of all coefficients).
void strip_content(std::vector<mpz_class>& v) {
    mpz_class g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : v) c /= g;
}

/// Clear denominators and strip content: a primitive integer image of p.
std::vector<mpz_class> to_primitive_integers(const PolyH& p) {
    mpz_class l(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(c.raw()));
    std::vector<mpz_class> v(p.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& c = p.coeffs()[i];
        mpz_divexact(v[i].get_mpz_t(), l.get_mpz_t(), mpq_denref(c.raw()));
        v[i] *= mpz_class(mpq_numref(c.raw()));
    }
    trim_zeros(v);
    strip_content(v);
    return v;
}

/// Fraction-free pseudo-remainder: proportional to (lead b)^k * (r mod b).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> r, const std::vector<mpz_class>& b) {
    const size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (r.size() > db) {
        mpz_class c = r.back();
        r.pop_back();
        for (auto& rc : r) rc *= lb;
        const size_t k = r.size() - db;  // shift of b under the removed term
        for (size_t j = 0; j < db; ++j) r[k + j] -= c * b[j];
        trim_zeros(r);
    }
    return r;
}

}  // namespace

PolyH poly_gcd(const PolyH& pa, const PolyH& pb) {
    if (pa.is_zero()) return poly_monic(pb);
    if (pb.is_zero()) return poly_monic(pa);
    std::vector<mpz_class> a = to_primitive_integers(pa);
    std::vector<mpz_class> b = to_primitive_integers(pb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<mpz_class> r = pseudo_rem(std::move(a), b);
        strip_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rational> out(a.size());
    const mpz_class& lead = a.back();
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_set(mpq_numref(out[i].raw()), a[i].get_mpz_t());
        mpz_set(mpq_denref(out[i].raw()), lead.get_mpz_t());
        mpq_canonicalize(out[i].raw());
    }
    return PolyH(std::move(out));
}

bool poly_is_monomial(const PolyH& p) {
    const auto& c = p.coeffs();
    if (c.empty()) return true;
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (!c[i].is_zero()) return false;
    return true;
}

int poly_valuation(const PolyH& p) {
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return static_cast<int>(i);
    return 0;
}

}  // namespace quintic

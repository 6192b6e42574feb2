#include "quintic/rational.hpp"

#include <cctype>
#include <ostream>

namespace quintic {

Rational::Rational(long num, long den) {
    mpq_init(v_);
    if (den == 0) throw DivisionError("rational with zero denominator");
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Rational Rational::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw Error("cannot parse empty rational");
    Rational r;
    if (mpq_set_str(r.v_, t.c_str(), 10) != 0)
        throw Error("cannot parse rational: '" + text + "'");
    if (mpz_sgn(mpq_denref(r.v_)) == 0)
        throw DivisionError("rational with zero denominator: '" + text + "'");
    mpq_canonicalize(r.v_);
    return r;
}

Rational Rational::factorial(unsigned long n) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.v_), n);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.v_, v_, o.v_);
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.v_, v_, o.v_);
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.v_, v_, o.v_);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionError("rational division by zero");
    Rational r;
    mpq_div(r.v_, v_, o.v_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionError("rational division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionError("inverse of zero");
    Rational r;
    mpq_inv(r.v_, v_);
    return r;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), k);
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), k);
    // num/den coprime => their powers are coprime, no canonicalize needed.
    return r;
}

static std::string mpz_to_string(const mpz_t z) {
    char* raw = mpz_get_str(nullptr, 10, z);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
}

std::string Rational::numerator_string() const { return mpz_to_string(mpq_numref(v_)); }
std::string Rational::denominator_string() const { return mpz_to_string(mpq_denref(v_)); }

std::string Rational::to_string() const {
    if (is_integer()) return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace quintic

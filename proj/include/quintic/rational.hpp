#ifndef QUINTIC_RATIONAL_HPP
#define QUINTIC_RATIONAL_HPP

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers on top of GMP's mpq layer.
 *
 * Values are kept canonical at all times: numerator and denominator coprime,
 * denominator positive, zero stored as 0/1.  Every operation is exact.
 */

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "quintic/error.hpp"

namespace quintic {

class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) {  // NOLINT: implicit by design, mirrors integer literals
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den);
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    ~Rational() { mpq_clear(v_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }

    /// Parse "a", "-a" or "a/b" (optional sign on the numerator).
    static Rational parse(const std::string& text);

    /// n! as an exact rational (denominator 1).
    static Rational factorial(unsigned long n);

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  ///< DivisionError on /0
    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rational& operator/=(const Rational& o);

    bool operator==(const Rational& o) const { return mpq_equal(v_, o.v_) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mpq_cmp(v_, o.v_) < 0; }
    bool operator<=(const Rational& o) const { return mpq_cmp(v_, o.v_) <= 0; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    Rational inverse() const;  ///< DivisionError on 0
    Rational abs() const;
    Rational pow(long e) const;  ///< integer exponent, DivisionError on 0^(e<0)

    std::string numerator_string() const;
    std::string denominator_string() const;
    /// "a" when the denominator is 1, otherwise "a/b".
    std::string to_string() const;

    /// Raw GMP handle, for performance-critical polynomial kernels.
    mpq_srcptr raw() const { return v_; }
    mpq_ptr raw() { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_t v_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }
inline Rational operator+(long n, const Rational& r) { return Rational(n) + r; }
inline Rational operator-(long n, const Rational& r) { return Rational(n) - r; }

}  // namespace quintic

#endif

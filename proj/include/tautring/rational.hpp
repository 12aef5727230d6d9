#ifndef TAUTRING_RATIONAL_HPP
#define TAUTRING_RATIONAL_HPP

#include <gmp.h>

#include <iosfwd>
#include <string>

#include "tautring/integer.hpp"

namespace tautring {

/*
 * Exact rational number. Always stored in lowest terms with positive
 * denominator, so equality is structural and ordering is total.
 */
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den);
    Rational(const Integer& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const std::string& s);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const;
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Integer numerator() const {
        Integer v;
        mpz_set(v.raw(), mpq_numref(q_));
        return v;
    }
    Integer denominator() const {
        Integer v;
        mpz_set(v.raw(), mpq_denref(q_));
        return v;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    /* "p/q", or just "p" when the value is an integer. */
    std::string str() const;

  private:
    void canonicalize();
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace tautring

#endif

#include "tautring/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tautring {

void Rational::canonicalize() {
    if (mpz_sgn(mpq_denref(q_)) == 0) throw std::domain_error("Rational: zero denominator");
    mpq_canonicalize(q_);
}

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    if (mpz_sgn(mpq_denref(q_)) < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    canonicalize();
}

Rational::Rational(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0) {
        mpq_clear(q_);
        throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    }
    if (mpz_sgn(mpq_denref(q_)) < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace tautring

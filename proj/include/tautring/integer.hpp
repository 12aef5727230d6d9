#ifndef TAUTRING_INTEGER_HPP
#define TAUTRING_INTEGER_HPP

#include <gmp.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace tautring {

/* Arbitrary-precision integer, value semantics over mpz_t. */
class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }
    explicit Integer(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw_parse_error(s);
        }
    }
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Integer& operator+=(const Integer& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    /* Quotient of an exact division; the caller guarantees divisibility. */
    static Integer div_exact(const Integer& a, const Integer& b);
    /* Truncated division with remainder. */
    static std::pair<Integer, Integer> div_rem(const Integer& a, const Integer& b);
    static Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    static Integer lcm(const Integer& a, const Integer& b) {
        Integer r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    static Integer pow(const Integer& a, unsigned long e) {
        Integer r;
        mpz_pow_ui(r.z_, a.z_, e);
        return r;
    }

    Integer abs() const {
        Integer r;
        mpz_abs(r.z_, z_);
        return r;
    }
    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    std::string str() const;

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

  private:
    [[noreturn]] static void throw_parse_error(const std::string& s);
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace tautring

#endif

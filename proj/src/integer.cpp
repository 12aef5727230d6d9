#include "tautring/integer.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace tautring {

Integer Integer::div_exact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("Integer::div_exact: division by zero");
    Integer r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
}

std::pair<Integer, Integer> Integer::div_rem(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("Integer::div_rem: division by zero");
    Integer q, r;
    mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
    return {std::move(q), std::move(r)};
}

std::string Integer::str() const {
    std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
    mpz_get_str(buf.data(), 10, z_);
    return std::string(buf.data());
}

void Integer::throw_parse_error(const std::string& s) {
    throw std::invalid_argument("Integer: cannot parse \"" + s + "\"");
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

}  // namespace tautring

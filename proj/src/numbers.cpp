#include "tautring/numbers.hpp"

#include <mutex>
#include <stdexcept>

namespace tautring {

Integer factorial(int k) {
    if (k < 0) throw std::domain_error("factorial: negative argument");
    Integer r(1);
    for (int i = 2; i <= k; ++i) r *= Integer(i);
    return r;
}

Integer double_factorial(int k) {
    if (k < -1) throw std::domain_error("double_factorial: argument below -1");
    Integer r(1);
    for (int i = k; i >= 2; i -= 2) r *= Integer(i);
    return r;
}

Integer binomial(int n, int k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

/*
 * B_0..B_m via sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1, B_1 = -1/2.
 * Even-index values are what the library exposes; they are the same in
 * every convention and reproduce B_8 = -1/30.
 */
std::vector<Rational> bernoulli_row(int m) {
    std::vector<Rational> b;
    b.reserve(m + 1);
    b.push_back(Rational(1));
    for (int i = 1; i <= m; ++i) {
        Rational acc(0);
        for (int j = 0; j < i; ++j) acc += Rational(binomial(i + 1, j)) * b[j];
        b.push_back(-acc / Rational(i + 1));
    }
    return b;
}

std::mutex table_mutex;
std::vector<Rational> even_table;  // entry k holds B_{2k}

}  // namespace

Rational bernoulli(int m) {
    if (m <= 0 || m % 2 != 0) throw std::domain_error("bernoulli: argument must be even and positive");
    return BernoulliTable::instance().even_value(m / 2);
}

const BernoulliTable& BernoulliTable::instance() {
    static BernoulliTable t;
    return t;
}

Rational BernoulliTable::even_value(int k) const {
    if (k < 0) throw std::domain_error("BernoulliTable: negative index");
    std::lock_guard<std::mutex> lock(table_mutex);
    if (static_cast<int>(even_table.size()) <= k) {
        auto row = bernoulli_row(2 * k);
        even_table.clear();
        for (int i = 0; i <= k; ++i) even_table.push_back(i == 0 ? Rational(1) : row[2 * i]);
    }
    return even_table[k];
}

}  // namespace tautring

#ifndef TAUTRING_NUMBERS_HPP
#define TAUTRING_NUMBERS_HPP

#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

/* k!, k >= 0. */
Integer factorial(int k);

/*
 * k!! = k(k-2)(k-4)... down to 1 or 2.  Defined as the empty product 1 for
 * k in {-1, 0, 1}; the -1 case is what (2d+1)!! evaluates to when a psi
 * factor is absent (d = -1).
 */
Integer double_factorial(int k);

/* Binomial coefficient C(n, k) for n >= 0. */
Integer binomial(int n, int k);

/*
 * Bernoulli number B_m in the convention with B_8 = -1/30 (even index
 * only; odd-index values are convention noise and not exposed).
 * Argument must be even and positive.
 */
Rational bernoulli(int m);

/*
 * Memoized table of even-index Bernoulli numbers; entry k holds B_{2k}.
 * Extension is guarded, so concurrent lookups are race-free.
 */
class BernoulliTable {
  public:
    static const BernoulliTable& instance();
    /* B_{2k}; grows the table on demand. */
    Rational even_value(int k) const;

  private:
    BernoulliTable() = default;
};

}  // namespace tautring

#endif

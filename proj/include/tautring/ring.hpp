#ifndef TAUTRING_RING_HPP
#define TAUTRING_RING_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

/* Genus and number of marked points, with the stability bound 2g-2+n > 0. */
struct RingContext {
    int g;
    int n;
    RingContext(int g_, int n_);
    /* kappa_0 is never stored as a symbol; it is this number. */
    int kappa0() const { return 2 * g - 2 + n; }
};

/*
 * Monomial prod psi_i^{d_i} * prod kappa_k^{m_k} with positive kappa
 * indices only.  Degree is sum d_i + sum k*m_k.
 *
 * Canonical order on monomials of equal degree: kappa weight descending,
 * then kappa factors compared from the highest index down, then the psi
 * part by support size ascending and exponent vector (point 1 first).
 * Degree-2 monomials therefore come out as
 *   k2, k1^2, k1*p1, ..., k1*pn, p1^2, ..., pn^2, p1*p2, ..., p(n-1)*pn.
 */
class TautMonomial {
  public:
    TautMonomial() = default;
    static TautMonomial one() { return TautMonomial(); }
    static TautMonomial psi(int point, int exp = 1);
    static TautMonomial kappa(int index, int exp = 1);

    TautMonomial operator*(const TautMonomial& o) const;

    int degree() const;
    int kappa_weight() const;
    int psi_exponent(int point) const;
    int kappa_exponent(int index) const;
    bool is_one() const { return psi_.empty() && kappa_.empty(); }
    bool kappa_only() const { return psi_.empty(); }
    bool psi_only() const { return kappa_.empty(); }

    const std::map<int, int>& psi_part() const { return psi_; }
    const std::map<int, int>& kappa_part() const { return kappa_; }

    /* Negative, zero, positive as in the canonical order. */
    static int cmp(const TautMonomial& a, const TautMonomial& b);
    friend bool operator==(const TautMonomial& a, const TautMonomial& b) {
        return a.psi_ == b.psi_ && a.kappa_ == b.kappa_;
    }
    friend bool operator!=(const TautMonomial& a, const TautMonomial& b) { return !(a == b); }

    /* "k2*k1^2*p1*p3^2", "1" for the empty monomial. */
    std::string str() const;

  private:
    std::map<int, int> psi_;    // point -> exponent, exponents > 0
    std::map<int, int> kappa_;  // index -> multiplicity, indices >= 1
};

struct MonomialOrder {
    bool operator()(const TautMonomial& a, const TautMonomial& b) const { return TautMonomial::cmp(a, b) < 0; }
};

/*
 * Finitely supported map TautMonomial -> Rational; zero coefficients are
 * never stored.  Iteration order is the canonical monomial order.
 */
class TautExpression {
  public:
    using Terms = std::map<TautMonomial, Rational, MonomialOrder>;

    TautExpression() = default;
    TautExpression(const Rational& c);
    TautExpression(const TautMonomial& m, const Rational& c = Rational(1));

    TautExpression& operator+=(const TautExpression& o);
    TautExpression& operator-=(const TautExpression& o);
    friend TautExpression operator+(TautExpression a, const TautExpression& b) { return a += b; }
    friend TautExpression operator-(TautExpression a, const TautExpression& b) { return a -= b; }
    TautExpression operator-() const;
    TautExpression operator*(const TautExpression& o) const;
    TautExpression operator*(const Rational& c) const;
    friend bool operator==(const TautExpression& a, const TautExpression& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TautExpression& a, const TautExpression& b) { return !(a == b); }

    void add_term(const TautMonomial& m, const Rational& c);
    Rational coefficient(const TautMonomial& m) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    std::set<int> degree_set() const;
    bool homogeneous_degree(int* degree_out) const;

    /*
     * Scalar-canonical form: denominators cleared, integer content divided
     * out, sign fixed so the first coefficient in canonical order is
     * positive.  Two nonzero expressions are proportional iff their
     * normalized forms are equal.
     */
    TautExpression normalized() const;
    bool proportional_to(const TautExpression& o) const;

    /* Canonical text form, e.g. "35*k2 + 3*k1^2 - 6*k1*p1". */
    std::string str() const;

  private:
    Terms terms_;
};

/*
 * Multi-index class kappa_{e_1,...,e_l}: a multiset of nonnegative
 * indices.  Zeros are allowed; they are eliminated on expansion.
 */
struct MultiKappa {
    std::vector<int> indices;  // sorted ascending, size >= 1
    explicit MultiKappa(std::vector<int> idx);
    int weight() const;
    friend bool operator<(const MultiKappa& a, const MultiKappa& b) { return a.indices < b.indices; }
    friend bool operator==(const MultiKappa& a, const MultiKappa& b) { return a.indices == b.indices; }
    std::string str() const;
};

/*
 * Cycle-sum expansion into single-index classes:
 *   kappa_{e_1..e_l} = sum over set partitions P of {1..l} of
 *                      prod_{blocks B} (|B|-1)! * kappa_{sum_B e},
 * where a block summing to zero contributes the scalar 2g-2+n.
 */
TautExpression multi_kappa_expand(const MultiKappa& m, const RingContext& ctx);

/*
 * Inverse direction: writes a product of single-index classes (positive
 * indices) as a combination of multi-index classes with positive parts.
 * Computed by a triangular sweep against multi_kappa_expand; composing
 * the two directions is the identity.
 */
std::map<MultiKappa, Rational> single_to_multi(const TautMonomial& kappa_monomial);

/* Ring multiplication (bilinear, exponents add). */
TautExpression expr_mul(const TautExpression& a, const TautExpression& b, const RingContext& ctx);

/* All degree-d monomials in psi_1..psi_n and single-index kappas, canonical order. */
std::vector<TautMonomial> monomial_basis(const RingContext& ctx, int d);

/* Set partitions of {0..l-1}, each block sorted, blocks by smallest element. */
std::vector<std::vector<std::vector<int>>> set_partitions(int l);

}  // namespace tautring

#endif

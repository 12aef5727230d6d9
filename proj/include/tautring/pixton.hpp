#ifndef TAUTRING_PIXTON_HPP
#define TAUTRING_PIXTON_HPP

#include <map>
#include <string>
#include <vector>

#include "tautring/ring.hpp"

namespace tautring {

/* Power series in T truncated after T^order; arithmetic is exact mod T^(order+1). */
template <class Coef>
struct Series {
    int order = 0;
    std::vector<Coef> c;  // size order+1

    Series() : c(1) {}
    explicit Series(int ord) : order(ord), c(ord + 1) {}

    Series operator+(const Series& o) const {
        Series r(order);
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Series operator-(const Series& o) const {
        Series r(order);
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Series operator*(const Series& o) const {
        Series r(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }
};

using TruncSeries = Series<Rational>;

/*
 * Polynomial in the formal variables K_0, K_1, K_2, ...; keys are sorted
 * index multisets.
 */
class KPolynomial {
  public:
    using Terms = std::map<std::vector<int>, Rational>;

    KPolynomial() = default;
    static KPolynomial constant(const Rational& c);
    static KPolynomial variable(int index, const Rational& c = Rational(1));

    KPolynomial& operator+=(const KPolynomial& o);
    KPolynomial operator+(const KPolynomial& o) const;
    KPolynomial operator-(const KPolynomial& o) const;
    KPolynomial operator*(const KPolynomial& o) const;
    KPolynomial operator*(const Rational& c) const;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

  private:
    void add(const std::vector<int>& key, const Rational& c);
    Terms terms_;
};

using KSeries = Series<KPolynomial>;
using ExprSeries = Series<TautExpression>;

/* A = sum (6k)!/((2k)!(3k)!) T^k = 1 + 60T + 27720T^2 + ... */
TruncSeries series_A(int order);
/* B = sum (6k+1)/(6k-1) (6k)!/((2k)!(3k)!) T^k = -1 + 84T + 32760T^2 + ... */
TruncSeries series_B(int order);
/* C_{3i} = T^i A, C_{3i+1} = T^i B; j = 2 mod 3 is outside the family. */
TruncSeries series_C(int j, int order);

/* {S}: the coefficient of T^k becomes [S]_{T^k} K_k. */
KSeries decorate(const TruncSeries& s);
/* Formal exponential; the T^0 coefficient must vanish. */
KSeries k_exp(const KSeries& s);
/* K_{e_1}..K_{e_l} -> cycle expansion sum_{tau} prod kappa_{e_c}, kappa_0 = 2g-2+n. */
ExprSeries kappa_apply(const KSeries& p, const RingContext& ctx);

/*
 * Label (sigma, a) of one relation: sigma a partition and a_i point
 * decorations, no part or value congruent to 2 mod 3, subject to
 *   3d >= g+1+|sigma|+sum a_i  and  3d == g+1+|sigma|+sum a_i (mod 2).
 */
struct RelationParams {
    int g;
    int n;
    int d;
    std::vector<int> sigma;  // parts >= 1, sorted
    std::map<int, int> a;    // point -> value, only nonzero values kept

    RelationParams(const RingContext& ctx, int degree, std::vector<int> sigma_parts,
                   std::map<int, int> a_values);
    int decoration_sum() const;
    std::string str() const;
};

/*
 * The T^d coefficient of kappa(exp({1-A}) prod_j {C_{sigma_j}}) * prod_i C_{a_i}(psi_i T),
 * in canonical single-index form, denominators cleared, content divided
 * out and sign fixed (first canonical coefficient positive).
 */
TautExpression pixton_relation(const RelationParams& params);

/* One family of admissible labels up to relabeling of marked points. */
struct AdmissibleFamily {
    std::vector<int> sigma;     // sorted descending for display
    std::vector<int> a_values;  // nonzero decoration values, sorted descending
    std::string str() const;
};

/* All admissible (sigma, a) families for degree d, one per point-symmetry class. */
std::vector<AdmissibleFamily> enumerate_admissible(const RingContext& ctx, int d);

/* Every assignment of a family's decoration values to distinct marked points. */
std::vector<RelationParams> expand_family(const AdmissibleFamily& fam, const RingContext& ctx, int d);

/* All relations of degree d: every family, every point assignment. */
std::vector<TautExpression> all_relations(const RingContext& ctx, int d);

}  // namespace tautring

#endif

#ifndef TAUTRING_SOCLE_HPP
#define TAUTRING_SOCLE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tautring/matrix.hpp"
#include "tautring/ring.hpp"

namespace tautring {

/*
 * Coordinate label for the genus-4 pairing matrices: the empty label,
 * a marked point, or an unordered pair of marked points.
 */
struct IndexLabel {
    enum class Kind { Empty, Point, Pair };
    Kind kind = Kind::Empty;
    int i = 0;
    int j = 0;

    static IndexLabel empty() { return {}; }
    static IndexLabel point(int k);
    static IndexLabel pair(int a, int b);

    bool valid_for(int n) const;
    std::string str() const;
    friend bool operator==(const IndexLabel& a, const IndexLabel& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
};

/* Canonical label order for given n: empty, 1..n, {1,2},...,{n-1,n}. */
class LabelSet {
  public:
    explicit LabelSet(int n);
    int n() const { return n_; }
    int size() const { return static_cast<int>(labels_.size()); }
    const IndexLabel& label(int idx) const { return labels_[idx]; }
    int index_of(const IndexLabel& l) const;

  private:
    int n_;
    std::vector<IndexLabel> labels_;
};

/*
 * Coefficient c with kappa_{k_1..k_m} = c * kappa_{g-2} in the top degree
 * without marked points; requires sum k_i = g-2.
 */
Rational top_no_points(int g, const std::vector<int>& k_list);

/*
 * Coordinates of prod psi_i^{d_i} * kappa_{k_1..k_m} on the socle basis
 * psi_1^{g-1}, ..., psi_n^{g-1}.  Requires sum d_i + sum k_j = g-1,
 * g >= 2, n >= 1; missing d entries mean exponent zero.
 */
std::vector<Rational> socle_express(int g, int n, const std::map<int, int>& d,
                                    const std::vector<int>& k_list);

/* Linear extension of socle_express to any homogeneous degree-(g-1) expression. */
std::vector<Rational> socle_express_general(const TautExpression& expr, const RingContext& ctx);

/*
 * c with pi_*(kappa_{k_1..k_m} prod psi_i^{d_i+1}) = c * kappa_{g-2} under
 * the map forgetting all n points,
 *   c = (2g-3+n+m)! (2g-3)!! / ((2g-2)! prod (2d_i+1)!! prod (2k_i+1)!!).
 * d values >= -1 are allowed: d_i = -1 encodes an absent psi factor and
 * contributes (-1)!! = 1.
 */
Rational pushforward_coeff(int g, int n, const std::map<int, int>& d, const std::vector<int>& k_list);

/*
 * Integral of lambda_g lambda_{g-1} kappa_{g-2}, as the value
 * B_{2g} (g-1)! / (2^g (2g)!); for g = 4 this is -1/(2^11 3^2 5^2 7).
 */
Rational lambda_integral(int g);

/*
 * Pairing of basis monomial alpha (empty -> kappa_{1,1}, i -> psi_i^2,
 * {i,j} -> psi_i psi_j) against test class beta (empty -> prod psi;
 * p -> kappa_1 prod_{i != p} psi_i; {p,q} -> psi_p^2 prod_{i != p,q} psi_i,
 * the psi of the smaller index squared), in units of the integral of
 * lambda_4 lambda_3 kappa_2.  Genus 4.
 */
Rational m_entry(const IndexLabel& alpha, const IndexLabel& beta, int n);

/* The rescaled integer pairing table. */
Rational mhat_entry(const IndexLabel& alpha, const IndexLabel& beta, int n);

struct PairingMatrix {
    int n = 0;
    ExactMatrix entries;
};

/*
 * Builds M (from m_entry) and Mhat (from mhat_entry) and verifies that
 * Mhat = D_row (M / s(n)) D_col for the diagonal scalings
 *   row: empty /(n+7), points *(7/3), pairs 1;
 *   col: empty /3, points /(n+6), pairs 1;
 * with one global scalar s(n) fixed by matching a single entry.  A
 * proportionality failure throws (it would signal a formula bug).
 */
std::pair<PairingMatrix, PairingMatrix> build_matrices(int n);

}  // namespace tautring

#endif

#include "tautring/socle.hpp"

#include <sstream>
#include <stdexcept>

#include "tautring/numbers.hpp"

namespace tautring {

IndexLabel IndexLabel::point(int k) {
    if (k < 1) throw std::domain_error("IndexLabel: point index must be >= 1");
    IndexLabel l;
    l.kind = Kind::Point;
    l.i = k;
    return l;
}

IndexLabel IndexLabel::pair(int a, int b) {
    if (a < 1 || b < 1 || a == b) throw std::domain_error("IndexLabel: pair needs two distinct points");
    IndexLabel l;
    l.kind = Kind::Pair;
    l.i = a < b ? a : b;
    l.j = a < b ? b : a;
    return l;
}

bool IndexLabel::valid_for(int n) const {
    switch (kind) {
        case Kind::Empty: return true;
        case Kind::Point: return i >= 1 && i <= n;
        case Kind::Pair: return i >= 1 && i < j && j <= n;
    }
    return false;
}

std::string IndexLabel::str() const {
    switch (kind) {
        case Kind::Empty: return "-";
        case Kind::Point: return std::to_string(i);
        case Kind::Pair: return std::to_string(i) + "," + std::to_string(j);
    }
    return "?";
}

LabelSet::LabelSet(int n) : n_(n) {
    if (n < 1) throw std::domain_error("LabelSet: n >= 1 required");
    labels_.push_back(IndexLabel::empty());
    for (int i = 1; i <= n; ++i) labels_.push_back(IndexLabel::point(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) labels_.push_back(IndexLabel::pair(i, j));
}

int LabelSet::index_of(const IndexLabel& l) const {
    if (!l.valid_for(n_)) throw std::domain_error("LabelSet: label out of range");
    switch (l.kind) {
        case IndexLabel::Kind::Empty: return 0;
        case IndexLabel::Kind::Point: return l.i;
        case IndexLabel::Kind::Pair: {
            /* pairs in lexicographic order after the n point labels */
            int before = (l.i - 1) * n_ - (l.i - 1) * l.i / 2;
            return n_ + before + (l.j - l.i);
        }
    }
    return -1;
}

Rational top_no_points(int g, const std::vector<int>& k_list) {
    if (g < 2) throw std::domain_error("top_no_points: g >= 2 required");
    int sum = 0;
    for (int k : k_list) {
        if (k < 1) throw std::domain_error("top_no_points: kappa indices must be positive");
        sum += k;
    }
    if (sum != g - 2) throw std::domain_error("top_no_points: sum of indices must be g-2");
    const int m = static_cast<int>(k_list.size());
    Integer num = factorial(2 * g - 3 + m) * double_factorial(2 * g - 1);
    Integer den = factorial(2 * g - 1);
    for (int k : k_list) den *= double_factorial(2 * k + 1);
    return Rational(num, den);
}

std::vector<Rational> socle_express(int g, int n, const std::map<int, int>& d,
                                    const std::vector<int>& k_list) {
    if (g < 2 || n < 1) throw std::domain_error("socle_express: g >= 2 and n >= 1 required");
    int deg = 0;
    for (const auto& [point, e] : d) {
        if (point < 1 || point > n) throw std::domain_error("socle_express: point out of range");
        if (e < 0) throw std::domain_error("socle_express: negative psi exponent");
        deg += e;
    }
    int ksum = 0;
    for (int k : k_list) {
        if (k < 1) throw std::domain_error("socle_express: kappa indices must be positive");
        ksum += k;
    }
    if (deg + ksum != g - 1)
        throw std::domain_error("socle_express: total degree must equal g-1");

    const int m = static_cast<int>(k_list.size());
    Rational pref(double_factorial(2 * g - 1));
    for (const auto& [point, e] : d) {
        (void)point;
        pref /= Rational(double_factorial(2 * e + 1));
    }
    for (int k : k_list) pref /= Rational(double_factorial(2 * k + 1));
    pref *= Rational(factorial(2 * g - 3 + n + m), factorial(2 * g - 2 + n));

    std::vector<Rational> v(n);
    for (int i = 1; i <= n; ++i) {
        auto it = d.find(i);
        const int di = it == d.end() ? 0 : it->second;
        v[i - 1] = pref * Rational((2 * g - 2 + n) * di + ksum, g - 1);
    }
    return v;
}

std::vector<Rational> socle_express_general(const TautExpression& expr, const RingContext& ctx) {
    std::vector<Rational> v(ctx.n);
    if (expr.is_zero()) return v;
    int deg = 0;
    if (!expr.homogeneous_degree(&deg) || deg != ctx.g - 1)
        throw std::domain_error("socle_express_general: homogeneous degree g-1 input required");
    for (const auto& [mono, coeff] : expr.terms()) {
        const std::map<int, int>& d = mono.psi_part();
        if (mono.psi_only()) {
            auto w = socle_express(ctx.g, ctx.n, d, {});
            for (int i = 0; i < ctx.n; ++i) v[i] += coeff * w[i];
            continue;
        }
        TautMonomial kpart;
        for (const auto& [k, e] : mono.kappa_part()) kpart = kpart * TautMonomial::kappa(k, e);
        for (const auto& [mk, c] : single_to_multi(kpart)) {
            auto w = socle_express(ctx.g, ctx.n, d, mk.indices);
            for (int i = 0; i < ctx.n; ++i) v[i] += coeff * c * w[i];
        }
    }
    return v;
}

Rational pushforward_coeff(int g, int n, const std::map<int, int>& d, const std::vector<int>& k_list) {
    if (g < 2 || n < 0) throw std::domain_error("pushforward_coeff: g >= 2 and n >= 0 required");
    const int m = static_cast<int>(k_list.size());
    Integer num = factorial(2 * g - 3 + n + m) * double_factorial(2 * g - 3);
    Integer den = factorial(2 * g - 2);
    for (const auto& [point, di] : d) {
        if (point < 1 || point > n) throw std::domain_error("pushforward_coeff: point out of range");
        if (di < -1) throw std::domain_error("pushforward_coeff: psi exponent below zero");
        den *= double_factorial(2 * di + 1);
    }
    for (int k : k_list) {
        if (k < 1) throw std::domain_error("pushforward_coeff: kappa indices must be positive");
        den *= double_factorial(2 * k + 1);
    }
    return Rational(num, den);
}

Rational lambda_integral(int g) {
    if (g < 2) throw std::domain_error("lambda_integral: g >= 2 required");
    return bernoulli(2 * g) * Rational(factorial(g - 1)) / Rational(Integer::pow(Integer(2), g) * factorial(2 * g));
}

namespace {

/* psi exponents of the row monomial alpha. */
std::map<int, int> row_psi(const IndexLabel& alpha) {
    std::map<int, int> e;
    if (alpha.kind == IndexLabel::Kind::Point) e[alpha.i] = 2;
    if (alpha.kind == IndexLabel::Kind::Pair) {
        e[alpha.i] = 1;
        e[alpha.j] = 1;
    }
    return e;
}

}  // namespace

Rational m_entry(const IndexLabel& alpha, const IndexLabel& beta, int n) {
    const int g = 4;
    if (!alpha.valid_for(n) || !beta.valid_for(n)) throw std::domain_error("m_entry: label out of range");

    /* psi exponents of the product alpha * beta, kept for every point so
       that an absent factor enters pushforward_coeff as d_i = -1 */
    std::map<int, int> e;
    for (int i = 1; i <= n; ++i) e[i] = 0;
    for (const auto& [point, exp] : row_psi(alpha)) e[point] += exp;
    switch (beta.kind) {
        case IndexLabel::Kind::Empty:
            for (int i = 1; i <= n; ++i) e[i] += 1;
            break;
        case IndexLabel::Kind::Point:
            for (int i = 1; i <= n; ++i)
                if (i != beta.i) e[i] += 1;
            break;
        case IndexLabel::Kind::Pair:
            e[beta.i] += 2;  // the smaller index is squared
            for (int i = 1; i <= n; ++i)
                if (i != beta.i && i != beta.j) e[i] += 1;
            break;
    }
    std::map<int, int> d;
    for (const auto& [point, exp] : e) d[point] = exp - 1;

    if (alpha.kind == IndexLabel::Kind::Empty) {
        /* the row class is the multi-index kappa_{1,1}; products such as
           kappa_1 * kappa_{1,1} go through the single-index form and back */
        TautExpression kappa11 = multi_kappa_expand(MultiKappa({1, 1}), RingContext(g, n));
        TautExpression kexpr = kappa11;
        if (beta.kind == IndexLabel::Kind::Point) kexpr = kexpr * TautExpression(TautMonomial::kappa(1));
        Rational total(0);
        for (const auto& [mono, coeff] : kexpr.terms()) {
            for (const auto& [mk, c] : single_to_multi(mono))
                total += coeff * c * pushforward_coeff(g, n, d, mk.indices);
        }
        return total;
    }
    if (beta.kind == IndexLabel::Kind::Point) return pushforward_coeff(g, n, d, {1});
    return pushforward_coeff(g, n, d, {});
}

Rational mhat_entry(const IndexLabel& alpha, const IndexLabel& beta, int n) {
    if (!alpha.valid_for(n) || !beta.valid_for(n)) throw std::domain_error("mhat_entry: label out of range");
    using K = IndexLabel::Kind;
    if (alpha.kind == K::Empty) {
        if (beta.kind == K::Empty) return Rational(5 * (n + 6));
        if (beta.kind == K::Point) return Rational(5 * n + 34);
        return Rational(5 * (n + 6));
    }
    if (alpha.kind == K::Point) {
        const int k = alpha.i;
        if (beta.kind == K::Empty) return Rational(7);
        if (beta.kind == K::Point) return Rational(k == beta.i ? 35 : 7);
        if (k == beta.i) return Rational(3);   // shared with the squared (smaller) index
        if (k == beta.j) return Rational(35);  // shared with the larger index
        return Rational(7);
    }
    /* alpha is a pair {k,l} */
    const int k = alpha.i, l = alpha.j;
    if (beta.kind == K::Empty) return Rational(5);
    if (beta.kind == K::Point) return Rational(beta.i == k || beta.i == l ? 15 : 5);
    const int p = beta.i, q = beta.j;
    const bool has_p = (k == p || l == p), has_q = (k == q || l == q);
    if (has_p && has_q) return Rational(9);
    if (has_p) return Rational(3);
    if (has_q) return Rational(15);
    return Rational(5);
}

std::pair<PairingMatrix, PairingMatrix> build_matrices(int n) {
    if (n < 1) throw std::domain_error("build_matrices: n >= 1 required");
    LabelSet labels(n);
    const int N = labels.size();
    PairingMatrix M{n, ExactMatrix(N, N)}, Mhat{n, ExactMatrix(N, N)};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            M.entries.at(i, j) = m_entry(labels.label(i), labels.label(j), n);
            Mhat.entries.at(i, j) = mhat_entry(labels.label(i), labels.label(j), n);
        }

    /* diagonal scalings relating the two tables */
    auto row_scale = [&](const IndexLabel& l) {
        if (l.kind == IndexLabel::Kind::Empty) return Rational(1, n + 7);
        if (l.kind == IndexLabel::Kind::Point) return Rational(7, 3);
        return Rational(1);
    };
    auto col_scale = [&](const IndexLabel& l) {
        if (l.kind == IndexLabel::Kind::Empty) return Rational(1, 3);
        if (l.kind == IndexLabel::Kind::Point) return Rational(1, n + 6);
        return Rational(1);
    };

    /* global scalar from the (empty, empty) entry, then exact proportionality everywhere */
    Rational s = M.entries.at(0, 0) * row_scale(labels.label(0)) * col_scale(labels.label(0)) /
                 Mhat.entries.at(0, 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Rational lhs = M.entries.at(i, j) * row_scale(labels.label(i)) * col_scale(labels.label(j));
            if (lhs != s * Mhat.entries.at(i, j)) {
                std::ostringstream os;
                os << "build_matrices: scaling mismatch at (" << labels.label(i).str() << ";"
                   << labels.label(j).str() << ") for n=" << n;
                throw std::logic_error(os.str());
            }
        }
    return {std::move(M), std::move(Mhat)};
}

}  // namespace tautring

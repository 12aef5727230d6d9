#include "tautring/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tautring/numbers.hpp"

namespace tautring {

RingContext::RingContext(int g_, int n_) : g(g_), n(n_) {
    if (g < 1 || n < 0) throw std::domain_error("RingContext: need g >= 1 and n >= 0");
    if (2 * g - 2 + n <= 0) throw std::domain_error("RingContext: stability 2g-2+n > 0 violated");
}

TautMonomial TautMonomial::psi(int point, int exp) {
    if (point < 1) throw std::domain_error("TautMonomial::psi: point index must be >= 1");
    if (exp < 0) throw std::domain_error("TautMonomial::psi: negative exponent");
    TautMonomial m;
    if (exp > 0) m.psi_[point] = exp;
    return m;
}

TautMonomial TautMonomial::kappa(int index, int exp) {
    if (index < 1) throw std::domain_error("TautMonomial::kappa: index must be positive");
    if (exp < 0) throw std::domain_error("TautMonomial::kappa: negative exponent");
    TautMonomial m;
    if (exp > 0) m.kappa_[index] = exp;
    return m;
}

TautMonomial TautMonomial::operator*(const TautMonomial& o) const {
    TautMonomial r = *this;
    for (const auto& [p, e] : o.psi_) r.psi_[p] += e;
    for (const auto& [k, e] : o.kappa_) r.kappa_[k] += e;
    return r;
}

int TautMonomial::degree() const {
    int d = kappa_weight();
    for (const auto& [p, e] : psi_) {
        (void)p;
        d += e;
    }
    return d;
}

int TautMonomial::kappa_weight() const {
    int w = 0;
    for (const auto& [k, e] : kappa_) w += k * e;
    return w;
}

int TautMonomial::psi_exponent(int point) const {
    auto it = psi_.find(point);
    return it == psi_.end() ? 0 : it->second;
}

int TautMonomial::kappa_exponent(int index) const {
    auto it = kappa_.find(index);
    return it == kappa_.end() ? 0 : it->second;
}

int TautMonomial::cmp(const TautMonomial& a, const TautMonomial& b) {
    if (int d = a.degree() - b.degree(); d != 0) return d < 0 ? -1 : 1;
    /* kappa weight descending */
    if (int w = a.kappa_weight() - b.kappa_weight(); w != 0) return w > 0 ? -1 : 1;
    /* kappa factors from the highest index down; higher index first, then higher multiplicity */
    {
        auto ia = a.kappa_.rbegin(), ib = b.kappa_.rbegin();
        for (; ia != a.kappa_.rend() && ib != b.kappa_.rend(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first > ib->first ? -1 : 1;
            if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        }
        if (ia != a.kappa_.rend()) return -1;
        if (ib != b.kappa_.rend()) return 1;
    }
    /* psi part: fewer distinct points first, then exponent vector from point 1 */
    if (a.psi_.size() != b.psi_.size()) return a.psi_.size() < b.psi_.size() ? -1 : 1;
    {
        auto ia = a.psi_.begin(), ib = b.psi_.begin();
        for (; ia != a.psi_.end() && ib != b.psi_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
            if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        }
    }
    return 0;
}

std::string TautMonomial::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](char tag, int idx, int exp) {
        if (!first) os << "*";
        first = false;
        os << tag << idx;
        if (exp > 1) os << "^" << exp;
    };
    for (auto it = kappa_.rbegin(); it != kappa_.rend(); ++it) emit('k', it->first, it->second);
    for (const auto& [p, e] : psi_) emit('p', p, e);
    return os.str();
}

TautExpression::TautExpression(const Rational& c) {
    if (!c.is_zero()) terms_[TautMonomial::one()] = c;
}

TautExpression::TautExpression(const TautMonomial& m, const Rational& c) {
    if (!c.is_zero()) terms_[m] = c;
}

void TautExpression::add_term(const TautMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational TautExpression::coefficient(const TautMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

TautExpression& TautExpression::operator+=(const TautExpression& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TautExpression& TautExpression::operator-=(const TautExpression& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TautExpression TautExpression::operator-() const {
    TautExpression r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

TautExpression TautExpression::operator*(const TautExpression& o) const {
    TautExpression r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

TautExpression TautExpression::operator*(const Rational& c) const {
    TautExpression r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

std::set<int> TautExpression::degree_set() const {
    std::set<int> s;
    for (const auto& [m, c] : terms_) {
        (void)c;
        s.insert(m.degree());
    }
    return s;
}

bool TautExpression::homogeneous_degree(int* degree_out) const {
    auto s = degree_set();
    if (s.size() != 1) return false;
    if (degree_out) *degree_out = *s.begin();
    return true;
}

TautExpression TautExpression::normalized() const {
    if (terms_.empty()) return TautExpression();
    Integer den_lcm(1);
    for (const auto& [m, c] : terms_) {
        (void)m;
        den_lcm = Integer::lcm(den_lcm, c.denominator());
    }
    Integer content(0);
    for (const auto& [m, c] : terms_) {
        (void)m;
        content = Integer::gcd(content, (c * Rational(den_lcm)).numerator());
    }
    Rational scale = Rational(den_lcm) / Rational(content);
    if (terms_.begin()->second.sign() < 0) scale = -scale;
    return (*this) * scale;
}

bool TautExpression::proportional_to(const TautExpression& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return normalized() == o.normalized();
}

std::string TautExpression::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (m.is_one())
            os << a.str();
        else if (a.is_one())
            os << m.str();
        else
            os << a.str() << "*" << m.str();
    }
    return os.str();
}

MultiKappa::MultiKappa(std::vector<int> idx) : indices(std::move(idx)) {
    if (indices.empty()) throw std::domain_error("MultiKappa: at least one index required");
    for (int e : indices)
        if (e < 0) throw std::domain_error("MultiKappa: negative index");
    std::sort(indices.begin(), indices.end());
}

int MultiKappa::weight() const {
    int w = 0;
    for (int e : indices) w += e;
    return w;
}

std::string MultiKappa::str() const {
    std::ostringstream os;
    os << "k(";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ")";
    return os.str();
}

std::vector<std::vector<std::vector<int>>> set_partitions(int l) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int next) -> void {
        if (next == l) {
            out.push_back(blocks);
            return;
        }
        /* index-based: recursion grows and shrinks the block vector */
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            blocks[bi].push_back(next);
            self(self, next + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
    return out;
}

TautExpression multi_kappa_expand(const MultiKappa& m, const RingContext& ctx) {
    const int l = static_cast<int>(m.indices.size());
    TautExpression result;
    for (const auto& partition : set_partitions(l)) {
        Rational coeff(1);
        TautMonomial mono;
        for (const auto& block : partition) {
            coeff *= Rational(factorial(static_cast<int>(block.size()) - 1));
            int sum = 0;
            for (int pos : block) sum += m.indices[pos];
            if (sum == 0)
                coeff *= Rational(ctx.kappa0());
            else
                mono = mono * TautMonomial::kappa(sum);
        }
        result.add_term(mono, coeff);
    }
    return result;
}

namespace {

/* Expansion for positive-index multisets; context-independent. */
TautExpression expand_positive(const MultiKappa& m) {
    RingContext dummy(2, 0);  // kappa0 never consulted: all parts positive
    return multi_kappa_expand(m, dummy);
}

int factor_count(const TautMonomial& m) {
    int c = 0;
    for (const auto& [k, e] : m.kappa_part()) {
        (void)k;
        c += e;
    }
    return c;
}

MultiKappa monomial_to_multiset(const TautMonomial& m) {
    std::vector<int> idx;
    for (const auto& [k, e] : m.kappa_part())
        for (int i = 0; i < e; ++i) idx.push_back(k);
    return MultiKappa(std::move(idx));
}

}  // namespace

std::map<MultiKappa, Rational> single_to_multi(const TautMonomial& kappa_monomial) {
    if (!kappa_monomial.kappa_only() || kappa_monomial.is_one())
        throw std::domain_error("single_to_multi: nonempty pure-kappa monomial required");

    /*
     * expand(kappa_mu) = prod kappa_mu + terms with strictly fewer kappa
     * factors, so repeatedly peeling the residual's highest-factor-count
     * term is a triangular solve.
     */
    std::map<MultiKappa, Rational> result;
    TautExpression residual(kappa_monomial, Rational(1));
    while (!residual.is_zero()) {
        const TautMonomial* best = nullptr;
        int best_count = -1;
        for (const auto& [m, c] : residual.terms()) {
            (void)c;
            int fc = factor_count(m);
            if (fc > best_count) {
                best_count = fc;
                best = &m;
            }
        }
        MultiKappa mu = monomial_to_multiset(*best);
        Rational c = residual.coefficient(*best);
        result[mu] += c;
        residual -= expand_positive(mu) * c;
    }
    for (auto it = result.begin(); it != result.end();)
        it = it->second.is_zero() ? result.erase(it) : std::next(it);
    return result;
}

TautExpression expr_mul(const TautExpression& a, const TautExpression& b, const RingContext&) { return a * b; }

namespace {

void psi_monomials(const RingContext& ctx, int d, int from_point, TautMonomial acc,
                   std::vector<TautMonomial>& out) {
    if (d == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = from_point; p <= ctx.n; ++p)
        for (int e = d; e >= 1; --e) psi_monomials(ctx, d - e, p + 1, acc * TautMonomial::psi(p, e), out);
}

void kappa_monomials(int w, int max_index, TautMonomial acc, std::vector<TautMonomial>& out) {
    if (w == 0) {
        out.push_back(acc);
        return;
    }
    for (int k = std::min(w, max_index); k >= 1; --k)
        for (int e = w / k; e >= 1; --e) kappa_monomials(w - k * e, k - 1, acc * TautMonomial::kappa(k, e), out);
}

}  // namespace

std::vector<TautMonomial> monomial_basis(const RingContext& ctx, int d) {
    if (d < 0) throw std::domain_error("monomial_basis: negative degree");
    std::vector<TautMonomial> out;
    for (int w = d; w >= 0; --w) {
        std::vector<TautMonomial> kparts;
        kappa_monomials(w, w, TautMonomial::one(), kparts);
        std::sort(kparts.begin(), kparts.end(),
                  [](const TautMonomial& a, const TautMonomial& b) { return TautMonomial::cmp(a, b) < 0; });
        for (const auto& kp : kparts) {
            std::vector<TautMonomial> full;
            psi_monomials(ctx, d - w, 1, kp, full);
            std::sort(full.begin(), full.end(),
                      [](const TautMonomial& a, const TautMonomial& b) { return TautMonomial::cmp(a, b) < 0; });
            out.insert(out.end(), full.begin(), full.end());
        }
    }
    return out;
}

}  // namespace tautring

#include "tautring/pixton.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tautring/numbers.hpp"

namespace tautring {

KPolynomial KPolynomial::constant(const Rational& c) {
    KPolynomial p;
    p.add({}, c);
    return p;
}

KPolynomial KPolynomial::variable(int index, const Rational& c) {
    if (index < 0) throw std::domain_error("KPolynomial: negative K index");
    KPolynomial p;
    p.add({index}, c);
    return p;
}

void KPolynomial::add(const std::vector<int>& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

KPolynomial KPolynomial::operator+(const KPolynomial& o) const {
    KPolynomial r = *this;
    r += o;
    return r;
}

KPolynomial KPolynomial::operator-(const KPolynomial& o) const {
    KPolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
}

KPolynomial KPolynomial::operator*(const KPolynomial& o) const {
    KPolynomial r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            std::vector<int> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            std::sort(key.begin(), key.end());
            r.add(key, ca * cb);
        }
    return r;
}

KPolynomial KPolynomial::operator*(const Rational& c) const {
    KPolynomial r;
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
}

TruncSeries series_A(int order) {
    if (order < 0) throw std::domain_error("series_A: negative order");
    TruncSeries s(order);
    for (int k = 0; k <= order; ++k)
        s.c[k] = Rational(factorial(6 * k), factorial(2 * k) * factorial(3 * k));
    return s;
}

TruncSeries series_B(int order) {
    if (order < 0) throw std::domain_error("series_B: negative order");
    TruncSeries s(order);
    for (int k = 0; k <= order; ++k)
        s.c[k] = Rational(6 * k + 1, 6 * k - 1) * Rational(factorial(6 * k), factorial(2 * k) * factorial(3 * k));
    return s;
}

TruncSeries series_C(int j, int order) {
    if (j < 0 || j % 3 == 2) throw std::domain_error("series_C: index must be >= 0 and not 2 mod 3");
    const int shift = j / 3;
    TruncSeries base = (j % 3 == 0) ? series_A(order) : series_B(order);
    TruncSeries s(order);
    for (int k = shift; k <= order; ++k) s.c[k] = base.c[k - shift];
    return s;
}

KSeries decorate(const TruncSeries& s) {
    KSeries r(s.order);
    for (int k = 0; k <= s.order; ++k)
        if (!s.c[k].is_zero()) r.c[k] = KPolynomial::variable(k, s.c[k]);
    return r;
}

KSeries k_exp(const KSeries& s) {
    if (!s.c[0].is_zero()) throw std::domain_error("k_exp: nonzero constant term");
    KSeries result(s.order);
    result.c[0] = KPolynomial::constant(Rational(1));
    KSeries power(s.order);
    power.c[0] = KPolynomial::constant(Rational(1));
    Rational inv_factorial(1);
    for (int j = 1; j <= s.order; ++j) {
        power = power * s;
        inv_factorial /= Rational(j);
        for (int k = 0; k <= s.order; ++k) result.c[k] += power.c[k] * inv_factorial;
    }
    return result;
}

ExprSeries kappa_apply(const KSeries& p, const RingContext& ctx) {
    ExprSeries r(p.order);
    for (int k = 0; k <= p.order; ++k)
        for (const auto& [key, c] : p.c[k].terms()) {
            if (key.empty()) {
                r.c[k] += TautExpression(c);
                continue;
            }
            r.c[k] += multi_kappa_expand(MultiKappa(key), ctx) * c;
        }
    return r;
}

RelationParams::RelationParams(const RingContext& ctx, int degree, std::vector<int> sigma_parts,
                               std::map<int, int> a_values)
    : g(ctx.g), n(ctx.n), d(degree), sigma(std::move(sigma_parts)) {
    std::sort(sigma.begin(), sigma.end());
    for (int part : sigma) {
        if (part < 1) throw std::domain_error("RelationParams: sigma parts must be positive");
        if (part % 3 == 2) throw std::domain_error("RelationParams: sigma part congruent to 2 mod 3");
    }
    for (const auto& [point, value] : a_values) {
        if (point < 1 || point > n) throw std::domain_error("RelationParams: decorated point out of range");
        if (value < 0) throw std::domain_error("RelationParams: negative decoration");
        if (value % 3 == 2) throw std::domain_error("RelationParams: decoration congruent to 2 mod 3");
        if (value > 0) a[point] = value;
    }
    const int total = g + 1 + decoration_sum();
    if (3 * d < total || (3 * d - total) % 2 != 0)
        throw std::domain_error("RelationParams: (sigma, a) inadmissible for degree " + std::to_string(d));
}

int RelationParams::decoration_sum() const {
    int s = 0;
    for (int part : sigma) s += part;
    for (const auto& [point, value] : a) {
        (void)point;
        s += value;
    }
    return s;
}

std::string RelationParams::str() const {
    std::ostringstream os;
    os << "g=" << g << " n=" << n << " d=" << d << " sigma=(";
    for (std::size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i];
    os << ") a={";
    bool first = true;
    for (const auto& [point, value] : a) {
        os << (first ? "" : ",") << point << ":" << value;
        first = false;
    }
    os << "}";
    return os.str();
}

TautExpression pixton_relation(const RelationParams& params) {
    const RingContext ctx(params.g, params.n);
    const int d = params.d;

    /* kappa-side operand: exp({1-A}) prod_j {C_{sigma_j}} */
    TruncSeries one_minus_A(d);
    {
        TruncSeries A = series_A(d);
        for (int k = 0; k <= d; ++k) one_minus_A.c[k] = (k == 0 ? Rational(1) - A.c[0] : -A.c[k]);
    }
    KSeries kside = k_exp(decorate(one_minus_A));
    for (int part : params.sigma) kside = kside * decorate(series_C(part, d));
    ExprSeries result = kappa_apply(kside, ctx);

    /* point side: prod_i C_{a_i}(psi_i T) */
    for (int point = 1; point <= params.n; ++point) {
        auto it = params.a.find(point);
        const int a_i = it == params.a.end() ? 0 : it->second;
        TruncSeries coeffs = series_C(a_i, d);
        ExprSeries factor(d);
        for (int k = 0; k <= d; ++k)
            factor.c[k] = TautExpression(TautMonomial::psi(point, k), coeffs.c[k]);
        result = result * factor;
    }

    return result.c[d].normalized();
}

std::string AdmissibleFamily::str() const {
    std::ostringstream os;
    os << "sigma=(";
    for (std::size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i];
    os << ") a-values=(";
    for (std::size_t i = 0; i < a_values.size(); ++i) os << (i ? "," : "") << a_values[i];
    os << ")";
    return os.str();
}

namespace {

bool allowed_value(int v) { return v >= 1 && v % 3 != 2; }

/* Multisets of allowed values with the given sum; entries sorted descending. */
void value_multisets(int sum, int max_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (sum == 0) {
        out.push_back(acc);
        return;
    }
    for (int v = std::min(sum, max_part); v >= 1; --v) {
        if (!allowed_value(v)) continue;
        acc.push_back(v);
        value_multisets(sum - v, v, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<AdmissibleFamily> enumerate_admissible(const RingContext& ctx, int d) {
    std::vector<AdmissibleFamily> out;
    if (d < 0) return out;
    const int budget = 3 * d - ctx.g - 1;
    for (int total = (budget % 2 == 0 ? 0 : 1); total <= budget; total += 2) {
        for (int s_sigma = 0; s_sigma <= total; ++s_sigma) {
            const int s_a = total - s_sigma;
            std::vector<std::vector<int>> sigmas, avals;
            std::vector<int> acc;
            value_multisets(s_sigma, s_sigma, acc, sigmas);
            value_multisets(s_a, s_a, acc, avals);
            for (const auto& sg : sigmas)
                for (const auto& av : avals) {
                    if (static_cast<int>(av.size()) > ctx.n) continue;  // not enough points
                    out.push_back(AdmissibleFamily{sg, av});
                }
        }
    }
    return out;
}

std::vector<RelationParams> expand_family(const AdmissibleFamily& fam, const RingContext& ctx, int d) {
    std::vector<RelationParams> out;
    /* all injections of the value multiset into {1..n}, up to equal-value permutations */
    std::vector<std::map<int, int>> assignments;
    std::map<int, int> acc;
    auto rec = [&](auto&& self, std::size_t pos, int min_point_for_prev_equal) -> void {
        if (pos == fam.a_values.size()) {
            assignments.push_back(acc);
            return;
        }
        const int value = fam.a_values[pos];
        const bool same_as_prev = pos > 0 && fam.a_values[pos - 1] == value;
        for (int point = same_as_prev ? min_point_for_prev_equal + 1 : 1; point <= ctx.n; ++point) {
            if (acc.count(point)) continue;
            acc[point] = value;
            self(self, pos + 1, point);
            acc.erase(point);
        }
    };
    rec(rec, 0, 0);
    std::vector<int> sigma = fam.sigma;
    for (auto& a : assignments) out.emplace_back(ctx, d, sigma, a);
    return out;
}

std::vector<TautExpression> all_relations(const RingContext& ctx, int d) {
    std::vector<TautExpression> out;
    for (const auto& fam : enumerate_admissible(ctx, d))
        for (const auto& params : expand_family(fam, ctx, d)) out.push_back(pixton_relation(params));
    return out;
}

}  // namespace tautring

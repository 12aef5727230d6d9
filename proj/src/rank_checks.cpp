#include "tautring/rank_checks.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "tautring/numbers.hpp"

namespace tautring {

Rational& EVector::gamma(int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw std::domain_error("EVector: bad gamma index");
    if (i > j) std::swap(i, j);
    return gamma_[{i, j}];
}

Rational EVector::gamma(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = gamma_.find({i, j});
    return it == gamma_.end() ? Rational(0) : it->second;
}

Rational EVector::beta_sum() const {
    Rational s;
    for (const auto& b : beta_) s += b;
    return s;
}

Rational EVector::gamma_sum() const {
    Rational s;
    for (const auto& [ij, c] : gamma_) {
        (void)ij;
        s += c;
    }
    return s;
}

EVector& EVector::operator+=(const EVector& o) {
    alpha_ += o.alpha_;
    for (int i = 0; i < n_; ++i) beta_[i] += o.beta_[i];
    for (const auto& [ij, c] : o.gamma_) gamma_[ij] += c;
    return *this;
}

EVector& EVector::operator-=(const EVector& o) {
    alpha_ -= o.alpha_;
    for (int i = 0; i < n_; ++i) beta_[i] -= o.beta_[i];
    for (const auto& [ij, c] : o.gamma_) gamma_[ij] -= c;
    return *this;
}

EVector EVector::operator*(const Rational& c) const {
    EVector r(n_);
    r.alpha_ = alpha_ * c;
    for (int i = 0; i < n_; ++i) r.beta_[i] = beta_[i] * c;
    for (const auto& [ij, v] : gamma_) r.gamma_[ij] = v * c;
    return r;
}

bool EVector::is_zero() const {
    if (!alpha_.is_zero()) return false;
    for (const auto& b : beta_)
        if (!b.is_zero()) return false;
    for (const auto& [ij, c] : gamma_) {
        (void)ij;
        if (!c.is_zero()) return false;
    }
    return true;
}

bool operator==(const EVector& a, const EVector& b) {
    if (a.n_ != b.n_) return false;
    EVector d = a;
    d -= b;
    return d.is_zero();
}

std::vector<Rational> EVector::flat(const LabelSet& labels) const {
    std::vector<Rational> v(labels.size());
    v[0] = alpha_;
    for (int i = 1; i <= n_; ++i) v[labels.index_of(IndexLabel::point(i))] = beta_[i - 1];
    for (const auto& [ij, c] : gamma_) v[labels.index_of(IndexLabel::pair(ij.first, ij.second))] = c;
    return v;
}

EVector EVector::from_flat(const LabelSet& labels, const std::vector<Rational>& v) {
    EVector r(labels.n());
    for (int idx = 0; idx < labels.size(); ++idx) {
        const IndexLabel& l = labels.label(idx);
        switch (l.kind) {
            case IndexLabel::Kind::Empty: r.alpha_ = v[idx]; break;
            case IndexLabel::Kind::Point: r.beta_[l.i - 1] = v[idx]; break;
            case IndexLabel::Kind::Pair:
                if (!v[idx].is_zero()) r.gamma_[{l.i, l.j}] = v[idx];
                break;
        }
    }
    return r;
}

EVector u_vec(int n, int i) {
    if (i < 1 || i >= n) throw std::domain_error("u_vec: need 1 <= i <= n-1");
    EVector r(n);
    r.beta(i) = Rational(1);
    r.beta(i + 1) = Rational(-1);
    return r;
}

EVector v_vec(int n, int i) {
    if (i < 1 || i >= n) throw std::domain_error("v_vec: need 1 <= i <= n-1");
    EVector r(n);
    for (int k = 1; k <= n; ++k) {
        if (k == i || k == i + 1) continue;
        r.gamma(i, k) = Rational(1);
        r.gamma(i + 1, k) = Rational(-1);
    }
    return r;
}

EVector w_vec(int n, int i, int j, int k, int l) {
    if (!(1 <= i && i < j && j < k && k < l && l <= n))
        throw std::domain_error("w_vec: need 1 <= i < j < k < l <= n");
    EVector r(n);
    r.gamma(i, k) = Rational(1);
    r.gamma(j, l) = Rational(1);
    r.gamma(i, l) = Rational(-1);
    r.gamma(j, k) = Rational(-1);
    return r;
}

EVector t_vec(int n, int i, int j, int k, int l) {
    if (!(1 <= i && i < j && j < k && k < l && l <= n))
        throw std::domain_error("t_vec: need 1 <= i < j < k < l <= n");
    EVector r(n);
    r.beta(j) = Rational(2);
    r.beta(k) = Rational(-2);
    r.gamma(i, j) = Rational(-3);
    r.gamma(i, k) = Rational(3);
    r.gamma(j, l) = Rational(-5);
    r.gamma(k, l) = Rational(5);
    return r;
}

EVector z_vec(int n) {
    if (n < 10 || n % 8 != 2) throw std::domain_error("z_vec: need n = 8m+2 with m >= 1");
    const int m = (n - 2) / 8;
    EVector r(n);
    r.gamma(3 * m + 1, n) = Rational(1);
    r.gamma(3 * m + 2, n) = Rational(-1);
    return r;
}

EVector a_vec(int n) {
    EVector r(n);
    r.alpha() = Rational(1);
    return r;
}

EVector b_vec(int n) {
    EVector r(n);
    r.beta(1) = Rational(1);
    return r;
}

EVector c_vec(int n) {
    if (n < 2) throw std::domain_error("c_vec: n >= 2 required");
    EVector r(n);
    r.gamma(1, 2) = Rational(1);
    return r;
}

EVector vtilde_vec(int n, int i) {
    if (i < 1 || i > n - 2) throw std::domain_error("vtilde_vec: need 1 <= i <= n-2");
    EVector r = v_vec(n, i);
    /* the t-corrections cancel every gamma coordinate whose first index is below i */
    for (int p = 1; p < i; ++p) r += t_vec(n, p, i, i + 1, n) * Rational(1, 3);
    return r;
}

namespace {

ExactMatrix mhat_matrix(int n) {
    LabelSet labels(n);
    const int N = labels.size();
    ExactMatrix m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m.at(i, j) = mhat_entry(labels.label(i), labels.label(j), n);
    return m;
}

EVector apply_mhat(const ExactMatrix& m, const LabelSet& labels, const EVector& v) {
    return EVector::from_flat(labels, m.apply(v.flat(labels)));
}

std::string diff_coordinate(const LabelSet& labels, const EVector& got, const EVector& want) {
    auto g = got.flat(labels), w = want.flat(labels);
    for (int idx = 0; idx < labels.size(); ++idx)
        if (g[idx] != w[idx])
            return "coordinate " + labels.label(idx).str() + ": got " + g[idx].str() + ", want " +
                   w[idx].str();
    return "";
}

}  // namespace

CheckResult stable_plane_check(int n, int i) {
    CheckResult res{"stable_plane", "n=" + std::to_string(n) + " i=" + std::to_string(i), false, ""};
    if (n < 2 || i < 1 || i >= n) {
        res.details = "parameters out of range";
        return res;
    }
    LabelSet labels(n);
    ExactMatrix M = mhat_matrix(n);
    EVector u = u_vec(n, i), v = v_vec(n, i);

    EVector mu = apply_mhat(M, labels, u);
    EVector want_u = u * Rational(28) + v * Rational(10);
    if (!(mu == want_u)) {
        res.details = "Mhat u_i mismatch: " + diff_coordinate(labels, mu, want_u);
        return res;
    }
    EVector mv = apply_mhat(M, labels, v);
    EVector want_v = u * Rational(32 * i - 24 - 4 * n) + v * Rational(12 * i - 12 - 2 * n);
    if (!(mv == want_v)) {
        res.details = "Mhat v_i mismatch: " + diff_coordinate(labels, mv, want_v);
        return res;
    }
    /* block determinant -16(n-i+6); degenerate for n = 2 where v_1 = 0 */
    if (!v.is_zero()) {
        Rational block_det = Rational(28) * Rational(12 * i - 12 - 2 * n) -
                             Rational(10) * Rational(32 * i - 24 - 4 * n);
        if (block_det != Rational(-16 * (n - i + 6))) {
            res.details = "block determinant mismatch: " + block_det.str();
            return res;
        }
    }
    res.ok = true;
    res.details = "plane identities and block determinant verified";
    return res;
}

CheckResult eigenvector_check(int n, int i, int j, int k, int l) {
    std::ostringstream ps;
    ps << "n=" << n << " (i,j,k,l)=(" << i << "," << j << "," << k << "," << l << ")";
    CheckResult res{"eigenvector", ps.str(), false, ""};
    LabelSet labels(n);
    ExactMatrix M = mhat_matrix(n);
    for (const auto& [name, vec] : {std::pair<const char*, EVector>{"w", w_vec(n, i, j, k, l)},
                                    std::pair<const char*, EVector>{"t", t_vec(n, i, j, k, l)}}) {
        EVector got = apply_mhat(M, labels, vec);
        EVector want = vec * Rational(-4);
        if (!(got == want)) {
            res.details = std::string(name) + ": " + diff_coordinate(labels, got, want);
            return res;
        }
    }
    res.ok = true;
    res.details = "both eigenvector identities hold at eigenvalue -4";
    return res;
}

ExceptionalResult exceptional_analysis(int n) {
    if (n < 10 || n % 8 != 2) throw std::domain_error("exceptional_analysis: need n = 8m+2, m >= 1");
    const int m = (n - 2) / 8;
    const int i = 3 * m + 1;
    ExceptionalResult res;
    res.delta_reported = Rational(m, 5 * m + 7);

    LabelSet labels(n);
    ExactMatrix M = mhat_matrix(n);
    EVector u = u_vec(n, i), v = v_vec(n, i), z = z_vec(n);

    EVector bigU = u * Rational(2 * m) - v;
    EVector mU = apply_mhat(M, labels, bigU);
    if (!(mU == bigU * Rational(-4))) {
        res.details = "U = 2m u - v is not an eigenvector at -4";
        return res;
    }

    auto plus4 = [&](const EVector& x) {
        EVector y = apply_mhat(M, labels, x);
        y += x * Rational(4);
        return y;
    };

    /* (Mhat+4) z should land in the (u, v) plane as -4u - 2v */
    EVector mz4 = plus4(z);
    if (!(mz4 == u * Rational(-4) - v * Rational(2))) {
        res.details = "(Mhat+4) z is not -4u - 2v";
        return res;
    }

    /* unique delta with (Mhat+4)^2 (z + delta u) = 0 */
    EVector c0 = plus4(mz4);          // (Mhat+4)^2 z
    EVector c1 = plus4(plus4(u));     // (Mhat+4)^2 u
    auto f0 = c0.flat(labels), f1 = c1.flat(labels);
    std::optional<Rational> delta;
    for (std::size_t idx = 0; idx < f1.size(); ++idx)
        if (!f1[idx].is_zero()) {
            delta = -f0[idx] / f1[idx];
            break;
        }
    if (!delta) {
        res.details = "(Mhat+4)^2 u vanishes; no unique delta";
        return res;
    }
    for (std::size_t idx = 0; idx < f1.size(); ++idx)
        if (f0[idx] + *delta * f1[idx] != Rational(0)) {
            res.details = "no delta satisfies (Mhat+4)^2 (z + delta u) = 0";
            return res;
        }
    res.delta = *delta;

    EVector zeta = z + u * (*delta);
    EVector y = plus4(zeta);
    if (y.is_zero()) {
        res.details = "(Mhat+4)(z + delta u) vanishes; Jordan block collapsed";
        return res;
    }
    /* y must be proportional to U */
    auto fy = y.flat(labels), fU = bigU.flat(labels);
    Rational ratio;
    bool have_ratio = false;
    for (std::size_t idx = 0; idx < fy.size(); ++idx) {
        if (fU[idx].is_zero()) {
            if (!fy[idx].is_zero()) {
                res.details = "(Mhat+4)(z + delta u) is not proportional to U";
                return res;
            }
            continue;
        }
        Rational r = fy[idx] / fU[idx];
        if (!have_ratio) {
            ratio = r;
            have_ratio = true;
        } else if (r != ratio) {
            res.details = "(Mhat+4)(z + delta u) is not proportional to U";
            return res;
        }
    }
    res.ok = true;
    res.details = "delta = " + res.delta.str() + " (reported value " + res.delta_reported.str() +
                  "); (Mhat+4)(z+delta u) = " + ratio.str() + " * U";
    return res;
}

namespace {

std::vector<EVector> span_generators(int n, bool include_z) {
    std::vector<EVector> gens;
    for (int i = 1; i <= n - 1; ++i) gens.push_back(u_vec(n, i));
    for (int i = 1; i <= n - 1; ++i) gens.push_back(v_vec(n, i));
    for (int i = 1; i <= n - 2; ++i) gens.push_back(vtilde_vec(n, i));
    for (int i = 1; i + 3 <= n; ++i) gens.push_back(t_vec(n, i, i + 1, i + 2, i + 3));
    for (int i = 1; i <= n; ++i)
        for (int k = i + 2; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) gens.push_back(w_vec(n, i, i + 1, k, l));
    if (include_z && n >= 10 && n % 8 == 2) gens.push_back(z_vec(n));
    return gens;
}

}  // namespace

int span_rank(int n, bool include_z) {
    if (n < 2) throw std::domain_error("span_rank: n >= 2 required");
    LabelSet labels(n);
    auto gens = span_generators(n, include_z);
    ExactMatrix m(static_cast<int>(gens.size()), labels.size());
    for (std::size_t r = 0; r < gens.size(); ++r) {
        auto f = gens[r].flat(labels);
        for (int c = 0; c < labels.size(); ++c) m.at(static_cast<int>(r), c) = f[c];
    }
    return rank(m);
}

EVector generator_by_key(const std::string& key, int n) {
    auto nums = [&](std::size_t from) {
        std::vector<int> v;
        std::size_t pos = from;
        while (pos < key.size()) {
            std::size_t next = key.find(',', pos);
            if (next == std::string::npos) next = key.size();
            v.push_back(std::stoi(key.substr(pos, next - pos)));
            pos = next + 1;
        }
        return v;
    };
    if (key == "z") return z_vec(n);
    if (key.rfind("u:", 0) == 0) return u_vec(n, nums(2)[0]);
    if (key.rfind("vt:", 0) == 0) return vtilde_vec(n, nums(3)[0]);
    if (key.rfind("v:", 0) == 0) return v_vec(n, nums(2)[0]);
    if (key.rfind("w:", 0) == 0) {
        auto a = nums(2);
        return w_vec(n, a[0], a[1], a[2], a[3]);
    }
    if (key.rfind("t:", 0) == 0) {
        auto a = nums(2);
        return t_vec(n, a[0], a[1], a[2], a[3]);
    }
    throw std::domain_error("generator_by_key: unknown key " + key);
}

Decomposition decompose_in_span(const EVector& s, int n) {
    Decomposition out;
    if (s.n() != n) throw std::domain_error("decompose_in_span: dimension mismatch");
    if (!s.alpha().is_zero() || !s.beta_sum().is_zero() || !s.gamma_sum().is_zero()) {
        out.details = "outside the subspace: alpha, sum beta, sum gamma must vanish";
        return out;
    }

    EVector r = s;
    std::map<std::string, Rational> coeff;
    /* c by value: callers pass coordinates of r itself, which the update zeroes */
    auto subtract = [&](const std::string& key, const EVector& gen, Rational c) {
        if (c.is_zero()) return;
        r -= gen * c;
        coeff[key] += c;
    };

    if (n >= 3) {
        /* preparation: zero the column-n sum with v_{n-1}, never touched again */
        Rational colsum;
        for (int i = 1; i < n; ++i) colsum += r.gamma(i, n);
        subtract("v:" + std::to_string(n - 1), v_vec(n, n - 1), -colsum / Rational(n - 2));

        for (int i = 1; i <= n - 3; ++i) {
            subtract("t:" + std::to_string(i) + "," + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                         "," + std::to_string(i + 3),
                     t_vec(n, i, i + 1, i + 2, i + 3), -r.gamma(i, i + 1) / Rational(3));
            Rational rowsum;
            for (int j = i + 1; j <= n; ++j) rowsum += r.gamma(i, j);
            Rational vt_weight(3 * n + 2 - 8 * i, 3);
            if (vt_weight.is_zero())
                subtract("z", z_vec(n), rowsum);  // n = 8m+2 and i = 3m+1
            else
                subtract("vt:" + std::to_string(i), vtilde_vec(n, i), rowsum / vt_weight);
            for (int j = i + 2; j <= n - 1; ++j)
                subtract("w:" + std::to_string(i) + "," + std::to_string(i + 1) + "," + std::to_string(j) +
                             "," + std::to_string(n),
                         w_vec(n, i, i + 1, j, n), r.gamma(i, j));
            for (int j = i + 1; j <= n; ++j)
                if (!r.gamma(i, j).is_zero()) throw std::logic_error("decompose_in_span: row sweep left residue");
        }

        /* rows n-2, n-1: the column-n pair is balanced, vtilde_{n-2} clears it */
        subtract("vt:" + std::to_string(n - 2), vtilde_vec(n, n - 2),
                 r.gamma(n - 2, n) / Rational(18 - 5 * n, 3));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!r.gamma(i, j).is_zero()) throw std::logic_error("decompose_in_span: gamma not cleared");

    for (int i = 1; i <= n - 1; ++i) subtract("u:" + std::to_string(i), u_vec(n, i), r.beta(i));
    if (!r.is_zero()) throw std::logic_error("decompose_in_span: nonzero residual");

    out.feasible = true;
    for (const auto& [key, c] : coeff)
        if (!c.is_zero()) out.coefficients.emplace_back(key, c);
    out.details = "decomposed over " + std::to_string(out.coefficients.size()) + " generators";
    return out;
}

namespace {

struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    int small() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((state >> 33) % 19) - 9;
    }
};

EVector random_subspace_vector(int n, Lcg& rng) {
    EVector v(n);
    for (int i = 1; i <= n; ++i) v.beta(i) = Rational(rng.small());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) v.gamma(i, j) = Rational(rng.small());
    Rational beta_avg = v.beta_sum() / Rational(n);
    for (int i = 1; i <= n; ++i) v.beta(i) -= beta_avg;
    Rational gamma_avg = v.gamma_sum() / Rational(n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) v.gamma(i, j) -= gamma_avg;
    return v;
}

}  // namespace

CheckResult decompose_random_check(int n, int count) {
    CheckResult res{"decompose", "n=" + std::to_string(n), false, ""};
    Lcg rng(0x5eedull + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < count; ++trial) {
        EVector s = random_subspace_vector(n, rng);
        Decomposition dec = decompose_in_span(s, n);
        if (!dec.feasible) {
            res.details = "in-subspace vector rejected on trial " + std::to_string(trial);
            return res;
        }
        EVector resum(n);
        for (const auto& [key, c] : dec.coefficients) resum += generator_by_key(key, n) * c;
        if (!(resum == s)) {
            res.details = "re-summation residual nonzero on trial " + std::to_string(trial);
            return res;
        }
    }
    EVector bad(n);
    bad.alpha() = Rational(1);
    if (decompose_in_span(bad, n).feasible) {
        res.details = "vector with alpha != 0 was not rejected";
        return res;
    }
    res.ok = true;
    res.details = std::to_string(count) + " random in-subspace vectors decomposed with zero residual";
    return res;
}

ExactMatrix complement_block(int n) {
    if (n < 2) throw std::domain_error("complement_block: n >= 2 required");
    LabelSet labels(n);
    ExactMatrix M = mhat_matrix(n);
    ExactMatrix block(3, 3);
    const EVector cols[3] = {a_vec(n), b_vec(n), c_vec(n)};
    for (int c = 0; c < 3; ++c) {
        EVector img = apply_mhat(M, labels, cols[c]);
        block.at(0, c) = img.alpha();
        block.at(1, c) = img.beta_sum();
        block.at(2, c) = img.gamma_sum();
    }
    return block;
}

CheckResult complement_block_check(int n) {
    CheckResult res{"complement_block", "n=" + std::to_string(n), false, ""};
    ExactMatrix got = complement_block(n);
    ExactMatrix want(3, 3);
    want.at(0, 0) = Rational(5 * (n + 6));
    want.at(0, 1) = Rational(5 * n + 34);
    want.at(0, 2) = Rational(5 * (n + 6));
    want.at(1, 0) = Rational(7 * n);
    want.at(1, 1) = Rational(7 * n + 28);
    want.at(1, 2) = Rational(7 * n + 24);
    want.at(2, 0) = Rational(5 * n * (n - 1), 2);
    want.at(2, 1) = Rational(5 * (n - 1) * (n + 4), 2);
    want.at(2, 2) = Rational(5 * n * n, 2) + Rational(11 * n, 2) - Rational(12);
    if (!(got == want)) {
        res.details = "3x3 block entries differ from the closed forms";
        return res;
    }
    Rational d = det(got);
    if (d != Rational(-32 * (n + 6) * (2 * n + 15))) {
        res.details = "block determinant " + d.str() + " != -32(n+6)(2n+15)";
        return res;
    }
    res.ok = true;
    res.details = "block matches and det = " + d.str();
    return res;
}

Rational det_closed_form(int n) {
    if (n < 1) throw std::domain_error("det_closed_form: n >= 1 required");
    Integer v = Integer::pow(Integer(2), static_cast<unsigned long>(n) * n + n + 1) * Integer(2 * n + 15);
    v *= Integer::div_exact(factorial(n + 6), factorial(6));
    Rational r(v);
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

CheckResult verify_det(int n) {
    CheckResult res{"det", "n=" + std::to_string(n), false, ""};
    Rational got = det(mhat_matrix(n));
    Rational want = det_closed_form(n);
    res.ok = got == want;
    res.details = res.ok ? "det(Mhat) = " + got.str()
                         : "det(Mhat) = " + got.str() + " but closed form gives " + want.str();
    return res;
}

namespace {

/*
 * Coordinates of a degree-2 genus-4 expression on the presentation basis
 * kappa_2, kappa_{1,1}, kappa_1 psi_1.., psi_1^2.., psi_1 psi_2..:
 * kappa_1^2 = kappa_{1,1} - kappa_2 in canonical form.
 */
std::vector<Rational> degree2_presentation(const TautExpression& e, int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Rational> v(2 + 2 * n + pairs);
    LabelSet labels(n);
    const TautMonomial k2 = TautMonomial::kappa(2);
    const TautMonomial k11 = TautMonomial::kappa(1, 2);
    for (const auto& [mono, c] : e.terms()) {
        if (mono == k2)
            v[0] += c;
        else if (mono == k11) {
            v[1] += c;
            v[0] -= c;
        } else if (mono.kappa_exponent(1) == 1) {
            int point = mono.psi_part().begin()->first;
            v[2 + (point - 1)] += c;
        } else if (mono.psi_part().size() == 1) {
            int point = mono.psi_part().begin()->first;
            v[2 + n + (point - 1)] += c;
        } else {
            int i = mono.psi_part().begin()->first;
            int j = std::next(mono.psi_part().begin())->first;
            v[2 + 2 * n + labels.index_of(IndexLabel::pair(i, j)) - 1 - n] += c;
        }
    }
    return v;
}

}  // namespace

UpperBoundSolution upper_bound_solve(int n) {
    if (n < 1) throw std::domain_error("upper_bound_solve: n >= 1 required");
    UpperBoundSolution out;
    const RingContext ctx(4, n);
    std::vector<TautExpression> rels;
    rels.push_back(pixton_relation(RelationParams(ctx, 2, {1}, {})));
    for (int k = 1; k <= n; ++k)
        rels.push_back(pixton_relation(RelationParams(ctx, 2, {}, {{k, 1}})));

    const int pairs = n * (n - 1) / 2;
    const int rest_count = 1 + n + pairs;  // kappa_{1,1}, psi_i^2, psi_i psi_j
    ExactMatrix S(n + 1, n + 1), R(n + 1, rest_count);
    for (int r = 0; r <= n; ++r) {
        auto coords = degree2_presentation(rels[r], n);
        S.at(r, 0) = coords[0];                                       // kappa_2
        for (int k = 1; k <= n; ++k) S.at(r, k) = coords[2 + k - 1];  // kappa_1 psi_k
        R.at(r, 0) = coords[1];
        for (int i = 0; i < n; ++i) R.at(r, 1 + i) = coords[2 + n + i];
        for (int p = 0; p < pairs; ++p) R.at(r, 1 + n + p) = coords[2 + 2 * n + p];
    }
    out.system = S;
    out.system_det = det(S);
    out.nonsingular = !out.system_det.is_zero();
    if (!out.nonsingular) return out;

    /* S * unknowns = -R * rest  =>  unknowns = -(S^-1 R) rest */
    auto X = solve_square(S, R);
    ExactMatrix E = *X;

    LabelSet labels(n);
    TautExpression kappa11 = multi_kappa_expand(MultiKappa({1, 1}), ctx);
    auto rest_expr = [&](int idx) {
        if (idx == 0) return kappa11;
        if (idx <= n) return TautExpression(TautMonomial::psi(idx, 2));
        /* rest index n+1+p is the p-th pair, which sits at label index n+1+p as well */
        const IndexLabel& l = labels.label(idx);
        return TautExpression(TautMonomial::psi(l.i) * TautMonomial::psi(l.j));
    };
    for (int u = 0; u <= n; ++u) {
        TautExpression e;
        for (int rdx = 0; rdx < rest_count; ++rdx) e += rest_expr(rdx) * (-E.at(u, rdx));
        out.expressions.push_back(e);
    }
    return out;
}

std::pair<int, bool> genus3_completeness(int n) {
    if (n < 1) throw std::domain_error("genus3_completeness: n >= 1 required");
    const RingContext ctx(3, n);
    auto rels = all_relations(ctx, 2);
    auto basis = monomial_basis(ctx, 2);
    ExactMatrix m(static_cast<int>(rels.size()), static_cast<int>(basis.size()));
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = rels[r].coefficient(basis[c]);
    int got = rank(m);
    return {got, got == static_cast<int>(basis.size()) - n};
}

namespace {

TautMonomial k2m() { return TautMonomial::kappa(2); }
TautMonomial k11m() { return TautMonomial::kappa(1, 2); }  // canonical form of kappa_{1,1} is k1^2 + k2
TautMonomial k1p(int i) { return TautMonomial::kappa(1) * TautMonomial::psi(i); }
TautMonomial p2(int i) { return TautMonomial::psi(i, 2); }
TautMonomial pp(int i, int j) { return TautMonomial::psi(i) * TautMonomial::psi(j); }

/* adds c*(kappa_{1,1}) = c*(k1^2 + k2) */
void add_k11(TautExpression& e, const Rational& c) {
    e.add_term(k11m(), c);
    e.add_term(k2m(), c);
}

}  // namespace

TautExpression g3_rel_1(int n) {
    TautExpression e;
    for (int i = 1; i <= n; ++i) e.add_term(p2(i), Rational(35));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.add_term(pp(i, j), Rational(6));
    for (int i = 1; i <= n; ++i) e.add_term(k1p(i), Rational(-6));
    e.add_term(k2m(), Rational(-35));
    add_k11(e, Rational(3));
    return e;
}

TautExpression g3_rel_2(int n, int k) {
    TautExpression e;
    for (int i = 1; i <= n; ++i)
        if (i != k) e.add_term(p2(i), Rational(35));
    e.add_term(p2(k), Rational(-45));
    for (int i = 1; i <= n; ++i)
        if (i != k) e.add_term(pp(i, k), Rational(-10));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (i != k && j != k) e.add_term(pp(i, j), Rational(6));
    e.add_term(k1p(k), Rational(10));
    for (int i = 1; i <= n; ++i)
        if (i != k) e.add_term(k1p(i), Rational(-6));
    e.add_term(k2m(), Rational(-35));
    add_k11(e, Rational(3));
    return e;
}

TautExpression g3_rel_3(int n) {
    TautExpression e;
    const int k0 = n + 4;
    for (int i = 1; i <= n; ++i) e.add_term(p2(i), Rational(35 * k0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.add_term(pp(i, j), Rational(6 * k0));
    for (int i = 1; i <= n; ++i) e.add_term(k1p(i), Rational(-(6 * n + 40)));
    e.add_term(k2m(), Rational(-(35 * n + 220)));
    add_k11(e, Rational(3 * n + 28));
    return e;
}

TautExpression g3_rel_4(int n, int k) {
    TautExpression e;
    const int k0 = n + 4;
    for (int i = 1; i <= n; ++i)
        if (i != k) e.add_term(p2(i), Rational(35 * k0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (i != k && j != k) e.add_term(pp(i, j), Rational(6 * k0));
    for (int i = 1; i <= n; ++i)
        if (i != k) e.add_term(k1p(i), Rational(-6 * (n + 5)));
    e.add_term(k2m(), Rational(-35 * (n + 5)));
    add_k11(e, Rational(3 * (n + 6)));
    return e;
}

TautExpression g3_rel_5(int n, int k, int l) {
    TautExpression e;
    for (int i = 1; i <= n; ++i)
        if (i != k && i != l) e.add_term(p2(i), Rational(35));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (i != k && i != l && j != k && j != l) e.add_term(pp(i, j), Rational(6));
    for (int i = 1; i <= n; ++i)
        if (i != k && i != l) e.add_term(k1p(i), Rational(-6));
    e.add_term(k2m(), Rational(-35));
    add_k11(e, Rational(3));
    return e;
}

std::vector<TautExpression> genus3_reference_relations(int n) {
    std::vector<TautExpression> rels;
    rels.push_back(g3_rel_1(n));
    for (int k = 1; k <= n; ++k) rels.push_back(g3_rel_2(n, k));
    rels.push_back(g3_rel_3(n));
    for (int k = 1; k <= n; ++k) rels.push_back(g3_rel_4(n, k));
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) rels.push_back(g3_rel_5(n, k, l));
    return rels;
}

TautExpression socle_relation(const TautExpression& e, const RingContext& ctx) {
    TautExpression r = e;
    auto img = socle_express_general(e, ctx);
    for (int i = 1; i <= ctx.n; ++i)
        r.add_term(TautMonomial::psi(i, ctx.g - 1), -img[i - 1]);
    return r;
}

BszResult bsz_in_pixton(int n) {
    if (n < 2) throw std::domain_error("bsz_in_pixton: n >= 2 required");
    BszResult out;
    const RingContext ctx(3, n);

    auto r1 = g3_rel_1(n);
    auto r3 = g3_rel_3(n);
    std::vector<TautExpression> r2(n + 1), r5;
    for (int k = 1; k <= n; ++k) r2[k] = g3_rel_2(n, k);
    auto rel5 = [&](int k, int l) { return g3_rel_5(n, std::min(k, l), std::max(k, l)); };

    std::ostringstream details;
    bool displays_ok = true;

    /* (a)_{k,l} = (1) + 3/2 (2)_k + 3/2 (2)_l - 4 (5)_{k,l} */
    for (int k = 1; k <= n && displays_ok; ++k)
        for (int l = k + 1; l <= n && displays_ok; ++l) {
            TautExpression combo = r1 + r2[k] * Rational(3, 2) + r2[l] * Rational(3, 2) +
                                   rel5(k, l) * Rational(-4);
            TautExpression target = socle_relation(TautExpression(pp(k, l)), ctx);
            if (!combo.proportional_to(target)) {
                displays_ok = false;
                details << "display (a) fails at (" << k << "," << l << "); ";
            }
        }

    /* (b)_l = -(2n+1)/3 (1) - (n-2)(2)_l - sum_{i != l} (2)_i + 8/3 sum_{i != l} (5)_{l,i} */
    for (int l = 1; l <= n && displays_ok; ++l) {
        TautExpression combo = r1 * Rational(-(2 * n + 1), 3) + r2[l] * Rational(-(n - 2));
        for (int i = 1; i <= n; ++i)
            if (i != l) combo += r2[i] * Rational(-1) + rel5(l, i) * Rational(8, 3);
        TautExpression target = socle_relation(TautExpression(k1p(l)), ctx);
        if (!combo.proportional_to(target)) {
            displays_ok = false;
            details << "display (b) fails at l=" << l << "; ";
        }
    }

    /* (c) = 7/4 (1) - 3/16 (3) + 3/16 sum (2)_i */
    {
        TautExpression combo = r1 * Rational(7, 4) + r3 * Rational(-3, 16);
        for (int i = 1; i <= n; ++i) combo += r2[i] * Rational(3, 16);
        TautExpression target = socle_relation(TautExpression(k2m()), ctx);
        if (!combo.proportional_to(target)) {
            displays_ok = false;
            details << "display (c) fails; ";
        }
    }

    /* (d) = -(2n^2+4n+33)/3 (1) - (8n-9)/4 sum (2)_i + 7/4 (3) + 16/3 sum_{i<j} (5)_{i,j} */
    {
        TautExpression combo = r1 * Rational(-(2 * n * n + 4 * n + 33), 3) + r3 * Rational(7, 4);
        for (int i = 1; i <= n; ++i) combo += r2[i] * Rational(-(8 * n - 9), 4);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) combo += rel5(i, j) * Rational(16, 3);
        TautExpression k11_class;
        add_k11(k11_class, Rational(1));
        TautExpression target = socle_relation(k11_class, ctx);
        if (!combo.proportional_to(target)) {
            displays_ok = false;
            details << "display (d) fails; ";
        }
    }
    out.displays_ok = displays_ok;

    /* generic exact solve: every socle relation lies in the span of the five families */
    auto fams = genus3_reference_relations(n);
    auto basis = monomial_basis(ctx, 2);
    ExactMatrix A(static_cast<int>(basis.size()), static_cast<int>(fams.size()));
    for (std::size_t c = 0; c < fams.size(); ++c)
        for (std::size_t r = 0; r < basis.size(); ++r)
            A.at(static_cast<int>(r), static_cast<int>(c)) = fams[c].coefficient(basis[r]);

    std::vector<TautExpression> targets;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) targets.push_back(socle_relation(TautExpression(pp(k, l)), ctx));
    for (int l = 1; l <= n; ++l) targets.push_back(socle_relation(TautExpression(k1p(l)), ctx));
    targets.push_back(socle_relation(TautExpression(k2m()), ctx));
    {
        TautExpression k11_class;
        add_k11(k11_class, Rational(1));
        targets.push_back(socle_relation(k11_class, ctx));
    }
    out.all_representable = true;
    for (const auto& t : targets) {
        std::vector<Rational> rhs(basis.size());
        for (std::size_t r = 0; r < basis.size(); ++r) rhs[r] = t.coefficient(basis[r]);
        if (!solve(A, rhs)) {
            out.all_representable = false;
            details << "socle relation with no representation found; ";
            break;
        }
    }
    out.details = details.str().empty() ? "all displayed combinations and solves verified" : details.str();
    return out;
}

std::vector<int> rank_table(int g, int n) {
    if (g < 1 || g > 4) throw std::domain_error("rank_table: 1 <= g <= 4 required");
    RingContext ctx(g, n);
    std::vector<int> ranks;
    ranks.push_back(1);  // degree 0
    if (g == 1) return ranks;
    if (g >= 3) ranks.push_back(n + 1);  // degree 1, no relations
    if (g == 3) {
        auto [relrank, ok] = genus3_completeness(n);
        if (!ok) throw std::logic_error("rank_table: genus-3 completeness certification failed");
        auto basis = monomial_basis(ctx, 2);
        ranks.push_back(static_cast<int>(basis.size()) - relrank);
        return ranks;
    }
    if (g == 4) {
        auto ub = upper_bound_solve(n);
        auto dv = verify_det(n);
        if (!ub.nonsingular || !dv.ok)
            throw std::logic_error("rank_table: genus-4 degree-2 certification failed");
        ranks.push_back(n * (n + 1) / 2 + 1);

        /* degree 3 is the socle: the expression map has rank n on the monomial basis */
        auto basis = monomial_basis(ctx, 3);
        ExactMatrix m(static_cast<int>(basis.size()), n);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            auto img = socle_express_general(TautExpression(basis[r]), ctx);
            for (int c = 0; c < n; ++c) m.at(static_cast<int>(r), c) = img[c];
        }
        if (rank(m) != n) throw std::logic_error("rank_table: genus-4 socle rank certification failed");
        ranks.push_back(n);
        return ranks;
    }
    /* g == 2: socle in degree 1, certified by the rank of the expression map */
    auto basis = monomial_basis(ctx, 1);
    ExactMatrix m(static_cast<int>(basis.size()), n);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        auto img = socle_express_general(TautExpression(basis[r]), ctx);
        for (int c = 0; c < n; ++c) m.at(static_cast<int>(r), c) = img[c];
    }
    if (rank(m) != n) throw std::logic_error("rank_table: genus-2 socle rank certification failed");
    ranks.push_back(n);
    return ranks;
}

}  // namespace tautring

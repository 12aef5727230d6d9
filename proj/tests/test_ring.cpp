#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "tautring/ring.hpp"

using namespace tautring;

namespace {

TautMonomial k(int idx, int e = 1) { return TautMonomial::kappa(idx, e); }
TautMonomial p(int idx, int e = 1) { return TautMonomial::psi(idx, e); }

TautExpression mono(const TautMonomial& m, long c = 1) { return TautExpression(m, Rational(c)); }

}  // namespace

TEST_CASE("ring context validates stability") {
    CHECK(RingContext(3, 0).kappa0() == 4);
    CHECK(RingContext(1, 1).kappa0() == 1);
    CHECK_THROWS_AS(RingContext(1, 0), std::domain_error);
}

TEST_CASE("canonical monomial order matches the degree-2 listing") {
    RingContext ctx(3, 2);
    auto basis = monomial_basis(ctx, 2);
    REQUIRE(basis.size() == 7);
    CHECK(basis[0] == k(2));
    CHECK(basis[1] == k(1, 2));
    CHECK(basis[2] == k(1) * p(1));
    CHECK(basis[3] == k(1) * p(2));
    CHECK(basis[4] == p(1, 2));
    CHECK(basis[5] == p(2, 2));
    CHECK(basis[6] == p(1) * p(2));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
        CHECK(TautMonomial::cmp(basis[i], basis[i + 1]) < 0);
}

TEST_CASE("monomial basis in low degree") {
    RingContext ctx(3, 3);
    auto d0 = monomial_basis(ctx, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].is_one());
    auto d1 = monomial_basis(ctx, 1);
    REQUIRE(d1.size() == 4);
    CHECK(d1[0] == k(1));
    CHECK(d1[1] == p(1));
    CHECK(d1[2] == p(2));
    CHECK(d1[3] == p(3));
    /* 2 + n + n + n(n-1)/2 in degree 2 */
    CHECK(monomial_basis(ctx, 2).size() == 2 + 3 + 3 + 3);
}

TEST_CASE("multi kappa expansion by cycle sums") {
    RingContext g3n2(3, 2);

    /* single index is itself */
    CHECK(multi_kappa_expand(MultiKappa({2}), g3n2) == mono(k(2)));

    /* kappa_{(1,1)} = kappa_1^2 + kappa_2 */
    TautExpression k11 = multi_kappa_expand(MultiKappa({1, 1}), g3n2);
    CHECK(k11 == mono(k(1, 2)) + mono(k(2)));

    /* zero indices turn into the scalar 2g-2+n */
    for (int n = 0; n <= 5; ++n) {
        RingContext ctx(3, n);
        CHECK(multi_kappa_expand(MultiKappa({0, 1}), ctx) == mono(k(1), n + 5));
        TautExpression lhs = multi_kappa_expand(MultiKappa({0, 1, 1}), ctx);
        TautExpression rhs = (mono(k(1, 2)) + mono(k(2))) * Rational(ctx.kappa0() + 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("zero elimination law for the cycle expansion") {
    RingContext ctx(4, 3);
    std::vector<std::vector<int>> cases = {{1}, {2}, {1, 1}, {1, 2}, {1, 1, 1}, {3, 2, 1}};
    for (const auto& ks : cases) {
        std::vector<int> with_zero = ks;
        with_zero.push_back(0);
        int m = static_cast<int>(ks.size());
        CHECK(multi_kappa_expand(MultiKappa(with_zero), ctx) ==
              multi_kappa_expand(MultiKappa(ks), ctx) * Rational(ctx.kappa0() + m));
    }
}

TEST_CASE("single to multi inverts the expansion") {
    /* kappa_1 -> kappa_{(1)} */
    auto m1 = single_to_multi(k(1));
    REQUIRE(m1.size() == 1);
    CHECK(m1.at(MultiKappa({1})) == Rational(1));

    /* kappa_1 kappa_2 -> kappa_{(1,2)} - kappa_{(3)} */
    auto m12 = single_to_multi(k(1) * k(2));
    REQUIRE(m12.size() == 2);
    CHECK(m12.at(MultiKappa({1, 2})) == Rational(1));
    CHECK(m12.at(MultiKappa({3})) == Rational(-1));

    /* kappa_1^3 -> kappa_{(1,1,1)} - 3 kappa_{(1,2)} + kappa_{(3)} */
    auto m111 = single_to_multi(k(1, 3));
    REQUIRE(m111.size() == 3);
    CHECK(m111.at(MultiKappa({1, 1, 1})) == Rational(1));
    CHECK(m111.at(MultiKappa({1, 2})) == Rational(-3));
    CHECK(m111.at(MultiKappa({3})) == Rational(1));

    CHECK_THROWS_AS(single_to_multi(p(1)), std::domain_error);
    CHECK_THROWS_AS(single_to_multi(TautMonomial::one()), std::domain_error);
}

TEST_CASE("round trip on all multisets with <= 4 parts and entries <= 3") {
    RingContext ctx(4, 2);
    std::vector<std::vector<int>> multisets;
    for (int a = 1; a <= 3; ++a) {
        multisets.push_back({a});
        for (int b = a; b <= 3; ++b) {
            multisets.push_back({a, b});
            for (int c = b; c <= 3; ++c) {
                multisets.push_back({a, b, c});
                for (int d = c; d <= 3; ++d) multisets.push_back({a, b, c, d});
            }
        }
    }
    for (const auto& ms : multisets) {
        /* expand then re-express: recovers the multiset exactly */
        TautExpression expanded = multi_kappa_expand(MultiKappa(ms), ctx);
        std::map<MultiKappa, Rational> back;
        for (const auto& [m, c] : expanded.terms()) {
            for (const auto& [mk, c2] : single_to_multi(m)) back[mk] += c * c2;
        }
        for (auto it = back.begin(); it != back.end();)
            it = it->second.is_zero() ? back.erase(it) : std::next(it);
        REQUIRE(back.size() == 1);
        CHECK(back.begin()->first == MultiKappa(ms));
        CHECK(back.begin()->second == Rational(1));

        /* re-express a product then expand: recovers the product */
        TautMonomial prod;
        for (int idx : ms) prod = prod * k(idx);
        TautExpression again;
        for (const auto& [mk, c] : single_to_multi(prod)) again += multi_kappa_expand(mk, ctx) * c;
        CHECK(again == mono(prod));
    }
}

TEST_CASE("expression multiplication") {
    RingContext ctx(3, 2);
    CHECK(expr_mul(mono(p(1)), mono(p(1)), ctx) == mono(p(1, 2)));
    TautExpression k11 = mono(k(1, 2)) + mono(k(2));
    CHECK(expr_mul(mono(k(1)), k11, ctx) == mono(k(1, 3)) + mono(k(1) * k(2)));

    /* kappa_1 * kappa_{1,1} = kappa_{(1,1,1)} - 2 kappa_{(1,2)} */
    TautExpression prod = expr_mul(mono(k(1)), k11, ctx);
    std::map<MultiKappa, Rational> multi;
    for (const auto& [m, c] : prod.terms())
        for (const auto& [mk, c2] : single_to_multi(m)) multi[mk] += c * c2;
    CHECK(multi.at(MultiKappa({1, 1, 1})) == Rational(1));
    CHECK(multi.at(MultiKappa({1, 2})) == Rational(-2));
}

TEST_CASE("expression multiplication is commutative and associative on samples") {
    RingContext ctx(3, 3);
    std::vector<TautExpression> sample = {
        mono(k(1)) + mono(p(1), 2), mono(p(2)) - mono(k(2), 3) * Rational(1, 2),
        mono(p(1) * p(3), -1) + TautExpression(Rational(5)), mono(k(1, 2)) + mono(p(3, 2), 7)};
    for (const auto& a : sample)
        for (const auto& b : sample) {
            CHECK(a * b == b * a);
            for (const auto& c : sample) CHECK((a * b) * c == a * (b * c));
        }
}

TEST_CASE("expression text form and normalization") {
    TautExpression e = mono(k(2), 35) + mono(k(1) * p(1), -6) + mono(k(1, 2), 3);
    CHECK(e.str() == "35*k2 + 3*k1^2 - 6*k1*p1");
    CHECK(TautExpression().str() == "0");
    CHECK(mono(p(2, 3)).str() == "p2^3");

    TautExpression f = mono(k(2), -70) + mono(k(1) * p(1), 12) + mono(k(1, 2), -6);
    CHECK(e.proportional_to(f));
    CHECK(f.normalized() == e);

    /* lower degree leads the canonical order, so the p1 term fixes the sign */
    TautExpression g = (mono(k(2)) * Rational(3, 4)) + (mono(p(1)) * Rational(-5, 6));
    CHECK(g.normalized() == mono(k(2), -9) + mono(p(1), 10));

    CHECK_FALSE(e.proportional_to(g));
    CHECK(TautExpression().proportional_to(TautExpression()));
    CHECK_FALSE(TautExpression().proportional_to(e));
}

TEST_CASE("degree bookkeeping") {
    TautExpression e = mono(k(2)) + mono(p(1) * p(2));
    int d = -1;
    CHECK(e.homogeneous_degree(&d));
    CHECK(d == 2);
    e += mono(p(1));
    CHECK_FALSE(e.homogeneous_degree(&d));
    CHECK(e.degree_set() == std::set<int>{1, 2});
}

TEST_CASE("expansion is invariant under index reordering") {
    RingContext ctx(3, 1);
    CHECK(multi_kappa_expand(MultiKappa({2, 0, 1}), ctx) == multi_kappa_expand(MultiKappa({0, 1, 2}), ctx));
}

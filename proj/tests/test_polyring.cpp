#include <doctest.h>

#include <random>

#include "lrc/polyring.hpp"

using namespace lrc;

namespace {

Polynomial naive_pow(const Polynomial& base, long t) {
    Polynomial r = poly_const(base.field(), 1);
    for (long k = 0; k < t; ++k) r = r * base;
    return r;
}

Polynomial random_poly(const Field& f, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(0, (int)f.q() - 1);
    std::vector<int> c(deg(rng) + 1);
    for (int& x : c) x = coef(rng);
    return Polynomial(f, std::move(c));
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    const Field& f5 = field_of(5, 1);
    Polynomial x2m1(f5, {4, 0, 1});  // x^2 - 1
    Polynomial xm1(f5, {4, 1});      // x - 1
    auto [q, r] = divmod(x2m1, xm1);
    CHECK(q == Polynomial(f5, {1, 1}));
    CHECK(r.is_zero());

    Polynomial f(f5, {1, 2, 3});
    CHECK(f * poly_const(f5, 1) == f);
    CHECK_THROWS_AS(divmod(f, Polynomial(f5)), lrc_error);

    const Field& f2 = field_of(2, 1);
    Polynomial xp1(f2, {1, 1});
    CHECK(xp1 * xp1 == Polynomial(f2, {1, 0, 1}));  // (x+1)^2 = x^2+1

    // degree of zero is the -1 sentinel
    CHECK(Polynomial(f5).degree() == -1);
}

TEST_CASE("divmod round-trip property") {
    std::mt19937 rng(12345);
    for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {5, 1}, {3, 2}, {7, 2}}) {
        const Field& f = field_of(p, m);
        for (int trial = 0; trial < 200; ++trial) {
            Polynomial a = random_poly(f, 12, rng);
            Polynomial b = random_poly(f, 6, rng);
            if (b.is_zero()) continue;
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("digits and v_weight") {
    CHECK(digits(7, 5).digits == std::vector<int>{2, 1});
    CHECK(digits(0, 3).digits == std::vector<int>{0});
    CHECK(digits(24, 5).digits == std::vector<int>{4, 4});
    CHECK(v_weight(7, 5) == 6);
    CHECK(v_weight(0, 7) == 1);
    CHECK(v_weight(24, 5) == 25);
}

TEST_CASE("binom_mod_p") {
    // direct-expansion oracle: coefficient of x^5 in (x+1)^10 over GF(5)
    const Field& f5 = field_of(5, 1);
    Polynomial expanded = naive_pow(Polynomial(f5, {1, 1}), 10);
    CHECK(expanded.coeff(5) == 2);
    CHECK(binom_mod_p(10, 5, 5) == 2);

    CHECK(binom_mod_p(17, 0, 3) == 1);
    CHECK(binom_mod_p(2, 1, 2) == 0);
    CHECK(binom_mod_p(3, 5, 7) == 0);

    // full cross-check against naive expansion
    for (long p : {2, 3, 5, 7}) {
        const Field& f = field_of((int)p, 1);
        Polynomial row = poly_const(f, 1);
        Polynomial xp1(f, {1, 1});
        for (long n = 0; n <= 40; ++n) {
            for (long k = 0; k <= n; ++k) CHECK(binom_mod_p(n, k, p) == row.coeff((int)k));
            row = row * xp1;
        }
    }
}

TEST_CASE("binomial_power") {
    const Field& f5 = field_of(5, 1);
    Polynomial w = binomial_power(f5, 1, 4, 10);  // (x+1)^10
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(5) == 2);
    CHECK(w.coeff(10) == 1);
    CHECK(w.weight() == v_weight(10, 5));

    CHECK(binomial_power(f5, 3, 2, 0) == poly_const(f5, 1));

    const Field& f2 = field_of(2, 1);
    CHECK(binomial_power(f2, 2, 1, 2) == Polynomial(f2, {1, 0, 0, 0, 1}));  // (x^2+1)^2

    SUBCASE("matches naive repeated multiplication") {
        for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
            const Field& f = field_of(p, m);
            for (int eta : {1, 2, 3}) {
                if (gcd_long(eta, p) != 1) continue;
                for (int mu : {1, (int)f.q() - 1}) {
                    Polynomial bin = poly_binomial(f, eta, mu);
                    Polynomial acc = poly_const(f, 1);
                    for (long t = 0; t <= 64; ++t) {
                        CHECK(binomial_power(f, eta, mu, t) == acc);
                        acc = acc * bin;
                    }
                }
            }
        }
    }

    SUBCASE("weight equals v_weight for t <= 200") {
        for (auto [p, m] : {std::pair{2, 2}, {3, 1}, {5, 1}, {7, 1}}) {
            const Field& f = field_of(p, m);
            for (long t = 0; t <= 200; ++t)
                CHECK(binomial_power(f, 1, 1, t).weight() == v_weight(t, p));
        }
    }
}

TEST_CASE("factor_over_field") {
    const Field& f4 = field_of(2, 2);
    int w = 2;
    Polynomial x3mw = poly_binomial(f4, 3, w);
    Factorization fac = factor_over_field(x3mw);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == x3mw);
    CHECK(fac.factors[0].second == 1);

    const Field& f5 = field_of(5, 1);
    Polynomial lin(f5, {3, 1});
    fac = factor_over_field(lin);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == lin);

    // x^2+1 irreducible over GF(7) since -1 is a non-residue (7 = 3 mod 4)
    const Field& f7 = field_of(7, 1);
    Polynomial x2p1(f7, {1, 0, 1});
    fac = factor_over_field(x2p1);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].second == 1);

    SUBCASE("product reproduces the input") {
        std::mt19937 rng(777);
        for (auto [p, m] : {std::pair{2, 2}, {5, 1}}) {
            const Field& f = field_of(p, m);
            for (int trial = 0; trial < 40; ++trial) {
                Polynomial a = random_poly(f, 8, rng);
                if (a.is_zero()) continue;
                Factorization fc = factor_over_field(a);
                Polynomial prod = poly_const(f, fc.unit);
                for (auto& [m_i, e_i] : fc.factors)
                    for (int t = 0; t < e_i; ++t) prod = prod * m_i;
                CHECK(prod == a);
                // deterministic order: (degree, integer code) ascending
                for (size_t t = 1; t < fc.factors.size(); ++t) {
                    auto &a0 = fc.factors[t - 1].first, &a1 = fc.factors[t].first;
                    bool ordered = a0.degree() < a1.degree() ||
                                   (a0.degree() == a1.degree() && a0.int_code() < a1.int_code());
                    CHECK(ordered);
                }
            }
        }
    }

    SUBCASE("budget") {
        const Field& f64 = field_of(2, 6);
        Polynomial big = poly_binomial(f64, 12, f64.generator());
        CHECK_THROWS_AS((void)factor_over_field(big, 1000), lrc_error);
    }
}

TEST_CASE("repeated squaring consistency for (x+1) powers over GF(5)") {
    // (x^1 - (-1))^10 = x^10 + 2x^5 + 1, weight 3 = V_10
    const Field& f5 = field_of(5, 1);
    Polynomial direct = naive_pow(Polynomial(f5, {1, 1}), 10);
    CHECK(direct == binomial_power(f5, 1, 4, 10));
    CHECK(direct.weight() == 3);
}

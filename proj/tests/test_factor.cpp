#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hilbspec/factor.hpp"
#include "hilbspec/parser.hpp"

using namespace hilbspec;

namespace {

const VariableContext kY = VariableContext::of_y({"Y"});

Polynomial P(const std::string& s) { return parse_polynomial(s, kY); }

Polynomial from_coeffs(const std::vector<long>& c) {
    upoly::ZPoly z;
    for (long v : c) z.push_back(Integer(v));
    return upoly::to_polynomial(z, kY, 0);
}

/// Factor height bound for the oracle: C(k, k/2) * ||f||_2 covers every
/// coefficient of a degree-k divisor.
int oracle_height(const Polynomial& f, int k) {
    double norm2 = 0;
    for (const auto& t : f.terms()) norm2 += t.coeff.get_d() * t.coeff.get_d();
    double binom = 1;
    for (int i = 1; i <= k / 2; ++i) binom = binom * (k - k / 2 + i) / i;
    return static_cast<int>(std::floor(binom * std::sqrt(norm2)));
}

bool oracle_reducible(const Polynomial& f) {
    int n = f.total_degree();
    if (n < 2) return false;
    int k = n / 2;
    return brute_force_factor_oracle(f, k, oracle_height(f, k)).has_value();
}

}  // namespace

TEST(Factor, DifferenceOfSquares) {
    auto f = factor_univariate(P("Y^2 - 4"));
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].first, P("Y - 2"));
    EXPECT_EQ(f.factors[1].first, P("Y + 2"));
    EXPECT_EQ(f.unit, 1);
    EXPECT_FALSE(f.is_irreducible());
}

TEST(Factor, IrreducibleExamples) {
    EXPECT_TRUE(factor_univariate(P("Y^2 - 2")).is_irreducible());
    // Y^4 + 1 is reducible modulo every prime but irreducible over Q.
    auto f = factor_univariate(P("Y^4 + 1"));
    EXPECT_TRUE(f.is_irreducible());
    EXPECT_FALSE(brute_force_factor_oracle(P("Y^4 + 1"), 2, oracle_height(P("Y^4 + 1"), 2)).has_value());
}

TEST(Factor, MultiplicitiesAndUnit) {
    auto p = P("-6Y^5 + 12Y^4 - 6Y^3");  // -6 Y^3 (Y - 1)^2
    auto f = factor_univariate(p);
    ASSERT_EQ(f.factors.size(), 2u);
    // Same size: ordered by coefficient vector, constant term first.
    EXPECT_EQ(f.factors[0], std::make_pair(P("Y - 1"), 2u));
    EXPECT_EQ(f.factors[1], std::make_pair(P("Y"), 3u));
    EXPECT_EQ(f.unit, -6);
    EXPECT_EQ(f.product(kY), p);
    auto r = factor_univariate(P("1/2 Y^2 - 1/8"));
    EXPECT_EQ(r.product(kY), P("1/2 Y^2 - 1/8"));
    EXPECT_EQ(r.factors.size(), 2u);
}

TEST(Factor, Swinnerton) {
    // Minimal polynomial of sqrt2 + sqrt3: splits into quadratics modulo
    // every prime, so recombination must reject all pairs.
    EXPECT_TRUE(factor_univariate(P("Y^4 - 10Y^2 + 1")).is_irreducible());
    auto f = factor_univariate(P("(Y^4 - 10Y^2 + 1)(Y^2 - 3)(2Y + 5)"));
    EXPECT_EQ(f.factors.size(), 3u);
}

TEST(Factor, RejectsBadInput) {
    EXPECT_THROW(factor_univariate(Polynomial(kY)), PreconditionError);
    auto ctx = VariableContext::of_y({"X", "Y"});
    EXPECT_THROW(factor_univariate(parse_polynomial("X*Y", ctx)), PreconditionError);
}

TEST(Oracle, Examples) {
    auto g = brute_force_factor_oracle(P("Y^2 - 4"), 1, 5);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, P("Y - 2"));  // lower coefficients run upward from -H
    EXPECT_FALSE(brute_force_factor_oracle(P("Y^2 - 2"), 1, 5).has_value());
    auto h = brute_force_factor_oracle(P("6Y^2 + 5Y + 1"), 1, 3);
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(*h, P("2Y + 1"));
    EXPECT_THROW(brute_force_factor_oracle(P("Y^2 + 1"), 2, 3), PreconditionError);
    EXPECT_THROW(brute_force_factor_oracle(P("Y^4 + 1"), 2, 1000, 10), BudgetExceeded);
}

TEST(Properties, ReconstructionOnRandomInputs) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int i = 0; i < 200; ++i) {
        std::vector<long> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coef(rng);
        if (c.back() == 0) c.back() = 1;
        auto p = from_coeffs(c);
        auto f = factor_univariate(p);
        ASSERT_EQ(f.product(kY), p) << p.str();
        for (const auto& [g, m] : f.factors) {
            ASSERT_GT(g.leading_term().coeff, 0);
            ASSERT_TRUE(factor_univariate(g).is_irreducible()) << g.str();
        }
    }
}

TEST(Properties, ProductsOfKnownFactorsSplit) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int i = 0; i < 60; ++i) {
        std::vector<long> a{coef(rng), coef(rng), 1 + std::abs(coef(rng))}, b{coef(rng), 1 + std::abs(coef(rng))};
        auto p = from_coeffs(a) * from_coeffs(b);
        auto f = factor_univariate(p);
        unsigned count = 0;
        for (const auto& fm : f.factors) count += fm.second;
        ASSERT_GE(count, 2u) << p.str();
        ASSERT_EQ(f.product(kY), p);
    }
}

TEST(Properties, OracleAgreementUpToDegreeThree) {
    // Every integer polynomial of degree 2..3 with coefficients in [-3, 3].
    for (int n = 2; n <= 3; ++n) {
        std::vector<long> c(static_cast<std::size_t>(n) + 1, -3);
        for (;;) {
            if (c.back() != 0) {
                auto p = from_coeffs(c);
                ASSERT_EQ(!factor_univariate(p).is_irreducible(), oracle_reducible(p)) << p.str();
            }
            std::size_t i = 0;
            while (i < c.size() && c[i] == 3) c[i++] = -3;
            if (i == c.size()) break;
            ++c[i];
        }
    }
}

TEST(Properties, OracleAgreementSampledQuartics) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int i = 0; i < 400; ++i) {
        std::vector<long> c(5);
        for (auto& v : c) v = coef(rng);
        if (c.back() == 0) c.back() = 2;
        auto p = from_coeffs(c);
        ASSERT_EQ(!factor_univariate(p).is_irreducible(), oracle_reducible(p)) << p.str();
    }
}

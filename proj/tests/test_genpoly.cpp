#include <gtest/gtest.h>

#include "hilbspec/genpoly.hpp"
#include "hilbspec/parser.hpp"

using namespace hilbspec;

namespace {

Ideal ideal(const VariableContext& ctx, std::vector<std::string> gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, ctx));
    return Ideal(ctx, std::move(ps));
}

std::vector<std::string> ynames(std::size_t s) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= s; ++i) out.push_back("Y" + std::to_string(i));
    return out;
}

/// Counts exponent vectors with sum <= D by plain recursion.
std::size_t count_vectors(std::size_t s, unsigned D) {
    if (s == 0) return 1;
    std::size_t total = 0;
    for (unsigned e = 0; e <= D; ++e) total += count_vectors(s - 1, D - e);
    return total;
}

}  // namespace

TEST(GenericPolynomial, Examples) {
    auto y = VariableContext::of_y({"Y"});
    auto c0 = with_lambda_block(y, "L1", 1);
    auto g0 = generic_polynomial(c0, 0, "L1");
    EXPECT_EQ(g0.n_d, 1u);
    EXPECT_EQ(g0.poly, parse_polynomial("L1_1", c0));

    auto y2 = VariableContext::of_y(ynames(2));
    auto c1 = with_lambda_block(y2, "L1", 3);
    auto g1 = generic_polynomial(c1, 1, "L1");
    EXPECT_EQ(g1.n_d, 3u);
    EXPECT_EQ(g1.poly, parse_polynomial("L1_1 + L1_2*Y1 + L1_3*Y2", c1));

    auto c2 = with_lambda_block(y2, "L1", 6);
    EXPECT_EQ(generic_polynomial(c2, 2, "L1").n_d, 6u);
    EXPECT_EQ(generic_polynomial(c2, 2, "L1").poly.term_count(), 6u);
    EXPECT_THROW(generic_polynomial(c2, 1, "L1"), PreconditionError);
    EXPECT_THROW(with_lambda_block(c2, "L1", 2), PreconditionError);
}

TEST(GenericPolynomial, CountMatchesEnumeration) {
    for (std::size_t s = 1; s <= 4; ++s)
        for (unsigned D = 0; D <= 5; ++D) {
            EXPECT_EQ(monomial_count(s, D), count_vectors(s, D));
            EXPECT_EQ(full_support(VariableContext::of_y(ynames(s)), D).size(), count_vectors(s, D));
        }
}

TEST(QuasiGeneric, Examples) {
    auto ty = VariableContext::of_ty({"T1"}, {"Y1", "Y2"});
    Monomial one(ty.size());
    auto q = quasi_generic({{one}, -Polynomial::variable(ty, "T1"), "L1"});
    EXPECT_EQ(q, parse_polynomial("L1_1 - T1", q.context()));

    auto y2 = VariableContext::of_y(ynames(2));
    Monomial y1 = Monomial::variable(2, 0);
    auto r = quasi_generic({{Monomial(2), y1}, parse_polynomial("Y2^3", y2), "L1"});
    EXPECT_EQ(r, parse_polynomial("L1_1 + L1_2*Y1 + Y2^3", r.context()));
}

TEST(QuasiGeneric, FullSupportEqualsGeneric) {
    for (std::size_t s = 1; s <= 3; ++s)
        for (unsigned D = 0; D <= 3; ++D) {
            auto y = VariableContext::of_y(ynames(s));
            auto q = quasi_generic({full_support(y, D), Polynomial(y), "L1"});
            auto g = generic_polynomial(q.context(), D, "L1");
            ASSERT_EQ(q.terms(), g.poly.terms()) << "s=" << s << " D=" << D;
        }
}

TEST(QuasiGeneric, RejectsInvalidSpecs) {
    auto ty = VariableContext::of_ty({"T"}, {"Y"});
    Monomial one(2), y = Monomial::variable(2, 1), t = Monomial::variable(2, 0);
    Polynomial zero(ty);
    EXPECT_THROW(quasi_generic({{y}, zero, "L1"}), PreconditionError);
    EXPECT_THROW(quasi_generic({{}, zero, "L1"}), PreconditionError);
    EXPECT_THROW(quasi_generic({{one, y, y}, zero, "L1"}), PreconditionError);
    EXPECT_THROW(quasi_generic({{one, t}, zero, "L1"}), PreconditionError);
    EXPECT_THROW(quasi_generic({{one}, zero, "Y"}), PreconditionError);
}

TEST(HypothesisH, Examples) {
    auto y2 = VariableContext::of_y(ynames(2));
    auto circle = ideal(y2, {"Y1^2 + Y2^2 - 1"});
    auto h = hypothesis_h_sufficient(circle, {full_support(y2, 1), Polynomial(y2), "L1"});
    EXPECT_EQ(h.status, HypothesisH::HoldsByLemma);

    auto y = VariableContext::of_y({"Y"});
    for (const char* g : {"Y^2 - 2", "Y - 3"}) {
        auto m = hypothesis_h_sufficient(ideal(y, {g}), {full_support(y, 2), Polynomial(y), "L1"});
        EXPECT_EQ(m.status, HypothesisH::Unknown) << g;
        EXPECT_EQ(m.reason, "ideal is maximal");
    }
    // Zero-dimensional but not maximal.
    auto two = hypothesis_h_sufficient(ideal(y, {"Y^2 - 4"}), {full_support(y, 1), Polynomial(y), "L1"});
    EXPECT_EQ(two.status, HypothesisH::HoldsByLemma);
    // Y2 neither in S nor equal to R.
    auto partial = hypothesis_h_sufficient(circle, {{Monomial(2), Monomial::variable(2, 0)}, Polynomial(y2), "L1"});
    EXPECT_EQ(partial.status, HypothesisH::Unknown);
    // ... unless R = Y2.
    auto viaR = hypothesis_h_sufficient(
        circle, {{Monomial(2), Monomial::variable(2, 0)}, Polynomial::variable(y2, "Y2"), "L1"});
    EXPECT_EQ(viaR.status, HypothesisH::HoldsByLemma);
}

TEST(HypothesisH, ParametricReblocking) {
    auto ty = VariableContext::of_ty({"T1", "T2"}, {"Y"});
    auto I = ideal(ty, {"Y^2 - T1*T2"});
    auto minus_t1 = -Polynomial::variable(ty, "T1");
    // S = {1}: Y is not covered.
    auto deg0 = hypothesis_h_parametric(I, 0, {{Monomial(3)}, minus_t1, "L1"});
    EXPECT_EQ(deg0.status, HypothesisH::Unknown);
    auto deg1 = hypothesis_h_parametric(I, 0, {full_support(ty, 1), minus_t1, "L1"});
    EXPECT_EQ(deg1.status, HypothesisH::HoldsByLemma);
    // The ideal must not meet K[T2].
    auto bad = ideal(ty, {"Y - T1", "T2 - 1"});
    EXPECT_EQ(hypothesis_h_parametric(bad, 0, {full_support(ty, 1), minus_t1, "L1"}).status, HypothesisH::Unknown);
}

TEST(HypothesisH, NeverHoldsOnMaximalIdeals) {
    auto y = VariableContext::of_y({"Y"});
    for (const char* g : {"Y", "Y - 1", "Y + 7", "Y^2 - 2", "Y^2 + 1", "Y^3 - 2"})
        for (unsigned D = 0; D <= 2; ++D)
            EXPECT_EQ(hypothesis_h_sufficient(ideal(y, {g}), {full_support(y, D), Polynomial(y), "L1"}).status,
                      HypothesisH::Unknown);
}

#include <gtest/gtest.h>

#include <random>

#include "hilbspec/parser.hpp"
#include "test_util.hpp"

using namespace hilbspec;
using hilbspec::testing::evaluate;
using hilbspec::testing::random_polynomial;

namespace {

const VariableContext kTY = VariableContext::of_ty({"T"}, {"Y"});
const VariableContext kY12 = VariableContext::of_y({"Y1", "Y2"});
const VariableContext kY = VariableContext::of_y({"Y"});

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational q = make_rational(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
    EXPECT_THROW(make_rational(1, 0), PreconditionError);
}

TEST(Context, RejectsDuplicateNames) {
    EXPECT_THROW(VariableContext::of_ty({"Y"}, {"Y"}), PreconditionError);
    auto ctx = VariableContext::of_ty({"T1", "T2"}, {"Y1"});
    EXPECT_EQ(ctx.r(), 2u);
    EXPECT_EQ(ctx.s(), 1u);
    EXPECT_EQ(*ctx.index_of("Y1"), 2u);
}

TEST(Parse, DirectTranscription) {
    auto p = parse_polynomial("Y^2 - T", kTY);
    ASSERT_EQ(p.term_count(), 2u);
    EXPECT_EQ(p.coefficient(mono({0, 2})), 1);
    EXPECT_EQ(p.coefficient(mono({1, 0})), -1);
    EXPECT_TRUE(p.is_canonical());
}

TEST(Parse, CommaIsSyntaxError) {
    auto ctx = VariableContext::of_y({"X", "Y"});
    try {
        parse_polynomial("Y - X, Y - X^2", ctx);
        FAIL() << "expected a syntax error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
}

TEST(Parse, SquareOfSumMatchesHandExpansion) {
    auto p = parse_polynomial("(Y1+Y2)^2", kY12);
    EXPECT_EQ(p.term_count(), 3u);
    EXPECT_EQ(p.coefficient(mono({2, 0})), 1);
    EXPECT_EQ(p.coefficient(mono({1, 1})), 2);
    EXPECT_EQ(p.coefficient(mono({0, 2})), 1);
}

TEST(Parse, UnknownVariableNamesIdentifier) {
    try {
        parse_polynomial("Y + W", kTY);
        FAIL();
    } catch (const UnknownVariable& e) {
        EXPECT_EQ(e.name(), "W");
    }
}

TEST(Parse, ImplicitMultiplicationAndRationals) {
    EXPECT_EQ(parse_polynomial("2Y(Y+1)", kY), parse_polynomial("2*Y^2 + 2*Y", kY));
    EXPECT_EQ(parse_polynomial("3/4 Y", kY), Rational(3, 4) * Polynomial::variable(kY, "Y"));
    EXPECT_EQ(parse_polynomial("-T + Y^2", kTY), parse_polynomial("Y^2 - T", kTY));
    EXPECT_THROW(parse_polynomial("Y 2", kY), ParseError);
    EXPECT_THROW(parse_polynomial("Y/2", kY), ParseError);
    EXPECT_THROW(parse_polynomial("1/0", kY), ParseError);
    EXPECT_THROW(parse_polynomial("", kY), ParseError);
    EXPECT_THROW(parse_polynomial("(Y+1", kY), ParseError);
}

TEST(Print, CanonicalText) {
    EXPECT_EQ(parse_polynomial("Y^2 - T", kTY).str(), "Y^2 - T");
    EXPECT_EQ(parse_polynomial("-1/2 Y1 Y2 + 3", kY12).str(), "-1/2*Y1*Y2 + 3");
    EXPECT_EQ(Polynomial(kY).str(), "0");
}

TEST(Arithmetic, Examples) {
    auto y = Polynomial::variable(kY, "Y");
    auto two = Polynomial::constant(kY, 2);
    EXPECT_EQ((y - two) * (y + two), parse_polynomial("Y^2 - 4", kY));
    auto p = parse_polynomial("3Y^3 - Y + 7", kY);
    EXPECT_EQ(p + Polynomial(kY), p);
    auto a = parse_polynomial("Y1+Y2", kY12), b = parse_polynomial("Y1-Y2", kY12);
    EXPECT_EQ(a * b, parse_polynomial("Y1^2 - Y2^2", kY12));
    EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
}

TEST(Arithmetic, ContextMismatch) {
    EXPECT_THROW(Polynomial::variable(kY, "Y") + Polynomial::variable(kTY, "Y"), ContextMismatch);
}

TEST(Arithmetic, RingAxiomsOnRandomInputs) {
    std::mt19937_64 rng(7);
    auto ctx = VariableContext::of_ty({"T"}, {"Y1", "Y2"});
    for (int i = 0; i < 200; ++i) {
        auto p = random_polynomial(ctx, 4, 9, rng), q = random_polynomial(ctx, 4, 9, rng),
             r = random_polynomial(ctx, 4, 9, rng);
        ASSERT_EQ((p + q) + r, p + (q + r));
        ASSERT_EQ(p * (q + r), p * q + p * r);
        ASSERT_EQ(p * q, q * p);
        ASSERT_TRUE((p * q - r).is_canonical());
        ASSERT_TRUE((p - p).is_zero());
    }
}

TEST(Arithmetic, AgreesWithPointEvaluation) {
    std::mt19937_64 rng(11);
    auto ctx = VariableContext::of_ty({"T"}, {"Y1", "Y2"});
    std::uniform_int_distribution<long> pt(-5, 5);
    for (int i = 0; i < 100; ++i) {
        auto p = random_polynomial(ctx, 4, 9, rng), q = random_polynomial(ctx, 4, 9, rng);
        std::vector<Rational> x{Rational(pt(rng)), make_rational(pt(rng), 3), Rational(pt(rng))};
        ASSERT_EQ(evaluate(p * q, x), evaluate(p, x) * evaluate(q, x));
        ASSERT_EQ(evaluate(p - q, x), evaluate(p, x) - evaluate(q, x));
        ASSERT_EQ(evaluate(p.pow(3), x), evaluate(p, x) * evaluate(p, x) * evaluate(p, x));
    }
}

TEST(Substitute, Examples) {
    auto p = parse_polynomial("Y^2 - T", kTY);
    EXPECT_EQ(p.substitute({{"T", Polynomial::constant(kY, 4)}}, kY), parse_polynomial("Y^2 - 4", kY));
    EXPECT_TRUE(p.substitute({{"T", parse_polynomial("Y^2", kY)}}, kY).is_zero());
    auto q = parse_polynomial("T*Y + 1", kTY);
    EXPECT_EQ(q.substitute({{"T", parse_polynomial("Y + 1", kY)}}, kY), parse_polynomial("Y^2 + Y + 1", kY));
}

TEST(Substitute, UnboundVariablePassesThrough) {
    auto p = parse_polynomial("T*Y + T", kTY);
    auto r = p.substitute({{"Y", Polynomial::constant(kTY, 3)}}, kTY);
    EXPECT_EQ(r, parse_polynomial("4T", kTY));
}

TEST(Substitute, TargetContextIncompatibility) {
    auto p = parse_polynomial("T*Y", kTY);
    auto other = VariableContext::of_y({"Z"});
    EXPECT_THROW(p.substitute({{"T", Polynomial::constant(other, 1)}}, other), ContextMismatch);
    EXPECT_THROW(p.substitute({{"T", Polynomial::constant(kTY, 1)}}, kY), ContextMismatch);
    EXPECT_THROW(p.substitute({{"Q", Polynomial::constant(kY, 1)}}, kY), UnknownVariable);
}

TEST(Substitute, IsRingHomomorphism) {
    std::mt19937_64 rng(3);
    auto ctx = VariableContext::of_ty({"T1", "T2"}, {"Y1", "Y2"});
    auto target = ctx.restrict_roles({Role::Y});
    for (int i = 0; i < 100; ++i) {
        auto p = random_polynomial(ctx, 3, 5, rng), q = random_polynomial(ctx, 3, 5, rng);
        std::map<std::string, Polynomial> b{{"T1", random_polynomial(target, 2, 3, rng, 3)},
                                            {"T2", random_polynomial(target, 1, 3, rng, 3)}};
        ASSERT_EQ((p * q).substitute(b, target), p.substitute(b, target) * q.substitute(b, target));
    }
}

TEST(Print, ParseRoundTripOnRandomPolynomials) {
    std::mt19937_64 rng(5);
    auto ctx = VariableContext::of_ty({"T"}, {"Y1", "Y2"});
    for (int i = 0; i < 100; ++i) {
        auto p = make_rational(1, 1 + static_cast<long>(i % 7)) * random_polynomial(ctx, 4, 9, rng);
        ASSERT_EQ(parse_polynomial(p.str(), ctx), p) << p.str();
    }
}

TEST(Embed, PadsExponentVectors) {
    auto p = parse_polynomial("Y^2 - T", kTY);
    auto big = kTY.prepend({{"L", Role::Lambda, {"L1", "L2"}}});
    auto e = p.embed(big);
    EXPECT_EQ(e.context().size(), 4u);
    EXPECT_EQ(e.str(), "Y^2 - T");
    EXPECT_EQ(e.embed(kTY), p);
    EXPECT_THROW(parse_polynomial("L1", big).embed(kTY), ContextMismatch);
}

TEST(Content, Examples) {
    auto a = integer_content_primitive(parse_polynomial("6Y^2 - 4", kY));
    EXPECT_EQ(a.content, 2);
    EXPECT_EQ(a.primitive, parse_polynomial("3Y^2 - 2", kY));
    auto b = integer_content_primitive(parse_polynomial("1/2 Y", kY));
    EXPECT_EQ(b.content, Rational(1, 2));
    EXPECT_EQ(b.primitive, parse_polynomial("Y", kY));
    auto c = integer_content_primitive(parse_polynomial("9Y^2 - 12Y + 6", kY));
    EXPECT_EQ(c.content, 3);
    EXPECT_EQ(c.primitive, parse_polynomial("3Y^2 - 4Y + 2", kY));
    auto d = integer_content_primitive(parse_polynomial("-2/3 Y + 4/9", kY));
    EXPECT_EQ(d.content, Rational(-2, 9));
    EXPECT_EQ(d.primitive, parse_polynomial("3Y - 2", kY));
    EXPECT_THROW(integer_content_primitive(Polynomial(kY)), PreconditionError);
}

TEST(Monomials, EnumerationCountsMatchBinomial) {
    for (std::size_t s = 1; s <= 4; ++s)
        for (unsigned d = 0; d <= 5; ++d) {
            auto v = exponent_vectors_up_to(s, d);
            mpz_class expect;
            mpz_bin_uiui(expect.get_mpz_t(), s + d, d);
            EXPECT_EQ(v.size(), expect.get_ui());
        }
    auto v = exponent_vectors_up_to(2, 1);
    EXPECT_EQ(v, (std::vector<std::vector<Exponent>>{{0, 0}, {1, 0}, {0, 1}}));
}

#include "gbx/errors.hpp"
#include "gbx/family.hpp"
#include "gbx/text_format.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace gbx;
using namespace gbx::test;

namespace {

TEST(ParseIdeal, FirstOccurrenceInterning)
{
    auto parsed = parse_ideal("x*y + 1\nx^2 + y\n");
    ASSERT_EQ(parsed.generators.size(), 2u);
    EXPECT_EQ(parsed.registry->names(), (std::vector<std::string>{"x", "y"}));
    EXPECT_FALSE(parsed.family_n.has_value());
}

TEST(ParseIdeal, HeaderFixesInterningOrder)
{
    auto parsed = parse_ideal("# vars: y x\nx*y + 1\n");
    EXPECT_EQ(parsed.registry->names(), (std::vector<std::string>{"y", "x"}));
}

TEST(ParseIdeal, UnitIdealAndComments)
{
    auto parsed = parse_ideal("# a comment\n1   # trailing\n\n");
    ASSERT_EQ(parsed.generators.size(), 1u);
    EXPECT_EQ(parsed.generators[0], Polynomial(Monomial{}));
}

TEST(ParseIdeal, ErrorsCarryPosition)
{
    try {
        parse_ideal("x + y\nx^");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GT(e.column(), 0u);
    }
    EXPECT_THROW(parse_ideal("x + * y"), ParseError);
    EXPECT_THROW(parse_ideal("x^-1"), ParseError);
    EXPECT_THROW(parse_ideal("3x"), ParseError);
}

TEST(ParseIdeal, RepeatedTermsCancel)
{
    auto reg = make_registry({"x"});
    EXPECT_TRUE(parse_polynomial("x + x", reg).is_zero());
    EXPECT_TRUE(parse_polynomial("0", reg).is_zero());
    EXPECT_EQ(parse_monomial("x*x^2", reg), Monomial::variable(reg.at("x"), 3));
}

TEST(FormatIdeal, RoundTripsRandomIdeals)
{
    std::mt19937 rng(17);
    auto reg = make_registry({"a", "b", "c", "d"});
    for (int round = 0; round < 100; ++round) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 4; ++k)
            gens.push_back(random_polynomial(rng, 4, 3, 5));
        GeneratorSet set(gens);
        auto text = format_ideal(set, reg);
        auto parsed = parse_ideal(text);
        EXPECT_EQ(parsed.registry->names(), reg.names());
        EXPECT_EQ(parsed.generators, set);
        EXPECT_EQ(format_ideal(parsed.generators, *parsed.registry), text);
    }
}

TEST(FormatIdeal, FamilyHeaderRoundTrips)
{
    auto family = generate_family(1);
    auto parsed = parse_ideal(format_family(family));
    ASSERT_TRUE(parsed.family_n.has_value());
    EXPECT_EQ(*parsed.family_n, 1u);
    EXPECT_EQ(parsed.registry->names(), family.registry()->names());
    EXPECT_EQ(parsed.generators, family.generators());
}

TEST(FormatPolynomial, GreatestTermFirst)
{
    auto reg = make_registry({"y", "x"});
    auto lex = MonomialOrder::lex(interning_order(reg));
    auto deglex = MonomialOrder::deglex(interning_order(reg));
    auto p = parse_polynomial("y^2 + x", reg);
    EXPECT_EQ(format_polynomial(p, reg, lex), "x + y^2");
    EXPECT_EQ(format_polynomial(p, reg, deglex), "y^2 + x");
    EXPECT_EQ(format_polynomial(Polynomial{}, reg, lex), "0");
    EXPECT_EQ(format_polynomial(Polynomial(Monomial{}), reg, lex), "1");
}

TEST(Certificates, RoundTrip)
{
    auto family = generate_family(1);
    auto cert = build_mayr_meyer_certificate(family, 1, 3, true);
    auto text = format_certificate(cert, *family.registry());
    EXPECT_EQ(text.rfind("cert v1\n", 0), 0u);
    auto copy = *family.registry();
    EXPECT_EQ(parse_certificate(text, copy), cert);
}

TEST(Certificates, MalformedInput)
{
    VariableRegistry reg;
    EXPECT_THROW(parse_certificate("start x\nend x\n", reg), ParseError);
    EXPECT_THROW(parse_certificate("cert v1\nstart x\nstep 0 1 2\nend x\n", reg), ParseError);
    EXPECT_THROW(parse_certificate("cert v1\nstart x\n", reg), ParseError);
}

TEST(OrderFiles, VariableOrder)
{
    auto reg = make_registry({"x", "y", "z"});
    auto order = parse_var_order("z, x\ny", reg);
    EXPECT_EQ(order, (std::vector<VarId>{reg.at("z"), reg.at("x"), reg.at("y")}));
    EXPECT_THROW(parse_var_order("x x", reg), ConfigError);
    EXPECT_THROW(parse_var_order("w", reg), ConfigError);
}

TEST(OrderFiles, Weights)
{
    auto reg = make_registry({"x", "y"});
    auto weights = parse_weights("x 2\n# comment\ny 1\n", reg);
    ASSERT_EQ(weights.size(), 2u);
    EXPECT_EQ(weights[0].var, reg.at("x"));
    EXPECT_EQ(weights[0].prime_index, 2u);
    EXPECT_THROW(parse_weights("x two\n", reg), ParseError);
}

TEST(MonomialList, OnePerLine)
{
    VariableRegistry reg;
    auto list = parse_monomial_list("x\nx^2\n\n# skip\ny^3\n", reg);
    EXPECT_EQ(list.size(), 3u);
}

} // namespace

#include "gbx/errors.hpp"
#include "gbx/ring.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace gbx;
using namespace gbx::test;

namespace {

class RingTest : public ::testing::Test {
protected:
    VariableRegistry reg = make_registry({"x", "y", "z"});
    Monomial m(const std::string& s) { return mono(reg, s); }
    Polynomial p(const std::string& s) { return poly(reg, s); }
};

TEST_F(RingTest, MultiplicationAddsExponents)
{
    EXPECT_EQ(m("x^2") * m("x*y"), m("x^3*y"));
    EXPECT_EQ(m("1") * m("x*z"), m("x*z"));
}

TEST_F(RingTest, DivisibilityIsComponentwise)
{
    EXPECT_TRUE(mono_divides(m("x^3*y"), m("x^3*y*z")));
    EXPECT_FALSE(mono_divides(m("x^3*y"), m("x^4")));
    EXPECT_TRUE(mono_divides(m("1"), m("x*y^7")));
}

TEST_F(RingTest, ExactQuotient)
{
    EXPECT_EQ(mono_div(m("x^3*y*z"), m("x^3*y")), m("z"));
    EXPECT_EQ(mono_div(m("x*y"), m("x*y")), m("1"));
    EXPECT_THROW(mono_div(m("x"), m("y")), DivisionError);
}

TEST_F(RingTest, Degrees)
{
    EXPECT_EQ(degree(m("x^2*y^2*z")), 5u);
    EXPECT_EQ(degree(m("1")), 0u);
    EXPECT_EQ(poly_degree(p("x^4 + x^3*y*z + x^2*y^2*z")), 5u);
    EXPECT_THROW(poly_degree(Polynomial{}), UndefinedDegree);
}

TEST_F(RingTest, AdditionIsSymmetricDifference)
{
    EXPECT_EQ(poly_add(p("x + y"), p("y + 1")), p("x + 1"));
    EXPECT_TRUE(poly_add(p("x*y + z"), p("x*y + z")).is_zero());
    EXPECT_EQ(poly_add(p("x^3*y + x"), p("x + y")), p("x^3*y + y"));
}

TEST_F(RingTest, MultiplicationCancelsInCharacteristicTwo)
{
    EXPECT_EQ(mono_scale(m("x^2"), p("x*y + 1")), p("x^3*y + x^2"));
    EXPECT_EQ(poly_mul(p("x + 1"), p("x + 1")), p("x^2 + 1"));
    EXPECT_TRUE(poly_mul(Polynomial{}, p("x + y")).is_zero());
}

TEST_F(RingTest, RepeatedTermsCancelOnConstruction)
{
    EXPECT_TRUE(Polynomial::from_terms({m("x"), m("x")}).is_zero());
    EXPECT_EQ(Polynomial::from_terms({m("x"), m("y"), m("x"), m("x")}), p("x + y"));
}

// Oracle: dense exponent-vector product with a parity count per monomial.
Polynomial dense_product(const Polynomial& a, const Polynomial& b)
{
    std::map<std::vector<Exponent>, int> parity;
    auto dense = [](const Monomial& t) {
        std::vector<Exponent> e(6, 0);
        for (const auto& f : t.factors())
            e[f.var.value] = f.exp;
        return e;
    };
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            auto u = dense(s), v = dense(t);
            for (std::size_t k = 0; k < u.size(); ++k)
                u[k] += v[k];
            parity[u] ^= 1;
        }
    std::vector<Monomial> terms;
    for (const auto& [e, odd] : parity) {
        if (!odd)
            continue;
        std::vector<Monomial::Factor> factors;
        for (std::uint32_t k = 0; k < e.size(); ++k)
            factors.push_back({VarId{k}, e[k]});
        terms.push_back(Monomial::from_factors(factors));
    }
    return Polynomial::from_terms(terms);
}

TEST(RingProperties, ArithmeticLaws)
{
    std::mt19937 rng(20240611);
    for (int round = 0; round < 200; ++round) {
        auto a = random_polynomial(rng, 6, 2, 6);
        auto b = random_polynomial(rng, 6, 2, 6);
        auto c = random_polynomial(rng, 6, 1, 4);
        EXPECT_TRUE(poly_add(a, a).is_zero());
        EXPECT_EQ(poly_add(a, Polynomial{}), a);
        EXPECT_EQ(poly_mul(a, b), poly_mul(b, a));
        EXPECT_EQ(poly_mul(poly_mul(a, b), c), poly_mul(a, poly_mul(b, c)));
        EXPECT_EQ(poly_mul(a, b), dense_product(a, b));
    }
}

TEST(RingProperties, DivisibilityLaws)
{
    std::mt19937 rng(77);
    for (int round = 0; round < 500; ++round) {
        auto a = random_monomial(rng, 4, 3);
        auto b = random_monomial(rng, 4, 3);
        EXPECT_EQ(mono_divides(a, b) && mono_divides(b, a), a == b);
        if (mono_divides(b, a))
            EXPECT_EQ(mono_mul(mono_div(a, b), b), a);
        EXPECT_EQ(mono_div(a * b, b), a);
    }
}

TEST(Registry, InterningIsStable)
{
    VariableRegistry reg;
    auto x = reg.intern("x");
    auto y = reg.intern("y");
    EXPECT_EQ(reg.intern("x"), x);
    EXPECT_LT(x, y);
    EXPECT_EQ(reg.name(y), "y");
    EXPECT_FALSE(reg.find("z").has_value());
    EXPECT_FALSE(VariableRegistry::is_identifier("2x"));
    EXPECT_TRUE(VariableRegistry::is_identifier("barq4_1"));
}

} // namespace

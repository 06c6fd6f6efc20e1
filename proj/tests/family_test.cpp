#include "gbx/errors.hpp"
#include "gbx/family.hpp"
#include "gbx/text_format.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace gbx;
using namespace gbx::test;
using boost::multiprecision::cpp_int;

namespace {

Monomial fm(const FamilyInstance& family, const std::string& text)
{
    return parse_monomial(text, *family.registry());
}

std::string golden_path(const std::string& name) { return std::string(GBX_TEST_DATA_DIR) + "/golden/" + name; }

TEST(Family, DoublyExponentialCounter)
{
    for (unsigned n = 0; n <= 6; ++n) {
        cpp_int expected = 1;
        for (unsigned k = 0; k < (1u << n); ++k)
            expected *= 2;
        EXPECT_EQ(e(n), expected) << n;
    }
    EXPECT_EQ(e_small(3), 256u);
    EXPECT_THROW(e(7), BudgetExceeded);
}

TEST(Family, SizesAndVariableCounts)
{
    for (unsigned n = 0; n <= 6; ++n) {
        auto family = generate_family(n);
        EXPECT_EQ(family.generators().size(), 20 * n + 15);
        EXPECT_EQ(family.P().size(), 4 + 10 * n);
        EXPECT_EQ(family.Pbar().size(), 4 + 10 * n);
        EXPECT_EQ(family.G().size(), 7u);
        EXPECT_EQ(family.registry()->size(), 28 * (n + 1) + 6);
        EXPECT_EQ(family_variable_count(n), 28 * (n + 1) + 6);
        for (const auto& g : family.generators())
            EXPECT_EQ(g.size(), 2u);
    }
    EXPECT_THROW(generate_family(7), BudgetExceeded);
}

class GoldenFamily : public ::testing::TestWithParam<unsigned> {};

TEST_P(GoldenFamily, MatchesHandTranscription)
{
    auto family = generate_family(GetParam());
    auto text = read_text(golden_path("family" + std::to_string(GetParam()) + ".txt"));
    auto parsed = parse_ideal(text, std::make_shared<VariableRegistry>(*family.registry()));
    ASSERT_EQ(parsed.registry->size(), family.registry()->size()) << "golden file names an unknown variable";
    ASSERT_EQ(parsed.generators.size(), family.generators().size());
    for (std::size_t k = 0; k < parsed.generators.size(); ++k) {
        EXPECT_EQ(parsed.generators[k], family.generators()[k]) << "generator " << k;
        // The label keeps the written term order of the transcription.
        const auto& label = family.labels()[k];
        EXPECT_EQ(Polynomial({label.written[0], label.written[1]}), family.generators()[k]);
    }
}

INSTANTIATE_TEST_SUITE_P(SmallFamilies, GoldenFamily, ::testing::Values(0u, 1u));

TEST(Family, GoldenWrittenOrder)
{
    // The first written term of every line is the label's written[0].
    for (unsigned n : {0u, 1u}) {
        auto family = generate_family(n);
        auto text = read_text(golden_path("family" + std::to_string(n) + ".txt"));
        std::size_t k = 0, pos = 0;
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            auto line = text.substr(pos, end - pos);
            pos = end == std::string::npos ? text.size() : end + 1;
            if (line.empty() || line[0] == '#')
                continue;
            auto first = line.substr(0, line.find(" + "));
            EXPECT_EQ(fm(family, first), family.labels()[k].written[0]) << line;
            ++k;
        }
        EXPECT_EQ(k, family.generators().size());
    }
}

TEST(Family, LayoutIndices)
{
    auto family = generate_family(2);
    EXPECT_EQ(family.generators()[family.p_index(false, 1, 0, 1)], poly(*family.registry(), "b1_0^2*c1_0*f0 + c1_0*s0"));
    EXPECT_EQ(family.generators()[family.p_index(true, 7, 2)], poly(*family.registry(), "barq4_2*barc4_1*bars1 + barf2"));
    EXPECT_EQ(family.generators()[family.g_index(7)], poly(*family.registry(), "barc4_2*bars2 + s"));
    EXPECT_EQ(family.generators()[family.p_index(false, 8, 1, 3)],
              poly(*family.registry(), "q2_1*b3_0*b3_1*c3_1*f0 + q2_1*b2_0*c3_1*f0"));
}

using MonomialSet = std::set<Monomial, decltype(&canonical_less)>;

// Independent enumeration: every (m1, m2) with m1 + m2 = e for C, and every
// (j, m1, m2) with j + m1 + m2 <= e for D.
TEST(Targets, CountsAndMembers)
{
    for (unsigned n : {0u, 1u, 2u}) {
        auto family = generate_family(n);
        const auto en = e_small(n);
        const auto& g = family.globals();
        MonomialSet c(canonical_less), d(canonical_less);
        for (std::uint64_t a = 0; a <= en; ++a)
            c.insert(Monomial({{g.ell, 1}, {g.c, a}, {g.barc, en - a}}));
        for (std::uint64_t j = 0; j <= 1; ++j)
            for (std::uint64_t a = 0; a + j <= en; ++a)
                for (std::uint64_t b = 0; a + b + j <= en; ++b)
                    d.insert(Monomial({{g.ell, j}, {g.c, a}, {g.barc, b}}));
        auto sets = target_sets(family);
        EXPECT_EQ(MonomialSet(sets.C.begin(), sets.C.end(), canonical_less), c);
        EXPECT_EQ(MonomialSet(sets.D.begin(), sets.D.end(), canonical_less), d);
        EXPECT_EQ(count_C(n), c.size());
        EXPECT_EQ(count_D(n), d.size());
        EXPECT_GE(count_C(n), e(n));
        for (const auto& alpha : sets.C)
            EXPECT_EQ(alpha.degree(), en + 1);
    }
    EXPECT_EQ(count_D(0), 9);
    EXPECT_EQ(count_C(1), 5);
}

TEST(Targets, DLiesBelowC)
{
    auto family = generate_family(1);
    auto sets = target_sets(family);
    for (const auto& beta : sets.D)
        EXPECT_TRUE(std::any_of(sets.C.begin(), sets.C.end(),
                                [&](const Monomial& alpha) { return alpha != beta && mono_divides(beta, alpha); }));
}

TEST(Targets, CapsAreEnforced)
{
    auto family = generate_family(3);
    EXPECT_THROW(target_sets(family), BudgetExceeded);
    std::size_t seen = 0;
    for_each_C(family, [&](const Monomial&) { return ++seen < 10; });
    EXPECT_EQ(seen, 10u);
}

struct MayrCase {
    unsigned n, m, i;
    bool barred;
};

class MayrMeyer : public ::testing::TestWithParam<MayrCase> {};

TEST_P(MayrMeyer, BuildsVerifiesAndKeepsHeights)
{
    const auto [n, m, i, barred] = GetParam();
    auto family = generate_family(n);
    auto cert = build_mayr_meyer_certificate(family, m, i, barred);
    const auto& lv = family.level(m, barred);
    EXPECT_EQ(cert.start, Monomial({{lv.c[i - 1], 1}, {lv.s, 1}}));
    EXPECT_EQ(cert.end, Monomial({{lv.b[i - 1], e_small(m)}, {lv.c[i - 1], 1}, {lv.f, 1}}));
    EXPECT_TRUE(verify_certificate(cert, family.system()));
    for (const auto& step : cert.steps)
        EXPECT_EQ(family.labels()[step.gen_index].group, barred ? FamilyGroup::Pbar : FamilyGroup::P);
    auto report = check_height_invariants(family, cert);
    EXPECT_TRUE(report.ok()) << report.violations.front().property << " at " << report.violations.front().position;
}

std::vector<MayrCase> mayr_cases()
{
    std::vector<MayrCase> out;
    for (unsigned n = 0; n <= 2; ++n)
        for (unsigned m = 0; m <= n; ++m)
            for (unsigned i = 1; i <= 4; ++i)
                for (bool barred : {false, true})
                    out.push_back({n, m, i, barred});
    return out;
}

INSTANTIATE_TEST_SUITE_P(UpToTwo, MayrMeyer, ::testing::ValuesIn(mayr_cases()), [](const auto& info) {
    const auto& c = info.param;
    return "n" + std::to_string(c.n) + "_m" + std::to_string(c.m) + "_i" + std::to_string(c.i) +
           (c.barred ? "_bar" : "");
});

TEST(MayrMeyerCertificates, BaseCaseIsOneStep)
{
    auto family = generate_family(0);
    auto cert = build_mayr_meyer_certificate(family, 0, 1, false);
    ASSERT_EQ(cert.steps.size(), 1u);
    EXPECT_EQ(cert.end, fm(family, "b1_0^2*c1_0*f0"));
}

TEST(MayrMeyerCertificates, LengthsGrowWithLevel)
{
    auto family = generate_family(2);
    EXPECT_EQ(build_mayr_meyer_certificate(family, 0, 4, false).steps.size(), 1u);
    EXPECT_EQ(build_mayr_meyer_certificate(family, 1, 4, false).steps.size(), 17u);
    EXPECT_EQ(build_mayr_meyer_certificate(family, 2, 4, false).steps.size(), 197u);
}

TEST(MayrMeyerCertificates, RejectsBadParameters)
{
    auto family = generate_family(1);
    EXPECT_THROW(build_mayr_meyer_certificate(family, 2, 1, false), InvalidTarget);
    EXPECT_THROW(build_mayr_meyer_certificate(family, 0, 5, false), InvalidTarget);
}

TEST(TargetCertificates, EveryTargetReachesS)
{
    for (unsigned n : {0u, 1u}) {
        auto family = generate_family(n);
        const auto en = e_small(n);
        const auto s = Monomial::variable(family.globals().s);
        for (std::uint64_t a = 0; a <= en; ++a) {
            auto cert = build_target_certificate(family, a, en - a);
            const auto& g = family.globals();
            EXPECT_EQ(cert.start, Monomial({{g.ell, 1}, {g.c, a}, {g.barc, en - a}}));
            EXPECT_EQ(cert.end, s);
            EXPECT_TRUE(verify_certificate(cert, family.system())) << n << " " << a;
        }
    }
    auto family = generate_family(0);
    EXPECT_EQ(build_target_certificate(family, 2, 0).steps.size(), 9u);
    EXPECT_THROW(build_target_certificate(family, 2, 1), InvalidTarget);
}

TEST(Heights, Examples)
{
    auto family = generate_family(2);
    EXPECT_EQ(height(family, fm(family, "q1_1*c1_1*c1_0*s0")), 0u);
    EXPECT_EQ(height(family, fm(family, "c4_2*s2")), 2u);
    EXPECT_EQ(height(family, fm(family, "ell*c^2")), std::nullopt);
    EXPECT_EQ(height(family, fm(family, "barc2_1*bars1"), true), 1u);
    EXPECT_EQ(height(family, fm(family, "barc2_1*bars1"), false), std::nullopt);
}

bool has_property(const HeightReport& report, const std::string& property)
{
    return std::any_of(report.violations.begin(), report.violations.end(),
                       [&](const HeightViolation& v) { return v.property == property; });
}

TEST(Heights, FlagsDoubledControlVariable)
{
    auto family = generate_family(1);
    auto cert = scaled(build_mayr_meyer_certificate(family, 1, 2, false), fm(family, "s0"));
    ASSERT_TRUE(verify_certificate(cert, family.system()));
    EXPECT_TRUE(has_property(check_height_invariants(family, cert), "control-exclusive"));
}

TEST(Heights, FlagsExtraCounter)
{
    auto family = generate_family(1);
    auto cert = scaled(build_mayr_meyer_certificate(family, 1, 2, false), fm(family, "c3_1"));
    EXPECT_TRUE(has_property(check_height_invariants(family, cert), "counter-unique"));
}

TEST(Heights, FlagsForeignAndBrokenChains)
{
    auto family = generate_family(1);
    auto cert = build_mayr_meyer_certificate(family, 1, 2, false);
    auto foreign = cert;
    foreign.steps.push_back({family.g_index(3), Monomial{}, 0});
    EXPECT_TRUE(has_property(check_height_invariants(family, foreign), "foreign-generator"));
    auto broken = cert;
    broken.end = fm(family, "s1");
    EXPECT_TRUE(has_property(check_height_invariants(family, broken), "broken-chain"));
    DerivationCertificate loose{fm(family, "s1"), {}, fm(family, "s1")};
    EXPECT_TRUE(has_property(check_height_invariants(family, loose), "undefined-height"));
}

TEST(FamilyOrders, LexChain)
{
    auto family = generate_family(2);
    auto order = lex_variable_order(family);
    const auto& reg = *family.registry();
    EXPECT_EQ(reg.name(order.front()), "s");
    EXPECT_EQ(reg.name(order.back()), "barq4_2");
    std::vector<std::string> head;
    for (std::size_t k = 0; k < 9; ++k)
        head.push_back(reg.name(order[k]));
    EXPECT_EQ(head, (std::vector<std::string>{"s", "c", "barc", "ell", "b", "barb", "s0", "s1", "s2"}));
    auto lex = family_order(family, OrderKind::Lex);
    EXPECT_EQ(cmp_poly(lex, poly(*family.registry(), "s"), poly(*family.registry(), "ell*c^2")),
              std::strong_ordering::less);
}

TEST(FamilyOrders, WeightMapConstraints)
{
    auto family = generate_family(1);
    auto weights = weight_map(family);
    const auto& g = family.globals();
    std::map<std::uint32_t, std::uint32_t> index_of;
    std::set<std::uint32_t> used;
    for (const auto& w : weights) {
        index_of[w.var.value] = w.prime_index;
        EXPECT_TRUE(used.insert(w.prime_index).second) << "injective";
    }
    EXPECT_EQ(weights.size(), family.registry()->size());
    std::vector<VarId> chain{g.s, g.c, g.barc, g.ell, g.b, g.barb};
    for (std::size_t k = 1; k < chain.size(); ++k)
        EXPECT_LT(index_of[chain[k - 1].value], index_of[chain[k].value]);
    std::uint32_t max_global = 0, min_other = ~0u;
    for (auto [var, index] : index_of) {
        bool global = std::any_of(chain.begin(), chain.end(), [&](VarId v) { return v.value == var; });
        if (global)
            max_global = std::max(max_global, index);
        else
            min_other = std::min(min_other, index);
    }
    EXPECT_LT(max_global, min_other);
    auto order = family_order(family, OrderKind::Weighted);
    std::mt19937 rng(6);
    std::vector<Monomial> sample;
    for (int k = 0; k < 40; ++k)
        sample.push_back(random_monomial(rng, static_cast<std::uint32_t>(family.registry()->size()), 1));
    EXPECT_TRUE(check_order_axioms(order, sample).ok);
}

class FamilyCriteria : public ::testing::TestWithParam<OrderKind> {};

TEST_P(FamilyCriteria, CriterionOneUpToTwo)
{
    for (unsigned n : {0u, 1u, 2u}) {
        auto family = generate_family(n);
        EXPECT_TRUE(check_criterion_one(family, family_order(family, GetParam()))) << n;
    }
}

TEST_P(FamilyCriteria, CriterionTwoAtZero)
{
    auto family = generate_family(0);
    auto report = check_criterion_two_bounded(family, family_order(family, GetParam()), {12, 30, 2'000'000});
    EXPECT_EQ(report.targets, 9u);
    EXPECT_TRUE(report.ok());
}

INSTANTIATE_TEST_SUITE_P(ThreeOrders, FamilyCriteria,
                         ::testing::Values(OrderKind::Lex, OrderKind::DegLex, OrderKind::Weighted),
                         [](const auto& info) { return to_string(info.param); });

TEST(FamilyCriteria, AdversarialOrderFailsCriterionOne)
{
    auto family = generate_family(0);
    auto vars = lex_variable_order(family);
    std::reverse(vars.begin(), vars.end());
    EXPECT_FALSE(check_criterion_one(family, MonomialOrder::lex(vars)));
}

TEST(FamilySearch, CounterTargetReachesS)
{
    auto family = generate_family(0);
    auto lex = family_order(family, OrderKind::Lex);
    auto outcome = min_residue_search(fm(family, "ell*c^2"), family.system(), lex, {12, 30, 2'000'000});
    ASSERT_TRUE(outcome.violator.has_value());
    EXPECT_TRUE(verify_certificate(outcome.violator->certificate, family.system()));
    for (const char* g : {"ell*c", "barc^2"})
        EXPECT_FALSE(min_residue_search(fm(family, g), family.system(), lex, {12, 30, 2'000'000}).violator);
}

TEST(FamilySearch, IsolatedMonomialStaysPut)
{
    auto family = generate_family(0);
    auto set = ideal_res_bounded(fm(family, "c"), family.system(), {10, 30, 100'000});
    EXPECT_EQ(set.size(), 1u);
    EXPECT_FALSE(set.truncated());
}

TEST(FamilyResidues, BoundedEvidenceAtZero)
{
    auto family = generate_family(0);
    auto report = check_residue_properties(family, {12, 30, 2'000'000});
    EXPECT_EQ(report.targets, 9u);
    EXPECT_TRUE(report.ok());
}

} // namespace

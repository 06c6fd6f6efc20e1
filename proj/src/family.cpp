#include "gbx/family.hpp"

#include "gbx/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace gbx {

namespace mp = boost::multiprecision;

namespace {

constexpr unsigned kMaxFamily = 6;
constexpr unsigned kMaxCertificateLevel = 3;

Monomial mono(std::initializer_list<std::pair<VarId, Exponent>> factors)
{
    std::vector<Monomial::Factor> fs;
    for (auto [v, e] : factors)
        fs.push_back({v, e});
    return Monomial::from_factors(std::move(fs));
}

} // namespace

mp::cpp_int e(unsigned n)
{
    if (n > kMaxFamily)
        throw BudgetExceeded("family", "e(n) is capped at n = " + std::to_string(kMaxFamily));
    mp::cpp_int one = 1;
    return one << (std::size_t{1} << n);
}

std::uint64_t e_small(unsigned n)
{
    if (n > 5)
        throw BudgetExceeded("family", "e(n) does not fit 64 bits for n > 5");
    return std::uint64_t{1} << (std::uint64_t{1} << n);
}

std::size_t family_variable_count(unsigned n) { return 28 * (std::size_t{n} + 1) + 6; }

// ---------------------------------------------------------------------------
// generation

FamilyInstance::FamilyInstance(unsigned n, RegistryPtr registry, GlobalVars globals,
                               std::array<std::vector<LevelVars>, 2> levels, std::vector<GeneratorLabel> labels,
                               BinomialSystem system)
    : n_(n), registry_(std::move(registry)), globals_(globals), levels_(std::move(levels)),
      labels_(std::move(labels)), system_(std::move(system))
{
}

std::size_t FamilyInstance::p_index(bool barred, unsigned type, unsigned level, unsigned index) const
{
    std::size_t base = barred ? p_size() : 0;
    if (type == 1) {
        if (level != 0 || index < 1 || index > 4)
            throw std::invalid_argument("type 1 generators live at level 0 with index 1..4");
        return base + index - 1;
    }
    if (level < 1 || level > n_ || type < 2 || type > 8)
        throw std::invalid_argument("no counter generator of type " + std::to_string(type) + " at level " +
                                    std::to_string(level));
    base += 4 + 10 * std::size_t{level - 1};
    if (type == 8) {
        if (index < 1 || index > 4)
            throw std::invalid_argument("type 8 generators need an index in 1..4");
        return base + 6 + index - 1;
    }
    return base + type - 2;
}

FamilyInstance generate_family(unsigned n)
{
    if (n > kMaxFamily)
        throw BudgetExceeded("family", "generation is capped at n = " + std::to_string(kMaxFamily));

    auto registry = std::make_shared<VariableRegistry>();
    GlobalVars g{};
    g.s = registry->intern("s");
    g.c = registry->intern("c");
    g.barc = registry->intern("barc");
    g.ell = registry->intern("ell");
    g.b = registry->intern("b");
    g.barb = registry->intern("barb");

    std::array<std::vector<LevelVars>, 2> levels;
    for (int bar = 0; bar < 2; ++bar) {
        const std::string prefix = bar ? "bar" : "";
        auto& lv = levels[bar];
        lv.resize(n + 1);
        auto indexed = [&](const std::string& stem, unsigned k, unsigned i) {
            return registry->intern(prefix + stem + std::to_string(k) + "_" + std::to_string(i));
        };
        for (unsigned i = 0; i <= n; ++i)
            lv[i].s = registry->intern(prefix + "s" + std::to_string(i));
        for (unsigned i = 0; i <= n; ++i)
            lv[i].f = registry->intern(prefix + "f" + std::to_string(i));
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned i = 0; i <= n; ++i)
                lv[i].c[k - 1] = indexed("c", k, i);
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned i = 0; i <= n; ++i)
                lv[i].b[k - 1] = indexed("b", k, i);
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned i = 0; i <= n; ++i)
                lv[i].q[k - 1] = indexed("q", k, i);
    }

    std::vector<GeneratorLabel> labels;
    for (int bar = 0; bar < 2; ++bar) {
        const auto group = bar ? FamilyGroup::Pbar : FamilyGroup::P;
        const auto& L = levels[bar];
        for (unsigned i = 1; i <= 4; ++i) {
            const auto& z = L[0];
            labels.push_back({group, 1, 0, i,
                              {mono({{z.b[i - 1], 2}, {z.c[i - 1], 1}, {z.f, 1}}),
                               mono({{z.c[i - 1], 1}, {z.s, 1}})}});
        }
        for (unsigned m = 1; m <= n; ++m) {
            const auto& p = L[m - 1];
            const auto& cur = L[m];
            auto q = [&](unsigned k) { return std::pair<VarId, Exponent>{cur.q[k - 1], 1}; };
            auto c = [&](unsigned k) { return std::pair<VarId, Exponent>{p.c[k - 1], 1}; };
            auto b = [&](unsigned k) { return std::pair<VarId, Exponent>{p.b[k - 1], 1}; };
            std::pair<VarId, Exponent> sp{p.s, 1}, fp{p.f, 1};
            labels.push_back({group, 2, m, 0, {mono({q(1), c(1), sp}), mono({{cur.s, 1}})}});
            labels.push_back({group, 3, m, 0, {mono({q(2), c(2), sp}), mono({q(1), b(1), c(1), fp})}});
            labels.push_back({group, 4, m, 0, {mono({q(3), c(3), fp}), mono({q(2), c(2), fp})}});
            labels.push_back({group, 5, m, 0, {mono({q(3), b(1), c(3), sp}), mono({q(2), b(4), c(2), sp})}});
            labels.push_back({group, 6, m, 0, {mono({q(4), b(4), c(4), fp}), mono({q(3), c(3), sp})}});
            labels.push_back({group, 7, m, 0, {mono({q(4), c(4), sp}), mono({{cur.f, 1}})}});
            for (unsigned i = 1; i <= 4; ++i) {
                std::pair<VarId, Exponent> bi{cur.b[i - 1], 1}, ci{cur.c[i - 1], 1};
                labels.push_back({group, 8, m, i, {mono({q(2), b(3), bi, ci, fp}), mono({q(2), b(2), ci, fp})}});
            }
        }
    }

    const auto& top = levels[0][n];
    const auto& bartop = levels[1][n];
    std::pair<VarId, Exponent> ell{g.ell, 1}, b4{top.b[3], 1}, c4{top.c[3], 1}, sn{top.s, 1};
    auto G = [&](unsigned type, Monomial lhs, Monomial rhs) {
        labels.push_back({FamilyGroup::G, type, n, 0, {std::move(lhs), std::move(rhs)}});
    };
    G(1, mono({b4, ell, {g.b, 1}}), mono({ell, {g.c, 1}}));
    G(2, mono({b4, ell, {g.barb, 1}}), mono({ell, {g.barc, 1}}));
    G(3, mono({c4, {top.f, 1}}), mono({ell}));
    G(4, mono({{bartop.c[3], 1}, {bartop.f, 1}}), mono({c4, sn}));
    G(5, mono({{bartop.b[3], 1}, c4, sn}), mono({c4, sn, {g.b, 1}}));
    G(6, mono({{bartop.b[3], 1}, c4, sn}), mono({c4, sn, {g.barb, 1}}));
    G(7, mono({{bartop.c[3], 1}, {bartop.s, 1}}), mono({{g.s, 1}}));

    std::vector<Polynomial> polys;
    polys.reserve(labels.size());
    for (const auto& label : labels)
        polys.push_back(Polynomial{label.written[0], label.written[1]});
    GeneratorSet gens(std::move(polys));
    if (gens.size() != labels.size())
        throw std::logic_error("family generators are not pairwise distinct");
    return FamilyInstance(n, std::move(registry), g, std::move(levels), std::move(labels),
                          BinomialSystem(std::move(gens)));
}

// ---------------------------------------------------------------------------
// targets

namespace {

Monomial target(const GlobalVars& g, Exponent j, Exponent a, Exponent b)
{
    return mono({{g.ell, j}, {g.c, a}, {g.barc, b}});
}

} // namespace

mp::cpp_int count_C(unsigned n) { return e(n) + 1; }

mp::cpp_int count_D(unsigned n)
{
    // Pairs (a, b) with a + b <= t number (t+1)(t+2)/2.
    const mp::cpp_int en = e(n);
    auto pairs = [](const mp::cpp_int& t) { return (t + 1) * (t + 2) / 2; };
    return pairs(en) + pairs(en - 1);
}

void for_each_C(const FamilyInstance& family, const std::function<bool(const Monomial&)>& visit)
{
    const auto en = e_small(family.n());
    for (Exponent a = 0; a <= en; ++a)
        if (!visit(target(family.globals(), 1, en - a, a)))
            return;
}

void for_each_D(const FamilyInstance& family, const std::function<bool(const Monomial&)>& visit)
{
    const auto en = e_small(family.n());
    for (Exponent j = 0; j <= 1; ++j)
        for (Exponent total = 0; total + j <= en; ++total)
            for (Exponent a = 0; a <= total; ++a)
                if (!visit(target(family.globals(), j, total - a, a)))
                    return;
}

TargetSets target_sets(const FamilyInstance& family, std::size_t cap_c, std::size_t cap_d)
{
    if (count_C(family.n()) > cap_c)
        throw BudgetExceeded("targets", "C(" + std::to_string(family.n()) + ") has more than " +
                                            std::to_string(cap_c) + " elements");
    if (count_D(family.n()) > cap_d)
        throw BudgetExceeded("targets", "D(" + std::to_string(family.n()) + ") has more than " +
                                            std::to_string(cap_d) + " elements");
    TargetSets sets;
    for_each_C(family, [&](const Monomial& m) {
        sets.C.push_back(m);
        return true;
    });
    for_each_D(family, [&](const Monomial& m) {
        sets.D.push_back(m);
        return true;
    });
    return sets;
}

// ---------------------------------------------------------------------------
// certificates

namespace {

enum Direction : unsigned { Forward = 0, Backward = 1 };

// Extends a chain by rewriting with generators in their written orientation:
// Forward consumes the first written term, Backward the second.
class ChainBuilder {
public:
    ChainBuilder(const FamilyInstance& family, Monomial start) : family_(family), cert_{start, {}, start} {}

    void use(std::size_t gen, Direction dir, std::uint64_t times = 1)
    {
        const auto& label = family_.labels()[gen];
        const Monomial& from = label.written[dir];
        const unsigned side = family_.system().term(gen, 0) == from ? 0 : 1;
        for (std::uint64_t t = 0; t < times; ++t) {
            Monomial multiplier = cert_.end / from;
            cert_.end = multiplier * label.written[1 - dir];
            cert_.steps.push_back({gen, std::move(multiplier), side});
        }
    }

    void splice(const DerivationCertificate& sub) { append(cert_, scaled(sub, cert_.end / sub.start)); }

    DerivationCertificate take() { return std::move(cert_); }

private:
    const FamilyInstance& family_;
    DerivationCertificate cert_;
};

} // namespace

DerivationCertificate build_mayr_meyer_certificate(const FamilyInstance& family, unsigned m, unsigned i, bool barred)
{
    if (m > family.n())
        throw InvalidTarget("level " + std::to_string(m) + " exceeds n = " + std::to_string(family.n()));
    if (i < 1 || i > 4)
        throw InvalidTarget("counter index must lie in 1..4");
    if (m > kMaxCertificateLevel)
        throw BudgetExceeded("certificate", "counter chains are built up to level " +
                                                std::to_string(kMaxCertificateLevel));

    // chains[k-1] at the current level, starting from c_{k,lvl} s_lvl.
    std::array<DerivationCertificate, 4> chains;
    const auto& z = family.level(0, barred);
    for (unsigned k = 1; k <= 4; ++k) {
        ChainBuilder chain(family, mono({{z.c[k - 1], 1}, {z.s, 1}}));
        chain.use(family.p_index(barred, 1, 0, k), Backward);
        chains[k - 1] = chain.take();
    }

    for (unsigned lvl = 0; lvl < m; ++lvl) {
        const auto& up = family.level(lvl + 1, barred);
        const std::uint64_t em = e_small(lvl);
        auto type = [&](unsigned t, unsigned index = 0) { return family.p_index(barred, t, lvl + 1, index); };
        const auto& sub = chains;
        std::array<DerivationCertificate, 4> next;
        for (unsigned k = 1; k <= 4; ++k) {
            ChainBuilder chain(family, mono({{up.c[k - 1], 1}, {up.s, 1}}));
            chain.use(type(2), Backward);
            chain.splice(sub[0]);
            chain.use(type(3), Backward);
            // Each round moves e(lvl) copies of b_{k,lvl+1} in and trades one
            // b_{1,lvl} for one b_{4,lvl}.
            for (std::uint64_t round = 1; round <= em; ++round) {
                chain.splice(sub[1]);
                chain.use(type(8, k), Backward, em);
                chain.use(type(4), Backward);
                chain.splice(reversed(sub[2]));
                if (round < em)
                    chain.use(type(5), Forward);
            }
            chain.use(type(6), Backward);
            chain.splice(reversed(sub[3]));
            chain.use(type(7), Forward);
            next[k - 1] = chain.take();
        }
        chains = std::move(next);
    }
    return chains[i - 1];
}

DerivationCertificate build_target_certificate(const FamilyInstance& family, std::uint64_t m1, std::uint64_t m2)
{
    const auto en = e_small(family.n());
    if (m1 > en || m2 != en - m1)
        throw InvalidTarget("exponents " + std::to_string(m1) + " + " + std::to_string(m2) + " do not sum to e(" +
                            std::to_string(family.n()) + ") = " + std::to_string(en));
    const unsigned n = family.n();
    const auto& g = family.globals();
    ChainBuilder chain(family, target(g, 1, m1, m2));
    chain.use(family.g_index(1), Backward, m1);
    chain.use(family.g_index(2), Backward, m2);
    chain.use(family.g_index(3), Backward);
    chain.splice(reversed(build_mayr_meyer_certificate(family, n, 4, false)));
    chain.use(family.g_index(5), Backward, m1);
    chain.use(family.g_index(6), Backward, m2);
    chain.use(family.g_index(4), Backward);
    chain.splice(reversed(build_mayr_meyer_certificate(family, n, 4, true)));
    chain.use(family.g_index(7), Forward);
    return chain.take();
}

// ---------------------------------------------------------------------------
// heights

std::optional<unsigned> height(const FamilyInstance& family, const Monomial& alpha, bool barred)
{
    for (unsigned i = 0; i <= family.n(); ++i) {
        const auto& lv = family.level(i, barred);
        for (auto c : lv.c)
            if (alpha.exponent(c) > 0)
                return i;
    }
    return std::nullopt;
}

HeightReport check_height_invariants(const FamilyInstance& family, const DerivationCertificate& cert)
{
    HeightReport report;
    auto flag = [&](std::size_t pos, const char* property) { report.violations.push_back({pos, property}); };

    bool barred = false;
    if (!cert.steps.empty())
        barred = family.labels().at(cert.steps.front().gen_index).group == FamilyGroup::Pbar;
    const auto group = barred ? FamilyGroup::Pbar : FamilyGroup::P;
    for (std::size_t k = 0; k < cert.steps.size(); ++k)
        if (cert.steps[k].gen_index >= family.labels().size() ||
            family.labels()[cert.steps[k].gen_index].group != group)
            flag(k, "foreign-generator");

    auto chain = replay(cert, family.system());
    if (!chain || chain->back() != cert.end) {
        flag(0, "broken-chain");
        return report;
    }

    const auto top = height(family, cert.start, barred);
    if (!top) {
        flag(0, "undefined-height");
        return report;
    }
    const auto& top_vars = family.level(*top, barred);
    std::optional<unsigned> start_counter;
    for (unsigned l = 0; l < 4; ++l)
        if (cert.start.exponent(top_vars.c[l]) > 0)
            start_counter = l;
    Monomial final_form;
    if (start_counter && *top <= 5)
        final_form = mono({{top_vars.b[*start_counter], e_small(*top)},
                           {top_vars.c[*start_counter], 1},
                           {top_vars.f, 1}});

    std::optional<unsigned> previous;
    for (std::size_t pos = 0; pos < chain->size(); ++pos) {
        const Monomial& alpha = (*chain)[pos];
        const auto h = height(family, alpha, barred);
        report.heights.push_back(h);
        if (!h) {
            flag(pos, "undefined-height");
            previous.reset();
            continue;
        }
        if (previous && (*h > *previous + 1 || *previous > *h + 1))
            flag(pos, "height-step");
        previous = h;

        bool counters_ok = true;
        for (unsigned m = *h; m <= *top; ++m) {
            const auto& lv = family.level(m, barred);
            auto present = std::count_if(lv.c.begin(), lv.c.end(), [&](VarId v) { return alpha.exponent(v) > 0; });
            counters_ok = counters_ok && present == 1;
        }
        if (!counters_ok)
            flag(pos, "counter-unique");

        bool states_ok = true;
        for (unsigned m = *h; m < *top; ++m) {
            const auto& lv = family.level(m + 1, barred);
            auto present = std::count_if(lv.q.begin(), lv.q.end(), [&](VarId v) { return alpha.exponent(v) > 0; });
            states_ok = states_ok && present == 1;
        }
        if (!states_ok)
            flag(pos, "state-unique");

        bool control_ok = true;
        for (unsigned m = 0; m <= family.n(); ++m) {
            const auto& lv = family.level(m, barred);
            const Exponent total = alpha.exponent(lv.s) + alpha.exponent(lv.f);
            control_ok = control_ok && total == (m == *h ? 1 : 0);
        }
        if (!control_ok)
            flag(pos, "control-exclusive");

        if (alpha.exponent(top_vars.f) > 0 && alpha != final_form)
            flag(pos, "final-form");
    }
    return report;
}

// ---------------------------------------------------------------------------
// orders

std::vector<VarId> lex_variable_order(const FamilyInstance& family)
{
    // Interning follows the order, so VarId order is the order.
    std::vector<VarId> vars(family.registry()->size());
    for (std::uint32_t k = 0; k < vars.size(); ++k)
        vars[k] = VarId{k};
    return vars;
}

std::vector<MonomialOrder::WeightAssignment> weight_map(const FamilyInstance& family)
{
    std::vector<MonomialOrder::WeightAssignment> map;
    auto vars = lex_variable_order(family);
    for (std::uint32_t r = 0; r < vars.size(); ++r)
        map.push_back({vars[r], r + 1});
    return map;
}

MonomialOrder family_order(const FamilyInstance& family, OrderKind kind)
{
    if (kind == OrderKind::Weighted)
        return MonomialOrder::weighted(weight_map(family));
    return MonomialOrder::ranked(kind, lex_variable_order(family));
}

// ---------------------------------------------------------------------------
// criteria

bool check_criterion_one(const FamilyInstance& family, const MonomialOrder& order)
{
    const Monomial s = Monomial::variable(family.globals().s);
    bool ok = true;
    for_each_C(family, [&](const Monomial& alpha) {
        ok = order.less(s, alpha);
        return ok;
    });
    return ok;
}

CriterionTwoReport check_criterion_two_bounded(const FamilyInstance& family, const MonomialOrder& order,
                                               const SearchBounds& bounds)
{
    CriterionTwoReport report;
    for (const auto& g : target_sets(family).D) {
        auto outcome = min_residue_search(g, family.system(), order, bounds);
        ++report.targets;
        report.visited += outcome.visited;
        if (outcome.truncated)
            ++report.truncated_searches;
        if (outcome.violator)
            report.violators.push_back({g, outcome.violator->monomial, outcome.violator->certificate});
    }
    return report;
}

ResidueReport check_residue_properties(const FamilyInstance& family, const SearchBounds& bounds)
{
    ResidueReport report;
    const auto& g = family.globals();
    const auto& top = family.level(family.n());
    const Monomial sink = mono({{top.c[3], 1}, {top.s, 1}});
    const std::unordered_set<std::uint32_t> shape_vars{g.ell.value, g.c.value, g.barc.value};

    for (const auto& alpha : target_sets(family).D) {
        auto reach = ideal_res_bounded(alpha, family.system(), bounds);
        ++report.targets;
        report.visited += reach.size();
        if (reach.truncated())
            ++report.truncated_searches;
        if (alpha.exponent(g.ell) == 0 && reach.size() > 1)
            ++report.isolated_violations;
        for (std::size_t k = 0; k < reach.size(); ++k) {
            const Monomial& gamma = reach[k];
            if (sink.divides(gamma))
                ++report.sink_violations;
            if (gamma == alpha)
                continue;
            auto factors = gamma.factors();
            bool shaped = gamma.exponent(g.ell) == 1 && std::all_of(factors.begin(), factors.end(), [&](const auto& f) {
                              return shape_vars.count(f.var.value) != 0;
                          });
            if (shaped)
                ++report.shape_violations;
            if (gamma.degree() <= alpha.degree())
                ++report.degree_violations;
        }
    }
    return report;
}

LargeBasisReport check_large_basis(const FamilyInstance& family, const MonomialOrder& order,
                                   const BuchbergerOptions& options)
{
    LargeBasisReport report;
    auto basis = groebner_basis(family.generators(), order, options, &report.stats);
    const auto en = e_small(family.n());
    report.basis_size = basis.size();
    for (const auto& p : basis.gens())
        if (p.degree() >= en)
            ++report.high_degree_elements;

    auto heads = basis.head_terms();
    std::unordered_set<Monomial, MonomialHash> head_set(heads.begin(), heads.end());
    for_each_C(family, [&](const Monomial& alpha) {
        ++report.target_count;
        report.targets_in_head_terms += head_set.count(alpha);
        return true;
    });
    report.targets_are_head_terms = report.targets_in_head_terms == report.target_count;
    report.enough_high_degree = report.high_degree_elements >= en;
    report.enough_elements = report.basis_size >= en;
    return report;
}

} // namespace gbx

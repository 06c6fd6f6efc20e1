// Command-line front end. Exit codes: 0 success, 1 a check failed,
// 2 usage or input error, 3 a resource budget was exceeded.

#include "gbx/dominance.hpp"
#include "gbx/errors.hpp"
#include "gbx/family.hpp"
#include "gbx/groebner.hpp"
#include "gbx/order.hpp"
#include "gbx/report.hpp"
#include "gbx/rewriting.hpp"
#include "gbx/text_format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

using namespace gbx;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct LoadedIdeal {
    RegistryPtr registry;
    GeneratorSet generators;
    std::optional<FamilyInstance> family;
};

LoadedIdeal load_ideal(const std::string& source)
{
    if (source.starts_with("family:")) {
        auto text = source.substr(7);
        std::size_t used = 0;
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(std::stoul(text, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size())
            throw ConfigError("malformed family source '" + source + "'");
        auto family = generate_family(n);
        return {family.registry(), family.generators(), std::move(family)};
    }
    auto parsed = parse_ideal(read_text(source));
    LoadedIdeal loaded{parsed.registry, std::move(parsed.generators), std::nullopt};
    if (parsed.family_n)
        loaded.family = generate_family(*parsed.family_n);
    return loaded;
}

struct OrderFlags {
    std::string kind = "lex";
    std::string var_order;
    std::string weights;
};

void add_order_flags(CLI::App* cmd, OrderFlags& flags)
{
    cmd->add_option("--order", flags.kind, "lex, deglex, degrevlex or weighted")->required();
    cmd->add_option("--var-order", flags.var_order, "file listing variables from least to greatest");
    cmd->add_option("--weights", flags.weights, "file of '<variable> <prime_index>' lines");
}

MonomialOrder build_order(const OrderFlags& flags, const LoadedIdeal& ideal)
{
    const auto kind = parse_order_kind(flags.kind);
    const auto& registry = *ideal.registry;
    if (kind == OrderKind::Weighted) {
        if (!flags.weights.empty())
            return MonomialOrder::weighted(parse_weights(read_text(flags.weights), registry));
        if (!ideal.family)
            throw ConfigError("--order weighted needs --weights unless the ideal is a family");
        // Family weights, carried over by variable name.
        std::vector<MonomialOrder::WeightAssignment> map;
        const auto& family_registry = *ideal.family->registry();
        for (const auto& w : weight_map(*ideal.family))
            map.push_back({registry.at(family_registry.name(w.var)), w.prime_index});
        return MonomialOrder::weighted(map);
    }
    std::vector<VarId> order;
    if (!flags.var_order.empty()) {
        order = parse_var_order(read_text(flags.var_order), registry);
        if (order.size() != registry.size())
            throw ConfigError("--var-order must list all " + std::to_string(registry.size()) + " variables");
    } else {
        for (std::uint32_t k = 0; k < registry.size(); ++k)
            order.push_back(VarId{k});
    }
    return MonomialOrder::ranked(kind, order);
}

struct BudgetFlags {
    std::size_t pairs = Budget{}.max_pairs;
    std::size_t basis = Budget{}.max_basis;
    Exponent degree = Budget{}.max_degree;
    unsigned threads = 1;
    std::string selection = "normal";
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags)
{
    cmd->add_option("--budget-pairs", flags.pairs, "cap on reduced S-pairs")->envname("GBX_BUDGET_PAIRS");
    cmd->add_option("--budget-deg", flags.degree, "cap on basis element degree")->envname("GBX_BUDGET_DEG");
    cmd->add_option("--budget-basis", flags.basis, "cap on basis size")->envname("GBX_BUDGET_BASIS");
    cmd->add_option("--threads", flags.threads, "S-pairs reduced concurrently")->check(CLI::Range(1u, 256u));
    cmd->add_option("--selection", flags.selection, "pair selection: normal or fifo")
        ->check(CLI::IsMember({"normal", "fifo"}));
}

BuchbergerOptions buchberger_options(const BudgetFlags& flags)
{
    BuchbergerOptions options;
    options.budget = {flags.pairs, flags.basis, flags.degree};
    options.threads = flags.threads;
    options.selection = flags.selection == "fifo" ? PairSelection::Fifo : PairSelection::Normal;
    return options;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void print_lines(const std::vector<Polynomial>& polys, const VariableRegistry& registry, const MonomialOrder& order)
{
    for (const auto& p : polys)
        std::cout << format_polynomial(p, registry, order) << "\n";
}

// ---------------------------------------------------------------------------
// check

struct CheckFlags {
    unsigned n = 0;
    std::string order = "lex";
    bool full_gb = false;
    std::string format = "text";
    Exponent max_degree = SearchBounds{}.max_degree;
    std::size_t max_steps = SearchBounds{}.max_steps;
    BudgetFlags budget;
};

int run_check(const CheckFlags& flags)
{
    RunReport report;
    const auto kind = parse_order_kind(flags.order);
    auto family = generate_family(flags.n);
    auto order = family_order(family, kind);
    const SearchBounds bounds{flags.max_degree, flags.max_steps, SearchBounds{}.max_visited};

    report.set("family.n", std::uint64_t{flags.n});
    report.set("family.order", to_string(kind));
    report.set("family.generators", std::uint64_t{family.generators().size()});
    report.set("family.variables", std::uint64_t{family.registry()->size()});
    report.check("family.size", family.generators().size() == 20 * std::size_t{flags.n} + 15);

    auto clock = std::chrono::steady_clock::now();
    report.check("criterion_one", check_criterion_one(family, order));
    report.set_seconds("criterion_one.seconds", seconds_since(clock));

    const bool small_targets = count_D(flags.n) <= kTargetCapD;
    report.set("targets.C", count_C(flags.n).str());
    report.set("targets.D", count_D(flags.n).str());
    if (small_targets) {
        clock = std::chrono::steady_clock::now();
        auto two = check_criterion_two_bounded(family, order, bounds);
        report.set("criterion_two.targets", std::uint64_t{two.targets});
        report.set("criterion_two.violators", std::uint64_t{two.violators.size()});
        report.set("criterion_two.truncated_searches", std::uint64_t{two.truncated_searches});
        report.set("criterion_two.evidence", two.truncated_searches ? "bounded" : "exhaustive");
        report.set_seconds("criterion_two.seconds", seconds_since(clock));
        report.check("criterion_two", two.ok());

        clock = std::chrono::steady_clock::now();
        auto residues = check_residue_properties(family, bounds);
        report.set("residues.targets", std::uint64_t{residues.targets});
        report.set("residues.isolated_violations", std::uint64_t{residues.isolated_violations});
        report.set("residues.sink_violations", std::uint64_t{residues.sink_violations});
        report.set("residues.shape_violations", std::uint64_t{residues.shape_violations});
        report.set("residues.degree_violations", std::uint64_t{residues.degree_violations});
        report.set_seconds("residues.seconds", seconds_since(clock));
        report.check("residues", residues.ok());
    }

    clock = std::chrono::steady_clock::now();
    bool chains_ok = true, heights_ok = true;
    for (unsigned m = 0; m <= std::min(flags.n, 2u); ++m)
        for (bool barred : {false, true})
            for (unsigned i = 1; i <= 4; ++i) {
                auto cert = build_mayr_meyer_certificate(family, m, i, barred);
                chains_ok = chains_ok && verify_certificate(cert, family.system());
                heights_ok = heights_ok && check_height_invariants(family, cert).ok();
            }
    report.check("counter_chains", chains_ok);
    report.check("height_invariants", heights_ok);
    if (flags.n <= 1) {
        bool targets_ok = true;
        const auto en = e_small(flags.n);
        for (std::uint64_t a = 0; a <= en; ++a) {
            auto cert = build_target_certificate(family, a, en - a);
            targets_ok = targets_ok && verify_certificate(cert, family.system()) &&
                         cert.end == Monomial::variable(family.globals().s);
        }
        report.check("target_chains", targets_ok);
    }
    report.set_seconds("certificates.seconds", seconds_since(clock));

    if (flags.full_gb) {
        clock = std::chrono::steady_clock::now();
        auto options = buchberger_options(flags.budget);
        options.check_binomial_closure = true;
        auto large = check_large_basis(family, order, options);
        report.set("gb.size", std::uint64_t{large.basis_size});
        report.set("gb.high_degree_elements", std::uint64_t{large.high_degree_elements});
        report.set("gb.targets_in_head_terms", std::uint64_t{large.targets_in_head_terms});
        report.set("gb.pairs_reduced", std::uint64_t{large.stats.pairs_reduced});
        report.set("gb.binomial_violations", std::uint64_t{large.stats.binomial_violations});
        report.set_seconds("gb.seconds", seconds_since(clock));
        report.check("gb.targets_are_head_terms", large.targets_are_head_terms);
        report.check("gb.enough_high_degree", large.enough_high_degree);
        report.check("gb.enough_elements", large.enough_elements);
        report.check("gb.binomial_closure", large.stats.binomial_violations == 0);
    }

    std::cout << (flags.format == "kv" ? report.render_kv() : report.render_text());
    return report.all_passed() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// derive

DerivationCertificate derive_target(const FamilyInstance& family, const std::string& spec)
{
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ConfigError("target must look like mayr:<m>,<i>[,bar] or C:<m1>,<m2>");
    auto kind = spec.substr(0, colon);
    std::vector<std::string> fields;
    std::size_t pos = colon + 1;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        if (comma == std::string::npos)
            comma = spec.size();
        fields.push_back(spec.substr(pos, comma - pos));
        pos = comma + 1;
    }
    auto number = [&](const std::string& field) {
        std::size_t used = 0;
        std::uint64_t value = 0;
        try {
            value = std::stoull(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != field.size())
            throw ConfigError("malformed number '" + field + "' in target '" + spec + "'");
        return value;
    };
    if (kind == "mayr" && (fields.size() == 2 || (fields.size() == 3 && fields[2] == "bar")))
        return build_mayr_meyer_certificate(family, static_cast<unsigned>(number(fields[0])),
                                            static_cast<unsigned>(number(fields[1])), fields.size() == 3);
    if (kind == "C" && fields.size() == 2)
        return build_target_certificate(family, number(fields[0]), number(fields[1]));
    throw ConfigError("target must look like mayr:<m>,<i>[,bar] or C:<m1>,<m2>");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Groebner bases and binomial rewriting over GF(2)"};
    app.require_subcommand(1);
    std::function<int()> action;

    // gen
    unsigned gen_n = 0;
    std::string gen_out = "-";
    auto* gen = app.add_subcommand("gen", "emit the family F(n)");
    gen->add_option("--n", gen_n, "family parameter")->required();
    gen->add_option("-o,--output", gen_out, "output file");
    gen->callback([&] { action = [&] { write_text(gen_out, format_family(generate_family(gen_n))); return kOk; }; });

    // gb
    std::string ideal_src;
    OrderFlags order_flags;
    BudgetFlags budget_flags;
    auto* gb = app.add_subcommand("gb", "print the reduced Groebner basis");
    gb->add_option("--ideal", ideal_src, "ideal file, '-' or family:<n>")->required();
    add_order_flags(gb, order_flags);
    add_budget_flags(gb, budget_flags);
    gb->callback([&] {
        action = [&] {
            auto ideal = load_ideal(ideal_src);
            auto order = build_order(order_flags, ideal);
            auto basis = groebner_basis(ideal.generators, order, buchberger_options(budget_flags));
            print_lines({basis.gens().begin(), basis.gens().end()}, *ideal.registry, order);
            return kOk;
        };
    });

    // nf / member
    std::string poly_text;
    auto* nf = app.add_subcommand("nf", "normal form modulo the reduced basis");
    auto* member = app.add_subcommand("member", "ideal membership");
    for (auto* cmd : {nf, member}) {
        cmd->add_option("--ideal", ideal_src, "ideal file, '-' or family:<n>")->required();
        cmd->add_option("--poly", poly_text, "polynomial")->required();
        add_order_flags(cmd, order_flags);
        add_budget_flags(cmd, budget_flags);
    }
    auto reduce = [&](bool membership) {
        auto ideal = load_ideal(ideal_src);
        auto f = parse_polynomial(poly_text, *ideal.registry);
        auto order = build_order(order_flags, ideal);
        auto basis = groebner_basis(ideal.generators, order, buchberger_options(budget_flags));
        auto r = normal_form(f, basis.gens(), order);
        if (membership)
            std::cout << (r.is_zero() ? "true" : "false") << "\n";
        else
            std::cout << format_polynomial(r, *ideal.registry, order) << "\n";
        return kOk;
    };
    nf->callback([&] { action = [&] { return reduce(false); }; });
    member->callback([&] { action = [&] { return reduce(true); }; });

    // residues
    Exponent residue_degree = 0;
    auto* residues = app.add_subcommand("residues", "residual polynomials up to a degree");
    residues->add_option("--ideal", ideal_src, "ideal file, '-' or family:<n>")->required();
    residues->add_option("--max-deg", residue_degree, "degree bound")->required();
    add_order_flags(residues, order_flags);
    add_budget_flags(residues, budget_flags);
    residues->callback([&] {
        action = [&] {
            auto ideal = load_ideal(ideal_src);
            auto order = build_order(order_flags, ideal);
            auto basis = groebner_basis(ideal.generators, order, buchberger_options(budget_flags));
            auto set = residual_set_bounded(basis, residue_degree);
            std::sort(set.begin(), set.end(),
                      [&](const Polynomial& a, const Polynomial& b) { return cmp_poly(order, b, a) < 0; });
            print_lines(set, *ideal.registry, order);
            return kOk;
        };
    });

    // derive
    unsigned derive_n = 0;
    std::string derive_target_spec, derive_out = "-";
    auto* derive = app.add_subcommand("derive", "build a derivation certificate in F(n)");
    derive->add_option("--family", derive_n, "family parameter")->required();
    derive->add_option("--target", derive_target_spec, "mayr:<m>,<i>[,bar] or C:<m1>,<m2>")->required();
    derive->add_option("-o,--output", derive_out, "output file");
    derive->callback([&] {
        action = [&] {
            auto family = generate_family(derive_n);
            auto cert = derive_target(family, derive_target_spec);
            write_text(derive_out, format_certificate(cert, *family.registry()));
            return kOk;
        };
    });

    // verify-cert
    std::string cert_path;
    auto* verify = app.add_subcommand("verify-cert", "check a derivation certificate");
    verify->add_option("--ideal", ideal_src, "ideal file, '-' or family:<n>")->required();
    verify->add_option("--cert", cert_path, "certificate file")->required();
    verify->callback([&] {
        action = [&] {
            auto ideal = load_ideal(ideal_src);
            auto cert = parse_certificate(read_text(cert_path), *ideal.registry);
            BinomialSystem system(ideal.generators);
            bool ok = verify_certificate(cert, system);
            std::cout << (ok ? "valid" : "invalid") << " (" << cert.steps.size() << " steps)\n";
            return ok ? kOk : kCheckFailed;
        };
    });

    // search
    std::string from_text, search_cert_out;
    SearchBounds search_bounds;
    auto* search = app.add_subcommand("search", "look for a smaller monomial reachable by rewriting");
    search->add_option("--ideal", ideal_src, "ideal file, '-' or family:<n>")->required();
    search->add_option("--from", from_text, "start monomial")->required();
    search->add_option("--max-deg", search_bounds.max_degree, "degree bound");
    search->add_option("--max-steps", search_bounds.max_steps, "rewrite depth bound");
    search->add_option("--max-visited", search_bounds.max_visited, "visited monomial bound");
    search->add_option("--cert-out", search_cert_out, "write the witness chain here");
    add_order_flags(search, order_flags);
    search->callback([&] {
        action = [&] {
            auto ideal = load_ideal(ideal_src);
            auto from = parse_monomial(from_text, *ideal.registry);
            auto order = build_order(order_flags, ideal);
            auto outcome = min_residue_search(from, BinomialSystem(ideal.generators), order, search_bounds);
            RunReport report;
            report.set("visited", std::uint64_t{outcome.visited});
            report.set("truncated", outcome.truncated);
            if (outcome.violator) {
                report.set("smaller", to_string(outcome.violator->monomial, *ideal.registry));
                report.set("steps", std::uint64_t{outcome.violator->certificate.steps.size()});
                if (!search_cert_out.empty())
                    write_text(search_cert_out, format_certificate(outcome.violator->certificate, *ideal.registry));
            } else {
                report.set("smaller", "none");
            }
            std::cout << report.render_kv();
            return kOk;
        };
    });

    // check
    CheckFlags check_flags;
    auto* check = app.add_subcommand("check", "run the family criteria and invariants");
    check->add_option("--family", check_flags.n, "family parameter")->required();
    check->add_option("--order", check_flags.order, "lex, deglex, degrevlex or weighted")->required();
    check->add_flag("--full-gb", check_flags.full_gb, "also compute the reduced basis of F(n)");
    check->add_option("--format", check_flags.format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
    check->add_option("--max-deg", check_flags.max_degree, "search degree bound");
    check->add_option("--max-steps", check_flags.max_steps, "search depth bound");
    add_budget_flags(check, check_flags.budget);
    check->callback([&] { action = [&] { return run_check(check_flags); }; });

    // min-elems
    std::string monomials_path;
    auto* min_elems = app.add_subcommand("min-elems", "minimal monomials under divisibility");
    min_elems->add_option("--monomials", monomials_path, "file with one monomial per line")->required();
    min_elems->callback([&] {
        action = [&] {
            VariableRegistry registry;
            auto monomials = parse_monomial_list(read_text(monomials_path), registry);
            for (const auto& m : minimal_elements(monomials))
                std::cout << to_string(m, registry) << "\n";
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return action();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

#pragma once

#include "gbx/groebner.hpp"
#include "gbx/order.hpp"
#include "gbx/ring.hpp"
#include "gbx/text_format.hpp"

#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace gbx {

// Readable gtest failure messages; variables print as v<id>.
inline void PrintTo(const Monomial& m, std::ostream* os)
{
    if (m.is_one())
        *os << "1";
    const char* sep = "";
    for (const auto& f : m.factors()) {
        *os << sep << "v" << f.var.value;
        if (f.exp > 1)
            *os << "^" << f.exp;
        sep = "*";
    }
}

inline void PrintTo(const Polynomial& p, std::ostream* os)
{
    if (p.is_zero())
        *os << "0";
    const char* sep = "";
    for (const auto& t : p.terms()) {
        *os << sep;
        PrintTo(t, os);
        sep = " + ";
    }
}

} // namespace gbx

namespace gbx::test {

// A registry whose interning order is x0 < x1 < ... (or the given names).
inline VariableRegistry make_registry(const std::vector<std::string>& names)
{
    VariableRegistry registry;
    for (const auto& name : names)
        registry.intern(name);
    return registry;
}

inline std::vector<VarId> interning_order(const VariableRegistry& registry)
{
    std::vector<VarId> vars;
    for (std::uint32_t k = 0; k < registry.size(); ++k)
        vars.push_back(VarId{k});
    return vars;
}

inline Monomial mono(VariableRegistry& registry, const std::string& text) { return parse_monomial(text, registry); }
inline Polynomial poly(VariableRegistry& registry, const std::string& text) { return parse_polynomial(text, registry); }

inline Monomial random_monomial(std::mt19937& rng, std::uint32_t vars, Exponent max_exp)
{
    std::uniform_int_distribution<Exponent> exp(0, max_exp);
    std::vector<Monomial::Factor> factors;
    for (std::uint32_t v = 0; v < vars; ++v)
        factors.push_back({VarId{v}, exp(rng)});
    return Monomial::from_factors(std::move(factors));
}

inline Polynomial random_polynomial(std::mt19937& rng, std::uint32_t vars, Exponent max_exp, std::size_t max_terms)
{
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::vector<Monomial> terms;
    for (std::size_t k = count(rng); k > 0; --k)
        terms.push_back(random_monomial(rng, vars, max_exp));
    return Polynomial::from_terms(std::move(terms));
}

// A binomial with two distinct terms.
inline Polynomial random_binomial(std::mt19937& rng, std::uint32_t vars, Exponent max_exp)
{
    for (;;) {
        auto a = random_monomial(rng, vars, max_exp);
        auto b = random_monomial(rng, vars, max_exp);
        if (!(a == b))
            return Polynomial{a, b};
    }
}

inline MonomialOrder order_of(OrderKind kind, std::uint32_t vars)
{
    std::vector<VarId> ids;
    for (std::uint32_t v = 0; v < vars; ++v)
        ids.push_back(VarId{v});
    if (kind != OrderKind::Weighted)
        return MonomialOrder::ranked(kind, ids);
    std::vector<MonomialOrder::WeightAssignment> weights;
    for (std::uint32_t v = 0; v < vars; ++v)
        weights.push_back({VarId{v}, v + 1});
    return MonomialOrder::weighted(weights);
}

} // namespace gbx::test

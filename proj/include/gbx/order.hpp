#pragma once

#include "gbx/ring.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbx {

enum class OrderKind { Lex, DegLex, DegRevLex, Weighted };

std::string to_string(OrderKind kind);
/// Accepts `lex`, `deglex`, `degrevlex`, `weighted`; throws ConfigError otherwise.
OrderKind parse_order_kind(std::string_view text);

/// A total monomial order.
///
/// Rank-based kinds (lex, deglex, degrevlex) take the variables listed from
/// least to greatest. The weighted kind gives every variable the weight
/// sqrt(p_k), where p_k is the k-th prime (k >= 1) assigned to it; distinct
/// primes make the weights linearly independent over Q, so two monomials have
/// equal weight only when they are equal.
class MonomialOrder {
public:
    static MonomialOrder lex(std::span<const VarId> least_to_greatest);
    static MonomialOrder deglex(std::span<const VarId> least_to_greatest);
    static MonomialOrder degrevlex(std::span<const VarId> least_to_greatest);
    static MonomialOrder ranked(OrderKind kind, std::span<const VarId> least_to_greatest);

    struct WeightAssignment {
        VarId var;
        std::uint32_t prime_index;
    };
    static MonomialOrder weighted(std::span<const WeightAssignment> assignment);

    OrderKind kind() const noexcept { return kind_; }
    /// Ordered variables: least to greatest by rank, or by increasing weight.
    std::span<const VarId> variables() const noexcept { return vars_; }
    std::optional<std::uint32_t> rank(VarId var) const noexcept;
    std::optional<std::uint32_t> prime_index(VarId var) const noexcept;
    bool covers(const Monomial& m) const noexcept;

    /// Throws ConfigError if either monomial has a variable the order does not know.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    MonomialOrder() = default;

    std::uint32_t rank_of(VarId var) const;
    std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) const;
    std::strong_ordering compare_revlex_tail(const Monomial& a, const Monomial& b) const;
    std::strong_ordering compare_weighted(const Monomial& a, const Monomial& b) const;

    static constexpr std::uint32_t kUnranked = 0xffffffffu;

    OrderKind kind_ = OrderKind::Lex;
    std::vector<VarId> vars_;
    std::vector<std::uint32_t> rank_;   // indexed by VarId::value
    std::vector<std::uint32_t> prime_index_;
    std::vector<std::uint64_t> prime_;
    std::vector<double> weight_;
};

/// The k-th prime, k >= 1.
std::uint64_t nth_prime(std::uint32_t k);

/// Sign of sum(coefficient_i * sqrt(radicand_i)) computed exactly with integer
/// interval bounds, doubling the working precision until the sign is certain.
/// Returns 0 only when every coefficient is 0. Radicands must not be perfect
/// squares (ConfigError otherwise).
int signed_sqrt_sum_sign(std::span<const std::pair<std::int64_t, std::uint64_t>> terms);

std::strong_ordering cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b);

/// The order-greatest term; throws ZeroPolynomial for 0.
const Monomial& highest_term(const MonomialOrder& order, const Polynomial& p);

/// Terms of p, greatest first.
std::vector<Monomial> terms_descending(const MonomialOrder& order, const Polynomial& p);

/// Extension to polynomials: compare head terms, then the remaining tails.
/// The zero polynomial is the unique minimum.
std::strong_ordering cmp_poly(const MonomialOrder& order, const Polynomial& p, const Polynomial& q);

using MonomialComparator = std::function<std::strong_ordering(const Monomial&, const Monomial&)>;

struct OrderAxiomReport {
    bool ok = true;
    std::string axiom;                      // name of the first violated axiom
    std::vector<Monomial> witness;          // monomials exhibiting the violation
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
};

/// Checks totality, antisymmetry, transitivity, minimality of 1 and
/// compatibility with multiplication over all pairs and triples of `sample`.
/// Stops at the first violation.
OrderAxiomReport check_order_axioms(const MonomialComparator& compare, std::span<const Monomial> sample);
OrderAxiomReport check_order_axioms(const MonomialOrder& order, std::span<const Monomial> sample);

/// Same checks, restricted to the given triples (and the pairs inside them).
OrderAxiomReport check_order_axioms_on_triples(const MonomialComparator& compare,
                                               std::span<const std::array<Monomial, 3>> triples);

} // namespace gbx

#pragma once

#include "gbx/order.hpp"
#include "gbx/ring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gbx {

/// Ordered list of nonzero, pairwise distinct generators.
class GeneratorSet {
public:
    GeneratorSet() = default;
    /// Zero polynomials and repeated generators are dropped; first occurrences keep their position.
    explicit GeneratorSet(std::vector<Polynomial> gens);

    std::span<const Polynomial> gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool empty() const noexcept { return gens_.empty(); }
    const Polynomial& operator[](std::size_t i) const { return gens_[i]; }
    auto begin() const noexcept { return gens_.begin(); }
    auto end() const noexcept { return gens_.end(); }

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<Polynomial> gens_;
};

struct Budget {
    std::size_t max_pairs = 2'000'000;
    std::size_t max_basis = 50'000;
    Exponent max_degree = 4096;
};

enum class PairSelection {
    Normal, ///< smallest lcm under the active order first
    Fifo,   ///< creation order
};

struct BuchbergerOptions {
    PairSelection selection = PairSelection::Normal;
    /// Gebauer-Moeller pair pruning and retirement of elements with redundant heads.
    bool chain_criterion = true;
    /// Count S-polynomials and remainders that are neither 0 nor binomials.
    bool check_binomial_closure = false;
    Budget budget;
    /// Number of S-pairs reduced concurrently per round. The reduced basis does not depend on it.
    unsigned threads = 1;
};

struct BuchbergerStats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t product_criterion_skips = 0;
    std::size_t chain_criterion_skips = 0;
    std::size_t zero_reductions = 0;
    std::size_t basis_size = 0;
    std::size_t binomial_violations = 0;
    Exponent max_degree = 0;
};

/// Full reduction of f: the result has no term divisible by a head term of G,
/// and f minus the result lies in the ideal of G. Among applicable reducers the
/// one with the greatest head term is used, ties going to the lower index.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GeneratorSet& basis, const MonomialOrder& order);

/// (L/HT(f)) f + (L/HT(g)) g with L = lcm(HT(f), HT(g)).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// A Groebner basis of the ideal generated by F (not necessarily reduced).
/// Throws BudgetExceeded when a cap in `options.budget` is hit.
GeneratorSet buchberger(const GeneratorSet& generators, const MonomialOrder& order,
                        const BuchbergerOptions& options = {}, BuchbergerStats* stats = nullptr);

/// The unique reduced Groebner basis of an ideal for a fixed order, sorted by
/// head term, greatest first.
class ReducedBasis {
public:
    std::span<const Polynomial> gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const MonomialOrder& order() const noexcept { return order_; }
    std::vector<Monomial> head_terms() const;

    friend ReducedBasis reduce_basis(const GeneratorSet& basis, const MonomialOrder& order);

private:
    ReducedBasis(std::vector<Polynomial> gens, MonomialOrder order);

    std::vector<Polynomial> gens_;
    MonomialOrder order_;
};

/// Minimalizes and interreduces a Groebner basis.
ReducedBasis reduce_basis(const GeneratorSet& basis, const MonomialOrder& order);

/// buchberger followed by reduce_basis.
ReducedBasis groebner_basis(const GeneratorSet& generators, const MonomialOrder& order,
                            const BuchbergerOptions& options = {}, BuchbergerStats* stats = nullptr);

bool ideal_member(const Polynomial& f, const ReducedBasis& basis);

/// Monomials of degree <= max_degree over the order's variables that no head
/// term divides. Throws BudgetExceeded once more than `cap` are found.
std::vector<Monomial> standard_monomials(const ReducedBasis& basis, Exponent max_degree, std::size_t cap);

/// Every nonzero polynomial supported on standard monomials of degree <=
/// max_degree, i.e. the residual polynomials up to that degree. At most
/// `max_standard` (hard limit 20) standard monomials are allowed.
std::vector<Polynomial> residual_set_bounded(const ReducedBasis& basis, Exponent max_degree,
                                             std::size_t max_standard = 20);

struct AntichainReport {
    bool passed = false;
    std::size_t basis_size = 0;
    std::size_t distinct_head_terms = 0;
    std::size_t minimal_head_terms = 0;
};

/// Head terms of a reduced basis are pairwise incomparable under divisibility,
/// so they are exactly their own minimal elements and there is one per element.
AntichainReport check_head_term_antichain(std::span<const Polynomial> basis, const MonomialOrder& order);
AntichainReport check_head_term_antichain(const ReducedBasis& basis);

} // namespace gbx

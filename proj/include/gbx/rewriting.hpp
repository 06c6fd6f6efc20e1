#pragma once

// Membership in a binomial ideal as monomial rewriting: alpha and alpha' are
// congruent iff a chain alpha = a_0, ..., a_r = alpha' exists in which each
// a_k + a_{k+1} is a monomial multiple of one generator.

#include "gbx/groebner.hpp"
#include "gbx/order.hpp"
#include "gbx/ring.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace gbx {

/// A generator set in which every element has exactly two terms.
class BinomialSystem {
public:
    /// Throws NotBinomial naming the first offending index.
    explicit BinomialSystem(GeneratorSet generators);

    const GeneratorSet& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    /// side 0 / 1 is the first / second term of generator `index` in canonical term order.
    const Monomial& term(std::size_t index, unsigned side) const { return gens_[index].terms()[side]; }

private:
    GeneratorSet gens_;
};

struct RewriteStep {
    std::size_t gen_index = 0;
    Monomial multiplier;
    /// Term of the generator matched by the current monomial: current = multiplier * term(side).
    unsigned side = 0;

    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct DerivationCertificate {
    Monomial start;
    std::vector<RewriteStep> steps;
    Monomial end;

    friend bool operator==(const DerivationCertificate&, const DerivationCertificate&) = default;
};

struct Rewrite {
    Monomial result;
    RewriteStep step;
};

/// Every monomial reachable from alpha in one step, in generator order, side 0 before side 1.
std::vector<Rewrite> one_step(const Monomial& alpha, const BinomialSystem& system);

/// The monomial after applying `step` to `current`, or nullopt if the step does not apply.
std::optional<Monomial> apply_step(const Monomial& current, const RewriteStep& step, const BinomialSystem& system);

/// The monomial chain a_0..a_r, or nullopt as soon as a step fails to apply.
std::optional<std::vector<Monomial>> replay(const DerivationCertificate& cert, const BinomialSystem& system);

/// Each step applies, the chain ends at `end`, and the sum of the step
/// polynomials multiplier * generator equals start + end.
bool verify_certificate(const DerivationCertificate& cert, const BinomialSystem& system);

/// The same chain walked from end to start.
DerivationCertificate reversed(const DerivationCertificate& cert);
/// Every monomial of the chain multiplied by `factor`.
DerivationCertificate scaled(const DerivationCertificate& cert, const Monomial& factor);
/// Appends `tail`; requires cert.end == tail.start (std::invalid_argument otherwise).
void append(DerivationCertificate& cert, const DerivationCertificate& tail);

struct SearchBounds {
    Exponent max_degree = 12;
    std::size_t max_steps = 30;
    std::size_t max_visited = 2'000'000;
};

/// Monomials reachable from a start within bounds, in breadth-first order.
class ReachableSet {
public:
    std::size_t size() const noexcept { return nodes_.size(); }
    const Monomial& operator[](std::size_t index) const { return nodes_[index].monomial; }
    std::size_t depth(std::size_t index) const { return nodes_[index].depth; }
    std::optional<std::size_t> find(const Monomial& m) const;
    /// A shortest chain from the start to element `index`.
    DerivationCertificate certificate(std::size_t index) const;
    /// Some edge left the bounds (degree, depth or visited cap).
    bool truncated() const noexcept { return truncated_; }

    std::vector<Monomial> monomials() const;

private:
    friend ReachableSet ideal_res_bounded(const Monomial&, const BinomialSystem&, const SearchBounds&);
    friend struct ReachableBuilder;

    struct Node {
        Monomial monomial;
        std::size_t parent;
        RewriteStep step;
        std::size_t depth;
    };
    std::vector<Node> nodes_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
    bool truncated_ = false;
};

ReachableSet ideal_res_bounded(const Monomial& alpha, const BinomialSystem& system, const SearchBounds& bounds);

struct SearchOutcome {
    struct Violator {
        Monomial monomial;
        DerivationCertificate certificate;
    };
    std::optional<Violator> violator;
    bool truncated = false;
    std::size_t visited = 0;
};

/// Looks for a monomial reachable from g that is strictly smaller than g under
/// `order`. The first one met in breadth-first order is returned.
SearchOutcome min_residue_search(const Monomial& g, const BinomialSystem& system, const MonomialOrder& order,
                                 const SearchBounds& bounds);

} // namespace gbx

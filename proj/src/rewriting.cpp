#include "gbx/rewriting.hpp"

#include "gbx/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbx {

BinomialSystem::BinomialSystem(GeneratorSet generators) : gens_(std::move(generators))
{
    for (std::size_t k = 0; k < gens_.size(); ++k)
        if (gens_[k].size() != 2)
            throw NotBinomial("generator " + std::to_string(k) + " has " + std::to_string(gens_[k].size()) +
                              " terms");
}

std::vector<Rewrite> one_step(const Monomial& alpha, const BinomialSystem& system)
{
    std::vector<Rewrite> out;
    for (std::size_t k = 0; k < system.size(); ++k) {
        for (unsigned side = 0; side < 2; ++side) {
            const auto& from = system.term(k, side);
            if (!from.divides(alpha))
                continue;
            Monomial multiplier = alpha / from;
            Monomial result = multiplier * system.term(k, 1 - side);
            out.push_back({std::move(result), {k, std::move(multiplier), side}});
        }
    }
    return out;
}

std::optional<Monomial> apply_step(const Monomial& current, const RewriteStep& step, const BinomialSystem& system)
{
    if (step.gen_index >= system.size() || step.side > 1)
        return std::nullopt;
    if (step.multiplier * system.term(step.gen_index, step.side) != current)
        return std::nullopt;
    return step.multiplier * system.term(step.gen_index, 1 - step.side);
}

std::optional<std::vector<Monomial>> replay(const DerivationCertificate& cert, const BinomialSystem& system)
{
    std::vector<Monomial> chain{cert.start};
    chain.reserve(cert.steps.size() + 1);
    for (const auto& step : cert.steps) {
        auto next = apply_step(chain.back(), step, system);
        if (!next)
            return std::nullopt;
        chain.push_back(std::move(*next));
    }
    return chain;
}

bool verify_certificate(const DerivationCertificate& cert, const BinomialSystem& system)
{
    auto chain = replay(cert, system);
    if (!chain || chain->back() != cert.end)
        return false;
    // The running sum telescopes to start + a_k, so it never exceeds two terms.
    Polynomial sum;
    for (const auto& step : cert.steps)
        sum += step.multiplier * system.generators()[step.gen_index];
    return sum == Polynomial(cert.start) + Polynomial(cert.end);
}

DerivationCertificate reversed(const DerivationCertificate& cert)
{
    DerivationCertificate out{cert.end, {}, cert.start};
    out.steps.reserve(cert.steps.size());
    for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it)
        out.steps.push_back({it->gen_index, it->multiplier, 1 - it->side});
    return out;
}

DerivationCertificate scaled(const DerivationCertificate& cert, const Monomial& factor)
{
    DerivationCertificate out{cert.start * factor, {}, cert.end * factor};
    out.steps.reserve(cert.steps.size());
    for (const auto& step : cert.steps)
        out.steps.push_back({step.gen_index, step.multiplier * factor, step.side});
    return out;
}

void append(DerivationCertificate& cert, const DerivationCertificate& tail)
{
    if (cert.end != tail.start)
        throw std::invalid_argument("certificate chains do not meet");
    cert.steps.insert(cert.steps.end(), tail.steps.begin(), tail.steps.end());
    cert.end = tail.end;
}

// ---------------------------------------------------------------------------
// bounded breadth-first search

std::optional<std::size_t> ReachableSet::find(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

DerivationCertificate ReachableSet::certificate(std::size_t index) const
{
    DerivationCertificate cert{nodes_.front().monomial, {}, nodes_[index].monomial};
    for (std::size_t k = index; k != 0; k = nodes_[k].parent)
        cert.steps.push_back(nodes_[k].step);
    std::reverse(cert.steps.begin(), cert.steps.end());
    return cert;
}

std::vector<Monomial> ReachableSet::monomials() const
{
    std::vector<Monomial> out;
    out.reserve(nodes_.size());
    for (const auto& node : nodes_)
        out.push_back(node.monomial);
    return out;
}

struct ReachableBuilder {
    // Expands nodes in insertion order. `stop` is called on every new node and
    // ends the search early when it returns true.
    template <typename Stop>
    static void run(ReachableSet& set, const Monomial& alpha, const BinomialSystem& system,
                    const SearchBounds& bounds, Stop&& stop)
    {
        set.nodes_.push_back({alpha, 0, {}, 0});
        set.index_.emplace(alpha, 0);
        if (stop(0))
            return;
        for (std::size_t head = 0; head < set.nodes_.size(); ++head) {
            auto rewrites = one_step(set.nodes_[head].monomial, system);
            const std::size_t depth = set.nodes_[head].depth;
            for (auto& rw : rewrites) {
                if (set.index_.count(rw.result))
                    continue;
                if (depth >= bounds.max_steps || rw.result.degree() > bounds.max_degree ||
                    set.nodes_.size() >= bounds.max_visited) {
                    set.truncated_ = true;
                    continue;
                }
                std::size_t id = set.nodes_.size();
                set.index_.emplace(rw.result, id);
                set.nodes_.push_back({std::move(rw.result), head, std::move(rw.step), depth + 1});
                if (stop(id))
                    return;
            }
        }
    }
};

ReachableSet ideal_res_bounded(const Monomial& alpha, const BinomialSystem& system, const SearchBounds& bounds)
{
    ReachableSet set;
    ReachableBuilder::run(set, alpha, system, bounds, [](std::size_t) { return false; });
    return set;
}

SearchOutcome min_residue_search(const Monomial& g, const BinomialSystem& system, const MonomialOrder& order,
                                 const SearchBounds& bounds)
{
    ReachableSet set;
    std::optional<std::size_t> found;
    ReachableBuilder::run(set, g, system, bounds, [&](std::size_t id) {
        if (order.less(set[id], g)) {
            found = id;
            return true;
        }
        return false;
    });

    SearchOutcome outcome;
    outcome.visited = set.size();
    outcome.truncated = set.truncated();
    if (found)
        outcome.violator = SearchOutcome::Violator{set[*found], set.certificate(*found)};
    return outcome;
}

} // namespace gbx

#include "gbx/dominance.hpp"

#include <algorithm>
#include <limits>

namespace gbx {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adjacency, std::vector<std::size_t>& match_left,
             std::vector<std::size_t>& match_right, std::vector<char>& seen)
{
    for (auto v : adjacency[u]) {
        if (seen[v])
            continue;
        seen[v] = 1;
        if (match_right[v] == npos || augment(match_right[v], adjacency, match_left, match_right, seen)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

} // namespace

std::size_t maximum_bipartite_matching(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t right_count,
                                       std::vector<std::size_t>& match_left)
{
    match_left.assign(adjacency.size(), npos);
    std::vector<std::size_t> match_right(right_count, npos);
    std::vector<char> seen(right_count);
    std::size_t size = 0;
    for (std::size_t u = 0; u < adjacency.size(); ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        if (augment(u, adjacency, match_left, match_right, seen))
            ++size;
    }
    return size;
}

bool tri_leq_mono(const Monomial& t, const Monomial& s) noexcept { return t.divides(s); }

std::optional<DominanceWitness> tri_leq_poly(const Polynomial& p, const Polynomial& q)
{
    auto source = p.terms();
    auto target = q.terms();
    if (source.size() > target.size())
        return std::nullopt;

    std::vector<std::vector<std::size_t>> adjacency(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        for (std::size_t j = 0; j < target.size(); ++j)
            if (source[i].divides(target[j]))
                adjacency[i].push_back(j);
        if (adjacency[i].empty())
            return std::nullopt;
    }

    std::vector<std::size_t> match;
    if (maximum_bipartite_matching(adjacency, target.size(), match) != source.size())
        return std::nullopt;

    DominanceWitness witness;
    for (std::size_t i = 0; i < source.size(); ++i)
        witness.mapping.emplace_back(i, match[i]);
    return witness;
}

bool upclosure_contains(std::span<const Polynomial> generators, const Polynomial& s)
{
    return std::any_of(generators.begin(), generators.end(),
                       [&](const Polynomial& p) { return tri_leq_poly(p, s).has_value(); });
}

std::vector<Monomial> minimal_elements(std::span<const Monomial> set)
{
    std::vector<Monomial> sorted(set.begin(), set.end());
    // Degree-first order: a proper divisor always precedes its multiples.
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Monomial> minimal;
    for (const auto& m : sorted) {
        bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& k) { return k.divides(m); });
        if (!dominated)
            minimal.push_back(m);
    }
    return minimal;
}

} // namespace gbx

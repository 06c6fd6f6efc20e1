#pragma once

// The componentwise-exponent partial order on monomials (which is divisibility)
// and its lift to polynomials: p is dominated by q when some injective map
// sends every term of p to a term of q that it divides.

#include "gbx/ring.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gbx {

struct DominanceWitness {
    /// (index into p.terms(), index into q.terms()); injective on targets.
    std::vector<std::pair<std::size_t, std::size_t>> mapping;
};

bool tri_leq_mono(const Monomial& t, const Monomial& s) noexcept;

/// Decided by maximum bipartite matching on the divisibility graph between
/// the terms of p and q; a witness exists iff the matching saturates p.
std::optional<DominanceWitness> tri_leq_poly(const Polynomial& p, const Polynomial& q);

bool upclosure_contains(std::span<const Polynomial> generators, const Polynomial& s);

/// Members of `set` not strictly dominated by another member (duplicates collapse).
std::vector<Monomial> minimal_elements(std::span<const Monomial> set);

/// Size of a maximum matching in a bipartite graph given as left adjacency lists.
/// `match_left[u]` receives the matched right vertex or npos.
std::size_t maximum_bipartite_matching(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t right_count,
                                       std::vector<std::size_t>& match_left);

} // namespace gbx

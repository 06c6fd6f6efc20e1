#pragma once

// The binomial family F(n): counter machinery P (levels 0..n), its barred copy
// Pbar, and seven glue binomials G linking both copies to the global
// variables s, ell, c, barc, b, barb.
//
// Variable names: globals `s ell c barc b barb`; per level i in [0, n] and
// k in [1, 4]: `s<i> f<i> q<k>_<i> c<k>_<i> b<k>_<i>`, barred ones prefixed
// with `bar`.

#include "gbx/groebner.hpp"
#include "gbx/order.hpp"
#include "gbx/rewriting.hpp"
#include "gbx/ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbx {

/// 2^(2^n). Throws BudgetExceeded for n > 6.
boost::multiprecision::cpp_int e(unsigned n);
/// e(n) as a machine integer; throws BudgetExceeded for n > 5.
std::uint64_t e_small(unsigned n);

struct LevelVars {
    VarId s, f;
    std::array<VarId, 4> q, c, b; // index k-1 for k in [1, 4]
};

struct GlobalVars {
    VarId s, ell, c, barc, b, barb;
};

enum class FamilyGroup { P, Pbar, G };

/// Where a generator comes from. P/Pbar: `type` in [1, 8] at `level`, with
/// `index` in [1, 4] for types 1 and 8. G: `type` in [1, 7].
struct GeneratorLabel {
    FamilyGroup group;
    unsigned type;
    unsigned level;
    unsigned index;
    /// The two terms in the order the construction writes them.
    std::array<Monomial, 2> written;
};

class FamilyInstance {
public:
    unsigned n() const noexcept { return n_; }
    const RegistryPtr& registry() const noexcept { return registry_; }
    const GeneratorSet& generators() const noexcept { return system_.generators(); }
    const BinomialSystem& system() const noexcept { return system_; }
    const std::vector<GeneratorLabel>& labels() const noexcept { return labels_; }

    /// F is laid out as P, then Pbar, then G.
    std::size_t p_size() const noexcept { return 4 + 10 * std::size_t{n_}; }
    std::span<const Polynomial> P() const { return generators().gens().subspan(0, p_size()); }
    std::span<const Polynomial> Pbar() const { return generators().gens().subspan(p_size(), p_size()); }
    std::span<const Polynomial> G() const { return generators().gens().subspan(2 * p_size(), 7); }

    /// Index in F of a P (or Pbar) generator: type 1 or 8 need `index`.
    std::size_t p_index(bool barred, unsigned type, unsigned level, unsigned index = 0) const;
    /// Index in F of the G generator of the given type in [1, 7].
    std::size_t g_index(unsigned type) const { return 2 * p_size() + type - 1; }

    const GlobalVars& globals() const noexcept { return globals_; }
    const LevelVars& level(unsigned i, bool barred = false) const { return levels_[barred ? 1 : 0].at(i); }

private:
    friend FamilyInstance generate_family(unsigned n);
    FamilyInstance(unsigned n, RegistryPtr registry, GlobalVars globals, std::array<std::vector<LevelVars>, 2> levels,
                   std::vector<GeneratorLabel> labels, BinomialSystem system);

    unsigned n_;
    RegistryPtr registry_;
    GlobalVars globals_;
    std::array<std::vector<LevelVars>, 2> levels_;
    std::vector<GeneratorLabel> labels_;
    BinomialSystem system_;
};

/// Throws BudgetExceeded for n > 6. Variables are interned from least to
/// greatest under the family lex order, so VarId order is that order.
FamilyInstance generate_family(unsigned n);

/// Number of variables of F(n): 28(n+1) + 6.
std::size_t family_variable_count(unsigned n);

// ---------------------------------------------------------------------------
// targets

/// C = { ell c^a barc^b : a + b = e(n) } and
/// D = { ell^j c^a barc^b : j in {0,1}, j + a + b <= e(n) }.
struct TargetSets {
    std::vector<Monomial> C;
    std::vector<Monomial> D;
};

inline constexpr std::size_t kTargetCapC = 65'537;
inline constexpr std::size_t kTargetCapD = 400;

/// Throws BudgetExceeded when either set would exceed its cap.
TargetSets target_sets(const FamilyInstance& family, std::size_t cap_c = kTargetCapC, std::size_t cap_d = kTargetCapD);

/// Visits C (then D) without materializing; the visitor returns false to stop.
void for_each_C(const FamilyInstance& family, const std::function<bool(const Monomial&)>& visit);
void for_each_D(const FamilyInstance& family, const std::function<bool(const Monomial&)>& visit);

/// |C(n)| = e(n) + 1 and |D(n)| = sum over j of the pairs with a + b <= e(n) - j.
boost::multiprecision::cpp_int count_C(unsigned n);
boost::multiprecision::cpp_int count_D(unsigned n);

// ---------------------------------------------------------------------------
// certificates

/// Chain from c_{im} s_m to b_{im}^{e(m)} c_{im} f_m using only P (or Pbar)
/// generators, built by induction on m. Requires m <= n, i in [1, 4] and
/// m <= 3 (the chain length grows doubly exponentially).
DerivationCertificate build_mayr_meyer_certificate(const FamilyInstance& family, unsigned m, unsigned i, bool barred);

/// Chain from ell c^{m1} barc^{m2} down to s over all of F. Throws
/// InvalidTarget unless m1 + m2 = e(n).
DerivationCertificate build_target_certificate(const FamilyInstance& family, std::uint64_t m1, std::uint64_t m2);

// ---------------------------------------------------------------------------
// heights along counter derivations

/// Least level i such that some c_{ki} (or barc_{ki}) divides alpha.
std::optional<unsigned> height(const FamilyInstance& family, const Monomial& alpha, bool barred = false);

struct HeightViolation {
    std::size_t position; ///< index into the monomial chain a_0..a_r
    std::string property;
};

struct HeightReport {
    std::vector<std::optional<unsigned>> heights;
    std::vector<HeightViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks, on every monomial of a chain starting at c_{jt} s_t (t = its height):
/// height-step: consecutive heights differ by at most 1;
/// counter-unique: for k <= m <= t exactly one c_{lm} divides;
/// state-unique: for k <= m < t exactly one q_{l(m+1)} divides;
/// control-exclusive: exactly one of s_k, f_k divides, to the first power, and
/// no s_m or f_m with m != k does;
/// final-form: any monomial divisible by f_t equals b_{jt}^{e(t)} c_{jt} f_t;
/// plus undefined-height, foreign-generator and broken-chain.
HeightReport check_height_invariants(const FamilyInstance& family, const DerivationCertificate& cert);

// ---------------------------------------------------------------------------
// orders

/// Variables least to greatest: s c barc ell b barb, S, F, C1..C4, B1..B4,
/// Q1..Q4, then the barred groups in the same pattern; level 0 first in each group.
std::vector<VarId> lex_variable_order(const FamilyInstance& family);

/// Prime indices: the variable at position r (0-based) of lex_variable_order gets the (r+1)-th prime.
std::vector<MonomialOrder::WeightAssignment> weight_map(const FamilyInstance& family);

/// lex/deglex/degrevlex over lex_variable_order, or weighted over weight_map.
MonomialOrder family_order(const FamilyInstance& family, OrderKind kind);

// ---------------------------------------------------------------------------
// criteria

/// s is below every element of C.
bool check_criterion_one(const FamilyInstance& family, const MonomialOrder& order);

struct CriterionTwoReport {
    struct Violator {
        Monomial target;
        Monomial smaller;
        DerivationCertificate certificate;
    };
    std::size_t targets = 0;
    std::size_t truncated_searches = 0;
    std::size_t visited = 0;
    std::vector<Violator> violators;
    bool ok() const noexcept { return violators.empty(); }
};

/// For each g in D, searches for a monomial below g reachable from g.
CriterionTwoReport check_criterion_two_bounded(const FamilyInstance& family, const MonomialOrder& order,
                                               const SearchBounds& bounds);

struct ResidueReport {
    std::size_t targets = 0;
    std::size_t truncated_searches = 0;
    std::size_t visited = 0;
    std::size_t isolated_violations = 0;   ///< ell does not divide alpha, yet alpha rewrites
    std::size_t sink_violations = 0;       ///< some residue divisible by c4_n s_n
    std::size_t shape_violations = 0;      ///< another residue of the form ell c^a barc^b
    std::size_t degree_violations = 0;     ///< another residue of degree <= deg(alpha)
    bool ok() const noexcept
    {
        return isolated_violations + sink_violations + shape_violations + degree_violations == 0;
    }
};

/// Bounded checks on the residues of every element of D.
ResidueReport check_residue_properties(const FamilyInstance& family, const SearchBounds& bounds);

struct LargeBasisReport {
    std::size_t basis_size = 0;
    std::size_t high_degree_elements = 0; ///< elements of degree >= e(n)
    std::size_t targets_in_head_terms = 0;
    std::size_t target_count = 0;
    bool targets_are_head_terms = false;
    bool enough_high_degree = false;
    bool enough_elements = false;
    BuchbergerStats stats;
    bool ok() const noexcept { return targets_are_head_terms && enough_high_degree && enough_elements; }
};

/// Computes the reduced basis of F(n) and checks that C(n) lies among its head
/// terms and that at least e(n) elements (of degree >= e(n)) exist.
LargeBasisReport check_large_basis(const FamilyInstance& family, const MonomialOrder& order,
                                   const BuchbergerOptions& options = {});

} // namespace gbx

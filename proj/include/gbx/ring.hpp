#pragma once

// Sparse monomials and polynomials over GF(2).
//
// A Monomial is a sorted list of (variable, exponent) factors; the empty list
// is the monomial 1. A Polynomial is a set of monomials: over GF(2) every
// present term has coefficient 1, so addition is symmetric difference.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gbx {

struct VarId {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(VarId, VarId) = default;
};

using Exponent = std::uint64_t;

/// Dense name <-> id table. Interning is serialized; lookups may run concurrently.
class VariableRegistry {
public:
    VariableRegistry() = default;
    explicit VariableRegistry(std::span<const std::string> names);

    VariableRegistry(const VariableRegistry& other);
    VariableRegistry& operator=(const VariableRegistry& other);

    /// Returns the id of `name`, appending it if unknown. Throws ParseError on a
    /// malformed identifier.
    VarId intern(std::string_view name);

    std::optional<VarId> find(std::string_view name) const;
    VarId at(std::string_view name) const;
    std::string name(VarId id) const;
    std::size_t size() const;
    std::vector<std::string> names() const;

    static bool is_identifier(std::string_view name);

private:
    mutable std::shared_mutex mutex_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> lookup_;
};

using RegistryPtr = std::shared_ptr<VariableRegistry>;

class Monomial {
public:
    struct Factor {
        VarId var;
        Exponent exp;

        friend bool operator==(const Factor&, const Factor&) = default;
    };

    Monomial() = default;

    /// Builds from arbitrary factors: merges repeated variables and drops zero exponents.
    Monomial(std::initializer_list<Factor> factors);
    static Monomial from_factors(std::vector<Factor> factors);
    static Monomial variable(VarId var, Exponent exp = 1);

    std::span<const Factor> factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    Exponent exponent(VarId var) const noexcept;
    Exponent degree() const noexcept;

    /// True iff every exponent of *this is <= the matching exponent of `other`.
    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    Monomial& operator*=(const Monomial& other);
    /// Exact quotient; throws DivisionError unless `b` divides `a`.
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Canonical (order-independent) comparison: total degree first, then the
    /// dense exponent vectors lexicographically with VarId 0 most significant.
    friend std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) noexcept;

    std::size_t hash() const noexcept;

private:
    std::vector<Factor> factors_;
};

inline bool canonical_less(const Monomial& a, const Monomial& b) noexcept
{
    return canonical_compare(a, b) < 0;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Product of two monomials. Throws std::overflow_error if an exponent would overflow.
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b) noexcept;
Monomial mono_div(const Monomial& a, const Monomial& b);

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Monomial term);
    Polynomial(std::initializer_list<Monomial> terms);

    /// Terms appearing an even number of times cancel.
    static Polynomial from_terms(std::vector<Monomial> terms);

    /// Terms in ascending canonical order.
    std::span<const Monomial> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool contains(const Monomial& t) const;

    /// Maximum term degree; throws UndefinedDegree for 0.
    Exponent degree() const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    Polynomial& operator+=(const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Monomial& m, const Polynomial& p);

    /// Adds a single term in place (toggles its presence).
    void toggle(const Monomial& t);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Canonical total order on term sets, used for deterministic containers.
    friend std::strong_ordering canonical_compare(const Polynomial& p, const Polynomial& q) noexcept;

    std::size_t hash() const noexcept;

private:
    std::vector<Monomial> terms_;
};

struct PolynomialHash {
    std::size_t operator()(const Polynomial& p) const noexcept { return p.hash(); }
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial mono_scale(const Monomial& m, const Polynomial& p);
Exponent degree(const Monomial& m) noexcept;
Exponent poly_degree(const Polynomial& p);

/// `x^2*y`, `1` for the unit monomial.
std::string to_string(const Monomial& m, const VariableRegistry& registry);
/// Terms in descending canonical order joined by ` + `; `0` for the zero polynomial.
std::string to_string(const Polynomial& p, const VariableRegistry& registry);

} // namespace gbx

template <>
struct std::hash<gbx::Monomial> {
    std::size_t operator()(const gbx::Monomial& m) const noexcept { return m.hash(); }
};

#pragma once

// Line-oriented text formats.
//
// Ideal file: one polynomial per line, terms joined by `+`, factors `x^3`
// joined by `*`, `1` the empty monomial, `0` the zero polynomial. `#` starts a
// comment. A header line `# vars: a, b c` interns those names first, in that
// order; `# family n=<k>` marks output of the family generator.
//
// Certificate file:
//   cert v1
//   start <monomial>
//   step <gen_index> <multiplier> <side>
//   end <monomial>

#include "gbx/groebner.hpp"
#include "gbx/order.hpp"
#include "gbx/rewriting.hpp"
#include "gbx/ring.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gbx {

class FamilyInstance;

/// Parse errors carry 1-based line and column; `line` positions the text.
Monomial parse_monomial(std::string_view text, VariableRegistry& registry, std::size_t line = 1);
Polynomial parse_polynomial(std::string_view text, VariableRegistry& registry, std::size_t line = 1);

struct ParsedIdeal {
    RegistryPtr registry;
    GeneratorSet generators;
    /// Set when the header marks the text as family output.
    std::optional<unsigned> family_n;
};

/// Interns into `registry` when given, else into a fresh one.
ParsedIdeal parse_ideal(std::string_view text, RegistryPtr registry = nullptr);

/// Header `# vars:` line listing every registry name, then one generator per line.
std::string format_ideal(const GeneratorSet& gens, const VariableRegistry& registry);
/// `# family n=<n>` followed by format_ideal of F(n).
std::string format_family(const FamilyInstance& family);

/// Terms greatest first under `order`.
std::string format_polynomial(const Polynomial& p, const VariableRegistry& registry, const MonomialOrder& order);

std::string format_certificate(const DerivationCertificate& cert, const VariableRegistry& registry);
DerivationCertificate parse_certificate(std::string_view text, VariableRegistry& registry);

/// One monomial per non-comment line.
std::vector<Monomial> parse_monomial_list(std::string_view text, VariableRegistry& registry);

/// Names from least to greatest, separated by whitespace or commas. Every name
/// must already be known; each may appear once.
std::vector<VarId> parse_var_order(std::string_view text, const VariableRegistry& registry);

/// Lines `<name> <prime_index>`.
std::vector<MonomialOrder::WeightAssignment> parse_weights(std::string_view text, const VariableRegistry& registry);

/// Whole-file helpers; `-` reads stdin. Throw ConfigError when unreadable.
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

} // namespace gbx

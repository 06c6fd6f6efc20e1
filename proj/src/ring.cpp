#include "gbx/ring.hpp"

#include "gbx/errors.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace gbx {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column)
{
}

BudgetExceeded::BudgetExceeded(std::string resource, std::string detail)
    : Error("budget exceeded (" + resource + "): " + detail), resource_(std::move(resource))
{
}

// ---------------------------------------------------------------------------
// VariableRegistry

VariableRegistry::VariableRegistry(std::span<const std::string> names)
{
    for (const auto& n : names)
        intern(n);
}

VariableRegistry::VariableRegistry(const VariableRegistry& other)
{
    std::shared_lock lock(other.mutex_);
    names_ = other.names_;
    lookup_ = other.lookup_;
}

VariableRegistry& VariableRegistry::operator=(const VariableRegistry& other)
{
    if (this == &other)
        return *this;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> lookup;
    {
        std::shared_lock lock(other.mutex_);
        names = other.names_;
        lookup = other.lookup_;
    }
    std::unique_lock lock(mutex_);
    names_ = std::move(names);
    lookup_ = std::move(lookup);
    return *this;
}

bool VariableRegistry::is_identifier(std::string_view name)
{
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (name.empty() || !alpha(name.front()))
        return false;
    return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

VarId VariableRegistry::intern(std::string_view name)
{
    if (!is_identifier(name))
        throw ParseError("malformed variable name '" + std::string(name) + "'");
    std::unique_lock lock(mutex_);
    auto it = lookup_.find(std::string(name));
    if (it != lookup_.end())
        return VarId{it->second};
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    lookup_.emplace(std::string(name), id);
    return VarId{id};
}

std::optional<VarId> VariableRegistry::find(std::string_view name) const
{
    std::shared_lock lock(mutex_);
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end())
        return std::nullopt;
    return VarId{it->second};
}

VarId VariableRegistry::at(std::string_view name) const
{
    if (auto id = find(name))
        return *id;
    throw ConfigError("unknown variable '" + std::string(name) + "'");
}

std::string VariableRegistry::name(VarId id) const
{
    std::shared_lock lock(mutex_);
    if (id.value >= names_.size())
        throw ConfigError("variable id " + std::to_string(id.value) + " is not registered");
    return names_[id.value];
}

std::size_t VariableRegistry::size() const
{
    std::shared_lock lock(mutex_);
    return names_.size();
}

std::vector<std::string> VariableRegistry::names() const
{
    std::shared_lock lock(mutex_);
    return names_;
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

Exponent checked_add(Exponent a, Exponent b)
{
    if (a > std::numeric_limits<Exponent>::max() - b)
        throw std::overflow_error("monomial exponent overflow");
    return a + b;
}

} // namespace

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(from_factors(std::vector<Factor>(factors)))
{
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
    Monomial m;
    for (const auto& f : factors) {
        if (f.exp == 0)
            continue;
        if (!m.factors_.empty() && m.factors_.back().var == f.var)
            m.factors_.back().exp = checked_add(m.factors_.back().exp, f.exp);
        else
            m.factors_.push_back(f);
    }
    return m;
}

Monomial Monomial::variable(VarId var, Exponent exp)
{
    Monomial m;
    if (exp > 0)
        m.factors_.push_back({var, exp});
    return m;
}

Exponent Monomial::exponent(VarId var) const noexcept
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const Factor& f, VarId v) { return f.var < v; });
    return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

Exponent Monomial::degree() const noexcept
{
    Exponent d = 0;
    for (const auto& f : factors_)
        d += f.exp;
    return d;
}

bool Monomial::divides(const Monomial& other) const noexcept
{
    if (factors_.size() > other.factors_.size())
        return false;
    auto it = other.factors_.begin();
    for (const auto& f : factors_) {
        while (it != other.factors_.end() && it->var < f.var)
            ++it;
        if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp)
            return false;
        ++it;
    }
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept
{
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->var == b->var)
            return false;
        if (a->var < b->var)
            ++a;
        else
            ++b;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() || y != b.factors_.end()) {
        if (y == b.factors_.end() || (x != a.factors_.end() && x->var < y->var)) {
            r.factors_.push_back(*x++);
        } else if (x == a.factors_.end() || y->var < x->var) {
            r.factors_.push_back(*y++);
        } else {
            r.factors_.push_back({x->var, checked_add(x->exp, y->exp)});
            ++x;
            ++y;
        }
    }
    return r;
}

Monomial& Monomial::operator*=(const Monomial& other)
{
    *this = *this * other;
    return *this;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    if (!b.divides(a))
        throw DivisionError("monomial is not divisible by the given divisor");
    Monomial r;
    r.factors_.reserve(a.factors_.size());
    auto y = b.factors_.begin();
    for (const auto& f : a.factors_) {
        if (y != b.factors_.end() && y->var == f.var) {
            if (f.exp > y->exp)
                r.factors_.push_back({f.var, f.exp - y->exp});
            ++y;
        } else {
            r.factors_.push_back(f);
        }
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial r;
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() || y != b.factors_.end()) {
        if (y == b.factors_.end() || (x != a.factors_.end() && x->var < y->var)) {
            r.factors_.push_back(*x++);
        } else if (x == a.factors_.end() || y->var < x->var) {
            r.factors_.push_back(*y++);
        } else {
            r.factors_.push_back({x->var, std::max(x->exp, y->exp)});
            ++x;
            ++y;
        }
    }
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    Monomial r;
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() && y != b.factors_.end()) {
        if (x->var < y->var) {
            ++x;
        } else if (y->var < x->var) {
            ++y;
        } else {
            r.factors_.push_back({x->var, std::min(x->exp, y->exp)});
            ++x;
            ++y;
        }
    }
    return r;
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) noexcept
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() && y != b.factors_.end()) {
        // The side holding the smaller VarId has a positive exponent where the
        // other has zero, so it is the larger one.
        if (x->var != y->var)
            return x->var < y->var ? std::strong_ordering::greater : std::strong_ordering::less;
        if (x->exp != y->exp)
            return x->exp <=> y->exp;
        ++x;
        ++y;
    }
    // Equal degrees and one factor list is a prefix of the other: only possible if both ended.
    if (x != a.factors_.end())
        return std::strong_ordering::greater;
    if (y != b.factors_.end())
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& f : factors_) {
        h ^= std::hash<std::uint64_t>{}((std::uint64_t(f.var.value) << 40) ^ f.exp) + 0x9e3779b97f4a7c15ull + (h << 6) +
             (h >> 2);
    }
    return h;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) { return a * b; }
bool mono_divides(const Monomial& a, const Monomial& b) noexcept { return a.divides(b); }
Monomial mono_div(const Monomial& a, const Monomial& b) { return a / b; }
Exponent degree(const Monomial& m) noexcept { return m.degree(); }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Monomial term) { terms_.push_back(std::move(term)); }

Polynomial::Polynomial(std::initializer_list<Monomial> terms)
    : Polynomial(from_terms(std::vector<Monomial>(terms)))
{
}

Polynomial Polynomial::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end(), canonical_less);
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            p.terms_.push_back(std::move(terms[i]));
        i = j;
    }
    return p;
}

bool Polynomial::contains(const Monomial& t) const
{
    return std::binary_search(terms_.begin(), terms_.end(), t, canonical_less);
}

Exponent Polynomial::degree() const
{
    if (terms_.empty())
        throw UndefinedDegree("degree of the zero polynomial is undefined");
    // Canonical order is degree-first, so the last term has maximal degree.
    return terms_.back().degree();
}

Polynomial operator+(const Polynomial& p, const Polynomial& q)
{
    Polynomial r;
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto x = p.terms_.begin();
    auto y = q.terms_.begin();
    while (x != p.terms_.end() && y != q.terms_.end()) {
        auto c = canonical_compare(*x, *y);
        if (c < 0) {
            r.terms_.push_back(*x++);
        } else if (c > 0) {
            r.terms_.push_back(*y++);
        } else {
            ++x;
            ++y;
        }
    }
    r.terms_.insert(r.terms_.end(), x, p.terms_.end());
    r.terms_.insert(r.terms_.end(), y, q.terms_.end());
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q)
{
    *this = *this + q;
    return *this;
}

Polynomial operator*(const Monomial& m, const Polynomial& p)
{
    // The canonical order is graded lex, itself a monomial order, so scaling
    // keeps the terms sorted and distinct.
    std::vector<Monomial> terms;
    terms.reserve(p.terms_.size());
    for (const auto& t : p.terms_)
        terms.push_back(m * t);
    Polynomial r;
    r.terms_ = std::move(terms);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    std::vector<Monomial> terms;
    terms.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_)
            terms.push_back(a * b);
    return Polynomial::from_terms(std::move(terms));
}

void Polynomial::toggle(const Monomial& t)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, canonical_less);
    if (it != terms_.end() && *it == t)
        terms_.erase(it);
    else
        terms_.insert(it, t);
}

std::strong_ordering canonical_compare(const Polynomial& p, const Polynomial& q) noexcept
{
    // Compare from the largest term down; a strict prefix is smaller.
    auto x = p.terms_.rbegin();
    auto y = q.terms_.rbegin();
    for (; x != p.terms_.rend() && y != q.terms_.rend(); ++x, ++y) {
        if (auto c = canonical_compare(*x, *y); c != 0)
            return c;
    }
    return p.terms_.size() <=> q.terms_.size();
}

std::size_t Polynomial::hash() const noexcept
{
    std::size_t h = terms_.size();
    for (const auto& t : terms_)
        h ^= t.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial mono_scale(const Monomial& m, const Polynomial& p) { return m * p; }
Exponent poly_degree(const Polynomial& p) { return p.degree(); }

std::string to_string(const Monomial& m, const VariableRegistry& registry)
{
    if (m.is_one())
        return "1";
    std::string out;
    for (const auto& f : m.factors()) {
        if (!out.empty())
            out += '*';
        out += registry.name(f.var);
        if (f.exp != 1) {
            out += '^';
            out += std::to_string(f.exp);
        }
    }
    return out;
}

std::string to_string(const Polynomial& p, const VariableRegistry& registry)
{
    if (p.is_zero())
        return "0";
    std::string out;
    auto terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += to_string(*it, registry);
    }
    return out;
}

} // namespace gbx

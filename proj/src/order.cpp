#include "gbx/order.hpp"

#include "gbx/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

namespace gbx {

namespace mp = boost::multiprecision;

std::string to_string(OrderKind kind)
{
    switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Weighted: return "weighted";
    }
    return "?";
}

OrderKind parse_order_kind(std::string_view text)
{
    if (text == "lex")
        return OrderKind::Lex;
    if (text == "deglex")
        return OrderKind::DegLex;
    if (text == "degrevlex")
        return OrderKind::DegRevLex;
    if (text == "weighted")
        return OrderKind::Weighted;
    throw ConfigError("unknown order '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// primes and exact sign of sums of square roots

std::uint64_t nth_prime(std::uint32_t k)
{
    if (k == 0)
        throw ConfigError("prime indices start at 1");
    static std::mutex mutex;
    static std::vector<std::uint64_t> primes{2};
    std::lock_guard lock(mutex);
    for (std::uint64_t candidate = primes.back() + 1; primes.size() < k; ++candidate) {
        bool prime = true;
        for (auto p : primes) {
            if (p * p > candidate)
                break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(candidate);
    }
    return primes[k - 1];
}

namespace {

struct SqrtTerm {
    mp::cpp_int coefficient;
    std::uint64_t prime;
};

int exact_sign(const std::vector<SqrtTerm>& terms)
{
    bool any = std::any_of(terms.begin(), terms.end(), [](const SqrtTerm& t) { return t.coefficient != 0; });
    if (!any)
        return 0;
    // floor(sqrt(p) * 2^bits) < sqrt(p) * 2^bits < floor(...) + 1 for non-square p.
    for (unsigned bits = 64;; bits *= 2) {
        mp::cpp_int lower = 0;
        mp::cpp_int upper = 0;
        for (const auto& t : terms) {
            if (t.coefficient == 0)
                continue;
            mp::cpp_int scaled = mp::cpp_int(t.prime) << (2 * bits);
            mp::cpp_int root = mp::sqrt(scaled);
            if (t.coefficient > 0) {
                lower += t.coefficient * root;
                upper += t.coefficient * (root + 1);
            } else {
                lower += t.coefficient * (root + 1);
                upper += t.coefficient * root;
            }
        }
        if (lower >= 0)
            return 1;
        if (upper <= 0)
            return -1;
    }
}

} // namespace

int signed_sqrt_sum_sign(std::span<const std::pair<std::int64_t, std::uint64_t>> terms)
{
    std::vector<SqrtTerm> exact;
    for (auto [c, radicand] : terms) {
        auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(radicand)));
        while (root > 0 && root * root > radicand)
            --root;
        while ((root + 1) * (root + 1) <= radicand)
            ++root;
        if (root * root == radicand)
            throw ConfigError("radicand " + std::to_string(radicand) + " is a perfect square");
        exact.push_back({mp::cpp_int(c), radicand});
    }
    return exact_sign(exact);
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder MonomialOrder::ranked(OrderKind kind, std::span<const VarId> least_to_greatest)
{
    if (kind == OrderKind::Weighted)
        throw ConfigError("weighted orders are built from a weight assignment, not a variable ranking");
    MonomialOrder order;
    order.kind_ = kind;
    order.vars_.assign(least_to_greatest.begin(), least_to_greatest.end());
    for (std::uint32_t r = 0; r < order.vars_.size(); ++r) {
        auto v = order.vars_[r].value;
        if (v >= order.rank_.size())
            order.rank_.resize(v + 1, kUnranked);
        if (order.rank_[v] != kUnranked)
            throw ConfigError("variable ranking lists variable id " + std::to_string(v) + " twice");
        order.rank_[v] = r;
    }
    return order;
}

MonomialOrder MonomialOrder::lex(std::span<const VarId> least_to_greatest)
{
    return ranked(OrderKind::Lex, least_to_greatest);
}

MonomialOrder MonomialOrder::deglex(std::span<const VarId> least_to_greatest)
{
    return ranked(OrderKind::DegLex, least_to_greatest);
}

MonomialOrder MonomialOrder::degrevlex(std::span<const VarId> least_to_greatest)
{
    return ranked(OrderKind::DegRevLex, least_to_greatest);
}

MonomialOrder MonomialOrder::weighted(std::span<const WeightAssignment> assignment)
{
    MonomialOrder order;
    order.kind_ = OrderKind::Weighted;
    std::set<std::uint32_t> used;
    std::vector<WeightAssignment> sorted(assignment.begin(), assignment.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const WeightAssignment& a, const WeightAssignment& b) { return a.prime_index < b.prime_index; });
    for (const auto& [var, index] : sorted) {
        if (index == 0)
            throw ConfigError("prime indices start at 1");
        if (!used.insert(index).second)
            throw ConfigError("weight assignment is not injective: prime index " + std::to_string(index) +
                              " used twice");
        auto v = var.value;
        if (v >= order.rank_.size()) {
            order.rank_.resize(v + 1, kUnranked);
            order.prime_index_.resize(v + 1, 0);
            order.prime_.resize(v + 1, 0);
            order.weight_.resize(v + 1, 0.0);
        }
        if (order.rank_[v] != kUnranked)
            throw ConfigError("weight assignment lists variable id " + std::to_string(v) + " twice");
        order.rank_[v] = static_cast<std::uint32_t>(order.vars_.size());
        order.vars_.push_back(var);
        order.prime_index_[v] = index;
        order.prime_[v] = nth_prime(index);
        order.weight_[v] = std::sqrt(static_cast<double>(order.prime_[v]));
    }
    return order;
}

std::optional<std::uint32_t> MonomialOrder::rank(VarId var) const noexcept
{
    if (var.value >= rank_.size() || rank_[var.value] == kUnranked)
        return std::nullopt;
    return rank_[var.value];
}

std::optional<std::uint32_t> MonomialOrder::prime_index(VarId var) const noexcept
{
    if (kind_ != OrderKind::Weighted || !rank(var))
        return std::nullopt;
    return prime_index_[var.value];
}

bool MonomialOrder::covers(const Monomial& m) const noexcept
{
    return std::all_of(m.factors().begin(), m.factors().end(),
                       [&](const Monomial::Factor& f) { return rank(f.var).has_value(); });
}

std::uint32_t MonomialOrder::rank_of(VarId var) const
{
    if (var.value >= rank_.size() || rank_[var.value] == kUnranked)
        throw ConfigError("variable id " + std::to_string(var.value) + " has no rank or weight in the " +
                          gbx::to_string(kind_) + " order");
    return rank_[var.value];
}

namespace {

// Visits every variable of a or b with its two exponents.
template <typename Fn>
void for_each_pair(const Monomial& a, const Monomial& b, Fn&& fn)
{
    auto x = a.factors().begin();
    auto y = b.factors().begin();
    const auto xe = a.factors().end();
    const auto ye = b.factors().end();
    while (x != xe || y != ye) {
        if (y == ye || (x != xe && x->var < y->var)) {
            fn(x->var, x->exp, Exponent{0});
            ++x;
        } else if (x == xe || y->var < x->var) {
            fn(y->var, Exponent{0}, y->exp);
            ++y;
        } else {
            fn(x->var, x->exp, y->exp);
            ++x;
            ++y;
        }
    }
}

} // namespace

std::strong_ordering MonomialOrder::compare_lex(const Monomial& a, const Monomial& b) const
{
    std::uint32_t best_rank = 0;
    bool found = false;
    std::strong_ordering result = std::strong_ordering::equal;
    for_each_pair(a, b, [&](VarId v, Exponent ea, Exponent eb) {
        auto r = rank_of(v);
        if (ea != eb && (!found || r > best_rank)) {
            found = true;
            best_rank = r;
            result = ea <=> eb;
        }
    });
    return result;
}

std::strong_ordering MonomialOrder::compare_revlex_tail(const Monomial& a, const Monomial& b) const
{
    // The smallest variable where the exponents differ decides; a smaller
    // exponent there makes the monomial larger.
    std::uint32_t best_rank = 0;
    bool found = false;
    std::strong_ordering result = std::strong_ordering::equal;
    for_each_pair(a, b, [&](VarId v, Exponent ea, Exponent eb) {
        auto r = rank_of(v);
        if (ea != eb && (!found || r < best_rank)) {
            found = true;
            best_rank = r;
            result = eb <=> ea;
        }
    });
    return result;
}

std::strong_ordering MonomialOrder::compare_weighted(const Monomial& a, const Monomial& b) const
{
    for (const auto& f : a.factors())
        rank_of(f.var);
    for (const auto& f : b.factors())
        rank_of(f.var);
    if (a == b)
        return std::strong_ordering::equal;

    // Fast path in double precision with a conservative rounding bound.
    double approx = 0.0;
    double magnitude = 0.0;
    std::size_t count = 0;
    for_each_pair(a, b, [&](VarId v, Exponent ea, Exponent eb) {
        if (ea == eb)
            return;
        double w = weight_[v.value];
        approx += (static_cast<double>(ea) - static_cast<double>(eb)) * w;
        magnitude += (static_cast<double>(ea) + static_cast<double>(eb)) * w;
        ++count;
    });
    double bound = magnitude * static_cast<double>(2 * count + 4) * 0x1p-50;
    if (approx > bound)
        return std::strong_ordering::greater;
    if (approx < -bound)
        return std::strong_ordering::less;

    std::vector<SqrtTerm> terms;
    for_each_pair(a, b, [&](VarId v, Exponent ea, Exponent eb) {
        if (ea != eb)
            terms.push_back({mp::cpp_int(ea) - mp::cpp_int(eb), prime_[v.value]});
    });
    int sign = exact_sign(terms);
    return sign > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    switch (kind_) {
    case OrderKind::Lex:
        return compare_lex(a, b);
    case OrderKind::DegLex:
        if (auto c = a.degree() <=> b.degree(); c != 0) {
            compare_lex(a, b); // validates variables
            return c;
        }
        return compare_lex(a, b);
    case OrderKind::DegRevLex:
        if (auto c = a.degree() <=> b.degree(); c != 0) {
            compare_lex(a, b);
            return c;
        }
        return compare_revlex_tail(a, b);
    case OrderKind::Weighted:
        return compare_weighted(a, b);
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

std::strong_ordering cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b)
{
    return order.compare(a, b);
}

const Monomial& highest_term(const MonomialOrder& order, const Polynomial& p)
{
    if (p.is_zero())
        throw ZeroPolynomial("the zero polynomial has no highest term");
    const Monomial* best = &p.terms().front();
    for (const auto& t : p.terms().subspan(1))
        if (order.less(*best, t))
            best = &t;
    return *best;
}

std::vector<Monomial> terms_descending(const MonomialOrder& order, const Polynomial& p)
{
    std::vector<Monomial> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const Monomial& a, const Monomial& b) { return order.less(b, a); });
    return terms;
}

std::strong_ordering cmp_poly(const MonomialOrder& order, const Polynomial& p, const Polynomial& q)
{
    auto a = terms_descending(order, p);
    auto b = terms_descending(order, q);
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (auto c = order.compare(a[i], b[i]); c != 0)
            return c;
    }
    // Equal prefixes: the one whose tail ran out first has tail 0, the minimum.
    return a.size() <=> b.size();
}

// ---------------------------------------------------------------------------
// axiom checking

namespace {

std::strong_ordering flip(std::strong_ordering o)
{
    if (o < 0)
        return std::strong_ordering::greater;
    if (o > 0)
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

class AxiomChecker {
public:
    explicit AxiomChecker(const MonomialComparator& compare) : compare_(compare) {}

    bool pair(const Monomial& a, const Monomial& b)
    {
        ++report.pairs_checked;
        auto ab = compare_(a, b);
        auto ba = compare_(b, a);
        if (ab != flip(ba))
            return fail("antisymmetry", {a, b});
        if ((ab == 0) != (a == b))
            return fail("totality", {a, b});
        return true;
    }

    bool minimal(const Monomial& a)
    {
        if (compare_(Monomial{}, a) > 0)
            return fail("one-is-minimal", {a});
        return true;
    }

    bool triple(const Monomial& a, const Monomial& b, const Monomial& c)
    {
        ++report.triples_checked;
        auto ab = compare_(a, b);
        auto bc = compare_(b, c);
        if (ab <= 0 && bc <= 0 && compare_(a, c) > 0)
            return fail("transitivity", {a, b, c});
        if (ab < 0 && compare_(a * c, b * c) >= 0)
            return fail("multiplicativity", {a, b, c});
        return true;
    }

    OrderAxiomReport report;

private:
    bool fail(const char* axiom, std::vector<Monomial> witness)
    {
        report.ok = false;
        report.axiom = axiom;
        report.witness = std::move(witness);
        return false;
    }

    const MonomialComparator& compare_;
};

} // namespace

OrderAxiomReport check_order_axioms(const MonomialComparator& compare, std::span<const Monomial> sample)
{
    AxiomChecker checker(compare);
    for (const auto& a : sample)
        if (!checker.minimal(a))
            return checker.report;
    for (const auto& a : sample)
        for (const auto& b : sample)
            if (!checker.pair(a, b))
                return checker.report;
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (!checker.triple(a, b, c))
                    return checker.report;
    return checker.report;
}

OrderAxiomReport check_order_axioms(const MonomialOrder& order, std::span<const Monomial> sample)
{
    MonomialComparator compare = [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b); };
    return check_order_axioms(compare, sample);
}

OrderAxiomReport check_order_axioms_on_triples(const MonomialComparator& compare,
                                               std::span<const std::array<Monomial, 3>> triples)
{
    AxiomChecker checker(compare);
    for (const auto& [a, b, c] : triples) {
        if (!checker.minimal(a) || !checker.minimal(b) || !checker.minimal(c))
            return checker.report;
        if (!checker.pair(a, b) || !checker.pair(b, c) || !checker.pair(a, c))
            return checker.report;
        // All orderings of the triple, so transitivity is exercised whichever way the order falls.
        const Monomial* m[3] = {&a, &b, &c};
        int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : perms)
            if (!checker.triple(*m[p[0]], *m[p[1]], *m[p[2]]))
                return checker.report;
    }
    return checker.report;
}

} // namespace gbx

#include "gbx/groebner.hpp"

#include "gbx/dominance.hpp"
#include "gbx/errors.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <set>
#include <unordered_set>

namespace gbx {

GeneratorSet::GeneratorSet(std::vector<Polynomial> gens)
{
    std::unordered_set<Polynomial, PolynomialHash> seen;
    for (auto& g : gens) {
        if (g.is_zero() || !seen.insert(g).second)
            continue;
        gens_.push_back(std::move(g));
    }
}

namespace {

struct Reducer {
    Monomial head;
    const Polynomial* poly;
};

// Reducers sorted by head term, greatest first (stable on index), so the first
// divisor found is the one with the greatest head.
class ReducerTable {
public:
    ReducerTable(std::span<const Polynomial> basis, const MonomialOrder& order) : order_(order)
    {
        for (const auto& g : basis)
            if (!g.is_zero())
                entries_.push_back({highest_term(order, g), &g});
        std::stable_sort(entries_.begin(), entries_.end(),
                         [&](const Reducer& a, const Reducer& b) { return order.less(b.head, a.head); });
    }

    const Reducer* find(const Monomial& t) const
    {
        for (const auto& e : entries_)
            if (e.head.divides(t))
                return &e;
        return nullptr;
    }

    Polynomial reduce(Polynomial p) const
    {
        Polynomial remainder;
        while (!p.is_zero()) {
            Monomial t = highest_term(order_, p);
            if (const auto* r = find(t)) {
                p += (t / r->head) * *r->poly;
            } else {
                p.toggle(t);
                remainder.toggle(t);
            }
        }
        return remainder;
    }

private:
    const MonomialOrder& order_;
    std::vector<Reducer> entries_;
};

} // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order)
{
    return ReducerTable(basis, order).reduce(f);
}

Polynomial normal_form(const Polynomial& f, const GeneratorSet& basis, const MonomialOrder& order)
{
    return normal_form(f, basis.gens(), order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order)
{
    const auto& hf = highest_term(order, f);
    const auto& hg = highest_term(order, g);
    auto l = lcm(hf, hg);
    return (l / hf) * f + (l / hg) * g;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
    Monomial lcm;
    std::size_t i;
    std::size_t j;
};

class PairQueue {
public:
    PairQueue(PairSelection selection, const MonomialOrder& order)
        : selection_(selection), by_lcm_(NormalLess{&order})
    {
    }

    void push(Pair p)
    {
        if (selection_ == PairSelection::Fifo)
            fifo_.push_back(std::move(p));
        else
            by_lcm_.insert(std::move(p));
    }

    bool empty() const { return selection_ == PairSelection::Fifo ? fifo_.empty() : by_lcm_.empty(); }

    Pair pop()
    {
        if (selection_ == PairSelection::Fifo) {
            Pair p = std::move(fifo_.front());
            fifo_.pop_front();
            return p;
        }
        return std::move(by_lcm_.extract(by_lcm_.begin()).value());
    }

    template <typename Pred>
    std::size_t erase_if(Pred pred)
    {
        return selection_ == PairSelection::Fifo ? std::erase_if(fifo_, pred) : std::erase_if(by_lcm_, pred);
    }

private:
    struct NormalLess {
        const MonomialOrder* order;
        bool operator()(const Pair& a, const Pair& b) const
        {
            if (auto c = order->compare(a.lcm, b.lcm); c != 0)
                return c < 0;
            if (a.j != b.j)
                return a.j < b.j;
            return a.i < b.i;
        }
    };

    PairSelection selection_;
    std::deque<Pair> fifo_;
    std::set<Pair, NormalLess> by_lcm_;
};

class BuchbergerRun {
public:
    BuchbergerRun(const MonomialOrder& order, const BuchbergerOptions& options, BuchbergerStats& stats)
        : order_(order), options_(options), stats_(stats), queue_(options.selection, order)
    {
    }

    void add(Polynomial p)
    {
        if (options_.budget.max_basis != 0 && basis_.size() >= options_.budget.max_basis)
            throw BudgetExceeded("basis", "more than " + std::to_string(options_.budget.max_basis) + " elements");
        auto d = p.degree();
        stats_.max_degree = std::max(stats_.max_degree, d);
        if (d > options_.budget.max_degree)
            throw BudgetExceeded("degree", "element of degree " + std::to_string(d) + " exceeds " +
                                               std::to_string(options_.budget.max_degree));
        Monomial head = highest_term(order_, p);
        const std::size_t h = basis_.size();
        basis_.push_back(std::move(p));
        heads_.push_back(std::move(head));
        active_.push_back(1);
        stats_.basis_size = basis_.size();
        if (options_.chain_criterion)
            update(h);
        else
            pair_with_all(h);
    }

    void run()
    {
        const unsigned batch = std::max(1u, options_.threads);
        while (!queue_.empty()) {
            std::vector<Pair> round;
            while (round.size() < batch && !queue_.empty()) {
                Pair p = queue_.pop();
                // Coprime heads: the S-polynomial reduces to zero.
                if (heads_[p.i].coprime(heads_[p.j])) {
                    ++stats_.product_criterion_skips;
                    continue;
                }
                round.push_back(std::move(p));
            }
            if (round.empty())
                continue;

            stats_.pairs_reduced += round.size();
            if (options_.budget.max_pairs != 0 && stats_.pairs_reduced > options_.budget.max_pairs)
                throw BudgetExceeded("pairs", "more than " + std::to_string(options_.budget.max_pairs) +
                                                  " S-pairs reduced");

            std::vector<Polynomial> remainders = reduce_round(round);
            for (auto& r : remainders) {
                // Elements added earlier in this round may reduce r further.
                if (batch > 1 && !r.is_zero())
                    r = ReducerTable(active_basis(), order_).reduce(std::move(r));
                if (options_.check_binomial_closure && !r.is_zero() && r.size() != 2)
                    ++stats_.binomial_violations;
                if (r.is_zero()) {
                    ++stats_.zero_reductions;
                    continue;
                }
                add(std::move(r));
            }
        }
    }

    std::vector<Polynomial> take()
    {
        std::vector<Polynomial> out;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (active_[k])
                out.push_back(std::move(basis_[k]));
        return out;
    }

private:
    void pair_with_all(std::size_t h)
    {
        for (std::size_t i = 0; i < h; ++i) {
            queue_.push({lcm(heads_[i], heads_[h]), i, h});
            ++stats_.pairs_created;
        }
    }

    // Gebauer-Moeller installation of element h: prune new pairs whose lcm is a
    // proper multiple of another new lcm (keeping one per lcm, coprime ones
    // first), drop old pairs whose lcm HT(h) divides strictly, and retire
    // elements whose head HT(h) divides.
    void update(std::size_t h)
    {
        const Monomial& hh = heads_[h];
        struct Candidate {
            std::size_t g;
            Monomial lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Candidate> cands;
        for (std::size_t g = 0; g < h; ++g)
            if (active_[g])
                cands.push_back({g, lcm(heads_[g], hh), heads_[g].coprime(hh)});
        stats_.pairs_created += cands.size();

        // A pair is dropped when another candidate's lcm properly divides its
        // lcm, or an earlier-kept candidate has the same lcm.
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Candidate& a, const Candidate& b) { return a.coprime > b.coprime; });
        for (std::size_t a = 0; a < cands.size(); ++a) {
            for (std::size_t b = 0; b < cands.size() && cands[a].keep; ++b) {
                if (a == b || !cands[b].lcm.divides(cands[a].lcm))
                    continue;
                if (cands[b].lcm != cands[a].lcm || (b < a && cands[b].keep))
                    cands[a].keep = false;
            }
        }

        std::size_t dropped = queue_.erase_if([&](const Pair& p) {
            return hh.divides(p.lcm) && lcm(heads_[p.i], hh) != p.lcm && lcm(heads_[p.j], hh) != p.lcm;
        });
        stats_.chain_criterion_skips += dropped;

        for (auto& c : cands) {
            if (!c.keep) {
                ++stats_.chain_criterion_skips;
            } else if (c.coprime) {
                ++stats_.product_criterion_skips;
            } else {
                queue_.push({std::move(c.lcm), c.g, h});
            }
        }

        for (std::size_t g = 0; g < h; ++g)
            if (active_[g] && hh.divides(heads_[g]))
                active_[g] = 0;
    }

    std::vector<Polynomial> active_basis() const
    {
        std::vector<Polynomial> out;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (active_[k])
                out.push_back(basis_[k]);
        return out;
    }

    std::vector<Polynomial> reduce_round(const std::vector<Pair>& round)
    {
        auto reducers = active_basis();
        ReducerTable table(reducers, order_);
        std::vector<Polynomial> spolys;
        spolys.reserve(round.size());
        for (const auto& p : round) {
            spolys.push_back((p.lcm / heads_[p.i]) * basis_[p.i] + (p.lcm / heads_[p.j]) * basis_[p.j]);
            if (options_.check_binomial_closure && !spolys.back().is_zero() && spolys.back().size() != 2)
                ++stats_.binomial_violations;
        }
        std::vector<Polynomial> out(round.size());
        if (round.size() == 1) {
            out[0] = table.reduce(std::move(spolys[0]));
            return out;
        }
        std::vector<std::future<Polynomial>> futures;
        futures.reserve(round.size());
        for (auto& s : spolys)
            futures.push_back(std::async(std::launch::async, [&table, &s] { return table.reduce(std::move(s)); }));
        for (std::size_t k = 0; k < futures.size(); ++k)
            out[k] = futures[k].get();
        return out;
    }

    const MonomialOrder& order_;
    const BuchbergerOptions& options_;
    BuchbergerStats& stats_;
    PairQueue queue_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> heads_;
    std::vector<char> active_;
};

} // namespace

GeneratorSet buchberger(const GeneratorSet& generators, const MonomialOrder& order, const BuchbergerOptions& options,
                        BuchbergerStats* stats)
{
    BuchbergerStats local;
    BuchbergerStats& s = stats ? *stats : local;
    s = {};
    if (options.check_binomial_closure)
        for (const auto& g : generators)
            if (g.size() != 2)
                ++s.binomial_violations;
    BuchbergerRun run(order, options, s);
    for (const auto& g : generators)
        run.add(g);
    run.run();
    return GeneratorSet(run.take());
}

// ---------------------------------------------------------------------------
// reduced bases

ReducedBasis::ReducedBasis(std::vector<Polynomial> gens, MonomialOrder order)
    : gens_(std::move(gens)), order_(std::move(order))
{
}

std::vector<Monomial> ReducedBasis::head_terms() const
{
    std::vector<Monomial> heads;
    heads.reserve(gens_.size());
    for (const auto& g : gens_)
        heads.push_back(highest_term(order_, g));
    return heads;
}

ReducedBasis reduce_basis(const GeneratorSet& basis, const MonomialOrder& order)
{
    struct Item {
        Monomial head;
        const Polynomial* poly;
    };
    std::vector<Item> items;
    for (const auto& g : basis)
        items.push_back({highest_term(order, g), &g});
    std::stable_sort(items.begin(), items.end(),
                     [&](const Item& a, const Item& b) { return order.less(a.head, b.head); });

    // A divisor of a head term never exceeds it, so scanning upward keeps exactly
    // the elements whose heads are minimal (first of equal heads wins).
    std::vector<Polynomial> minimal;
    std::vector<Monomial> minimal_heads;
    for (const auto& item : items) {
        bool redundant = std::any_of(minimal_heads.begin(), minimal_heads.end(),
                                     [&](const Monomial& h) { return h.divides(item.head); });
        if (!redundant) {
            minimal.push_back(*item.poly);
            minimal_heads.push_back(item.head);
        }
    }

    ReducerTable table(minimal, order);
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        Polynomial tail = minimal[k];
        tail.toggle(minimal_heads[k]);
        Polynomial r = table.reduce(std::move(tail));
        r.toggle(minimal_heads[k]);
        reduced.push_back(std::move(r));
    }
    std::reverse(reduced.begin(), reduced.end());
    return ReducedBasis(std::move(reduced), order);
}

ReducedBasis groebner_basis(const GeneratorSet& generators, const MonomialOrder& order,
                            const BuchbergerOptions& options, BuchbergerStats* stats)
{
    return reduce_basis(buchberger(generators, order, options, stats), order);
}

bool ideal_member(const Polynomial& f, const ReducedBasis& basis)
{
    return normal_form(f, basis.gens(), basis.order()).is_zero();
}

std::vector<Monomial> standard_monomials(const ReducedBasis& basis, Exponent max_degree, std::size_t cap)
{
    auto heads = basis.head_terms();
    auto vars = basis.order().variables();
    std::vector<Monomial> found;

    auto reducible = [&](const Monomial& m) {
        return std::any_of(heads.begin(), heads.end(), [&](const Monomial& h) { return h.divides(m); });
    };

    // Enumerate exponent vectors variable by variable; multiples of a reducible
    // monomial are reducible, so a reducible prefix prunes its subtree.
    auto visit = [&](auto&& self, std::size_t index, const Monomial& current, Exponent remaining) -> void {
        if (index == vars.size()) {
            found.push_back(current);
            if (found.size() > cap)
                throw BudgetExceeded("standard-monomials",
                                     "more than " + std::to_string(cap) + " standard monomials up to degree " +
                                         std::to_string(max_degree));
            return;
        }
        Monomial m = current;
        for (Exponent e = 0; e <= remaining; ++e) {
            if (e > 0) {
                m = m * Monomial::variable(vars[index]);
                if (reducible(m))
                    break;
            }
            self(self, index + 1, m, remaining - e);
        }
    };
    if (!reducible(Monomial{}))
        visit(visit, 0, Monomial{}, max_degree);
    std::sort(found.begin(), found.end(), canonical_less);
    return found;
}

std::vector<Polynomial> residual_set_bounded(const ReducedBasis& basis, Exponent max_degree, std::size_t max_standard)
{
    constexpr std::size_t hard_limit = 20;
    auto standard = standard_monomials(basis, max_degree, std::min(max_standard, hard_limit));
    std::vector<Polynomial> out;
    const std::size_t k = standard.size();
    out.reserve((std::size_t{1} << k) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Monomial> terms;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::size_t{1} << b))
                terms.push_back(standard[b]);
        out.push_back(Polynomial::from_terms(std::move(terms)));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return canonical_compare(a, b) < 0; });
    return out;
}

AntichainReport check_head_term_antichain(std::span<const Polynomial> basis, const MonomialOrder& order)
{
    AntichainReport report;
    report.basis_size = basis.size();
    std::vector<Monomial> heads;
    for (const auto& g : basis)
        heads.push_back(highest_term(order, g));
    std::vector<Monomial> distinct = heads;
    std::sort(distinct.begin(), distinct.end(), canonical_less);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    report.distinct_head_terms = distinct.size();
    report.minimal_head_terms = minimal_elements(heads).size();
    report.passed = report.minimal_head_terms == report.distinct_head_terms &&
                    report.distinct_head_terms == report.basis_size;
    return report;
}

AntichainReport check_head_term_antichain(const ReducedBasis& basis)
{
    return check_head_term_antichain(basis.gens(), basis.order());
}

} // namespace gbx

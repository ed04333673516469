#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hilbspec/order.hpp"
#include "hilbspec/polynomial.hpp"

namespace hilbspec {

/// Resource limits for a Groebner computation. Exceeding any of them raises
/// BudgetExceeded; there is no partial result.
struct GbConfig {
    std::size_t max_pairs = 200000;       // gb.max_pairs
    std::size_t max_term_count = 200000;  // gb.max_term_count
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail {

using TermVec = std::vector<Term>;

struct DescendingBy {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

inline TermVec sorted_by(const Polynomial& p, const MonomialOrder& order) {
    TermVec t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return t;
}

inline void make_monic(TermVec& t) {
    if (t.empty() || t.front().coeff == 1) return;
    Rational inv = 1 / t.front().coeff;
    for (auto& x : t) x.coeff *= inv;
}

/// Full reduction of `p` modulo `basis` (entries chosen in `active`, lowest
/// index first). All basis entries are monic and sorted by `order`.
inline TermVec reduce(TermVec p, const std::vector<TermVec>& basis, const std::vector<std::size_t>& active,
                      const MonomialOrder& order, std::size_t max_terms) {
    std::map<Monomial, Rational, DescendingBy> work{DescendingBy{&order}};
    for (auto& t : p) {
        auto [pos, inserted] = work.try_emplace(std::move(t.mono), 0);
        pos->second += t.coeff;
        if (pos->second == 0) work.erase(pos);
    }
    TermVec rem;
    while (!work.empty()) {
        auto it = work.begin();
        const TermVec* red = nullptr;
        for (auto idx : active) {
            const auto& g = basis[idx];
            if (g.front().mono.divides(it->first)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            rem.push_back({it->first, std::move(it->second)});
            work.erase(it);
            continue;
        }
        Monomial shift = it->first / red->front().mono;
        Rational factor = it->second;  // basis element is monic
        work.erase(it);
        for (std::size_t k = 1; k < red->size(); ++k) {
            const auto& gt = (*red)[k];
            Monomial m = gt.mono * shift;
            auto [pos, inserted] = work.try_emplace(std::move(m));
            pos->second -= factor * gt.coeff;
            if (pos->second == 0) work.erase(pos);
        }
        if (work.size() + rem.size() > max_terms)
            throw BudgetExceeded("polynomial exceeded gb.max_term_count during reduction");
    }
    return rem;
}

inline TermVec spoly(const TermVec& f, const TermVec& g, const Monomial& l) {
    Monomial sf = l / f.front().mono, sg = l / g.front().mono;
    // f, g monic: S = sf*f - sg*g; leading terms cancel.
    TermVec out;
    out.reserve(f.size() + g.size());
    for (std::size_t k = 1; k < f.size(); ++k) out.push_back({f[k].mono * sf, f[k].coeff});
    for (std::size_t k = 1; k < g.size(); ++k) out.push_back({g[k].mono * sg, -g[k].coeff});
    return out;
}

inline void check_deadline(const GbConfig& cfg) {
    if (cfg.deadline && std::chrono::steady_clock::now() > *cfg.deadline)
        throw BudgetExceeded("Groebner computation exceeded its wall-clock budget");
}

}  // namespace detail

/// Reduced Groebner basis: monic, autoreduced, sorted by increasing leading
/// monomial under its order.
class GroebnerBasis {
public:
    GroebnerBasis(VariableContext ctx, MonomialOrder order, std::vector<detail::TermVec> ordered)
        : ctx_(std::move(ctx)), order_(std::move(order)), ordered_(std::move(ordered)) {
        for (std::size_t i = 0; i < ordered_.size(); ++i) {
            polys_.push_back(Polynomial::from_terms(ctx_, ordered_[i]));
            all_.push_back(i);
        }
    }

    const VariableContext& context() const noexcept { return ctx_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& polynomials() const noexcept { return polys_; }
    std::size_t size() const noexcept { return polys_.size(); }
    bool is_unit() const { return polys_.size() == 1 && polys_[0].is_constant() && !polys_[0].is_zero(); }
    bool is_zero_ideal() const { return polys_.empty(); }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& t : ordered_) out.push_back(t.front().mono);
        return out;
    }
    const Term& leading_term(std::size_t i) const { return ordered_.at(i).front(); }

    Polynomial normal_form(const Polynomial& p, std::size_t max_terms = SIZE_MAX) const {
        if (!(p.context() == ctx_)) throw ContextMismatch("normal_form: polynomial and basis live in different contexts");
        if (p.is_zero()) return p;
        auto rem = detail::reduce(detail::sorted_by(p, order_), ordered_, all_, order_, max_terms);
        return Polynomial::from_terms(ctx_, std::move(rem));
    }

    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

    std::vector<std::string> strings() const {
        std::vector<std::string> out;
        for (const auto& p : polys_) out.push_back(p.str());
        return out;
    }

    bool operator==(const GroebnerBasis& o) const { return ctx_ == o.ctx_ && polys_ == o.polys_; }

private:
    VariableContext ctx_;
    MonomialOrder order_;
    std::vector<detail::TermVec> ordered_;
    std::vector<Polynomial> polys_;
    std::vector<std::size_t> all_;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
/// normal selection strategy (smallest lcm first, ties by pair index).
inline GroebnerBasis buchberger_basis(const VariableContext& ctx, const std::vector<Polynomial>& gens,
                                      const MonomialOrder& order, const GbConfig& cfg = {}) {
    using detail::TermVec;
    order.validate(ctx.size());
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<TermVec> polys;
    std::vector<std::size_t> active;
    std::vector<Pair> pairs;

    auto unit_basis = [&] {
        return GroebnerBasis(ctx, order, {TermVec{Term{Monomial(ctx.size()), Rational(1)}}});
    };

    auto update = [&](std::size_t h) {
        const Monomial& lh = polys[h].front().mono;
        struct Cand {
            std::size_t g;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> c;
        for (auto g : active) {
            const Monomial& lg = polys[g].front().mono;
            c.push_back({g, lcm(lh, lg), coprime(lh, lg)});
        }
        // Chain criterion among the new pairs.
        std::vector<Cand> d;
        for (std::size_t a = 0; a < c.size(); ++a) {
            bool keep = c[a].coprime;
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < c.size() && keep; ++b)
                    if (c[b].lcm.divides(c[a].lcm)) keep = false;
                for (std::size_t b = 0; b < d.size() && keep; ++b)
                    if (d[b].lcm.divides(c[a].lcm)) keep = false;
            }
            if (keep) d.push_back(c[a]);
        }
        // Drop old pairs made redundant by h.
        std::vector<Pair> kept;
        for (auto& p : pairs) {
            bool drop = lh.divides(p.lcm) && !(lcm(polys[p.i].front().mono, lh) == p.lcm) &&
                        !(lcm(polys[p.j].front().mono, lh) == p.lcm);
            if (!drop) kept.push_back(std::move(p));
        }
        pairs = std::move(kept);
        // Product criterion.
        for (auto& x : d)
            if (!x.coprime) pairs.push_back({x.g, h, std::move(x.lcm)});
        std::vector<std::size_t> na;
        for (auto g : active)
            if (!lh.divides(polys[g].front().mono)) na.push_back(g);
        na.push_back(h);
        active = std::move(na);
    };

    auto add = [&](TermVec t) -> bool {
        detail::make_monic(t);
        if (t.front().mono.is_one()) return false;  // unit ideal
        polys.push_back(std::move(t));
        update(polys.size() - 1);
        return true;
    };

    for (const auto& g : gens) {
        if (!(g.context() == ctx)) throw ContextMismatch("generator lives in a different context");
        if (g.is_zero()) continue;
        auto r = detail::reduce(detail::sorted_by(g, order), polys, active, order, cfg.max_term_count);
        if (r.empty()) continue;
        if (!add(std::move(r))) return unit_basis();
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        detail::check_deadline(cfg);
        if (++processed > cfg.max_pairs) throw BudgetExceeded("Groebner computation exceeded gb.max_pairs");
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = order.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && std::pair(pairs[k].i, pairs[k].j) < std::pair(pairs[best].i, pairs[best].j)))
                best = k;
        }
        Pair p = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        auto s = detail::spoly(polys[p.i], polys[p.j], p.lcm);
        if (s.empty()) continue;
        std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
        auto r = detail::reduce(std::move(s), polys, active, order, cfg.max_term_count);
        if (r.empty()) continue;
        if (!add(std::move(r))) return unit_basis();
    }

    // Autoreduce tails; `active` is already minimal.
    std::vector<TermVec> out;
    for (auto g : active) {
        std::vector<std::size_t> others;
        for (auto o : active)
            if (o != g) others.push_back(o);
        TermVec head{polys[g].front()};
        TermVec tail(polys[g].begin() + 1, polys[g].end());
        auto rt = detail::reduce(std::move(tail), polys, others, order, cfg.max_term_count);
        head.insert(head.end(), std::make_move_iterator(rt.begin()), std::make_move_iterator(rt.end()));
        out.push_back(std::move(head));
    }
    std::sort(out.begin(), out.end(),
              [&](const TermVec& a, const TermVec& b) { return order.compare(a.front().mono, b.front().mono) < 0; });
    return GroebnerBasis(ctx, order, std::move(out));
}

/// A largest subset of `candidates` independent modulo the monomial ideal
/// spanned by `leading` (first such subset in mask order); nullopt when the
/// monomial ideal contains 1.
inline std::optional<std::vector<std::size_t>> max_independent_set(const std::vector<Monomial>& leading,
                                                                   const std::vector<std::size_t>& candidates) {
    if (candidates.size() > 30) throw PreconditionError("too many variables for exhaustive dimension search");
    std::vector<std::uint32_t> supports;
    for (const auto& m : leading) {
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if (m[candidates[k]]) mask |= 1u << k;
        if (mask == 0) return std::nullopt;
        supports.push_back(mask);
    }
    int best = 0;
    std::uint32_t best_set = 0;
    const std::uint32_t full = (1u << candidates.size()) - 1;
    for (std::uint32_t u = 0;; ++u) {
        int pc = std::popcount(u);
        if (pc > best) {
            bool indep = true;
            for (auto s : supports)
                if ((s & ~u) == 0) {
                    indep = false;
                    break;
                }
            if (indep) {
                best = pc;
                best_set = u;
            }
        }
        if (u == full) break;
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (best_set & (1u << k)) out.push_back(candidates[k]);
    return out;
}

/// Size of max_independent_set, or -1 for the unit ideal.
inline int independent_set_dimension(const std::vector<Monomial>& leading, const std::vector<std::size_t>& candidates) {
    auto u = max_independent_set(leading, candidates);
    return u ? static_cast<int>(u->size()) : -1;
}

/// Polynomial ideal with per-order caches of reduced Groebner bases. Copies
/// share the cache; generators are immutable.
class Ideal {
public:
    Ideal() : Ideal(VariableContext{}, {}) {}
    Ideal(VariableContext ctx, std::vector<Polynomial> gens) : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens) {
            if (!(g.context() == ctx_)) throw ContextMismatch("generator lives in a different context");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    const VariableContext& context() const noexcept { return ctx_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool is_zero_ideal() const noexcept { return gens_.empty(); }

    std::shared_ptr<const GroebnerBasis> groebner_basis(const MonomialOrder& order, const GbConfig& cfg = {}) const {
        auto key = order.key();
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->bases.find(key);
            if (it != cache_->bases.end()) return it->second;
        }
        auto gb = std::make_shared<const GroebnerBasis>(buchberger_basis(ctx_, gens_, order, cfg));
        std::lock_guard lock(cache_->mutex);
        return cache_->bases.emplace(key, gb).first->second;
    }

    /// Krull dimension of the quotient ring (-1 for the unit ideal), from the
    /// leading-term staircase of the grevlex basis.
    int dimension(const GbConfig& cfg = {}) const {
        {
            std::lock_guard lock(cache_->mutex);
            if (cache_->dim) return *cache_->dim;
        }
        auto gb = groebner_basis(MonomialOrder::grevlex(), cfg);
        std::vector<std::size_t> all(ctx_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        int d = independent_set_dimension(gb->leading_monomials(), all);
        std::lock_guard lock(cache_->mutex);
        cache_->dim = d;
        return d;
    }

    /// Height (codimension) = #variables - dimension; the unit ideal gets
    /// #variables + 1 so that dimension + height = #variables always holds.
    int height(const GbConfig& cfg = {}) const { return static_cast<int>(ctx_.size()) - dimension(cfg); }

    bool contains(const Polynomial& p, const GbConfig& cfg = {}) const {
        return groebner_basis(MonomialOrder::grevlex(), cfg)->contains(p.embed(ctx_));
    }

    std::vector<std::string> generator_strings() const {
        std::vector<std::string> out;
        for (const auto& g : gens_) out.push_back(g.str());
        return out;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
        std::optional<int> dim;
    };
    VariableContext ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline GroebnerBasis buchberger_basis(const Ideal& I, const MonomialOrder& order, const GbConfig& cfg = {}) {
    return *I.groebner_basis(order, cfg);
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

inline int ideal_dimension(const Ideal& I, const GbConfig& cfg = {}) { return I.dimension(cfg); }

/// I intersected with K[kept blocks], computed from a block elimination order
/// (eliminated variables above kept ones). The result lives in the context of
/// the kept blocks.
inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep_blocks, const GbConfig& cfg = {}) {
    const auto& ctx = I.context();
    std::vector<std::size_t> elim, keep;
    for (const auto& b : keep_blocks)
        if (!ctx.find_block(b)) throw PreconditionError("no block named '" + b + "'");
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const auto& bname = ctx.blocks()[ctx.block_of(i)].name;
        if (std::find(keep_blocks.begin(), keep_blocks.end(), bname) != keep_blocks.end())
            keep.push_back(i);
        else
            elim.push_back(i);
    }
    auto gb = I.groebner_basis(MonomialOrder::elimination(elim, keep), cfg);
    auto kept_ctx = ctx.restrict_blocks(keep_blocks);
    std::vector<Polynomial> out;
    for (const auto& p : gb->polynomials()) {
        bool only_kept = true;
        for (auto v : p.support())
            if (std::find(elim.begin(), elim.end(), v) != elim.end()) {
                only_kept = false;
                break;
            }
        if (only_kept) out.push_back(p.embed(kept_ctx));
    }
    return Ideal(kept_ctx, std::move(out));
}

/// Dimension of the extension of I to K(params)[rest], where the parameters
/// are inverted: the leading monomials of a block-order basis (rest above
/// params) restricted to the non-parameter variables span the leading-term
/// ideal of the extension. Returns -1 when I meets K[params] nontrivially.
inline int fiber_dimension_over(const Ideal& I, const std::vector<std::size_t>& params, const GbConfig& cfg = {}) {
    const auto& ctx = I.context();
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (std::find(params.begin(), params.end(), i) == params.end()) rest.push_back(i);
    auto gb = I.groebner_basis(MonomialOrder::elimination(rest, params), cfg);
    return independent_set_dimension(gb->leading_monomials(), rest);
}

inline int fiber_dimension(const Ideal& I, const std::vector<std::string>& param_blocks, const GbConfig& cfg = {}) {
    const auto& ctx = I.context();
    std::vector<std::size_t> params;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const auto& bname = ctx.blocks()[ctx.block_of(i)].name;
        if (std::find(param_blocks.begin(), param_blocks.end(), bname) != param_blocks.end()) params.push_back(i);
    }
    return fiber_dimension_over(I, params, cfg);
}

/// Names of the blocks carrying role `r`.
inline std::vector<std::string> block_names_with_role(const VariableContext& ctx, Role r) {
    std::vector<std::string> out;
    for (const auto& b : ctx.blocks())
        if (b.role == r) out.push_back(b.name);
    return out;
}

}  // namespace hilbspec

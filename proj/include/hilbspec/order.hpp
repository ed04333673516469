#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hilbspec/context.hpp"
#include "hilbspec/monomial.hpp"

namespace hilbspec {

enum class OrderKind { Lex, Grevlex, Block };

struct OrderBlock {
    std::vector<std::size_t> vars;  // variable indices, highest first
    OrderKind inner = OrderKind::Grevlex;
};

/// Monomial order on exponent vectors. Lex and grevlex use the context's
/// variable numbering (first variable largest). A block order compares the
/// blocks one after another, each with its own inner order; monomials that
/// tie on every block are equal only if they are equal.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, {}); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex, {}); }
    static MonomialOrder block(std::vector<OrderBlock> blocks) {
        for (const auto& b : blocks)
            if (b.inner == OrderKind::Block) throw PreconditionError("nested block orders are not supported");
        return MonomialOrder(OrderKind::Block, std::move(blocks));
    }

    /// Block order with `first` (eliminated) above `second` (kept), grevlex inside.
    static MonomialOrder elimination(std::vector<std::size_t> first, std::vector<std::size_t> second) {
        return block({OrderBlock{std::move(first), OrderKind::Grevlex}, OrderBlock{std::move(second), OrderKind::Grevlex}});
    }

    OrderKind kind() const noexcept { return kind_; }
    const std::vector<OrderBlock>& blocks() const noexcept { return blocks_; }

    /// Throws unless the block partition covers 0..nvars-1 exactly once.
    void validate(std::size_t nvars) const {
        if (kind_ != OrderKind::Block) return;
        std::vector<int> seen(nvars, 0);
        for (const auto& b : blocks_)
            for (auto v : b.vars) {
                if (v >= nvars) throw PreconditionError("block order references variable out of range");
                ++seen[v];
            }
        for (auto c : seen)
            if (c != 1) throw PreconditionError("block order is not a partition of the variables");
    }

    /// <0, 0, >0 as a is smaller, equal, larger than b.
    int compare(const Monomial& a, const Monomial& b) const noexcept {
        switch (kind_) {
            case OrderKind::Lex:
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                return 0;
            case OrderKind::Grevlex:
                if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
                for (std::size_t i = a.size(); i-- > 0;)
                    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
                return 0;
            case OrderKind::Block:
                for (const auto& blk : blocks_) {
                    int c = compare_in_block(blk, a, b);
                    if (c) return c;
                }
                return 0;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

    /// Stable textual key, used to index cached bases.
    std::string key() const {
        auto k = [](OrderKind kind) { return kind == OrderKind::Lex ? std::string("lex") : std::string("grevlex"); };
        if (kind_ != OrderKind::Block) return k(kind_);
        std::string s = "block";
        for (const auto& b : blocks_) {
            s += "[" + k(b.inner) + ":";
            for (std::size_t i = 0; i < b.vars.size(); ++i) s += (i ? "," : "") + std::to_string(b.vars[i]);
            s += "]";
        }
        return s;
    }

    bool operator==(const MonomialOrder& o) const { return key() == o.key(); }

private:
    MonomialOrder(OrderKind k, std::vector<OrderBlock> b) : kind_(k), blocks_(std::move(b)) {}

    static int compare_in_block(const OrderBlock& blk, const Monomial& a, const Monomial& b) noexcept {
        if (blk.inner == OrderKind::Lex) {
            for (auto v : blk.vars)
                if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
            return 0;
        }
        std::uint64_t da = 0, db = 0;
        for (auto v : blk.vars) {
            da += a[v];
            db += b[v];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = blk.vars.size(); i-- > 0;) {
            auto v = blk.vars[i];
            if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
        }
        return 0;
    }

    OrderKind kind_;
    std::vector<OrderBlock> blocks_;
};

}  // namespace hilbspec

#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hilbspec/errors.hpp"

namespace hilbspec {

enum class Role { Lambda, T, Y };

inline std::string_view role_name(Role r) {
    switch (r) {
        case Role::Lambda: return "Lambda";
        case Role::T: return "T";
        case Role::Y: return "Y";
    }
    return "?";
}

struct VariableBlock {
    std::string name;
    Role role = Role::Y;
    std::vector<std::string> vars;

    bool operator==(const VariableBlock&) const = default;
};

/// Immutable ordered list of named variable blocks. Variables are numbered
/// consecutively in block order; that numbering is the exponent-vector layout
/// of every Monomial living in the context. Copies share the same storage.
class VariableContext {
public:
    VariableContext() : VariableContext(std::vector<VariableBlock>{}) {}

    explicit VariableContext(std::vector<VariableBlock> blocks) {
        auto d = std::make_shared<Data>();
        d->blocks = std::move(blocks);
        for (std::size_t b = 0; b < d->blocks.size(); ++b) {
            const auto& blk = d->blocks[b];
            for (std::size_t i = 0; i < b; ++i)
                if (d->blocks[i].name == blk.name)
                    throw PreconditionError("duplicate block name '" + blk.name + "'");
            for (const auto& v : blk.vars) {
                if (v.empty()) throw PreconditionError("empty variable name");
                if (!d->index.emplace(v, d->names.size()).second)
                    throw PreconditionError("duplicate variable name '" + v + "'");
                d->names.push_back(v);
                d->roles.push_back(blk.role);
                d->block_of.push_back(b);
            }
        }
        data_ = std::move(d);
    }

    /// Convenience: a single Y block.
    static VariableContext of_y(std::vector<std::string> vars, std::string block = "Y") {
        return VariableContext({VariableBlock{std::move(block), Role::Y, std::move(vars)}});
    }

    /// Convenience: a T block followed by a Y block (the T block is omitted when empty).
    static VariableContext of_ty(std::vector<std::string> params, std::vector<std::string> vars) {
        std::vector<VariableBlock> b;
        if (!params.empty()) b.push_back({"T", Role::T, std::move(params)});
        b.push_back({"Y", Role::Y, std::move(vars)});
        return VariableContext(std::move(b));
    }

    std::size_t size() const noexcept { return data_->names.size(); }
    const std::vector<VariableBlock>& blocks() const noexcept { return data_->blocks; }
    const std::vector<std::string>& names() const noexcept { return data_->names; }
    const std::string& name(std::size_t i) const { return data_->names.at(i); }
    Role role(std::size_t i) const { return data_->roles.at(i); }
    std::size_t block_of(std::size_t i) const { return data_->block_of.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = data_->index.find(std::string(name));
        if (it == data_->index.end()) return std::nullopt;
        return it->second;
    }
    std::size_t require_index(std::string_view name) const {
        auto i = index_of(name);
        if (!i) throw UnknownVariable(std::string(name));
        return *i;
    }

    std::vector<std::size_t> indices_with_role(Role r) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (data_->roles[i] == r) out.push_back(i);
        return out;
    }
    std::vector<std::string> names_with_role(Role r) const {
        std::vector<std::string> out;
        for (auto i : indices_with_role(r)) out.push_back(data_->names[i]);
        return out;
    }

    std::optional<std::size_t> find_block(std::string_view name) const {
        for (std::size_t b = 0; b < blocks().size(); ++b)
            if (blocks()[b].name == name) return b;
        return std::nullopt;
    }
    std::vector<std::size_t> block_indices(std::string_view block) const {
        auto b = find_block(block);
        if (!b) throw PreconditionError("no block named '" + std::string(block) + "'");
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (data_->block_of[i] == *b) out.push_back(i);
        return out;
    }

    std::size_t r() const { return indices_with_role(Role::T).size(); }
    std::size_t s() const { return indices_with_role(Role::Y).size(); }

    /// New context with `extra` placed in front of the existing blocks.
    VariableContext prepend(std::vector<VariableBlock> extra) const {
        extra.insert(extra.end(), blocks().begin(), blocks().end());
        return VariableContext(std::move(extra));
    }
    VariableContext append(std::vector<VariableBlock> extra) const {
        auto b = blocks();
        b.insert(b.end(), extra.begin(), extra.end());
        return VariableContext(std::move(b));
    }

    /// Context made of the blocks carrying one of `roles`, in original order.
    VariableContext restrict_roles(std::initializer_list<Role> roles) const {
        std::vector<VariableBlock> out;
        for (const auto& b : blocks())
            if (std::find(roles.begin(), roles.end(), b.role) != roles.end()) out.push_back(b);
        return VariableContext(std::move(out));
    }
    VariableContext restrict_blocks(const std::vector<std::string>& names) const {
        std::vector<VariableBlock> out;
        for (const auto& b : blocks())
            if (std::find(names.begin(), names.end(), b.name) != names.end()) out.push_back(b);
        return VariableContext(std::move(out));
    }

    bool same_as(const VariableContext& o) const noexcept { return data_ == o.data_; }
    bool operator==(const VariableContext& o) const {
        return data_ == o.data_ || data_->blocks == o.data_->blocks;
    }

private:
    struct Data {
        std::vector<VariableBlock> blocks;
        std::vector<std::string> names;
        std::vector<Role> roles;
        std::vector<std::size_t> block_of;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace hilbspec

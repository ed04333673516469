#pragma once

// Specialization of parametrized ideals: T at scalars, T at polynomials in Y,
// and intersection with specialized generic hypersurfaces.

#include <map>
#include <string>
#include <vector>

#include "hilbspec/genpoly.hpp"

namespace hilbspec {

struct SpecializationPoint {
    enum class Kind { Scalar, PolynomialValues };
    Kind kind = Kind::Scalar;
    std::vector<Rational> scalar;
    std::vector<Polynomial> polys;
    std::vector<unsigned> degrees;

    static SpecializationPoint at(std::vector<Rational> t) {
        SpecializationPoint p;
        p.scalar = std::move(t);
        return p;
    }
    static SpecializationPoint at_polynomials(std::vector<Polynomial> u, std::vector<unsigned> degrees) {
        if (u.size() != degrees.size()) throw PreconditionError("specialization point: one degree bound per polynomial");
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i].total_degree() > static_cast<int>(degrees[i]))
                throw PreconditionError("specialization point: U" + std::to_string(i + 1) + " exceeds its degree bound");
        SpecializationPoint p;
        p.kind = Kind::PolynomialValues;
        p.polys = std::move(u);
        p.degrees = std::move(degrees);
        return p;
    }
};

/// lambda values, one block per generic polynomial.
struct LambdaAssignment {
    std::vector<std::vector<Rational>> values;
};

/// Name of the i-th (0-based) coefficient block: L1, L2, ...
inline std::string lambda_block_name(std::size_t i) { return "L" + std::to_string(i + 1); }

namespace detail {

inline Ideal substitute_ideal(const Ideal& I, const std::map<std::string, Polynomial>& bindings,
                              const VariableContext& target) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.substitute(bindings, target));
    return Ideal(target, std::move(gens));  // zero generators are dropped
}

}  // namespace detail

/// T -> t; the result lives in the Y-only context. An ideal whose
/// generators all vanish comes back as the zero ideal.
inline Ideal specialize_scalar(const Ideal& I, const std::vector<Rational>& t) {
    const auto& ctx = I.context();
    auto ts = ctx.indices_with_role(Role::T);
    if (t.size() != ts.size())
        throw PreconditionError("specialize_scalar: expected " + std::to_string(ts.size()) + " values, got " +
                                std::to_string(t.size()));
    auto target = ctx.restrict_roles({Role::Y});
    std::map<std::string, Polynomial> b;
    for (std::size_t i = 0; i < ts.size(); ++i) b.emplace(ctx.name(ts[i]), Polynomial::constant(target, t[i]));
    return detail::substitute_ideal(I, b, target);
}

/// T_i -> U_i(Y); each U_i must live in the Y-only context of I.
inline Ideal specialize_polynomial(const Ideal& I, const std::vector<Polynomial>& U) {
    const auto& ctx = I.context();
    auto ts = ctx.indices_with_role(Role::T);
    if (U.size() != ts.size())
        throw PreconditionError("specialize_polynomial: expected " + std::to_string(ts.size()) + " polynomials, got " +
                                std::to_string(U.size()));
    auto target = ctx.restrict_roles({Role::Y});
    std::map<std::string, Polynomial> b;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(U[i].context() == target))
            throw ContextMismatch("specialize_polynomial: U" + std::to_string(i + 1) + " is not a polynomial in Y");
        b.emplace(ctx.name(ts[i]), U[i].embed(target));
    }
    return detail::substitute_ideal(I, b, target);
}

inline Ideal specialize(const Ideal& I, const SpecializationPoint& p) {
    return p.kind == SpecializationPoint::Kind::Scalar ? specialize_scalar(I, p.scalar) : specialize_polynomial(I, p.polys);
}

/// The polynomial sum_j lambda_j Q_j(Y) over the power products of degree
/// <= D, in `ctx` (only its Y variables are used).
inline Polynomial specialized_generic(const VariableContext& ctx, unsigned D, const std::vector<Rational>& lambda) {
    auto support = full_support(ctx, D);
    if (lambda.size() != support.size())
        throw PreconditionError("expected " + std::to_string(support.size()) + " coefficients for degree " +
                                std::to_string(D) + ", got " + std::to_string(lambda.size()));
    std::vector<Term> terms;
    for (std::size_t j = 0; j < support.size(); ++j) terms.push_back({support[j], lambda[j]});
    return Polynomial::from_terms(ctx, std::move(terms));
}

/// I + (Q_{D_1}(lambda_1, Y), ..., Q_{D_rho}(lambda_rho, Y)); requires
/// rho <= dim I.
inline Ideal intersect_generic(const Ideal& I, const std::vector<unsigned>& degrees, const LambdaAssignment& lambda,
                               const GbConfig& cfg = {}) {
    const auto& ctx = I.context();
    if (degrees.size() != lambda.values.size())
        throw PreconditionError("intersect_generic: " + std::to_string(degrees.size()) + " degrees but " +
                                std::to_string(lambda.values.size()) + " coefficient blocks");
    if (degrees.empty()) return I;
    const int d = I.dimension(cfg);
    if (static_cast<int>(degrees.size()) > d)
        throw PreconditionError("intersect_generic: rho = " + std::to_string(degrees.size()) +
                                " exceeds the dimension " + std::to_string(d));
    std::vector<Polynomial> gens = I.generators();
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::size_t nd = monomial_count(ctx.s(), degrees[i]);
        if (lambda.values[i].size() != nd)
            throw PreconditionError("intersect_generic: coefficient block " + std::to_string(i + 1) + " needs " +
                                    std::to_string(nd) + " values");
        auto block = lambda_block_name(i);
        auto ext = with_lambda_block(ctx, block, nd);
        auto g = generic_polynomial(ext, degrees[i], block).poly;
        auto names = lambda_names(block, nd);
        std::map<std::string, Polynomial> b;
        for (std::size_t j = 0; j < names.size(); ++j) b.emplace(names[j], Polynomial::constant(ctx, lambda.values[i][j]));
        gens.push_back(g.substitute(b, ctx));
    }
    return Ideal(ctx, std::move(gens));
}

/// I + (U_{D_i}(Lambda_i, Y) - T_i)_i in the context L1 | ... | Lr | T | Y.
inline Ideal build_parametric_system(const Ideal& I, const std::vector<unsigned>& degrees) {
    const auto& ctx = I.context();
    auto ts = ctx.indices_with_role(Role::T);
    if (degrees.size() != ts.size())
        throw PreconditionError("build_parametric_system: expected " + std::to_string(ts.size()) + " degrees");
    std::vector<VariableBlock> blocks;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto name = lambda_block_name(i);
        if (ctx.find_block(name)) throw PreconditionError("build_parametric_system: block '" + name + "' exists");
        blocks.push_back({name, Role::Lambda, lambda_names(name, monomial_count(ctx.s(), degrees[i]))});
    }
    auto ext = ctx.prepend(std::move(blocks));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.embed(ext));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        QuasiGenericSpec spec{full_support(ctx, degrees[i]), -Polynomial::variable(ctx, ts[i]), lambda_block_name(i)};
        gens.push_back(quasi_generic(spec, ext));
    }
    return Ideal(ext, std::move(gens));
}

/// U_i = sum_j lambda_ij Q_j(Y) in the Y-only context of `ctx`.
inline std::vector<Polynomial> polynomials_from_lambda(const VariableContext& ctx, const std::vector<unsigned>& degrees,
                                                       const LambdaAssignment& lambda) {
    if (degrees.size() != lambda.values.size()) throw PreconditionError("one coefficient block per degree expected");
    auto y = ctx.restrict_roles({Role::Y});
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < degrees.size(); ++i) out.push_back(specialized_generic(y, degrees[i], lambda.values[i]));
    return out;
}

/// Substitutes lambda into a parametric system and eliminates T, giving an
/// ideal of the Y-only context.
inline Ideal specialize_parametric(const Ideal& system, const LambdaAssignment& lambda, const GbConfig& cfg = {}) {
    const auto& ctx = system.context();
    auto target = ctx.restrict_roles({Role::T, Role::Y});
    std::map<std::string, Polynomial> b;
    for (std::size_t i = 0; i < lambda.values.size(); ++i) {
        auto idx = ctx.block_indices(lambda_block_name(i));
        if (idx.size() != lambda.values[i].size())
            throw PreconditionError("specialize_parametric: block " + lambda_block_name(i) + " has " +
                                    std::to_string(idx.size()) + " variables");
        for (std::size_t j = 0; j < idx.size(); ++j)
            b.emplace(ctx.name(idx[j]), Polynomial::constant(target, lambda.values[i][j]));
    }
    if (b.size() != ctx.indices_with_role(Role::Lambda).size())
        throw PreconditionError("specialize_parametric: every Lambda block needs values");
    auto at = detail::substitute_ideal(system, b, target);
    return eliminate(at, block_names_with_role(target, Role::Y), cfg);
}

}  // namespace hilbspec

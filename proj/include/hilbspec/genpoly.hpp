#pragma once

// Generic and quasi-generic polynomials, and the sufficient test for
// non-degeneracy hypothesis on a quasi-generic polynomial.

#include <cstdint>
#include <string>
#include <vector>

#include "hilbspec/primality.hpp"

namespace hilbspec {

/// Names of a coefficient block: "<block>_1", ..., "<block>_n".
inline std::vector<std::string> lambda_names(const std::string& block, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) out.push_back(block + "_" + std::to_string(j));
    return out;
}

/// `base` with a fresh Lambda block of `n` variables in front.
inline VariableContext with_lambda_block(const VariableContext& base, const std::string& block, std::size_t n) {
    if (base.find_block(block)) throw PreconditionError("block '" + block + "' already exists");
    return base.prepend({VariableBlock{block, Role::Lambda, lambda_names(block, n)}});
}

/// Number of power products of degree <= D in s variables, C(s + D, D).
inline std::size_t monomial_count(std::size_t s, unsigned D) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), s + D, D);
    if (!c.fits_ulong_p()) throw PreconditionError("monomial count overflows");
    return c.get_ui();
}

/// All power products of degree <= D in the Y variables of `ctx`, as
/// monomials of `ctx`; ordered by degree, then Y1 before Y2.
inline std::vector<Monomial> full_support(const VariableContext& ctx, unsigned D) {
    auto ys = ctx.indices_with_role(Role::Y);
    std::vector<Monomial> out;
    for (const auto& e : exponent_vectors_up_to(ys.size(), D)) {
        std::vector<Exponent> full(ctx.size(), 0);
        for (std::size_t k = 0; k < ys.size(); ++k) full[ys[k]] = e[k];
        out.emplace_back(std::move(full));
    }
    return out;
}

struct GenericPolynomial {
    Polynomial poly;
    std::size_t n_d;
};

/// sum_j L_j * Q_j(Y) over all power products Q_j of degree <= D; the block
/// `lambda_block` of `ctx` must have exactly N_D variables.
inline GenericPolynomial generic_polynomial(const VariableContext& ctx, unsigned D, const std::string& lambda_block) {
    const std::size_t s = ctx.s();
    if (s < 1) throw PreconditionError("generic_polynomial: context has no Y variables");
    const std::size_t nd = monomial_count(s, D);
    auto lam = ctx.block_indices(lambda_block);
    if (lam.size() != nd)
        throw PreconditionError("generic_polynomial: block '" + lambda_block + "' has " + std::to_string(lam.size()) +
                                " variables, N_D = " + std::to_string(nd));
    auto support = full_support(ctx, D);
    std::vector<Term> terms;
    for (std::size_t j = 0; j < nd; ++j)
        terms.push_back({support[j] * Monomial::variable(ctx.size(), lam[j]), Rational(1)});
    return {Polynomial::from_terms(ctx, std::move(terms)), nd};
}

/// Quasi-generic polynomial sum_j L_j * S_j + R. S lists monomials of
/// R's context in the Y variables only, with S[0] = 1.
struct QuasiGenericSpec {
    std::vector<Monomial> S;
    Polynomial R;
    std::string lambda_block;
};

inline void validate(const QuasiGenericSpec& spec) {
    const auto& ctx = spec.R.context();
    if (spec.S.empty() || !spec.S[0].is_one()) throw PreconditionError("quasi-generic spec: S[0] must be 1");
    auto ys = ctx.indices_with_role(Role::Y);
    for (std::size_t i = 0; i < spec.S.size(); ++i) {
        const auto& m = spec.S[i];
        if (m.size() != ctx.size()) throw ContextMismatch("quasi-generic spec: monomial does not fit R's context");
        for (std::size_t v = 0; v < ctx.size(); ++v)
            if (m[v] && ctx.role(v) != Role::Y)
                throw PreconditionError("quasi-generic spec: S may only involve Y variables");
        for (std::size_t j = 0; j < i; ++j)
            if (spec.S[j] == m) throw PreconditionError("quasi-generic spec: monomials of S must be distinct");
    }
    if (ctx.find_block(spec.lambda_block))
        throw PreconditionError("quasi-generic spec: block '" + spec.lambda_block + "' clashes with the context");
    for (const auto& n : lambda_names(spec.lambda_block, spec.S.size()))
        if (ctx.index_of(n)) throw PreconditionError("quasi-generic spec: variable '" + n + "' already exists");
}

/// Q_{S,R} in `target`, which must contain the Lambda block (|S| variables)
/// and every variable of R's context.
inline Polynomial quasi_generic(const QuasiGenericSpec& spec, const VariableContext& target) {
    validate(spec);
    auto lam = target.block_indices(spec.lambda_block);
    if (lam.size() != spec.S.size()) throw PreconditionError("quasi_generic: Lambda block size differs from |S|");
    Polynomial out = spec.R.embed(target);
    for (std::size_t j = 0; j < spec.S.size(); ++j)
        out += Polynomial::monomial(spec.R.context(), spec.S[j]).embed(target) * Polynomial::variable(target, lam[j]);
    return out;
}

/// Q_{S,R} in R's context extended by a fresh Lambda block in front.
inline Polynomial quasi_generic(const QuasiGenericSpec& spec) {
    validate(spec);
    return quasi_generic(spec, with_lambda_block(spec.R.context(), spec.lambda_block, spec.S.size()));
}

enum class HypothesisH { HoldsByLemma, Unknown };

inline std::string to_string(HypothesisH h) { return h == HypothesisH::HoldsByLemma ? "HoldsByLemma" : "Unknown"; }

struct HypothesisHStatus {
    HypothesisH status;
    std::string reason;
};

namespace detail {

inline bool covers_variables(const QuasiGenericSpec& spec, const std::vector<std::size_t>& vars, std::string& missing) {
    const auto& ctx = spec.R.context();
    for (auto v : vars) {
        Monomial m = Monomial::variable(ctx.size(), v);
        bool found = std::find(spec.S.begin(), spec.S.end(), m) != spec.S.end();
        if (!found && !(spec.R == Polynomial::variable(ctx, v))) {
            missing = ctx.name(v);
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// Sufficient condition for the hypothesis: I is not maximal and every Y variable is in
/// S or equals R. Never a negative claim.
inline HypothesisHStatus hypothesis_h_sufficient(const Ideal& I, const QuasiGenericSpec& spec,
                                                 const PrimalityConfig& cfg = {}, std::uint64_t seed = 1) {
    validate(spec);
    if (!(spec.R.context() == I.context())) throw ContextMismatch("hypothesis_h_sufficient: spec and ideal contexts differ");
    const int dim = I.dimension(cfg.gb);
    if (dim < 0) throw PreconditionError("hypothesis_h_sufficient: unit ideal");
    if (dim == 0) {
        auto v = is_prime(I, seed, cfg);
        if (v.status() == PrimeStatus::Prime) return {HypothesisH::Unknown, "ideal is maximal"};
        if (v.status() != PrimeStatus::NotPrime)
            return {HypothesisH::Unknown, "could not decide whether the zero-dimensional ideal is maximal"};
    }
    std::string missing;
    if (!detail::covers_variables(spec, I.context().indices_with_role(Role::Y), missing))
        return {HypothesisH::Unknown, "variable " + missing + " is neither in S nor equal to R"};
    return {HypothesisH::HoldsByLemma,
            dim > 0 ? "dimension " + std::to_string(dim) + " > 0 and S contains every Y variable"
                    : "ideal is not prime and S contains every Y variable"};
}

/// The check behind polynomial specialization: for the quasi-generic
/// polynomial of the T variable `t_index` (R = -T_i), the ambient ring is
/// re-blocked as K(other T)[T_i, Y]. Holds when I meets K[other T] only in 0,
/// the extended ideal has positive dimension, and S contains every Y.
inline HypothesisHStatus hypothesis_h_parametric(const Ideal& I, std::size_t t_index, const QuasiGenericSpec& spec,
                                                 const GbConfig& cfg = {}) {
    validate(spec);
    const auto& ctx = I.context();
    if (!(spec.R.context() == ctx)) throw ContextMismatch("hypothesis_h_parametric: spec and ideal contexts differ");
    auto ts = ctx.indices_with_role(Role::T);
    if (t_index >= ts.size()) throw PreconditionError("hypothesis_h_parametric: T index out of range");
    if (!(spec.R == -Polynomial::variable(ctx, ts[t_index])))
        return {HypothesisH::Unknown, "R is not -" + ctx.name(ts[t_index])};
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < ts.size(); ++k)
        if (k != t_index) others.push_back(ts[k]);
    const int fd = fiber_dimension_over(I, others, cfg);
    if (fd < 0) return {HypothesisH::Unknown, "ideal meets the ring of the other parameters"};
    if (fd == 0) return {HypothesisH::Unknown, "extended ideal is zero-dimensional"};
    std::string missing;
    if (!detail::covers_variables(spec, ctx.indices_with_role(Role::Y), missing))
        return {HypothesisH::Unknown, "variable " + missing + " is not in S"};
    return {HypothesisH::HoldsByLemma, "extended ideal has dimension " + std::to_string(fd) + " and S contains every Y"};
}

}  // namespace hilbspec

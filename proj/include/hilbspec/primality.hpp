#pragma once

// Primality verdicts for polynomial ideals over Q.
//
// Dimension 0: the quotient A = K[X]/I is a field iff some element u has an
// irreducible minimal polynomial of degree dim_K A. A reducible minimal
// polynomial m = f*g gives the zero-divisor certificate f(u)*g(u) in I.
// Dimension d > 0: first look for a component that does not dominate a
// maximal independent set (saturation), then cut by d random affine
// hyperplanes and test the zero-dimensional sections; a positive answer is
// probabilistic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbspec/factor.hpp"
#include "hilbspec/quotient.hpp"

namespace hilbspec {

enum class PrimeStatus { Prime, NotPrime, UnitIdeal, Inconclusive };

inline std::string to_string(PrimeStatus s) {
    switch (s) {
        case PrimeStatus::Prime: return "Prime";
        case PrimeStatus::NotPrime: return "NotPrime";
        case PrimeStatus::UnitIdeal: return "UnitIdeal";
        case PrimeStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline PrimeStatus prime_status_from_string(const std::string& s) {
    if (s == "Prime") return PrimeStatus::Prime;
    if (s == "NotPrime") return PrimeStatus::NotPrime;
    if (s == "UnitIdeal") return PrimeStatus::UnitIdeal;
    if (s == "Inconclusive") return PrimeStatus::Inconclusive;
    throw ConfigError("unknown primality status '" + s + "'");
}

struct PrimalityConfig {
    unsigned trials = 5;           // primality.trials
    long box_start = 10;           // primality.box_start
    long box_cap = 1L << 16;       // primality.box_cap
    GbConfig gb;
};

/// f*g in I with f, g not in I.
struct ZeroDivisorCertificate {
    Polynomial f;
    Polynomial g;
    Polynomial minimal_polynomial;  // reducible minimal polynomial it came from (zero if none)
    Polynomial element;             // u with m(u) = 0, or the saturating element
};

struct SectionData {
    std::vector<Polynomial> linear_forms;  // empty for zero-dimensional input
    Polynomial element;
    Polynomial minimal_polynomial;
    std::size_t vector_dim = 0;
};

/// Checks f*g in I, f not in I, g not in I.
inline bool certificate_holds(const GroebnerBasis& gb, const Polynomial& f, const Polynomial& g) {
    if (!gb.normal_form(f * g).is_zero()) return false;
    return !gb.normal_form(f).is_zero() && !gb.normal_form(g).is_zero();
}

class PrimalityVerdict {
public:
    static PrimalityVerdict unit_ideal() { return PrimalityVerdict(PrimeStatus::UnitIdeal, -1); }

    static PrimalityVerdict prime(int dimension, std::vector<SectionData> sections, unsigned trials, bool probabilistic) {
        PrimalityVerdict v(PrimeStatus::Prime, dimension);
        v.sections_ = std::move(sections);
        v.trials_ = trials;
        v.probabilistic_ = probabilistic;
        return v;
    }

    /// Re-verifies the certificate against `gb`; a certificate that fails
    /// is a bug, never a verdict.
    static PrimalityVerdict not_prime(const GroebnerBasis& gb, int dimension, ZeroDivisorCertificate cert, unsigned trials) {
        if (!certificate_holds(gb, cert.f, cert.g))
            throw std::logic_error("NotPrime certificate failed re-verification");
        PrimalityVerdict v(PrimeStatus::NotPrime, dimension);
        v.certificate_ = std::move(cert);
        v.trials_ = trials;
        return v;
    }

    static PrimalityVerdict inconclusive(int dimension, unsigned trials, std::string note) {
        PrimalityVerdict v(PrimeStatus::Inconclusive, dimension);
        v.trials_ = trials;
        v.note_ = std::move(note);
        return v;
    }

    PrimeStatus status() const noexcept { return status_; }
    int dimension() const noexcept { return dimension_; }
    bool probabilistic() const noexcept { return probabilistic_; }
    unsigned confidence_trials() const noexcept { return trials_; }
    const std::optional<ZeroDivisorCertificate>& certificate() const noexcept { return certificate_; }
    const std::vector<SectionData>& sections() const noexcept { return sections_; }
    const std::string& note() const noexcept { return note_; }

private:
    PrimalityVerdict(PrimeStatus s, int d) : status_(s), dimension_(d) {}

    PrimeStatus status_;
    int dimension_;
    bool probabilistic_ = false;
    unsigned trials_ = 0;
    std::optional<ZeroDivisorCertificate> certificate_;
    std::vector<SectionData> sections_;
    std::string note_;
};

namespace detail {

/// m(u) reduced modulo the basis, for m univariate in Z.
inline Polynomial evaluate_at(const Polynomial& m, const Polynomial& u, const GroebnerBasis& gb) {
    auto coeffs = upoly::to_qpoly(m, 0);
    Polynomial acc(u.context());
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = gb.normal_form(acc * u + Polynomial::constant(u.context(), coeffs[i]));
    }
    return acc;
}

inline Polynomial random_linear_form(const VariableContext& ctx, long box, bool affine, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-box, box);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        long c = coef(rng);
        if (c) terms.push_back({Monomial::variable(ctx.size(), i), Rational(c)});
    }
    if (affine) {
        long c = coef(rng);
        if (c) terms.push_back({Monomial(ctx.size()), Rational(c)});
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

struct ZeroDimOutcome {
    enum Kind { Field, ZeroDivisor, Degenerate } kind = Degenerate;
    SectionData section;
    std::optional<ZeroDivisorCertificate> cert;
    unsigned draws = 0;
};

/// Field test on a zero-dimensional quotient with up to `attempts` random
/// linear forms; the box doubles (up to the cap) after each degenerate draw.
inline ZeroDimOutcome zero_dim_test(const ZeroDimQuotient& q, unsigned attempts, long& box, long cap,
                                    std::mt19937_64& rng) {
    ZeroDimOutcome out;
    const auto& gb = q.basis_gb();
    for (unsigned a = 0; a < attempts; ++a) {
        ++out.draws;
        Polynomial u = random_linear_form(q.context(), box, false, rng);
        Polynomial m = minimal_polynomial(q, gb.normal_form(u));
        auto fac = factor_univariate(m);
        if (!fac.is_irreducible()) {
            // m = f * g with f the first irreducible factor.
            const Polynomial& f = fac.factors.front().first;
            Polynomial g = Polynomial::constant(m.context(), fac.unit);
            bool skipped = false;
            for (const auto& [h, e] : fac.factors) {
                unsigned k = e;
                if (!skipped && h == f) {
                    --k;
                    skipped = true;
                }
                g *= h.pow(k);
            }
            out.kind = ZeroDimOutcome::ZeroDivisor;
            out.cert = ZeroDivisorCertificate{evaluate_at(f, u, gb), evaluate_at(g, u, gb), m, u};
            out.section = {{}, u, m, q.vector_dim()};
            return out;
        }
        if (static_cast<std::size_t>(m.total_degree()) == q.vector_dim()) {
            out.kind = ZeroDimOutcome::Field;
            out.section = {{}, u, m, q.vector_dim()};
            return out;
        }
        box = std::min(box * 2, cap);
    }
    return out;
}

/// For an independent set U of maximal size, I K(U)[X] meets K[X] in
/// I : s^inf, s the product of the leading coefficients (in K[U]) of a basis
/// for a block order with U lowest. A generator h of the saturation outside
/// I gives the certificate h * s^k in I.
inline std::optional<ZeroDivisorCertificate> saturation_certificate(const Ideal& I, const GroebnerBasis& gb,
                                                                    const GbConfig& cfg) {
    const auto& ctx = I.context();
    std::vector<std::size_t> all(ctx.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto u = max_independent_set(gb.leading_monomials(), all);
    if (!u || u->empty()) return std::nullopt;
    std::vector<bool> in_u(ctx.size(), false);
    for (auto i : *u) in_u[i] = true;
    std::vector<std::size_t> rest;
    for (auto i : all)
        if (!in_u[i]) rest.push_back(i);
    auto bgb = I.groebner_basis(MonomialOrder::elimination(rest, *u), cfg);

    Polynomial s = Polynomial::constant(ctx, 1);
    for (std::size_t k = 0; k < bgb->size(); ++k) {
        const Monomial& lm = bgb->leading_term(k).mono;
        std::vector<Term> lc;
        for (const auto& t : bgb->polynomials()[k].terms()) {
            bool same = true;
            for (auto i : rest)
                if (t.mono[i] != lm[i]) {
                    same = false;
                    break;
                }
            if (!same) continue;
            std::vector<Exponent> e(ctx.size(), 0);
            for (auto i : *u) e[i] = t.mono[i];
            lc.push_back({Monomial(std::move(e)), t.coeff});
        }
        auto c = Polynomial::from_terms(ctx, std::move(lc));
        if (!c.is_constant()) s *= c.monic();
    }
    if (s.is_constant()) return std::nullopt;

    std::string wname = "W";
    while (ctx.index_of(wname)) wname += "_";
    auto wctx = ctx.prepend({VariableBlock{wname, Role::Y, {wname}}});
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.embed(wctx));
    gens.push_back(Polynomial::constant(wctx, 1) - s.embed(wctx) * Polynomial::variable(wctx, 0));
    std::vector<std::size_t> others;
    for (std::size_t i = 1; i < wctx.size(); ++i) others.push_back(i);
    auto sat = buchberger_basis(wctx, gens, MonomialOrder::elimination({0}, others), cfg);
    for (const auto& h : sat.polynomials()) {
        if (h.degree_in(0) != 0) continue;
        Polynomial hh = gb.normal_form(h.embed(ctx));
        if (hh.is_zero()) continue;
        Polynomial sk = s;
        for (int k = 1; k <= 64; ++k, sk = gb.normal_form(sk * s)) {
            if (gb.normal_form(hh * sk).is_zero()) {
                if (!certificate_holds(gb, hh, sk)) break;
                return ZeroDivisorCertificate{hh, sk, Polynomial(minimal_polynomial_context()), s};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Primality verdict for I (see file comment). Deterministic for a fixed seed.
inline PrimalityVerdict is_prime(const Ideal& I, std::uint64_t seed, const PrimalityConfig& cfg = {}) {
    if (cfg.trials < 1) throw PreconditionError("is_prime: trials must be >= 1");
    std::mt19937_64 rng(seed);
    auto gb = I.groebner_basis(MonomialOrder::grevlex(), cfg.gb);
    if (gb->is_unit()) return PrimalityVerdict::unit_ideal();
    const int dim = I.dimension(cfg.gb);
    long box = std::max<long>(1, cfg.box_start);

    if (dim == 0) {
        ZeroDimQuotient q(gb);
        auto r = detail::zero_dim_test(q, cfg.trials, box, cfg.box_cap, rng);
        if (r.kind == detail::ZeroDimOutcome::Field) return PrimalityVerdict::prime(0, {r.section}, r.draws, false);
        if (r.kind == detail::ZeroDimOutcome::ZeroDivisor)
            return PrimalityVerdict::not_prime(*gb, 0, *r.cert, r.draws);
        return PrimalityVerdict::inconclusive(0, r.draws, "only degenerate linear forms drawn");
    }

    if (auto c = detail::saturation_certificate(I, *gb, cfg.gb))
        return PrimalityVerdict::not_prime(*gb, dim, std::move(*c), 0);

    // Positive dimension: random sections by `dim` affine hyperplanes.
    const auto& ctx = I.context();
    std::vector<SectionData> agreeing;
    const unsigned max_attempts = 4 * cfg.trials;
    unsigned attempts = 0, degenerate = 0, reducible = 0;
    while (agreeing.size() < cfg.trials && attempts < max_attempts) {
        ++attempts;
        std::vector<Polynomial> forms, gens = I.generators();
        for (int k = 0; k < dim; ++k) {
            forms.push_back(detail::random_linear_form(ctx, box, true, rng));
            gens.push_back(forms.back());
        }
        Ideal section(ctx, gens);
        auto sgb = section.groebner_basis(MonomialOrder::grevlex(), cfg.gb);
        if (sgb->is_unit() || section.dimension(cfg.gb) != 0) {
            ++degenerate;
            box = std::min(box * 2, cfg.box_cap);
            continue;
        }
        ZeroDimQuotient q(sgb);
        auto r = detail::zero_dim_test(q, cfg.trials, box, cfg.box_cap, rng);
        if (r.kind == detail::ZeroDimOutcome::Field) {
            r.section.linear_forms = std::move(forms);
            agreeing.push_back(std::move(r.section));
            continue;
        }
        if (r.kind == detail::ZeroDimOutcome::ZeroDivisor) {
            if (certificate_holds(*gb, gb->normal_form(r.cert->f), gb->normal_form(r.cert->g))) {
                ZeroDivisorCertificate c = *r.cert;
                c.f = gb->normal_form(c.f);
                c.g = gb->normal_form(c.g);
                return PrimalityVerdict::not_prime(*gb, dim, std::move(c), attempts);
            }
            // The section left the Hilbert set of I; redraw in a larger box.
            ++reducible;
        } else {
            ++degenerate;
        }
        box = std::min(box * 2, cfg.box_cap);
    }
    if (agreeing.size() == cfg.trials) return PrimalityVerdict::prime(dim, std::move(agreeing), attempts, true);
    return PrimalityVerdict::inconclusive(
        dim, attempts,
        std::to_string(agreeing.size()) + " field sections, " + std::to_string(reducible) +
            " reducible sections without a lifting certificate, " + std::to_string(degenerate) + " degenerate sections");
}

}  // namespace hilbspec

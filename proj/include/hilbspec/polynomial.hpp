#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hilbspec/context.hpp"
#include "hilbspec/monomial.hpp"
#include "hilbspec/rational.hpp"

namespace hilbspec {

struct Term {
    Monomial mono;
    Rational coeff;

    bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over Q. Terms are stored without zero
/// coefficients, sorted by decreasing graded-lex order of their monomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(VariableContext ctx) : ctx_(std::move(ctx)) {}

    static Polynomial constant(VariableContext ctx, const Rational& c) {
        Polynomial p(std::move(ctx));
        if (c != 0) p.terms_.push_back({Monomial(p.ctx_.size()), c});
        return p;
    }
    static Polynomial variable(VariableContext ctx, std::string_view name) {
        auto i = ctx.require_index(name);
        return variable(std::move(ctx), i);
    }
    static Polynomial variable(VariableContext ctx, std::size_t index) {
        Polynomial p(std::move(ctx));
        p.terms_.push_back({Monomial::variable(p.ctx_.size(), index), Rational(1)});
        return p;
    }
    static Polynomial monomial(VariableContext ctx, Monomial m, const Rational& c = Rational(1)) {
        if (m.size() != ctx.size()) throw ContextMismatch("monomial does not fit context");
        Polynomial p(std::move(ctx));
        if (c != 0) p.terms_.push_back({std::move(m), c});
        return p;
    }
    /// Builds the canonical form of an arbitrary term list (duplicates combined).
    static Polynomial from_terms(VariableContext ctx, std::vector<Term> terms) {
        Polynomial p(std::move(ctx));
        for (const auto& t : terms)
            if (t.mono.size() != p.ctx_.size()) throw ContextMismatch("monomial does not fit context");
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return compare_graded_lex(a.mono, b.mono) > 0; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (p.terms_.back().coeff == 0) p.terms_.pop_back();
            } else if (t.coeff != 0) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const VariableContext& context() const noexcept { return ctx_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rational constant_value() const {
        if (terms_.empty() || !terms_.back().mono.is_one()) return Rational(0);
        return terms_.back().coeff;
    }
    /// Total degree; -1 for the zero polynomial.
    long total_degree() const noexcept {
        return terms_.empty() ? -1 : static_cast<long>(terms_.front().mono.degree());
    }
    long degree_in(std::size_t var) const {
        long d = -1;
        for (const auto& t : terms_) d = std::max<long>(d, t.mono[var]);
        return d;
    }
    const Term& leading_term() const { return terms_.front(); }

    Rational coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return Rational(0);
    }

    /// Indices of variables that occur with positive exponent.
    std::vector<std::size_t> support() const {
        std::vector<bool> used(ctx_.size(), false);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < ctx_.size(); ++i)
                if (t.mono[i]) used[i] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (used[i]) out.push_back(i);
        return out;
    }

    /// Canonical-form audit: sorted, no zero coefficient, consistent lengths.
    bool is_canonical() const {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].coeff == 0 || terms_[i].mono.size() != ctx_.size()) return false;
            if (i && compare_graded_lex(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
        }
        return true;
    }

    bool operator==(const Polynomial& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) terms.push_back({m, std::move(c)});
        Polynomial r(a.ctx_);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& x, const Term& y) { return compare_graded_lex(x.mono, y.mono) > 0; });
        r.terms_ = std::move(terms);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        if (c == 0) return Polynomial(p.ctx_);
        Polynomial r = p;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    Polynomial times_monomial(const Monomial& m, const Rational& c) const {
        if (c == 0) return Polynomial(ctx_);
        Polynomial r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        // Multiplying by a monomial preserves graded-lex order.
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(ctx_, Rational(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// Ring homomorphism into `target`: bound variables are replaced by their
    /// images (which must live in `target`); unbound variables map to the
    /// variable of the same name in `target`.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings, const VariableContext& target) const {
        std::vector<std::optional<Polynomial>> image(ctx_.size());
        for (const auto& [name, poly] : bindings) {
            auto i = ctx_.index_of(name);
            if (!i) throw UnknownVariable(name);
            if (!(poly.context() == target))
                throw ContextMismatch("image of '" + name + "' does not live in the target context");
            image[*i] = poly;
        }
        std::vector<bool> needed(ctx_.size(), false);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < ctx_.size(); ++i)
                if (t.mono[i]) needed[i] = true;
        for (std::size_t i = 0; i < ctx_.size(); ++i) {
            if (image[i] || !needed[i]) continue;
            auto j = target.index_of(ctx_.name(i));
            if (!j)
                throw ContextMismatch("variable '" + ctx_.name(i) + "' is unbound and absent from the target context");
            image[i] = variable(target, *j);
        }
        // Cache powers per variable.
        std::vector<std::vector<Polynomial>> powers(ctx_.size());
        auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, Rational(1)));
            while (pw.size() <= e) pw.push_back(pw.back() * *image[i]);
            return pw[e];
        };
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.coeff);
            for (std::size_t i = 0; i < ctx_.size() && !prod.is_zero(); ++i)
                if (t.mono[i]) prod *= power(i, t.mono[i]);
            for (auto& u : prod.terms_) acc[u.mono] += u.coeff;
        }
        std::vector<Term> terms;
        for (auto& [m, c] : acc)
            if (c != 0) terms.push_back({m, c});
        return from_terms(target, std::move(terms));
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    /// Variables of `target` not present here get exponent zero.
    Polynomial embed(const VariableContext& target) const {
        if (ctx_.same_as(target)) return *this;
        std::vector<std::size_t> map(ctx_.size());
        std::vector<bool> used(ctx_.size(), false);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < ctx_.size(); ++i)
                if (t.mono[i]) used[i] = true;
        for (std::size_t i = 0; i < ctx_.size(); ++i) {
            auto j = target.index_of(ctx_.name(i));
            if (!j) {
                if (used[i]) throw ContextMismatch("variable '" + ctx_.name(i) + "' missing from target context");
                continue;
            }
            map[i] = *j;
        }
        std::vector<Term> terms;
        terms.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<Exponent> e(target.size(), 0);
            for (std::size_t i = 0; i < ctx_.size(); ++i)
                if (t.mono[i]) e[map[i]] = t.mono[i];
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return from_terms(target, std::move(terms));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Rational inv = 1 / terms_.front().coeff;
        return inv * *this;
    }

    /// Canonical text form; re-parses to the same polynomial.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            bool neg = c < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < ctx_.size(); ++i) {
                if (!t.mono[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += ctx_.name(i);
                if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
            }
            if (mono.empty()) {
                out += c.get_str();
            } else if (c == 1) {
                out += mono;
            } else {
                out += c.get_str() + "*" + mono;
            }
        }
        return out;
    }

private:
    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (!a.ctx_.same_as(b.ctx_) && !(a.ctx_ == b.ctx_))
            throw ContextMismatch("polynomials live in different contexts");
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        check_same(a, b);
        Polynomial r(a.ctx_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int cmp;
            if (i == a.terms_.size()) cmp = -1;
            else if (j == b.terms_.size()) cmp = 1;
            else cmp = compare_graded_lex(a.terms_[i].mono, b.terms_[j].mono);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                Term t = b.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                r.terms_.push_back(std::move(t));
            } else {
                Rational c = subtract ? Rational(a.terms_[i].coeff - b.terms_[j].coeff)
                                      : Rational(a.terms_[i].coeff + b.terms_[j].coeff);
                if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    VariableContext ctx_;
    std::vector<Term> terms_;
};

struct ContentPrimitive {
    Rational content;
    Polynomial primitive;
};

/// Splits p = content * primitive, where the primitive part has coprime
/// integer coefficients and a positive leading (graded-lex) coefficient.
inline ContentPrimitive integer_content_primitive(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionError("content of the zero polynomial");
    Integer g = 0, l = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational content = make_rational(g, l);
    if (p.leading_term().coeff < 0) content = -content;
    Polynomial prim = Rational(1 / content) * p;
    return {content, prim};
}

}  // namespace hilbspec

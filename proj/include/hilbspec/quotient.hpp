#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hilbspec/groebner.hpp"
#include "hilbspec/univariate.hpp"

namespace hilbspec {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, square

/// K[X]/I for a zero-dimensional ideal I, as a finite-dimensional vector
/// space with the staircase monomials of the grevlex basis as its basis.
/// Multiplication operators are built on first use; a quotient object is not
/// meant to be shared between threads.
class ZeroDimQuotient {
public:
    explicit ZeroDimQuotient(std::shared_ptr<const GroebnerBasis> gb) : gb_(std::move(gb)) {
        const auto& ctx = gb_->context();
        auto lms = gb_->leading_monomials();
        auto under = [&](const Monomial& m) {
            for (const auto& l : lms)
                if (l.divides(m)) return false;
            return true;
        };
        std::deque<Monomial> queue;
        Monomial one(ctx.size());
        if (under(one)) {
            queue.push_back(one);
            index_.emplace(one, 0);
            basis_.push_back(one);
        }
        while (!queue.empty()) {
            Monomial m = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < ctx.size(); ++v) {
                Monomial n = m * Monomial::variable(ctx.size(), v);
                if (index_.count(n) || !under(n)) continue;
                if (basis_.size() > kMaxDim) throw PreconditionError("quotient is not finite dimensional");
                index_.emplace(n, basis_.size());
                basis_.push_back(n);
                queue.push_back(std::move(n));
            }
        }
        std::sort(basis_.begin(), basis_.end(),
                  [&](const Monomial& a, const Monomial& b) { return gb_->order().compare(a, b) < 0; });
        index_.clear();
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
        mult_.resize(ctx.size());
    }

    const GroebnerBasis& basis_gb() const noexcept { return *gb_; }
    const VariableContext& context() const noexcept { return gb_->context(); }
    const std::vector<Monomial>& staircase() const noexcept { return basis_; }
    std::size_t vector_dim() const noexcept { return basis_.size(); }

    Polynomial reduce(const Polynomial& p) const { return gb_->normal_form(p); }

    /// Coordinates of a polynomial that is already in normal form.
    Vector coordinates(const Polynomial& nf) const {
        Vector v(basis_.size(), Rational(0));
        for (const auto& t : nf.terms()) {
            auto it = index_.find(t.mono);
            if (it == index_.end()) throw PreconditionError("polynomial is not reduced modulo the ideal");
            v[it->second] = t.coeff;
        }
        return v;
    }

    Polynomial from_coordinates(const Vector& v) const {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) terms.push_back({basis_[i], v[i]});
        return Polynomial::from_terms(context(), std::move(terms));
    }

    /// Matrix of multiplication by `element`: column j holds the coordinates
    /// of NF(element * b_j).
    Matrix multiplication_matrix(const Polynomial& element) const {
        const std::size_t n = basis_.size();
        Matrix m(n, Vector(n, Rational(0)));
        for (std::size_t j = 0; j < n; ++j) {
            auto col = coordinates(reduce(element.times_monomial(basis_[j], Rational(1))));
            for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
        }
        return m;
    }

    const Matrix& variable_matrix(std::size_t var) const {
        auto& slot = mult_.at(var);
        if (!slot) slot = multiplication_matrix(Polynomial::variable(context(), var));
        return *slot;
    }

private:
    static constexpr std::size_t kMaxDim = 100000;
    std::shared_ptr<const GroebnerBasis> gb_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
    mutable std::vector<std::optional<Matrix>> mult_;
};

inline ZeroDimQuotient quotient_basis(const Ideal& I, const GbConfig& cfg = {}) {
    int d = I.dimension(cfg);
    if (d == -1) throw PreconditionError("quotient_basis: unit ideal has dimension -1");
    if (d != 0) throw PreconditionError("quotient_basis: ideal has dimension " + std::to_string(d) + ", expected 0");
    return ZeroDimQuotient(I.groebner_basis(MonomialOrder::grevlex(), cfg));
}

inline Vector mat_vec(const Matrix& m, const Vector& v) {
    Vector out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

/// Context holding the single variable Z used for minimal polynomials.
inline const VariableContext& minimal_polynomial_context() {
    static const VariableContext ctx = VariableContext::of_y({"Z"}, "Z");
    return ctx;
}

/// Monic minimal polynomial (in Z) of `element` acting on the quotient, from
/// the first linear dependence in the Krylov sequence 1, e, e^2, ...
inline Polynomial minimal_polynomial(const ZeroDimQuotient& q, const Polynomial& element) {
    const std::size_t n = q.vector_dim();
    Matrix m = q.multiplication_matrix(element);
    // Echelon rows with their expression in terms of the Krylov vectors.
    struct Row {
        Vector v;
        Vector combo;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    Vector cur(n, Rational(0));
    cur[0] = 1;  // staircase starts with the monomial 1
    for (std::size_t k = 0; k <= n; ++k) {
        Vector v = cur, combo(k + 1, Rational(0));
        combo[k] = 1;
        for (const auto& r : rows) {
            if (v[r.pivot] == 0) continue;
            Rational f = v[r.pivot] / r.v[r.pivot];
            for (std::size_t i = 0; i < n; ++i)
                if (r.v[i] != 0) v[i] -= f * r.v[i];
            for (std::size_t i = 0; i < r.combo.size(); ++i)
                if (r.combo[i] != 0) combo[i] -= f * r.combo[i];
        }
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            // combo . (1, e, ..., e^k) = 0 with combo[k] = 1.
            return upoly::to_polynomial(combo, minimal_polynomial_context(), 0);
        }
        rows.push_back({std::move(v), std::move(combo), piv});
        cur = mat_vec(m, cur);
    }
    throw Error("minimal_polynomial: no linear dependence found");
}

}  // namespace hilbspec

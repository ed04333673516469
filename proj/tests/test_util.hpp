#pragma once

#include <random>
#include <vector>

#include "hilbspec/polynomial.hpp"

namespace hilbspec::testing {

/// Random polynomial of total degree <= max_deg with integer coefficients in
/// [-height, height].
inline Polynomial random_polynomial(const VariableContext& ctx, unsigned max_deg, long height, std::mt19937_64& rng,
                                    unsigned max_terms = 6) {
    std::uniform_int_distribution<long> coef(-height, height);
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    auto exps = exponent_vectors_up_to(ctx.size(), max_deg);
    std::uniform_int_distribution<std::size_t> pick(0, exps.size() - 1);
    std::vector<Term> terms;
    for (unsigned k = nterms(rng); k > 0; --k) terms.push_back({Monomial(exps[pick(rng)]), Rational(coef(rng))});
    return Polynomial::from_terms(ctx, std::move(terms));
}

/// Direct evaluation from the term list; independent of the arithmetic code.
inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    Rational acc = 0;
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

}  // namespace hilbspec::testing

#pragma once

// Dense univariate helpers over Z, Q and Z/p. Coefficient vectors are stored
// lowest degree first and kept trimmed (no trailing zeros; zero is empty).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "hilbspec/polynomial.hpp"

namespace hilbspec::upoly {

using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;
using ModPoly = std::vector<std::uint64_t>;

template <class V>
void trim(V& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

template <class V>
long degree(const V& v) {
    return static_cast<long>(v.size()) - 1;
}

// ---------------------------------------------------------------- Q[x]

inline QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
    if (b.empty()) throw PreconditionError("division by the zero polynomial");
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline QPoly q_monic(QPoly a) {
    if (a.empty()) return a;
    Rational inv = 1 / a.back();
    for (auto& c : a) c *= inv;
    return a;
}

inline QPoly q_gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        auto r = q_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return q_monic(a);
}

inline QPoly q_derivative(const QPoly& a) {
    QPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

// ---------------------------------------------------------------- Z[x]

inline Integer z_content(const ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly z_primitive(ZPoly a) {
    trim(a);
    if (a.empty()) return a;
    Integer g = z_content(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

inline ZPoly z_from_q(const QPoly& a) {
    Integer l = 1;
    for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly r;
    for (const auto& c : a) r.push_back(Integer(c * l));
    return z_primitive(std::move(r));
}

inline QPoly q_from_z(const ZPoly& a) { return QPoly(a.begin(), a.end()); }

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// a / b when b divides a in Z[x]; nullopt otherwise.
inline std::optional<ZPoly> z_exact_divide(ZPoly a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    trim(a);
    if (a.empty()) return ZPoly{};
    if (a.size() < b.size()) return std::nullopt;
    ZPoly q(a.size() - b.size() + 1);
    Integer c, rem;
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) return std::nullopt;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    if (!a.empty()) return std::nullopt;
    trim(q);
    return q;
}

/// Coefficients reduced into (-m/2, m/2].
inline ZPoly z_symmetric_mod(ZPoly a, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    trim(a);
    return a;
}

// ---------------------------------------------------------------- Z/p[x]

struct ModP {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

    std::uint64_t reduce(const Integer& z) const {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
        return r.get_ui();
    }
    ModPoly reduce(const ZPoly& a) const {
        ModPoly r;
        for (const auto& c : a) r.push_back(reduce(c));
        trim(r);
        return r;
    }

    ModPoly add(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
        trim(r);
        return r;
    }
    ModPoly sub(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }
    ModPoly mul(const ModPoly& a, const ModPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ModPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
        if (b.empty()) throw PreconditionError("division by zero polynomial mod p");
        ModPoly q;
        if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
        std::uint64_t li = inv(b.back());
        while (!a.empty() && a.size() >= b.size()) {
            std::size_t shift = a.size() - b.size();
            std::uint64_t c = mul(a.back(), li);
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(c, b[i]));
            a.pop_back();
            trim(a);
        }
        trim(q);
        return {q, a};
    }
    ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
    ModPoly monic(ModPoly a) const {
        if (a.empty()) return a;
        std::uint64_t li = inv(a.back());
        for (auto& c : a) c = mul(c, li);
        return a;
    }
    ModPoly gcd(ModPoly a, ModPoly b) const {
        while (!b.empty()) {
            auto r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    /// Returns (g, s, t) with s*a + t*b = g monic.
    std::tuple<ModPoly, ModPoly, ModPoly> ext_gcd(ModPoly a, ModPoly b) const {
        ModPoly s0{1}, s1{}, t0{}, t1{1};
        while (!b.empty()) {
            auto [q, r] = divmod(a, b);
            a = std::move(b);
            b = std::move(r);
            auto s2 = sub(s0, mul(q, s1));
            auto t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        std::uint64_t li = inv(a.back());
        for (auto* v : {&a, &s0, &t0})
            for (auto& c : *v) c = mul(c, li);
        return {a, s0, t0};
    }
    ModPoly derivative(const ModPoly& a) const {
        ModPoly r;
        for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
        trim(r);
        return r;
    }
    ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
        ModPoly r{1};
        r = mod(r, m);
        base = mod(base, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = mod(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
        }
        return r;
    }
};

// ---------------------------------------------------------------- bridging

/// The single variable a univariate polynomial lives in: its only support
/// variable, or variable 0 of a one-variable context for constants.
inline std::size_t univariate_variable(const Polynomial& p) {
    auto sup = p.support();
    if (sup.size() > 1) throw PreconditionError("polynomial is not univariate: " + p.str());
    if (sup.size() == 1) return sup[0];
    if (p.context().size() == 0) throw PreconditionError("constant polynomial in an empty context");
    return 0;
}

inline QPoly to_qpoly(const Polynomial& p, std::size_t var) {
    QPoly r(static_cast<std::size_t>(std::max<long>(p.degree_in(var), -1) + 1), Rational(0));
    for (const auto& t : p.terms()) r[t.mono[var]] = t.coeff;
    trim(r);
    return r;
}

template <class V>
Polynomial to_polynomial(const V& coeffs, const VariableContext& ctx, std::size_t var) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) terms.push_back({Monomial::variable(ctx.size(), var, static_cast<Exponent>(i)), Rational(coeffs[i])});
    return Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace hilbspec::upoly

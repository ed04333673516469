#pragma once

// Factorization of univariate polynomials over Q: squarefree decomposition,
// factorization modulo a small prime (Cantor-Zassenhaus), Hensel lifting and
// exhaustive recombination of the lifted factors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hilbspec/univariate.hpp"

namespace hilbspec {

struct UnivariateFactorization {
    Rational unit;
    std::vector<std::pair<Polynomial, unsigned>> factors;  // primitive, positive leading coefficient

    bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
    Polynomial product(const VariableContext& ctx) const {
        Polynomial p = Polynomial::constant(ctx, unit);
        for (const auto& [f, m] : factors) p *= f.pow(m);
        return p;
    }
};

namespace upoly {

/// Yun's algorithm over Q. Returns (g_i, i) with f = c * prod g_i^i, each g_i
/// primitive squarefree and pairwise coprime.
inline std::vector<std::pair<ZPoly, unsigned>> squarefree_decomposition(const ZPoly& f) {
    std::vector<std::pair<ZPoly, unsigned>> out;
    QPoly fq = q_from_z(f);
    QPoly fd = q_derivative(fq);
    QPoly a = q_gcd(fq, fd);
    QPoly b = q_divmod(fq, a).first;
    QPoly c = q_divmod(fd, a).first;
    QPoly d = q_sub(c, q_derivative(b));
    for (unsigned i = 1; degree(b) > 0; ++i) {
        a = q_gcd(b, d);
        b = q_divmod(b, a).first;
        c = q_divmod(d, a).first;
        d = q_sub(c, q_derivative(b));
        if (degree(a) > 0) out.emplace_back(z_from_q(a), i);
    }
    return out;
}

inline bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest odd prime not dividing lc(f) for which f mod p stays squarefree.
inline std::uint64_t choose_prime(const ZPoly& f) {
    for (std::uint64_t p = 3;; p += 2) {
        if (!is_small_prime(p)) continue;
        ModP F{p};
        if (F.reduce(f.back()) == 0) continue;
        auto fp = F.reduce(f);
        if (degree(F.gcd(fp, F.derivative(fp))) == 0) return p;
        if (p > (1u << 30)) throw Error("no good prime found");
    }
}

inline std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const ModP& F, ModPoly f) {
    std::vector<std::pair<ModPoly, unsigned>> out;
    const ModPoly x{0, 1};
    ModPoly h = F.mod(x, f);
    unsigned d = 0;
    while (degree(f) >= 2 * static_cast<long>(d + 1)) {
        ++d;
        h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
        ModPoly g = F.gcd(f, F.sub(h, x));
        if (degree(g) > 0) {
            out.emplace_back(g, d);
            f = F.divmod(f, g).first;
            h = F.mod(h, f);
        }
    }
    if (degree(f) > 0) out.emplace_back(F.monic(f), static_cast<unsigned>(degree(f)));
    return out;
}

inline void equal_degree(const ModP& F, const ModPoly& g, unsigned d, std::mt19937_64& rng,
                         std::vector<ModPoly>& out) {
    if (degree(g) == static_cast<long>(d)) {
        out.push_back(F.monic(g));
        return;
    }
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), F.p, d);
    Integer e = (pd - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coef(0, F.p - 1);
    for (;;) {
        ModPoly a(static_cast<std::size_t>(degree(g)));
        for (auto& c : a) c = coef(rng);
        trim(a);
        if (degree(a) < 1) continue;
        ModPoly b = F.sub(F.powmod(a, e, g), ModPoly{1});
        ModPoly c = F.gcd(b, g);
        if (degree(c) > 0 && degree(c) < degree(g)) {
            equal_degree(F, c, d, rng, out);
            equal_degree(F, F.divmod(g, c).first, d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of squarefree f modulo p (f's leading
/// coefficient must be a unit mod p).
inline std::vector<ModPoly> factor_mod_p(const ModP& F, const ModPoly& f) {
    std::mt19937_64 rng(0x5eed);
    std::vector<ModPoly> out;
    for (auto& [g, d] : distinct_degree(F, F.monic(f))) equal_degree(F, g, d, rng, out);
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

/// Lifts f = lc(f) * g * (rest) mod p to a factor G = g mod p, monic, with
/// f = G * H mod `modulus` (= p^k).
inline ZPoly hensel_lift_factor(const ZPoly& f, const ModP& F, const ModPoly& g, const Integer& modulus) {
    ModPoly fp = F.reduce(f);
    auto [h, rem] = F.divmod(fp, g);
    if (!rem.empty()) throw Error("Hensel lifting: modular factor does not divide");
    auto [one, s, t] = F.ext_gcd(g, h);
    if (degree(one) != 0) throw Error("Hensel lifting: factors are not coprime mod p");

    ZPoly G(g.begin(), g.end()), H(h.begin(), h.end());
    H.back() = f.back();
    Integer q = F.p;
    while (q < modulus) {
        ZPoly e = f;
        auto gh = z_mul(G, H);
        e.resize(std::max(e.size(), gh.size()));
        for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
        ModPoly ep = F.reduce(e);
        auto [qq, dg] = F.divmod(F.mul(t, ep), g);
        ModPoly dh = F.add(F.mul(s, ep), F.mul(qq, h));
        if (G.size() < dg.size()) G.resize(dg.size());
        for (std::size_t i = 0; i < dg.size(); ++i) G[i] += q * Integer(static_cast<unsigned long>(dg[i]));
        if (H.size() < dh.size()) H.resize(dh.size());
        for (std::size_t i = 0; i < dh.size(); ++i) H[i] += q * Integer(static_cast<unsigned long>(dh[i]));
        q *= F.p;
    }
    for (auto& c : G) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    return G;
}

/// Twice the Landau-Mignotte bound on coefficients of lc(f)-scaled factors.
inline Integer lifting_bound(const ZPoly& f) {
    Integer sq = 0;
    for (const auto& c : f) sq += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
    norm += 1;
    Integer b = integer_abs(f.back()) * norm;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.size() - 1));
    return 2 * b;
}

/// Irreducible factors over Z of a primitive squarefree polynomial with
/// positive leading coefficient.
inline std::vector<ZPoly> factor_squarefree(ZPoly f) {
    if (degree(f) <= 1) return {f};
    std::uint64_t p = choose_prime(f);
    ModP F{p};
    auto modular = factor_mod_p(F, F.reduce(f));
    if (modular.size() == 1) return {f};

    Integer bound = lifting_bound(f), modulus = p;
    while (modulus <= bound) modulus *= p;
    std::vector<ZPoly> lifted;
    for (const auto& g : modular) lifted.push_back(hensel_lift_factor(f, F, g, modulus));

    std::vector<ZPoly> found;
    std::size_t subset = 1;
    while (2 * subset <= lifted.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(subset);
        for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
        for (;;) {
            ZPoly g{f.back()};
            for (auto i : idx) g = z_symmetric_mod(z_mul(g, lifted[i]), modulus);
            g = z_primitive(g);
            if (auto q = z_exact_divide(f, g)) {
                found.push_back(g);
                f = z_primitive(*q);
                for (std::size_t k = subset; k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
                hit = true;
                break;
            }
            // Next combination in lexicographic order.
            std::size_t k = subset;
            while (k-- > 0 && idx[k] == lifted.size() - subset + k) {
            }
            if (k == static_cast<std::size_t>(-1)) break;
            ++idx[k];
            for (std::size_t j = k + 1; j < subset; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++subset;
    }
    if (degree(f) > 0) found.push_back(f);
    return found;
}

}  // namespace upoly

/// Complete factorization of a univariate polynomial over Q:
/// p = unit * prod f_i^{m_i}, each f_i irreducible, primitive, with positive
/// leading coefficient.
inline UnivariateFactorization factor_univariate(const Polynomial& p) {
    using namespace upoly;
    if (p.is_zero()) throw PreconditionError("factor_univariate: zero polynomial");
    std::size_t var = univariate_variable(p);
    const auto& ctx = p.context();
    QPoly q = to_qpoly(p, var);
    UnivariateFactorization out;
    if (degree(q) == 0) {
        out.unit = q[0];
        return out;
    }
    ZPoly f = z_from_q(q);
    std::vector<std::pair<ZPoly, unsigned>> zf;
    for (auto& [g, m] : squarefree_decomposition(f))
        for (auto& irr : factor_squarefree(g)) zf.emplace_back(std::move(irr), m);
    std::sort(zf.begin(), zf.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    ZPoly prod{1};
    for (const auto& [g, m] : zf) {
        for (unsigned k = 0; k < m; ++k) prod = z_mul(prod, g);
        out.factors.emplace_back(to_polynomial(g, ctx, var), m);
    }
    out.unit = q.back() / Rational(prod.back());
    return out;
}

/// Exhaustive search for an integer divisor of `p` of degree 1..max_deg with
/// positive leading coefficient and all coefficients in [-max_height,
/// max_height]. Candidates are visited by degree, then leading coefficient,
/// then the remaining coefficients from the top down; non-primitive candidates
/// are skipped (their primitive parts come earlier). Returns the first exact
/// divisor, as a primitive polynomial.
inline std::optional<upoly::ZPoly> brute_force_factor_oracle(const upoly::ZPoly& f, int max_deg, int max_height,
                                                             std::uint64_t budget = 200'000'000) {
    using I128 = __int128;
    long n = upoly::degree(f);
    if (max_deg >= n) throw PreconditionError("brute_force_factor_oracle: max_deg must be below deg p");
    std::vector<I128> fc;
    for (const auto& c : f) {
        if (!c.fits_slong_p()) throw PreconditionError("brute_force_factor_oracle: coefficients too large");
        fc.push_back(c.get_si());
    }
    auto divides = [&](const std::vector<long>& g) {
        std::vector<I128> r = fc;
        const long dg = static_cast<long>(g.size()) - 1;
        const I128 lg = g.back();
        for (long top = n; top >= dg; --top) {
            I128 c = r[static_cast<std::size_t>(top)];
            if (c == 0) continue;
            if (c % lg != 0) return false;
            I128 qc = c / lg;
            for (long i = 0; i <= dg; ++i) r[static_cast<std::size_t>(top - dg + i)] -= qc * g[static_cast<std::size_t>(i)];
        }
        for (long i = 0; i < dg; ++i)
            if (r[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    };
    std::uint64_t visited = 0;
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<long> g(static_cast<std::size_t>(d) + 1);
        for (long lc = 1; lc <= max_height; ++lc) {
            g[static_cast<std::size_t>(d)] = lc;
            for (int i = 0; i < d; ++i) g[static_cast<std::size_t>(i)] = -max_height;
            for (;;) {
                if (++visited > budget) throw BudgetExceeded("brute_force_factor_oracle: search space exceeds budget");
                long cont = 0;
                for (auto c : g) cont = std::gcd(cont, c < 0 ? -c : c);
                if (cont == 1 && divides(g)) {
                    upoly::ZPoly out;
                    for (auto c : g) out.push_back(Integer(c));
                    return out;
                }
                // Odometer over the lower coefficients, highest degree outermost.
                int i = 0;
                while (i < d && g[static_cast<std::size_t>(i)] == max_height) g[static_cast<std::size_t>(i++)] = -max_height;
                if (i == d) break;
                ++g[static_cast<std::size_t>(i)];
            }
        }
    }
    return std::nullopt;
}

inline std::optional<Polynomial> brute_force_factor_oracle(const Polynomial& p, int max_deg, int max_height,
                                                           std::uint64_t budget = 200'000'000) {
    std::size_t var = upoly::univariate_variable(p);
    upoly::ZPoly f;
    for (const auto& c : upoly::to_qpoly(p, var)) {
        if (!is_integer(c)) throw PreconditionError("brute_force_factor_oracle: non-integer coefficient");
        f.push_back(c.get_num());
    }
    auto g = brute_force_factor_oracle(f, max_deg, max_height, budget);
    if (!g) return std::nullopt;
    return upoly::to_polynomial(*g, p.context(), var);
}

}  // namespace hilbspec

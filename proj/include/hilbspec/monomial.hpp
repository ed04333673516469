#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hilbspec/errors.hpp"

namespace hilbspec {

using Exponent = std::uint32_t;

/// Power product: one exponent per variable of the owning context, plus the
/// cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
        for (auto e : exps_) degree_ += e;
    }

    static Monomial variable(std::size_t nvars, std::size_t i, Exponent e = 1) {
        Monomial m(nvars);
        m.exps_.at(i) = e;
        m.degree_ = e;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint64_t degree() const noexcept { return degree_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, Exponent e) {
        degree_ = degree_ - exps_.at(i) + e;
        exps_[i] = e;
    }

    bool operator==(const Monomial& o) const noexcept { return exps_ == o.exps_; }

    /// True when *this divides o.
    bool divides(const Monomial& o) const noexcept {
        if (degree_ > o.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.size() != b.size()) throw ContextMismatch("monomial length mismatch");
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
        m.degree_ = a.degree_ + b.degree_;
        return m;
    }

    /// a / b, assuming b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
        m.degree_ = a.degree_ - b.degree_;
        return m;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            m.degree_ += m.exps_[i];
        }
        return m;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.exps_[i] && b.exps_[i]) return false;
        return true;
    }

    /// Graded lexicographic comparison with the first variable largest.
    /// This is the canonical storage order of Polynomial terms.
    friend int compare_graded_lex(const Monomial& a, const Monomial& b) noexcept {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? -1 : 1;
        return 0;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
        return h;
    }

private:
    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All exponent vectors in `nvars` variables of total degree <= max_degree,
/// ordered by degree and then with the first variable largest
/// (1, Y1, Y2, Y1^2, Y1*Y2, Y2^2, ...).
inline std::vector<std::vector<Exponent>> exponent_vectors_up_to(std::size_t nvars, unsigned max_degree) {
    std::vector<std::vector<Exponent>> out;
    std::vector<Exponent> cur(nvars, 0);
    for (unsigned d = 0; d <= max_degree; ++d) {
        // Enumerate compositions of d into nvars parts in descending lex order.
        std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
            if (i + 1 == nvars) {
                cur[i] = left;
                out.push_back(cur);
                return;
            }
            for (unsigned e = left + 1; e-- > 0;) {
                cur[i] = e;
                rec(i + 1, left - e);
            }
        };
        if (nvars == 0) {
            if (d == 0) out.push_back({});
            continue;
        }
        rec(0, d);
    }
    return out;
}

}  // namespace hilbspec

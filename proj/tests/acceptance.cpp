// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "hilbspec/hilbspec.hpp"

using namespace hilbspec;

namespace {

const std::string kData = HILBSPEC_DATA_DIR;

struct Outcome {
    bool pass;
    std::string detail;
};

ExperimentConfig experiment(const std::string& name) { return load_experiment_config(kData + "/experiments/" + name); }

bool is_rational_square(const Integer& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()); }

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(4);
    s << x;
    return s.str();
}

// 1. Line and parabola meet in two rational points, so the ideal is not prime.
Outcome counterexample() {
    auto I = load_ideal_file(kData + "/ideals/counterexample.ideal");
    auto v = is_prime(I, 1);
    if (v.status() != PrimeStatus::NotPrime || !v.certificate()) return {false, "verdict " + to_string(v.status())};
    const auto& c = *v.certificate();
    auto gb = I.groebner_basis(MonomialOrder::grevlex());
    const bool replay = gb->contains(c.f * c.g) && !gb->contains(c.f) && !gb->contains(c.g);
    const int d = I.dimension();
    return {replay && d == 0 && v.dimension() == 0,
            "f = " + c.f.str() + ", g = " + c.g.str() + ", replay " + (replay ? "ok" : "FAILED") + ", dim " +
                std::to_string(d)};
}

// 2. Y^2 - T: the bad t are exactly the perfect squares.
Outcome square_root_density() {
    auto r = run_experiment(experiment("scalar_square_root.cfg"));
    auto replay = verify_report(r.to_json());
    std::size_t non_square = 0;
    for (const auto& s : r.samples)
        if (s.verdict == "bad" && !is_rational_square(Integer(s.point.at(0).get<std::string>()))) ++non_square;
    const bool ok = r.config.box == 1000000 && r.samples.size() == 2000 && r.decisive_density() >= 0.99 &&
                    non_square == 0 && replay.ok() && replay.certificates == r.bad();
    return {ok, "decisive density " + fmt(r.decisive_density()) + " (>= 0.99), bad " + std::to_string(r.bad()) +
                    ", non-square bad t " + std::to_string(non_square) + ", replayed certificates " +
                    std::to_string(replay.certificates)};
}

// 3. Twisted family: every fiber is a rational curve.
Outcome twisted_family() {
    auto r = run_experiment(experiment("scalar_twisted.cfg"));
    std::size_t wrong_dim = 0;
    for (const auto& s : r.samples) wrong_dim += s.dimension != 1;
    const bool ok = r.config.box == 100 && r.samples.size() == 100 && r.good() + r.bad() > 0 &&
                    r.decisive_density() == 1.0 && wrong_dim == 0;
    return {ok, "decisive density " + fmt(r.decisive_density()) + " (= 1), inconclusive " +
                    std::to_string(r.inconclusive()) + ", samples off dimension 1: " + std::to_string(wrong_dim)};
}

// 4. Circle cut by a random line l1 + l2*Y1 + l3*Y2: the section is a
// closed point of degree 2 iff the line is proper and l2^2 + l3^2 - l1^2 is
// not a rational square (a zero discriminant gives a double point).
bool circle_oracle_good(const json& point) {
    const auto& lam = point.at(0);
    Integer l1(lam.at(0).get<std::string>()), l2(lam.at(1).get<std::string>()), l3(lam.at(2).get<std::string>());
    if (l2 == 0 && l3 == 0) return false;
    return !is_rational_square(l2 * l2 + l3 * l3 - l1 * l1);
}

Outcome circle_section() {
    auto r = run_experiment(experiment("generic_circle.cfg"));
    std::size_t disagree = 0, good_dim = 0;
    for (const auto& s : r.samples) {
        if (s.verdict == "inconclusive") continue;
        disagree += (s.verdict == "good") != circle_oracle_good(s.point);
        if (s.verdict == "good" && s.dimension != 0) ++good_dim;
    }
    const bool ok = r.config.box == 50 && r.samples.size() == 500 && r.decisive_density() >= 0.9 && disagree == 0 &&
                    good_dim == 0 && r.baseline["expected_dimension"] == 0;
    return {ok, "decisive density " + fmt(r.decisive_density()) + " (>= 0.9), oracle disagreements " +
                    std::to_string(disagree) + " of " + std::to_string(r.good() + r.bad()) +
                    ", good samples off dimension 0: " + std::to_string(good_dim)};
}

// 5. Y^2 - T at T = U(Y): good iff Y^2 - U is an irreducible nonconstant polynomial.
Outcome poly_square_root() {
    auto r = run_experiment(experiment("poly_square_root.cfg"));
    const auto y = VariableContext::of_y({"Y"});
    const auto y2 = parse_polynomial("Y^2", y);
    std::size_t disagree = 0;
    for (const auto& s : r.samples) {
        if (s.verdict == "inconclusive") continue;
        auto f = y2 - parse_polynomial(s.point.at(0).get<std::string>(), y);
        const bool expect_good = !f.is_zero() && f.total_degree() > 0 && factor_univariate(f).is_irreducible();
        disagree += (s.verdict == "good") != expect_good;
    }
    const bool ok = r.config.box == 20 && r.config.degrees == std::vector<unsigned>{2} && r.samples.size() == 500 &&
                    r.decisive_density() >= 0.9 && disagree == 0;
    return {ok, "decisive density " + fmt(r.decisive_density()) + " (>= 0.9), factorization disagreements " +
                    std::to_string(disagree)};
}

// 6. Scalar and constant-polynomial specialization give the same reduced basis.
Outcome consistency() {
    auto r = run_experiment(experiment("consistency.cfg"));
    const bool ok = r.samples.size() == 50 && r.good() == 50;
    return {ok, std::to_string(r.good()) + " of " + std::to_string(r.samples.size()) + " pairs identical"};
}

// 7. Factorization against the brute-force oracle.
Polynomial from_coeffs(const VariableContext& y, const std::vector<long>& c) {
    upoly::ZPoly z;
    for (long v : c) z.push_back(Integer(v));
    return upoly::to_polynomial(z, y, 0);
}

int oracle_height(const Polynomial& f, int k) {
    double norm2 = 0;
    for (const auto& t : f.terms()) norm2 += t.coeff.get_d() * t.coeff.get_d();
    double binom = 1;
    for (int i = 1; i <= k / 2; ++i) binom = binom * (k - k / 2 + i) / i;
    return static_cast<int>(std::floor(binom * std::sqrt(norm2)));
}

Outcome factor_oracle() {
    const auto y = VariableContext::of_y({"Y"});
    std::size_t checked = 0, disagree = 0;
    for (int n = 1; n <= 4; ++n) {
        std::vector<long> c(static_cast<std::size_t>(n) + 1, -3);
        for (;;) {
            if (c.back() != 0) {
                auto p = from_coeffs(y, c);
                const int k = n / 2;
                const bool oracle = n >= 2 && brute_force_factor_oracle(p, k, oracle_height(p, k)).has_value();
                disagree += factor_univariate(p).is_irreducible() == oracle;
                ++checked;
            }
            std::size_t i = 0;
            while (i < c.size() && c[i] == 3) c[i++] = -3;
            if (i == c.size()) break;
            ++c[i];
        }
    }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::uniform_int_distribution<int> deg(0, 8);
    std::size_t bad_products = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<long> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coef(rng);
        if (c.back() == 0) c.back() = 1;
        auto p = from_coeffs(y, c);
        if (!(factor_univariate(p).product(y) == p)) ++bad_products;
    }
    return {disagree == 0 && bad_products == 0, std::to_string(checked) + " polynomials, " + std::to_string(disagree) +
                                                    " disagreements; 200 reconstructions, " +
                                                    std::to_string(bad_products) + " failures"};
}

// 8. dim of a parametrized prime = number of params + fiber dimension.
Outcome dimension_bookkeeping() {
    struct Case {
        Ideal ideal;
        int expected_fiber;
    };
    std::vector<Case> cases{{load_ideal_file(kData + "/ideals/square_root.ideal"), 0},
                            {load_ideal_file(kData + "/ideals/twisted_family.ideal"), 1},
                            {load_ideal_file(kData + "/ideals/circle_line_family.ideal"), 0}};
    std::string detail;
    bool ok = true;
    for (const auto& [I, d] : cases) {
        const auto& ctx = I.context();
        std::vector<std::size_t> ps;
        for (std::size_t v = 0; v < ctx.size(); ++v)
            if (ctx.role(v) != Role::Y) ps.push_back(v);
        std::vector<std::string> blocks;
        for (const auto& b : ctx.blocks())
            if (b.role != Role::Y) blocks.push_back(b.name);
        const bool free = eliminate(I, blocks).is_zero_ideal();
        const int dim = I.dimension(), fiber = fiber_dimension_over(I, ps);
        const int r = static_cast<int>(ps.size());
        ok = ok && free && fiber == d && dim == r + d;
        detail += (detail.empty() ? "" : "; ") + std::string("dim ") + std::to_string(dim) + " = " + std::to_string(r) +
                  " + " + std::to_string(fiber);
    }
    return {ok, detail};
}

// 9. Same seed, same report.
Outcome determinism() {
    auto cfg = experiment("generic_circle.cfg");
    auto a = run_experiment(cfg).hash_hex();
    auto b = run_experiment(cfg).hash_hex();
    return {a == b, "hashes " + a + " and " + b};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "non-prime zero-dimensional counterexample", 1, counterexample},
        {2, "scalar density for Y^2 - T", 30, square_root_density},
        {3, "scalar density for a curve family", 60, twisted_family},
        {4, "circle cut by a generic line", 60, circle_section},
        {5, "polynomial specialization of Y^2 - T", 30, poly_square_root},
        {6, "scalar vs constant-polynomial consistency", 30, consistency},
        {7, "factorization vs brute-force oracle", 120, factor_oracle},
        {8, "dimension = params + fiber dimension", 10, dimension_bookkeeping},
        {9, "report hash determinism", 60, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = s < c.limit_s;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("[%s] %d %s: %s; %.2f s (limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    s, c.limit_s, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}

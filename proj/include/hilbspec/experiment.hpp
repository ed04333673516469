#pragma once

// Density experiments: sample specialization points in an integer box, test
// each specialized ideal for primality and dimension, and aggregate.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbspec/ideal_file.hpp"
#include "hilbspec/specialize.hpp"

#ifndef HILBSPEC_VERSION
#define HILBSPEC_VERSION "0.0.0"
#endif

namespace hilbspec {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = HILBSPEC_VERSION;

enum class ExperimentKind { ScalarSpec, GenericIntersect, PolySpec, Consistency };

inline std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::ScalarSpec: return "ScalarSpec";
        case ExperimentKind::GenericIntersect: return "GenericIntersect";
        case ExperimentKind::PolySpec: return "PolySpec";
        case ExperimentKind::Consistency: return "Consistency";
    }
    return "?";
}

inline ExperimentKind experiment_kind_from_string(const std::string& s) {
    for (auto k : {ExperimentKind::ScalarSpec, ExperimentKind::GenericIntersect, ExperimentKind::PolySpec,
                   ExperimentKind::Consistency})
        if (s == to_string(k)) return k;
    throw ConfigError("unknown experiment kind '" + s + "'");
}

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::ScalarSpec;
    std::vector<std::string> ideals;        // as written in the config
    std::vector<std::string> ideal_paths;   // resolved against the config's directory
    long box = 0;
    std::size_t samples = 0;
    std::vector<unsigned> degrees;
    std::size_t rho = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    long sample_timeout_ms = 0;  // 0: no per-sample deadline
    PrimalityConfig primality;

    void validate() const {
        if (ideal_paths.empty()) throw ConfigError("config: 'ideal' is required");
        if (ideal_paths.size() > 1 && kind != ExperimentKind::Consistency)
            throw ConfigError("config: several ideals are only allowed for kind=Consistency");
        if (box < 1) throw ConfigError("config: 'box' must be >= 1");
        if (samples < 1) throw ConfigError("config: 'samples' must be >= 1");
        if (threads < 1) throw ConfigError("config: 'threads' must be >= 1");
        if (sample_timeout_ms < 0) throw ConfigError("config: 'sample_timeout_ms' must be >= 0");
        if (primality.trials < 1) throw ConfigError("config: 'primality.trials' must be >= 1");
        if (primality.box_start < 1 || primality.box_cap < primality.box_start)
            throw ConfigError("config: need 1 <= primality.box_start <= primality.box_cap");
        switch (kind) {
            case ExperimentKind::ScalarSpec:
            case ExperimentKind::Consistency:
                if (!degrees.empty() || rho) throw ConfigError("config: 'degrees'/'rho' do not apply to " + to_string(kind));
                break;
            case ExperimentKind::PolySpec:
                if (degrees.empty()) throw ConfigError("config: PolySpec needs 'degrees'");
                if (rho) throw ConfigError("config: 'rho' does not apply to PolySpec");
                break;
            case ExperimentKind::GenericIntersect:
                if (degrees.empty()) throw ConfigError("config: GenericIntersect needs 'degrees'");
                if (rho != degrees.size()) throw ConfigError("config: 'rho' must equal the number of degrees");
                break;
        }
    }

    json to_json() const {
        json j;
        j["kind"] = to_string(kind);
        j["ideal"] = ideals;
        j["box"] = box;
        j["samples"] = samples;
        j["degrees"] = degrees;
        j["rho"] = rho;
        j["seed"] = seed;
        j["threads"] = threads;
        j["sample_timeout_ms"] = sample_timeout_ms;
        j["primality.trials"] = primality.trials;
        j["primality.box_start"] = primality.box_start;
        j["primality.box_cap"] = primality.box_cap;
        j["gb.max_pairs"] = primality.gb.max_pairs;
        j["gb.max_term_count"] = primality.gb.max_term_count;
        return j;
    }
};

namespace detail {

template <class T>
T parse_unsigned_value(const std::string& key, const std::string& v) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("config: '" + key + "' expects a non-negative integer, got '" + v + "'");
    try {
        unsigned long long x = std::stoull(v);
        if (x > static_cast<unsigned long long>(std::numeric_limits<T>::max())) throw std::out_of_range(key);
        return static_cast<T>(x);
    } catch (const std::out_of_range&) {
        throw ConfigError("config: '" + key + "' is out of range");
    }
}

}  // namespace detail

/// Parses `key = value` lines; `base_dir` resolves relative ideal paths.
/// `rho` may be omitted (it defaults to the number of degrees); a single
/// degree with rho = k stands for k copies.
inline ExperimentConfig parse_experiment_config(const std::string& text, const std::string& base_dir = ".") {
    ExperimentConfig c;
    std::set<std::string> seen;
    std::optional<std::size_t> rho;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = detail::trim(line.substr(0, eq)), v = detail::trim(line.substr(eq + 1));
        if (!seen.insert(key).second) throw ConfigError("config: duplicate key '" + key + "'");
        if (key == "kind") {
            c.kind = experiment_kind_from_string(v);
        } else if (key == "ideal") {
            c.ideals = detail::split_list(v);
        } else if (key == "box") {
            c.box = detail::parse_unsigned_value<long>(key, v);
        } else if (key == "samples") {
            c.samples = detail::parse_unsigned_value<std::size_t>(key, v);
        } else if (key == "degrees") {
            for (const auto& d : detail::split_list(v)) c.degrees.push_back(detail::parse_unsigned_value<unsigned>(key, d));
        } else if (key == "rho") {
            rho = detail::parse_unsigned_value<std::size_t>(key, v);
        } else if (key == "seed") {
            c.seed = detail::parse_unsigned_value<std::uint64_t>(key, v);
        } else if (key == "threads") {
            c.threads = detail::parse_unsigned_value<unsigned>(key, v);
        } else if (key == "sample_timeout_ms") {
            c.sample_timeout_ms = detail::parse_unsigned_value<long>(key, v);
        } else if (key == "trials" || key == "primality.trials") {
            if (key == "trials" ? seen.count("primality.trials") : seen.count("trials"))
                throw ConfigError("config: 'trials' given twice");
            c.primality.trials = detail::parse_unsigned_value<unsigned>(key, v);
        } else if (key == "primality.box_start") {
            c.primality.box_start = detail::parse_unsigned_value<long>(key, v);
        } else if (key == "primality.box_cap") {
            c.primality.box_cap = detail::parse_unsigned_value<long>(key, v);
        } else if (key == "gb.max_pairs") {
            c.primality.gb.max_pairs = detail::parse_unsigned_value<std::size_t>(key, v);
        } else if (key == "gb.max_term_count") {
            c.primality.gb.max_term_count = detail::parse_unsigned_value<std::size_t>(key, v);
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
    if (rho) {
        if (c.degrees.size() == 1 && *rho > 1) c.degrees.assign(*rho, c.degrees[0]);
        c.rho = *rho;
    } else if (c.kind == ExperimentKind::GenericIntersect) {
        c.rho = c.degrees.size();
    }
    for (const auto& p : c.ideals) {
        std::filesystem::path path(p);
        c.ideal_paths.push_back(path.is_absolute() ? p : (std::filesystem::path(base_dir) / path).string());
    }
    c.validate();
    return c;
}

inline ExperimentConfig load_experiment_config(const std::string& path) {
    auto dir = std::filesystem::path(path).parent_path().string();
    return parse_experiment_config(detail::read_file(path), dir.empty() ? "." : dir);
}

// ---------------------------------------------------------------- sampling

inline std::vector<Rational> sample_scalar(std::size_t r, long box, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-box, box);
    std::vector<Rational> t;
    for (std::size_t i = 0; i < r; ++i) t.emplace_back(d(rng));
    return t;
}

inline LambdaAssignment sample_lambda(std::size_t s, const std::vector<unsigned>& degrees, long box, std::mt19937_64& rng) {
    LambdaAssignment lam;
    for (auto D : degrees) lam.values.push_back(sample_scalar(monomial_count(s, D), box, rng));
    return lam;
}

/// U_i with each of its N_{D_i} coefficients uniform in [-box, box].
inline std::vector<Polynomial> sample_polynomials(const VariableContext& y, const std::vector<unsigned>& degrees, long box,
                                                  std::mt19937_64& rng) {
    return polynomials_from_lambda(y, degrees, sample_lambda(y.s(), degrees, box, rng));
}

/// Independent generator for sample `index`.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
    return std::mt19937_64(seq);
}

// ----------------------------------------------------------------- records

struct SampleRecord {
    std::size_t index = 0;
    json point;
    std::string status;   // PrimeStatus name, or Consistent / Inconsistent
    std::string verdict;  // good | bad | inconclusive
    int dimension = 0;
    int expected_dimension = 0;
    bool probabilistic = false;
    bool degenerate = false;
    bool budget_exhausted = false;
    std::optional<std::pair<std::string, std::string>> certificate;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    json mismatch;  // Consistency only
    std::string note;
    double elapsed_ms = 0;

    json to_json() const {
        json j;
        j["index"] = index;
        j["point"] = point;
        j["status"] = status;
        j["verdict"] = verdict;
        j["dimension"] = dimension;
        j["expected_dimension"] = expected_dimension;
        j["probabilistic"] = probabilistic;
        j["degenerate"] = degenerate;
        j["budget_exhausted"] = budget_exhausted;
        if (certificate) j["certificate"] = {{"f", certificate->first}, {"g", certificate->second}};
        j["ideal"] = {{"vars", vars}, {"gens", gens}};
        if (!mismatch.is_null()) j["mismatch"] = mismatch;
        if (!note.empty()) j["note"] = note;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

/// "p/q" in lowest terms (q >= 1).
inline std::string fraction_string(std::size_t num, std::size_t den) {
    Rational q = make_rational(static_cast<long>(num), static_cast<long>(den));
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

struct ExperimentReport {
    ExperimentConfig config;
    json source_ideals = json::array();
    json baseline = json::object();
    std::vector<SampleRecord> samples;

    std::size_t count(const std::string& verdict) const {
        std::size_t n = 0;
        for (const auto& s : samples) n += s.verdict == verdict;
        return n;
    }
    std::size_t good() const { return count("good"); }
    std::size_t bad() const { return count("bad"); }
    std::size_t inconclusive() const { return count("inconclusive"); }
    double density() const { return samples.empty() ? 0.0 : static_cast<double>(good()) / samples.size(); }
    double decisive_density() const {
        auto d = good() + bad();
        return d ? static_cast<double>(good()) / d : 0.0;
    }
    bool all_budget_exhausted() const {
        for (const auto& s : samples)
            if (!s.budget_exhausted) return false;
        return !samples.empty();
    }

    json aggregate() const {
        const auto g = good(), b = bad(), n = samples.size();
        std::size_t budget = 0;
        for (const auto& s : samples) budget += s.budget_exhausted;
        json a;
        a["samples"] = n;
        a["good"] = g;
        a["bad"] = b;
        a["inconclusive"] = inconclusive();
        a["budget_inconclusive"] = budget;
        a["decisive"] = g + b;
        a["density_exact"] = fraction_string(g, n);
        a["density_float"] = density();
        if (g + b) {
            a["decisive_density_exact"] = fraction_string(g, g + b);
            a["decisive_density_float"] = decisive_density();
        } else {
            a["decisive_density_exact"] = nullptr;
            a["decisive_density_float"] = nullptr;
        }
        return a;
    }

    json to_json() const {
        json j;
        j["tool_version"] = kToolVersion;
        j["seed"] = config.seed;
        j["config"] = config.to_json();
        j["source_ideals"] = source_ideals;
        j["baseline"] = baseline;
        json arr = json::array();
        for (const auto& s : samples) arr.push_back(s.to_json());
        j["samples"] = std::move(arr);
        j["aggregate"] = aggregate();
        j["report_hash"] = hash_hex();
        return j;
    }

    std::string hash_hex() const;
};

/// FNV-1a (64 bit) of the report without the hash itself and without the
/// execution-only fields (timings, thread count), so equal configs and seeds
/// hash equally on any machine.
inline std::string report_hash(json j) {
    j.erase("report_hash");
    if (j.contains("config")) j["config"].erase("threads");
    if (j.contains("samples"))
        for (auto& s : j["samples"]) s.erase("elapsed_ms");
    const std::string text = j.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string ExperimentReport::hash_hex() const {
    json j;
    j["tool_version"] = kToolVersion;
    j["seed"] = config.seed;
    j["config"] = config.to_json();
    j["source_ideals"] = source_ideals;
    j["baseline"] = baseline;
    json arr = json::array();
    for (const auto& s : samples) arr.push_back(s.to_json());
    j["samples"] = std::move(arr);
    j["aggregate"] = aggregate();
    return report_hash(std::move(j));
}

// --------------------------------------------------------------- running

namespace detail {

inline json ideal_json(const Ideal& I) {
    const auto& ctx = I.context();
    return {{"params", ctx.names_with_role(Role::T)}, {"vars", ctx.names_with_role(Role::Y)},
            {"gens", I.generator_strings()}};
}

inline json rationals_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

/// Primality and dimension verdict of a specialized ideal.
inline void judge(SampleRecord& rec, const Ideal& J, std::uint64_t seed, const PrimalityConfig& cfg) {
    rec.vars = J.context().names_with_role(Role::Y);
    rec.gens = J.generator_strings();
    rec.degenerate = J.generators().empty();
    auto v = is_prime(J, seed, cfg);
    rec.status = to_string(v.status());
    rec.dimension = v.dimension();
    rec.probabilistic = v.probabilistic();
    if (v.status() == PrimeStatus::NotPrime) {
        rec.certificate = std::make_pair(v.certificate()->f.str(), v.certificate()->g.str());
        rec.verdict = "bad";
    } else if (v.status() == PrimeStatus::Inconclusive) {
        rec.verdict = "inconclusive";
        rec.note = v.note();
    } else {
        rec.verdict = (v.status() == PrimeStatus::Prime && rec.dimension == rec.expected_dimension) ? "good" : "bad";
    }
    if (rec.degenerate) rec.note = "degenerate specialization: every generator vanished";
}

}  // namespace detail

/// Runs the experiment described by `cfg`. Throws ParseError/ConfigError on
/// bad input and HypothesisViolation when a parametrized ideal meets K[T].
inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentReport report;
    report.config = cfg;
    std::vector<Ideal> ideals;
    for (const auto& p : cfg.ideal_paths) ideals.push_back(load_ideal_file(p));
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        auto j = detail::ideal_json(ideals[i]);
        j["path"] = cfg.ideals[i];
        report.source_ideals.push_back(std::move(j));
    }

    const GbConfig& gb = cfg.primality.gb;
    int expected = 0;
    for (auto& I : ideals) {
        const auto& ctx = I.context();
        if (cfg.kind == ExperimentKind::GenericIntersect) {
            if (ctx.r() != 0) throw ConfigError("GenericIntersect expects an ideal without params");
            const int d = I.dimension(gb);
            if (static_cast<int>(cfg.rho) > d)
                throw ConfigError("rho = " + std::to_string(cfg.rho) + " exceeds the dimension " + std::to_string(d));
            expected = d - static_cast<int>(cfg.rho);
            report.baseline = {{"dimension", d}, {"rho", cfg.rho}, {"expected_dimension", expected}};
            continue;
        }
        if (ctx.r() == 0) throw ConfigError(to_string(cfg.kind) + " expects an ideal with params");
        if (cfg.kind == ExperimentKind::PolySpec && cfg.degrees.size() != ctx.r())
            throw ConfigError("PolySpec needs one degree per parameter (" + std::to_string(ctx.r()) + ")");
        auto tblocks = block_names_with_role(ctx, Role::T);
        auto e = eliminate(I, tblocks, gb);
        if (!e.is_zero_ideal()) throw HypothesisViolation(e.generator_strings().front());
        const int fd = fiber_dimension(I, tblocks, gb);
        const int full = I.dimension(gb);
        if (cfg.kind != ExperimentKind::Consistency) {
            expected = fd;
            report.baseline = {{"r", ctx.r()}, {"generic_dimension", full}, {"fiber_dimension", fd},
                               {"expected_dimension", expected}};
        }
    }

    std::vector<SampleRecord> records(cfg.samples);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run_one = [&](std::size_t i) {
        SampleRecord rec;
        rec.index = i;
        rec.expected_dimension = expected;
        auto rng = sample_rng(cfg.seed, i);
        auto start = std::chrono::steady_clock::now();
        PrimalityConfig pc = cfg.primality;
        if (cfg.sample_timeout_ms > 0) pc.gb.deadline = start + std::chrono::milliseconds(cfg.sample_timeout_ms);
        try {
            switch (cfg.kind) {
                case ExperimentKind::ScalarSpec: {
                    auto t = sample_scalar(ideals[0].context().r(), cfg.box, rng);
                    rec.point = detail::rationals_json(t);
                    detail::judge(rec, specialize_scalar(ideals[0], t), rng(), pc);
                    break;
                }
                case ExperimentKind::PolySpec: {
                    auto y = ideals[0].context().restrict_roles({Role::Y});
                    auto u = sample_polynomials(y, cfg.degrees, cfg.box, rng);
                    rec.point = json::array();
                    for (const auto& p : u) rec.point.push_back(p.str());
                    detail::judge(rec, specialize_polynomial(ideals[0], u), rng(), pc);
                    break;
                }
                case ExperimentKind::GenericIntersect: {
                    auto lam = sample_lambda(ideals[0].context().s(), cfg.degrees, cfg.box, rng);
                    rec.point = json::array();
                    for (const auto& b : lam.values) rec.point.push_back(detail::rationals_json(b));
                    detail::judge(rec, intersect_generic(ideals[0], cfg.degrees, lam, pc.gb), rng(), pc);
                    break;
                }
                case ExperimentKind::Consistency: {
                    std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
                    const auto k = pick(rng);
                    const auto& I = ideals[k];
                    auto t = sample_scalar(I.context().r(), cfg.box, rng);
                    rec.point = {{"ideal", cfg.ideals[k]}, {"t", detail::rationals_json(t)}};
                    auto y = I.context().restrict_roles({Role::Y});
                    std::vector<Polynomial> u;
                    for (const auto& x : t) u.push_back(Polynomial::constant(y, x));
                    auto a = specialize_scalar(I, t);
                    auto b = specialize_polynomial(I, u);
                    auto ga = a.groebner_basis(MonomialOrder::grevlex(), pc.gb)->strings();
                    auto gbb = b.groebner_basis(MonomialOrder::grevlex(), pc.gb)->strings();
                    rec.vars = y.names();
                    rec.gens = a.generator_strings();
                    rec.degenerate = a.generators().empty();
                    rec.dimension = a.dimension(pc.gb);
                    rec.expected_dimension = b.dimension(pc.gb);
                    rec.status = ga == gbb ? "Consistent" : "Inconsistent";
                    rec.verdict = ga == gbb ? "good" : "bad";
                    if (ga != gbb) rec.mismatch = {{"scalar", ga}, {"polynomial", gbb}};
                    break;
                }
            }
        } catch (const BudgetExceeded& e) {
            rec.status = to_string(PrimeStatus::Inconclusive);
            rec.verdict = "inconclusive";
            rec.budget_exhausted = true;
            rec.certificate.reset();
            rec.note = e.what();
        }
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        records[i] = std::move(rec);
    };

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cfg.samples) return;
            try {
                run_one(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = cfg.samples;
                return;
            }
        }
    };
    const unsigned nthreads = std::min<std::size_t>(cfg.threads, cfg.samples);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < nthreads; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    report.samples = std::move(records);
    return report;
}

// ------------------------------------------------------------------- CSV

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

inline const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{"index",      "point",         "status",        "verdict",
                                               "dimension",  "expected_dimension", "probabilistic", "degenerate",
                                               "certificate_f", "certificate_g", "elapsed_ms"};
    return cols;
}

inline std::string report_csv(const ExperimentReport& r) {
    std::string out;
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const auto& s : r.samples) {
        std::vector<std::string> f{std::to_string(s.index),
                                   s.point.dump(),
                                   s.status,
                                   s.verdict,
                                   std::to_string(s.dimension),
                                   std::to_string(s.expected_dimension),
                                   s.probabilistic ? "true" : "false",
                                   s.degenerate ? "true" : "false",
                                   s.certificate ? s.certificate->first : "",
                                   s.certificate ? s.certificate->second : "",
                                   std::to_string(s.elapsed_ms)};
        for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + detail::csv_field(f[i]);
        out += "\n";
    }
    return out;
}

/// Rows of a CSV report as column -> value maps.
inline std::vector<std::map<std::string, std::string>> parse_report_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = any = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw ParseError("unterminated quoted CSV field", text.size());
    if (any) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty CSV", 0);
    std::vector<std::map<std::string, std::string>> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw ParseError("CSV row has the wrong number of fields", r);
        std::map<std::string, std::string> m;
        for (std::size_t k = 0; k < rows[0].size(); ++k) m[rows[0][k]] = rows[r][k];
        out.push_back(std::move(m));
    }
    return out;
}

// ----------------------------------------------------------------- replay

struct ReplayResult {
    std::size_t certificates = 0;
    std::size_t dimension_mismatches = 0;
    std::size_t inconsistencies = 0;
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Re-checks a JSON report from its own contents: every NotPrime certificate
/// (f*g in I, f and g not in I), every dimension mismatch (recomputed), every
/// consistency mismatch, and the aggregate counts.
inline ReplayResult verify_report(const json& report, const GbConfig& gb = {}) {
    ReplayResult out;
    auto problem = [&](std::size_t i, const std::string& what) {
        out.problems.push_back("sample " + std::to_string(i) + ": " + what);
    };
    try {
        const auto& samples = report.at("samples");
        std::size_t good = 0, bad = 0, inconclusive = 0;
        for (const auto& s : samples) {
            const std::size_t i = s.at("index").get<std::size_t>();
            const std::string verdict = s.at("verdict").get<std::string>();
            const int dim = s.at("dimension").get<int>(), expected = s.at("expected_dimension").get<int>();
            if (verdict == "good") {
                ++good;
                if (dim != expected) problem(i, "good sample with dimension " + std::to_string(dim));
                continue;
            }
            if (verdict == "inconclusive") {
                ++inconclusive;
                continue;
            }
            if (verdict != "bad") {
                problem(i, "unknown verdict '" + verdict + "'");
                continue;
            }
            ++bad;
            auto ctx = VariableContext::of_y(s.at("ideal").at("vars").get<std::vector<std::string>>());
            std::vector<Polynomial> gens;
            for (const auto& g : s.at("ideal").at("gens")) gens.push_back(parse_polynomial(g.get<std::string>(), ctx));
            Ideal J(ctx, gens);
            if (s.contains("certificate")) {
                auto f = parse_polynomial(s["certificate"].at("f").get<std::string>(), ctx);
                auto g = parse_polynomial(s["certificate"].at("g").get<std::string>(), ctx);
                if (certificate_holds(*J.groebner_basis(MonomialOrder::grevlex(), gb), f, g))
                    ++out.certificates;
                else
                    problem(i, "certificate does not verify");
            } else if (s.contains("mismatch")) {
                auto rebuild = [&](const json& list) {
                    std::vector<Polynomial> ps;
                    for (const auto& g : list) ps.push_back(parse_polynomial(g.get<std::string>(), ctx));
                    return Ideal(ctx, ps).groebner_basis(MonomialOrder::grevlex(), gb)->strings();
                };
                if (rebuild(s["mismatch"].at("scalar")) != rebuild(s["mismatch"].at("polynomial")))
                    ++out.inconsistencies;
                else
                    problem(i, "recorded mismatch does not reproduce");
            } else {
                const int actual = J.dimension(gb);
                if (actual != dim)
                    problem(i, "recorded dimension " + std::to_string(dim) + " but recomputed " + std::to_string(actual));
                else if (actual == expected)
                    problem(i, "bad sample without certificate has the expected dimension");
                else
                    ++out.dimension_mismatches;
            }
        }
        const auto& agg = report.at("aggregate");
        const std::size_t n = samples.size();
        if (agg.at("good").get<std::size_t>() != good || agg.at("bad").get<std::size_t>() != bad ||
            agg.at("inconclusive").get<std::size_t>() != inconclusive)
            out.problems.push_back("aggregate counts do not match the samples");
        if (good + bad + inconclusive != n) out.problems.push_back("counts do not sum to the sample count");
        if (report.at("config").at("samples").get<std::size_t>() != n)
            out.problems.push_back("sample count differs from the configured count");
        if (n && agg.at("density_exact").get<std::string>() != fraction_string(good, n))
            out.problems.push_back("density_exact is not good/n");
        if (report.contains("report_hash") && report["report_hash"].get<std::string>() != report_hash(report))
            out.problems.push_back("report hash does not match the contents");
    } catch (const json::exception& e) {
        out.problems.push_back(std::string("malformed report: ") + e.what());
    }
    return out;
}

}  // namespace hilbspec

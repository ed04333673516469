// Command-line front end.
//
// Exit codes: 0 success, 1 failed check, 2 parse or config error,
// 3 hypothesis violation, 4 budget exhausted.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hilbspec/hilbspec.hpp"

using namespace hilbspec;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, InputError = 2, Hypothesis = 3, Budget = 4 };

MonomialOrder order_from(const std::string& s) {
    if (s == "lex") return MonomialOrder::lex();
    if (s == "grevlex") return MonomialOrder::grevlex();
    throw ConfigError("unknown order '" + s + "' (lex or grevlex)");
}

std::vector<Rational> parse_rationals(const std::string& list) {
    std::vector<Rational> out;
    for (const auto& item : detail::split_list(list)) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::exception&) {
            throw ConfigError("not a rational number: '" + item + "'");
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

void print_ideal(const Ideal& I) {
    std::cout << format_ideal_definition(I);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Specialization experiments for parametrized polynomial ideals"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    GbConfig gb;
    app.add_option("--max-pairs", gb.max_pairs, "Groebner budget: S-pairs processed (0 = unlimited)");
    app.add_option("--max-terms", gb.max_term_count, "Groebner budget: terms in the basis (0 = unlimited)");

    std::string file, order = "grevlex";
    auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
    gb_cmd->add_option("file", file)->required();
    gb_cmd->add_option("--order", order, "lex or grevlex")->capture_default_str();

    auto* dim_cmd = app.add_subcommand("dim", "Krull dimension and height");
    dim_cmd->add_option("file", file)->required();

    unsigned trials = 5;
    std::uint64_t seed = 1;
    auto* prime_cmd = app.add_subcommand("prime", "Primality test with certificate");
    prime_cmd->add_option("file", file)->required();
    prime_cmd->add_option("--trials", trials)->capture_default_str();
    prime_cmd->add_option("--seed", seed)->capture_default_str();

    std::string poly_text, var = "Y";
    auto* factor_cmd = app.add_subcommand("factor", "Factor a univariate polynomial over Q");
    factor_cmd->add_option("poly", poly_text)->required();
    factor_cmd->add_option("--var", var, "variable name")->capture_default_str();

    std::string at, poly_at;
    auto* spec_cmd = app.add_subcommand("specialize", "Specialize the params of an ideal file");
    spec_cmd->add_option("file", file)->required();
    auto* at_opt = spec_cmd->add_option("--at", at, "comma-separated rationals t1,...,tr");
    auto* poly_opt = spec_cmd->add_option("--poly-at", poly_at, "file with one polynomial U_i in the vars per line");
    at_opt->excludes(poly_opt);
    poly_opt->excludes(at_opt);

    std::string out_path, csv_path;
    unsigned threads = 0;
    auto* exp_cmd = app.add_subcommand("experiment", "Run a density experiment");
    exp_cmd->add_option("config", file)->required();
    exp_cmd->add_option("--out", out_path, "JSON report path (default: stdout)");
    exp_cmd->add_option("--csv", csv_path, "also write a CSV table");
    exp_cmd->add_option("--threads", threads, "override the configured thread count");

    auto* verify_cmd = app.add_subcommand("verify-report", "Replay the certificates of a JSON report");
    verify_cmd->add_option("report", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : InputError;
    }

    try {
        if (*gb_cmd) {
            auto I = load_ideal_file(file);
            for (const auto& g : I.groebner_basis(order_from(order), gb)->strings()) std::cout << g << "\n";
        } else if (*dim_cmd) {
            auto I = load_ideal_file(file);
            const int d = I.dimension(gb);
            std::cout << "dimension " << d << "\nheight " << I.height(gb) << "\n";
            if (I.context().r()) {
                auto tb = block_names_with_role(I.context(), Role::T);
                auto e = eliminate(I, tb, gb);
                if (e.is_zero_ideal())
                    std::cout << "fiber_dimension " << fiber_dimension(I, tb, gb) << "\n";
                else
                    std::cout << "meets_parameter_ring " << e.generator_strings().front() << "\n";
            }
        } else if (*prime_cmd) {
            auto I = load_ideal_file(file);
            PrimalityConfig pc;
            pc.trials = trials;
            pc.gb = gb;
            auto v = is_prime(I, seed, pc);
            std::cout << "status " << to_string(v.status()) << "\ndimension " << v.dimension() << "\n";
            if (v.probabilistic()) std::cout << "probabilistic true\n";
            if (v.certificate())
                std::cout << "certificate_f " << v.certificate()->f.str() << "\ncertificate_g "
                          << v.certificate()->g.str() << "\n";
            if (!v.note().empty()) std::cout << "note " << v.note() << "\n";
        } else if (*factor_cmd) {
            auto ctx = VariableContext::of_y({var});
            auto f = factor_univariate(parse_polynomial(poly_text, ctx));
            std::cout << "unit " << to_string(f.unit) << "\n";
            for (const auto& [p, m] : f.factors) std::cout << "(" << p.str() << ")^" << m << "\n";
        } else if (*spec_cmd) {
            auto I = load_ideal_file(file);
            if (!*at_opt && !*poly_opt) throw ConfigError("specialize needs --at or --poly-at");
            if (*at_opt) {
                print_ideal(specialize_scalar(I, parse_rationals(at)));
            } else {
                auto y = I.context().restrict_roles({Role::Y});
                std::vector<Polynomial> u;
                std::istringstream in(detail::read_file(poly_at));
                std::string line;
                while (std::getline(in, line)) {
                    auto hash = line.find('#');
                    line = detail::trim(hash == std::string::npos ? line : line.substr(0, hash));
                    if (!line.empty()) u.push_back(parse_polynomial(line, y));
                }
                print_ideal(specialize_polynomial(I, u));
            }
        } else if (*exp_cmd) {
            auto cfg = load_experiment_config(file);
            if (threads) cfg.threads = threads;
            auto report = run_experiment(cfg);
            auto text = report.to_json().dump(2) + "\n";
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
            if (!csv_path.empty()) write_file(csv_path, report_csv(report));
            const auto a = report.aggregate();
            std::cerr << "good " << a["good"] << " bad " << a["bad"] << " inconclusive " << a["inconclusive"]
                      << " density " << a["density_exact"].get<std::string>() << "\n";
            if (report.all_budget_exhausted()) return Budget;
        } else if (*verify_cmd) {
            json j;
            try {
                j = json::parse(detail::read_file(file));
            } catch (const json::parse_error& e) {
                throw ConfigError(std::string("report is not valid JSON: ") + e.what());
            }
            auto r = verify_report(j, gb);
            std::cout << "certificates " << r.certificates << "\ndimension_mismatches " << r.dimension_mismatches
                      << "\ninconsistencies " << r.inconsistencies << "\n";
            for (const auto& p : r.problems) std::cout << "problem " << p << "\n";
            return r.ok() ? Ok : CheckFailed;
        }
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Hypothesis;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Budget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
    return Ok;
}

#pragma once

// Ideal-definition files:
//
//   # comment
//   params: T1, T2
//   vars: Y1, Y2
//   gens:
//   Y1^2 - T1*Y2
//   Y2^2 - T2

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hilbspec/groebner.hpp"
#include "hilbspec/parser.hpp"

namespace hilbspec {

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

/// Parses the text of an ideal-definition file. The context has a T block
/// (omitted when there are no params) followed by a Y block. Errors carry the
/// 1-based line number as their position.
inline Ideal parse_ideal_definition(const std::string& text) {
    std::vector<std::string> params, vars;
    bool have_vars = false, in_gens = false;
    std::vector<std::pair<std::size_t, std::string>> gen_lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : detail::trim(line.substr(0, colon));
        if (key == "params" || key == "vars") {
            if (in_gens) throw ParseError::at_line("'" + key + ":' after 'gens:'", lineno);
            auto names = detail::split_list(line.substr(colon + 1));
            for (const auto& n : names)
                if (!detail::valid_identifier(n)) throw ParseError::at_line("invalid variable name '" + n + "'", lineno);
            (key == "params" ? params : vars) = names;
            if (key == "vars") have_vars = true;
        } else if (key == "gens") {
            in_gens = true;
            auto rest = detail::trim(line.substr(colon + 1));
            if (!rest.empty()) gen_lines.emplace_back(lineno, rest);
        } else if (in_gens) {
            gen_lines.emplace_back(lineno, line);
        } else {
            throw ParseError::at_line("expected 'params:', 'vars:' or 'gens:'", lineno);
        }
    }
    if (!have_vars || vars.empty()) throw ParseError::at_line("missing 'vars:' line", lineno);
    if (!in_gens) throw ParseError::at_line("missing 'gens:' section", lineno);
    VariableContext ctx = [&] {
        try {
            return VariableContext::of_ty(params, vars);
        } catch (const PreconditionError& e) {
            throw ParseError::at_line(e.what(), 0);
        }
    }();
    std::vector<Polynomial> gens;
    for (const auto& [n, g] : gen_lines) {
        try {
            gens.push_back(parse_polynomial(g, ctx));
        } catch (const ParseError& e) {
            throw ParseError::at_line(e.what(), n);
        } catch (const UnknownVariable& e) {
            throw ParseError::at_line(e.what(), n);
        }
    }
    return Ideal(ctx, std::move(gens));
}

inline Ideal load_ideal_file(const std::string& path) {
    auto text = detail::read_file(path);
    try {
        return parse_ideal_definition(text);
    } catch (const ParseError& e) {
        throw e.prefixed(path + ": ");
    }
}

/// Text that parses back to the same ideal.
inline std::string format_ideal_definition(const Ideal& I) {
    const auto& ctx = I.context();
    std::string out;
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
        return s;
    };
    auto params = ctx.names_with_role(Role::T);
    if (!params.empty()) out += "params: " + join(params) + "\n";
    out += "vars: " + join(ctx.names_with_role(Role::Y)) + "\n";
    out += "gens:\n";
    for (const auto& g : I.generator_strings()) out += g + "\n";
    return out;
}

}  // namespace hilbspec

#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lcmdual/cellres.hpp"
#include "lcmdual/errors.hpp"
#include "lcmdual/ferrers.hpp"
#include "lcmdual/fiber.hpp"
#include "lcmdual/monomial.hpp"

namespace lcmdual {

using json = nlohmann::ordered_json;

/// Variable naming scheme for text I/O: indices below x_count print as
/// x1, x2, ... and the rest as y1, y2, ... The default names everything x.
struct VariableNames {
    std::size_t x_count = std::numeric_limits<std::size_t>::max();

    static VariableNames all_x() { return {}; }
    static VariableNames xy_split(std::size_t m) { return {m}; }

    std::string name(std::size_t index) const {
        if (index < x_count) return "x" + std::to_string(index + 1);
        return "y" + std::to_string(index - x_count + 1);
    }

    std::optional<std::size_t> index_of(char prefix, std::size_t number) const {
        if (number == 0) return std::nullopt;
        if (prefix == 'x') return number - 1;
        if (prefix == 'y' && x_count != std::numeric_limits<std::size_t>::max())
            return x_count + number - 1;
        return std::nullopt;
    }
};

inline std::string to_string(const Monomial& m, const VariableNames& names = {}) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.ambient(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!out.empty()) out += "*";
        out += names.name(i);
        if (m.exponent(i) > 1) out += "^" + std::to_string(m.exponent(i));
    }
    return out;
}

inline std::string to_string(const MonomialIdeal& ideal, const VariableNames& names = {}) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (const Monomial& g : ideal.generators()) {
        if (!out.empty()) out += ", ";
        out += to_string(g, names);
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return parts;
}

inline std::size_t parse_number(std::string_view s, const std::string& context) {
    if (s.empty()) throw ParseError("expected a number " + context);
    std::size_t value = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected a number " + context + ", got '" + std::string(s) + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

} // namespace detail

/// Parses "x1^2*x3" style monomials; "1" is the identity. Variables outside
/// the ambient, unknown names, and malformed powers raise ParseError.
inline Monomial parse_monomial(std::string_view text, std::size_t ambient,
                               const VariableNames& names = {}) {
    const std::string_view body = detail::trim(text);
    if (body.empty()) throw ParseError("empty monomial");
    if (body == "1") return Monomial::one(ambient);
    std::vector<int> exps(ambient, 0);
    for (std::string_view factor : detail::split(body, '*')) {
        if (factor.empty()) throw ParseError("empty factor in monomial '" + std::string(body) + "'");
        const char prefix = factor.front();
        if (prefix != 'x' && prefix != 'y')
            throw ParseError("variables must be named x<k> or y<k>, got '" +
                             std::string(factor) + "'");
        factor.remove_prefix(1);
        std::size_t power = 1;
        std::string_view number = factor;
        if (const std::size_t caret = factor.find('^'); caret != std::string_view::npos) {
            number = factor.substr(0, caret);
            power = detail::parse_number(detail::trim(factor.substr(caret + 1)), "after '^'");
            if (power == 0) throw ParseError("exponents must be positive");
        }
        const std::size_t var_number =
            detail::parse_number(detail::trim(number), "after the variable letter");
        const auto index = names.index_of(prefix, var_number);
        if (!index || *index >= ambient)
            throw ParseError("variable '" + std::string(1, prefix) +
                             std::to_string(var_number) + "' is outside the ambient");
        exps[*index] += static_cast<int>(power);
    }
    return Monomial(std::move(exps));
}

/// Parses a comma-separated generator list. "0" or an empty string denotes
/// the zero ideal.
inline MonomialIdeal parse_ideal(std::string_view text, std::size_t ambient,
                                 const VariableNames& names = {}) {
    const std::string_view body = detail::trim(text);
    if (body.empty() || body == "0") return MonomialIdeal(ambient);
    std::vector<Monomial> gens;
    for (std::string_view part : detail::split(body, ','))
        gens.push_back(parse_monomial(part, ambient, names));
    return MonomialIdeal::from_generators(ambient, std::move(gens));
}

/// Smallest x-only ambient containing every variable mentioned in the text.
inline std::size_t infer_ambient(std::string_view text) {
    std::size_t ambient = 1;
    const std::string_view body = detail::trim(text);
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] != 'x' && body[i] != 'y') continue;
        std::size_t j = i + 1, value = 0;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) {
            value = value * 10 + static_cast<std::size_t>(body[j] - '0');
            ++j;
        }
        if (j > i + 1) ambient = std::max(ambient, value);
        i = j - 1;
    }
    return ambient;
}

inline json ideal_to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const Monomial& g : ideal.generators()) gens.push_back(g.exponents());
    return json{{"n", ideal.ambient()}, {"generators", std::move(gens)}};
}

inline MonomialIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw ParseError("ideal JSON needs 'n' and 'generators'");
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("generators")) {
        std::vector<int> exps = g.get<std::vector<int>>();
        if (exps.size() != n) throw ParseError("generator length differs from 'n'");
        for (int e : exps)
            if (e < 0) throw ParseError("negative exponent in generator");
        gens.push_back(Monomial(std::move(exps)));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

/// One relation as a pair of 1-based sorted index multisets: [[1,3],[2,2]].
inline json relation_to_json(const RelationPair& rel) {
    json lhs = json::array(), rhs = json::array();
    for (int i : rel.lhs) lhs.push_back(i + 1);
    for (int i : rel.rhs) rhs.push_back(i + 1);
    return json::array({std::move(lhs), std::move(rhs)});
}

inline json relations_to_json(const std::set<RelationPair>& rels) {
    json out = json::array();
    for (const RelationPair& r : rels) out.push_back(relation_to_json(r));
    return out;
}

inline json components_to_json(const std::vector<PrimeComponent>& comps,
                               const VariableNames& names) {
    json out = json::array();
    for (const PrimeComponent& c : comps) {
        json vars = json::array();
        for (std::size_t v : c.variables) vars.push_back(names.name(v));
        out.push_back(std::move(vars));
    }
    return out;
}

/// Differential as {rows, cols, entries: [[row, col, sign, variable]]} with
/// 0-based row/col positions and 1-based variable indices.
inline json differential_to_json(const MonomialMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) {
            const SignedVariable& e = m.at(r, c);
            if (e.sign != 0) entries.push_back(json::array({r, c, e.sign, e.var + 1}));
        }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

/// DOT rendering of the directed grid graph with monomial annotations.
inline std::string to_dot(const LabeledComplex& x, const VariableNames& names = {}) {
    std::string out = "digraph G_lambda {\n";
    auto id = [](const GridVertex& v) {
        return "\"v" + std::to_string(v.row) + "_" + std::to_string(v.col) + "\"";
    };
    for (const GridVertex& v : x.vertices)
        out += "  " + id(v) + " [label=\"(" + std::to_string(v.row) + "," +
               std::to_string(v.col) + ")\\n" + to_string(x.vertex_label(v), names) + "\"];\n";
    for (const GridEdge& e : x.edges) out += "  " + id(e.tail) + " -> " + id(e.head) + ";\n";
    out += "}\n";
    return out;
}

} // namespace lcmdual

#pragma once

#include "algebra.hpp"
#include "cochain.hpp"
#include "deformation.hpp"
#include "representation.hpp"
#include "structures.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace jjcoh {

struct parse_error : std::runtime_error {
    std::size_t line;
    parse_error(std::size_t ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln)
    {
    }
};

struct symmetry_conflict_error : parse_error {
    using parse_error::parse_error;
};

namespace detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Whitespace-tokenized lines; '#' starts a comment; blank lines dropped.
inline std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

inline Rational parse_rat_at(const std::string& tok, std::size_t line)
{
    try {
        return parse_rational(tok);
    } catch (const bad_rational_error& e) {
        throw parse_error(line, e.what());
    }
}

// RHS of a product/map line: terms `[q] name` separated by literal '+';
// a single '0' denotes the zero combination. Returns coordinates in the
// given name list.
inline Vec parse_combination(const std::vector<std::string>& tokens, std::size_t from,
                             const std::vector<std::string>& names, std::size_t line)
{
    Vec v(names.size());
    if (from == tokens.size())
        throw parse_error(line, "empty right-hand side");
    if (tokens.size() - from == 1 && tokens[from] == "0")
        return v;
    auto name_index = [&](const std::string& s) -> std::size_t {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s)
                return i;
        throw parse_error(line, "unknown basis name '" + s + "'");
    };
    std::size_t pos = from;
    while (pos < tokens.size()) {
        std::size_t end = pos;
        while (end < tokens.size() && tokens[end] != "+")
            ++end;
        if (end == pos)
            throw parse_error(line, "expected a term before '+'");
        if (end - pos == 1) {
            v[name_index(tokens[pos])] += 1;
        } else if (end - pos == 2) {
            v[name_index(tokens[pos + 1])] += parse_rat_at(tokens[pos], line);
        } else {
            throw parse_error(line, "term must be '<rational> <name>' or '<name>'");
        }
        pos = end + 1;
        if (pos == tokens.size() && end < tokens.size())
            throw parse_error(line, "dangling '+'");
    }
    return v;
}

// Splits "ei*ej" into the two factor names.
inline std::pair<std::string, std::string> split_product(const std::string& tok, std::size_t line)
{
    auto star = tok.find('*');
    if (star == std::string::npos || star == 0 || star + 1 == tok.size())
        throw parse_error(line, "expected a product 'ei*ej'");
    return {tok.substr(0, star), tok.substr(star + 1)};
}

inline std::size_t name_index_of(const std::vector<std::string>& names, const std::string& s,
                                 std::size_t line)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == s)
            return i;
    throw parse_error(line, "unknown basis name '" + s + "'");
}

} // namespace detail

// Line-oriented format: `dim N`, optional `basis e1 e2 ...`, then product
// lines `ei*ej = q1 ek + q2 el ...`. Specifying (i,j) implies (j,i);
// unspecified products are zero.
inline Algebra parse_algebra(const std::string& text)
{
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "dim" || lines[0].tokens.size() != 2)
        throw parse_error(lines.empty() ? 1 : lines[0].number, "expected header 'dim N'");
    std::size_t n = 0;
    try {
        n = std::stoul(lines[0].tokens[1]);
    } catch (...) {
        throw parse_error(lines[0].number, "bad dimension '" + lines[0].tokens[1] + "'");
    }
    std::vector<std::string> names;
    std::size_t first = 1;
    if (lines.size() > 1 && lines[1].tokens[0] == "basis") {
        names.assign(lines[1].tokens.begin() + 1, lines[1].tokens.end());
        if (names.size() != n)
            throw parse_error(lines[1].number, "basis line must name all " + std::to_string(n) + " vectors");
        first = 2;
    } else {
        for (std::size_t i = 1; i <= n; ++i)
            names.push_back("e" + std::to_string(i));
    }
    Algebra a(n, names);
    std::map<std::pair<std::size_t, std::size_t>, Vec> seen;
    for (std::size_t l = first; l < lines.size(); ++l) {
        const auto& tk = lines[l].tokens;
        if (tk.size() < 3 || tk[1] != "=")
            throw parse_error(lines[l].number, "expected 'ei*ej = ...'");
        auto [lhs, rhs] = detail::split_product(tk[0], lines[l].number);
        std::size_t i = detail::name_index_of(names, lhs, lines[l].number);
        std::size_t j = detail::name_index_of(names, rhs, lines[l].number);
        Vec v = detail::parse_combination(tk, 2, names, lines[l].number);
        auto key = std::minmax(i, j);
        auto it = seen.find(key);
        if (it != seen.end()) {
            if (!(it->second == v))
                throw symmetry_conflict_error(lines[l].number,
                                              "conflicting values for " + lhs + "*" + rhs +
                                                  " and its mirror");
            continue;
        }
        seen.emplace(key, v);
        a.set_product(i, j, v);
    }
    return a;
}

inline std::string render_algebra(const Algebra& a)
{
    std::ostringstream out;
    out << "dim " << a.dim() << "\n";
    out << "basis";
    for (const auto& n : a.basis_names())
        out << " " << n;
    out << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j) {
            Vec v = a.product_basis(i, j);
            if (is_zero(v))
                continue;
            out << a.basis_names()[i] << "*" << a.basis_names()[j] << " =";
            bool firstterm = true;
            for (std::size_t k = 0; k < a.dim(); ++k) {
                if (v[k] == 0)
                    continue;
                out << (firstterm ? " " : " + ");
                if (v[k] != 1)
                    out << rat_str(v[k]) << " ";
                out << a.basis_names()[k];
                firstterm = false;
            }
            out << "\n";
        }
    return out.str();
}

// `dim N` followed by N rows of N rationals.
inline Matrix parse_matrix(const std::string& text)
{
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "dim" || lines[0].tokens.size() != 2)
        throw parse_error(lines.empty() ? 1 : lines[0].number, "expected header 'dim N'");
    std::size_t n = 0;
    try {
        n = std::stoul(lines[0].tokens[1]);
    } catch (...) {
        throw parse_error(lines[0].number, "bad dimension '" + lines[0].tokens[1] + "'");
    }
    if (lines.size() != n + 1)
        throw parse_error(lines[0].number, "expected " + std::to_string(n) + " rows after the header");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& tk = lines[i + 1].tokens;
        if (tk.size() != n)
            throw parse_error(lines[i + 1].number, "expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = detail::parse_rat_at(tk[j], lines[i + 1].number);
    }
    return m;
}

inline std::string render_matrix(const Matrix& m)
{
    std::ostringstream out;
    out << "dim " << m.rows() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << rat_str(m(i, j));
        out << "\n";
    }
    return out.str();
}

// `module M`, then one `action <basis name>` header per algebra basis
// vector followed by M rows of M rationals.
inline Representation parse_representation(const std::string& text, const Algebra& a)
{
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "module" || lines[0].tokens.size() != 2)
        throw parse_error(lines.empty() ? 1 : lines[0].number, "expected header 'module M'");
    std::size_t m = 0;
    try {
        m = std::stoul(lines[0].tokens[1]);
    } catch (...) {
        throw parse_error(lines[0].number, "bad module dimension");
    }
    Representation r;
    r.algebra = a;
    r.module_dim = m;
    r.action.assign(a.dim(), Matrix(m, m));
    std::size_t l = 1;
    std::vector<bool> given(a.dim(), false);
    while (l < lines.size()) {
        const auto& tk = lines[l].tokens;
        if (tk[0] != "action" || tk.size() != 2)
            throw parse_error(lines[l].number, "expected 'action <basis name>'");
        std::size_t i = detail::name_index_of(a.basis_names(), tk[1], lines[l].number);
        if (given[i])
            throw parse_error(lines[l].number, "duplicate action block for " + tk[1]);
        given[i] = true;
        for (std::size_t row = 0; row < m; ++row) {
            if (++l >= lines.size())
                throw parse_error(lines[l - 1].number, "missing action rows");
            const auto& rt = lines[l].tokens;
            if (rt.size() != m)
                throw parse_error(lines[l].number, "expected " + std::to_string(m) + " entries");
            for (std::size_t col = 0; col < m; ++col)
                r.action[i](row, col) = detail::parse_rat_at(rt[col], lines[l].number);
        }
        ++l;
    }
    return r;
}

// Symmetric 2-cochain with values in a module with basis names m1..mM
// (a bare rational is accepted when M = 1):
//   ei*ej = q1 m1 + q2 m2
inline Cochain parse_cochain2(const std::string& text, const Algebra& a, std::size_t m)
{
    std::vector<std::string> module_names;
    for (std::size_t k = 1; k <= m; ++k)
        module_names.push_back("m" + std::to_string(k));
    Cochain c(2, a.dim(), m);
    for (const auto& line : detail::tokenize(text)) {
        const auto& tk = line.tokens;
        if (tk.size() < 3 || tk[1] != "=")
            throw parse_error(line.number, "expected 'ei*ej = ...'");
        auto [lhs, rhs] = detail::split_product(tk[0], line.number);
        std::size_t i = detail::name_index_of(a.basis_names(), lhs, line.number);
        std::size_t j = detail::name_index_of(a.basis_names(), rhs, line.number);
        Vec v;
        if (m == 1 && tk.size() == 3 && tk[2] != module_names[0]) {
            v = Vec{detail::parse_rat_at(tk[2], line.number)};
        } else {
            v = detail::parse_combination(tk, 2, module_names, line.number);
        }
        for (std::size_t k = 0; k < m; ++k)
            c.at(k, {i, j}) = c.at(k, {j, i}) = v[k];
    }
    return c;
}

using AlgebraResolver = std::function<Algebra(const std::string&)>;

// `base <ref>` then `term <k>` sections of product lines with values in the
// algebra itself.
inline TruncatedDeformation parse_deformation(const std::string& text, const AlgebraResolver& resolve)
{
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "base" || lines[0].tokens.size() != 2)
        throw parse_error(lines.empty() ? 1 : lines[0].number, "expected header 'base <algebra ref>'");
    Algebra base = resolve(lines[0].tokens[1]);
    std::size_t n = base.dim();
    std::vector<Cochain> terms;
    std::size_t current = 0;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto& tk = lines[l].tokens;
        if (tk[0] == "term") {
            std::size_t k = 0;
            try {
                k = std::stoul(tk.at(1));
            } catch (...) {
                throw parse_error(lines[l].number, "expected 'term <positive order>'");
            }
            if (k == 0)
                throw parse_error(lines[l].number, "order 0 is the base product");
            while (terms.size() < k)
                terms.emplace_back(2, n, n);
            current = k;
            continue;
        }
        if (current == 0)
            throw parse_error(lines[l].number, "product line before any 'term' header");
        if (tk.size() < 3 || tk[1] != "=")
            throw parse_error(lines[l].number, "expected 'ei*ej = ...'");
        auto [lhs, rhs] = detail::split_product(tk[0], lines[l].number);
        std::size_t i = detail::name_index_of(base.basis_names(), lhs, lines[l].number);
        std::size_t j = detail::name_index_of(base.basis_names(), rhs, lines[l].number);
        Vec v = detail::parse_combination(tk, 2, base.basis_names(), lines[l].number);
        for (std::size_t k = 0; k < n; ++k)
            terms[current - 1].at(k, {i, j}) = terms[current - 1].at(k, {j, i}) = v[k];
    }
    return TruncatedDeformation(std::move(base), std::move(terms));
}

// `source <ref>`, `target <ref>`, then `term <k>` sections of map lines
// `ei = q u1 + ...` in target coordinates.
inline TruncatedHomDeformation parse_hom_deformation(const std::string& text,
                                                     const AlgebraResolver& resolve)
{
    auto lines = detail::tokenize(text);
    if (lines.size() < 2 || lines[0].tokens[0] != "source" || lines[0].tokens.size() != 2 ||
        lines[1].tokens[0] != "target" || lines[1].tokens.size() != 2)
        throw parse_error(lines.empty() ? 1 : lines[0].number,
                          "expected headers 'source <ref>' and 'target <ref>'");
    Algebra source = resolve(lines[0].tokens[1]);
    Algebra target = resolve(lines[1].tokens[1]);
    std::vector<Matrix> terms;
    std::optional<std::size_t> current;
    for (std::size_t l = 2; l < lines.size(); ++l) {
        const auto& tk = lines[l].tokens;
        if (tk[0] == "term") {
            std::size_t k = 0;
            try {
                k = std::stoul(tk.at(1));
            } catch (...) {
                throw parse_error(lines[l].number, "expected 'term <order>'");
            }
            while (terms.size() <= k)
                terms.emplace_back(target.dim(), source.dim());
            current = k;
            continue;
        }
        if (!current)
            throw parse_error(lines[l].number, "map line before any 'term' header");
        if (tk.size() < 3 || tk[1] != "=")
            throw parse_error(lines[l].number, "expected 'ei = ...'");
        std::size_t i = detail::name_index_of(source.basis_names(), tk[0], lines[l].number);
        Vec v = detail::parse_combination(tk, 2, target.basis_names(), lines[l].number);
        terms[*current].set_column(i, v);
    }
    if (terms.empty())
        terms.emplace_back(target.dim(), source.dim());
    return TruncatedHomDeformation(std::move(source), std::move(target), std::move(terms));
}

} // namespace jjcoh

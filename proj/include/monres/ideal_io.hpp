#ifndef MONRES_IDEAL_IO_HPP
#define MONRES_IDEAL_IO_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monres/errors.hpp"
#include "monres/ideal.hpp"
#include "monres/monomial.hpp"

namespace monres {

// Ideal file format (line oriented, UTF-8):
//   ring <uint>              -- or:  ring <name> <name> ...
//   gen <monomial>           -- one generator per line
// Blank lines and lines starting with '#' are ignored. Generators are
// minimalized on load.

namespace detail {

inline std::vector<std::pair<std::string, std::size_t>> split_tokens(
    const std::string& line) {
    std::vector<std::pair<std::string, std::size_t>> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() &&
               std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        toks.emplace_back(line.substr(start, i - start), start + 1);
    }
    return toks;
}

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

/// Parses the ideal file format from text. `source` names the input in error
/// messages only.
inline MonomialIdeal parse_ideal_text(const std::string& text,
                                      const std::string& source = "<input>") {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    VarCtx ctx;
    std::vector<Monomial> gens;

    auto fail = [&](const std::string& msg, std::size_t col) -> void {
        throw ParseError(source + ": " + msg, lineno, col);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank || line[0] == '#') continue;

        auto toks = detail::split_tokens(line);
        if (toks[0].first == "ring") {
            if (ctx) fail("duplicate ring line", toks[0].second);
            if (toks.size() < 2)
                fail("ring line needs a variable count or names",
                     toks[0].second);
            try {
                if (toks.size() == 2 && detail::all_digits(toks[1].first)) {
                    unsigned long n = std::stoul(toks[1].first);
                    if (n == 0) fail("ring needs at least one variable",
                                     toks[1].second);
                    ctx = VarContext::numbered(n);
                } else {
                    std::vector<std::string> names;
                    for (std::size_t t = 1; t < toks.size(); ++t)
                        names.push_back(toks[t].first);
                    ctx = VarContext::make(std::move(names));
                }
            } catch (const Error& e) {
                fail(e.what(), toks[1].second);
            }
        } else if (toks[0].first == "gen") {
            if (!ctx) fail("gen line before ring line", toks[0].second);
            if (toks.size() != 2)
                fail("gen line needs exactly one monomial", toks[0].second);
            try {
                gens.push_back(parse_monomial(toks[1].first, ctx));
            } catch (const ParseError& e) {
                throw ParseError(source + ": " + e.what(), lineno,
                                 toks[1].second + e.col() - 1);
            }
        } else {
            fail("unknown directive '" + toks[0].first + "'", toks[0].second);
        }
    }

    if (!ctx)
        throw ParseError(source + ": missing ring line", lineno, 1);
    if (gens.empty())
        throw ParseError(source + ": no generators", lineno, 1);
    return minimalize(ctx, std::move(gens));
}

inline MonomialIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ideal file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal_text(buf.str(), path);
}

/// Serializes an ideal in the file format; parses back to an equal ideal.
inline std::string write_ideal_text(const MonomialIdeal& M) {
    std::string out = "ring";
    bool default_names = true;
    for (std::size_t j = 0; j < M.context()->nvars(); ++j)
        if (M.context()->name(j) != "x" + std::to_string(j + 1))
            default_names = false;
    if (default_names) {
        out += " " + std::to_string(M.context()->nvars());
    } else {
        for (const auto& nm : M.context()->names()) out += " " + nm;
    }
    out += "\n";
    for (const auto& g : M.gens()) out += "gen " + format_monomial(g) + "\n";
    return out;
}

/// One-line generator list, e.g. "x1^2*x2^2, x3^2"; "0" for the zero ideal.
inline std::string format_generators(const MonomialIdeal& M) {
    if (M.is_zero()) return "0";
    std::string out;
    for (const auto& g : M.gens()) {
        if (!out.empty()) out += ", ";
        out += format_monomial(g);
    }
    return out;
}

}  // namespace monres

#endif  // MONRES_IDEAL_IO_HPP

#ifndef MONRES_MONOMIAL_HPP
#define MONRES_MONOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "monres/errors.hpp"
#include "monres/util.hpp"

namespace monres {

class VarContext;
using VarCtx = std::shared_ptr<const VarContext>;

/// Immutable list of variable names shared by every monomial of one ring.
/// Names are display/parse identity only; arithmetic runs on exponent
/// vectors.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names)
        : names_(std::move(names)) {
        if (names_.empty())
            throw Error("variable context needs at least one variable");
        for (const auto& nm : names_) validate_name(nm);
        auto sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("variable names must be pairwise distinct");
    }

    static VarCtx make(std::vector<std::string> names) {
        return std::make_shared<VarContext>(std::move(names));
    }

    /// prefix1, prefix2, ..., prefixN
    static VarCtx numbered(std::size_t n, const std::string& prefix = "x") {
        std::vector<std::string> names;
        names.reserve(n);
        for (std::size_t i = 1; i <= n; ++i)
            names.push_back(prefix + std::to_string(i));
        return make(std::move(names));
    }

    std::size_t nvars() const { return names_.size(); }
    const std::string& name(std::size_t j) const { return names_.at(j); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a declared name, or npos.
    std::size_t index_of(std::string_view nm) const {
        for (std::size_t j = 0; j < names_.size(); ++j)
            if (names_[j] == nm) return j;
        return npos;
    }

    bool operator==(const VarContext& o) const { return names_ == o.names_; }
    bool operator!=(const VarContext& o) const { return !(*this == o); }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    static void validate_name(const std::string& nm) {
        if (nm.empty()) throw Error("variable name must be non-empty");
        if (nm == "1") throw Error("variable name '1' is reserved");
        for (char c : nm) {
            if (c == '*' || c == '^' || c == '#' || std::isspace(
                    static_cast<unsigned char>(c)))
                throw Error("variable name '" + nm +
                            "' contains a forbidden character");
        }
    }

    std::vector<std::string> names_;
};

/// A monomial as a non-negative exponent vector over a fixed context.
/// Immutable value type; equality is exponentwise in a matching context.
class Monomial {
public:
    Monomial(VarCtx ctx, std::vector<std::uint32_t> exps)
        : ctx_(std::move(ctx)), exps_(std::move(exps)) {
        if (!ctx_) throw Error("monomial requires a variable context");
        if (exps_.size() != ctx_->nvars())
            throw Error("exponent vector length does not match context");
    }

    static Monomial unit(const VarCtx& ctx) {
        return Monomial(ctx, std::vector<std::uint32_t>(ctx->nvars(), 0));
    }

    const VarCtx& context() const { return ctx_; }
    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t j) const { return exps_.at(j); }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t total_degree() const {
        std::uint64_t s = 0;
        for (auto e : exps_) s += e;
        return s;
    }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(),
                           [](std::uint32_t e) { return e == 0; });
    }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(),
                           [](std::uint32_t e) { return e <= 1; });
    }

    bool operator==(const Monomial& o) const {
        return exps_ == o.exps_ &&
               (ctx_ == o.ctx_ || *ctx_ == *o.ctx_);
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    VarCtx ctx_;
    std::vector<std::uint32_t> exps_;
};

inline void require_same_context(const Monomial& a, const Monomial& b) {
    if (a.context() == b.context()) return;
    if (*a.context() == *b.context()) return;
    throw ContextMismatch("monomials live over different variable contexts");
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = std::max(a.exponent(j), b.exponent(j));
    return Monomial(a.context(), std::move(e));
}

inline bool divides(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    for (std::size_t j = 0; j < a.nvars(); ++j)
        if (a.exponent(j) > b.exponent(j)) return false;
    return true;
}

inline std::uint64_t total_degree(const Monomial& a) {
    return a.total_degree();
}

inline bool is_squarefree(const Monomial& a) { return a.is_squarefree(); }

/// Product, with overflow checks on every exponent.
inline Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = checked_add_u32(a.exponent(j), b.exponent(j));
    return Monomial(a.context(), std::move(e));
}

/// a / b when b divides a exactly; throws InvariantViolation otherwise
/// (inexact division inside complex arithmetic means a homogeneity bug).
inline Monomial div_exact(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (b.exponent(j) > a.exponent(j))
            throw InvariantViolation("non-exact monomial division");
        e[j] = a.exponent(j) - b.exponent(j);
    }
    return Monomial(a.context(), std::move(e));
}

/// Exponentwise lexicographic strict order (context-blind on purpose; used
/// only for keys among monomials of one ring).
inline bool lex_less(const Monomial& a, const Monomial& b) {
    return a.exponents() < b.exponents();
}

struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return lex_less(a, b);
    }
};

/// Canonical generator order: decreasing total degree, then decreasing
/// exponentwise lex. Equal ideals get equal generator lists under this
/// order.
inline bool canonical_gen_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------
// Text form. Grammar (exact):
//   monomial := "1" | factor ("*" factor)*
//   factor   := varname ("^" uint)?
// No whitespace inside a factor; varname must be declared in the context.
// ---------------------------------------------------------------------------

inline std::string format_monomial(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t j = 0; j < m.nvars(); ++j) {
        std::uint32_t e = m.exponent(j);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += m.context()->name(j);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    return os << format_monomial(m);
}

/// Parses the grammar above. Throws ParseError with a 1-based column into
/// `text` on failure.
inline Monomial parse_monomial(std::string_view text, const VarCtx& ctx) {
    if (text.empty()) throw ParseError("empty monomial", 0, 1);
    if (text == "1") return Monomial::unit(ctx);

    std::vector<std::uint32_t> exps(ctx->nvars(), 0);
    std::size_t pos = 0;
    while (true) {
        std::size_t star = text.find('*', pos);
        std::string_view factor = (star == std::string_view::npos)
                                      ? text.substr(pos)
                                      : text.substr(pos, star - pos);
        if (factor.empty())
            throw ParseError("empty factor", 0, pos + 1);

        std::size_t caret = factor.find('^');
        std::string_view name =
            (caret == std::string_view::npos) ? factor : factor.substr(0, caret);
        if (name.empty())
            throw ParseError("missing variable name before '^'", 0, pos + 1);
        std::size_t var = ctx->index_of(name);
        if (var == VarContext::npos)
            throw ParseError("unknown variable '" + std::string(name) + "'",
                             0, pos + 1);

        std::uint64_t exp = 1;
        if (caret != std::string_view::npos) {
            std::string_view digits = factor.substr(caret + 1);
            std::size_t digits_col = pos + caret + 2;
            if (digits.empty())
                throw ParseError("missing exponent after '^'", 0, digits_col);
            exp = 0;
            for (char c : digits) {
                if (c < '0' || c > '9')
                    throw ParseError(
                        std::string("malformed exponent '") +
                            std::string(digits) + "'",
                        0, digits_col);
                exp = exp * 10 + static_cast<std::uint64_t>(c - '0');
                if (exp > 0xffffffffULL)
                    throw ParseError("exponent out of range", 0, digits_col);
            }
        }
        exps[var] = checked_add_u32(exps[var],
                                    static_cast<std::uint32_t>(exp));

        if (star == std::string_view::npos) break;
        pos = star + 1;
        if (pos >= text.size())
            throw ParseError("trailing '*'", 0, pos);
    }
    return Monomial(ctx, std::move(exps));
}

}  // namespace monres

#endif  // MONRES_MONOMIAL_HPP

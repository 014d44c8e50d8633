#ifndef MONRES_IDEAL_HPP
#define MONRES_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monres/errors.hpp"
#include "monres/monomial.hpp"
#include "monres/util.hpp"

namespace monres {

/// A monomial ideal held by its minimal generating set in canonical order
/// (decreasing degree, then decreasing lex). The empty generator list is the
/// zero ideal, which only arises as the distinguished result of restricting
/// by a monomial no generator divides; the list {1} is the unit ideal.
class MonomialIdeal {
public:
    static MonomialIdeal zero(VarCtx ctx) {
        return MonomialIdeal(std::move(ctx), {});
    }

    const VarCtx& context() const { return ctx_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t ngens() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    /// lcm of all generators.
    Monomial top_lcm() const {
        if (is_zero()) throw Error("zero ideal has no generator lcm");
        Monomial m = gens_[0];
        for (std::size_t i = 1; i < gens_.size(); ++i) m = lcm(m, gens_[i]);
        return m;
    }

    bool operator==(const MonomialIdeal& o) const {
        if (!(ctx_ == o.ctx_ || *ctx_ == *o.ctx_)) return false;
        return gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    friend MonomialIdeal minimalize(const VarCtx&, std::vector<Monomial>);
    friend MonomialIdeal restrict_to(const MonomialIdeal&, const Monomial&);

private:
    MonomialIdeal(VarCtx ctx, std::vector<Monomial> gens)
        : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

    VarCtx ctx_;
    std::vector<Monomial> gens_;
};

/// Minimal generating set of the ideal generated by `gens`: divisible and
/// duplicate generators removed, canonical order. The zero ideal is not
/// constructible this way; pass at least one generator.
inline MonomialIdeal minimalize(const VarCtx& ctx,
                                std::vector<Monomial> gens) {
    if (gens.empty())
        throw Error("cannot form an ideal from an empty generator list");
    for (const auto& g : gens) {
        if (!(g.context() == ctx || *g.context() == *ctx))
            throw ContextMismatch(
                "generator does not belong to the ideal's context");
    }
    // A unit generator absorbs everything.
    for (const auto& g : gens)
        if (g.is_unit())
            return MonomialIdeal(ctx, {Monomial::unit(ctx)});

    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                  return a.exponents() < b.exponents();
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(gens[j], gens[i])) {
                // Ties are impossible after dedup, so strict divisor.
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(gens[i]);
    }
    std::sort(minimal.begin(), minimal.end(), canonical_gen_less);
    return MonomialIdeal(ctx, std::move(minimal));
}

/// The ideal generated by the minimal generators of M dividing m. Returns
/// the zero ideal when none divides; callers treat that as the whole ring
/// (b0 = 1, all higher Betti numbers 0).
inline MonomialIdeal restrict_to(const MonomialIdeal& M, const Monomial& m) {
    if (!(M.context() == m.context() || *M.context() == *m.context()))
        throw ContextMismatch("restriction monomial has a different context");
    std::vector<Monomial> kept;
    for (const auto& g : M.gens())
        if (divides(g, m)) kept.push_back(g);
    // A subset of a minimal antichain is minimal and stays sorted.
    return MonomialIdeal(M.context(), std::move(kept));
}

/// The twin ideal: with m = lcm of all generators = prod x_j^{alpha_j}, each
/// generator keeps exponent alpha_j exactly where it attains the maximum and
/// drops to 0 elsewhere; the resulting list is minimalized.
inline MonomialIdeal twin(const MonomialIdeal& M) {
    if (M.is_zero()) throw Error("twin of the zero ideal is undefined");
    const Monomial top = M.top_lcm();
    std::vector<Monomial> out;
    out.reserve(M.ngens());
    for (const auto& g : M.gens()) {
        std::vector<std::uint32_t> e(g.nvars(), 0);
        for (std::size_t j = 0; j < g.nvars(); ++j)
            if (g.exponent(j) == top.exponent(j)) e[j] = top.exponent(j);
        out.emplace_back(M.context(), std::move(e));
    }
    return minimalize(M.context(), std::move(out));
}

/// Change of variables y_j = x_j^{alpha_j} recorded by compress(): alpha over
/// the source context (0 on unused variables) plus the increasing list of
/// used variable indices, which index the compressed context's variables.
struct CompressionMap {
    VarCtx source;
    VarCtx compressed;
    std::vector<std::uint32_t> alpha;
    std::vector<std::size_t> used_vars;

    /// Maps a monomial over the compressed ring back to the source ring.
    Monomial substitute(const Monomial& y) const {
        if (!(y.context() == compressed || *y.context() == *compressed))
            throw ContextMismatch(
                "substitute expects a monomial over the compressed context");
        std::vector<std::uint32_t> e(source->nvars(), 0);
        for (std::size_t j = 0; j < used_vars.size(); ++j)
            e[used_vars[j]] = checked_mul_u32(alpha[used_vars[j]],
                                              y.exponent(j));
        return Monomial(source, std::move(e));
    }
};

/// Rewrites a twin-fixed ideal (every exponent is 0 or the top exponent
/// alpha_j) as a squarefree ideal over fresh variables y_j, dropping unused
/// variables. Generator count is preserved.
inline std::pair<MonomialIdeal, CompressionMap> compress(
    const MonomialIdeal& M) {
    if (M.is_zero())
        throw Error("compress of the zero ideal is undefined");
    if (M.is_unit())
        throw Error("compress of the unit ideal has no variables to keep");
    const Monomial top = M.top_lcm();

    for (std::size_t i = 0; i < M.ngens(); ++i) {
        const Monomial& g = M.gens()[i];
        for (std::size_t j = 0; j < g.nvars(); ++j) {
            std::uint32_t e = g.exponent(j);
            if (e != 0 && e != top.exponent(j))
                throw Error(
                    "compress precondition violated: generator " +
                    std::to_string(i + 1) + " has exponent " +
                    std::to_string(e) + " in variable " +
                    M.context()->name(j) + ", strictly between 0 and " +
                    std::to_string(top.exponent(j)) +
                    "; apply twin() first");
        }
    }

    std::vector<std::size_t> used;
    for (std::size_t j = 0; j < top.nvars(); ++j)
        if (top.exponent(j) > 0) used.push_back(j);

    VarCtx yctx = VarContext::numbered(used.size(), "y");
    std::vector<Monomial> ygens;
    ygens.reserve(M.ngens());
    for (const auto& g : M.gens()) {
        std::vector<std::uint32_t> e(used.size(), 0);
        for (std::size_t j = 0; j < used.size(); ++j)
            e[j] = (g.exponent(used[j]) != 0) ? 1u : 0u;
        ygens.emplace_back(yctx, std::move(e));
    }
    MonomialIdeal out = minimalize(yctx, std::move(ygens));
    if (out.ngens() != M.ngens())
        throw InvariantViolation(
            "compression changed the generator count of a minimal ideal");

    CompressionMap map{M.context(), yctx, top.exponents(), std::move(used)};
    return {std::move(out), std::move(map)};
}

/// Deterministic random ideal: up to q distinct monomials with total degree
/// drawn uniformly from [min_deg, max_deg] (uniform monomial at each degree),
/// then minimalized; the final count can be below q.
inline MonomialIdeal random_ideal(const VarCtx& ctx, std::size_t q,
                                  std::uint32_t min_deg,
                                  std::uint32_t max_deg, bool squarefree,
                                  std::uint64_t seed) {
    const std::size_t n = ctx->nvars();
    if (q == 0) throw Error("random ideal needs q >= 1");
    if (min_deg == 0 || min_deg > max_deg)
        throw Error("random ideal needs 1 <= min_deg <= max_deg");
    if (squarefree && min_deg > n)
        throw Error("infeasible: squarefree generators of degree " +
                    std::to_string(min_deg) + " need at least that many variables");
    if (squarefree && max_deg > n)
        throw Error("infeasible: squarefree degree bound exceeds the number of variables");

    Rng rng(seed);
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Monomial> picks;
    std::size_t attempts = 0;
    const std::size_t attempt_limit = 200 + 60 * q;
    while (picks.size() < q && attempts < attempt_limit) {
        ++attempts;
        auto d = static_cast<std::uint32_t>(rng.uniform(min_deg, max_deg));
        std::vector<std::uint32_t> exps(n, 0);
        if (squarefree) {
            for (auto j : rng.subset(static_cast<std::uint32_t>(n), d))
                exps[j] = 1;
        } else {
            exps = rng.composition(d, static_cast<std::uint32_t>(n));
        }
        if (seen.insert(exps).second)
            picks.emplace_back(ctx, std::move(exps));
    }
    return minimalize(ctx, std::move(picks));
}

}  // namespace monres

#endif  // MONRES_IDEAL_HPP

#ifndef MONRES_COMPLEX_HPP
#define MONRES_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monres/errors.hpp"
#include "monres/field.hpp"
#include "monres/ideal.hpp"
#include "monres/monomial.hpp"
#include "monres/util.hpp"

namespace monres {

inline constexpr std::size_t kDefaultGeneratorCap = 20;
// Above this, 64-bit subset ranks and addressable memory both give out.
inline constexpr std::size_t kHardGeneratorLimit = 30;

/// Basis element labelled by the generator subset it came from. The label
/// survives cancellation, so mdeg always equals the lcm of the subset and
/// the homological degree equals the subset size.
struct TaylorSymbol {
    std::vector<std::uint32_t> subset;  // strictly increasing indices
    Monomial mdeg;

    std::size_t hdeg() const { return subset.size(); }
};

template <class Field>
struct DiffEntry {
    std::uint32_t row;  // target index in the module one degree down
    typename Field::Scalar coef;
    Monomial mono;
};

/// A finite complex of free modules with multigraded basis symbols and
/// column-sparse differentials: diffs[s][c] lists the entries of the map out
/// of basis element c of modules[s], sorted by target row.
template <class Field>
struct FreeComplex {
    Field field;
    VarCtx ctx;
    std::vector<Monomial> gens;  // generator list the subsets index into
    std::vector<std::vector<TaylorSymbol>> modules;
    std::vector<std::vector<std::vector<DiffEntry<Field>>>> diffs;

    explicit FreeComplex(Field f) : field(std::move(f)) {}

    std::vector<std::size_t> ranks() const {
        std::vector<std::size_t> r;
        r.reserve(modules.size());
        for (const auto& m : modules) r.push_back(m.size());
        return r;
    }

    /// Largest homological degree with a nonzero module.
    std::size_t top_degree() const {
        std::size_t top = 0;
        for (std::size_t s = 0; s < modules.size(); ++s)
            if (!modules[s].empty()) top = s;
        return top;
    }
};

/// Lexicographic rank of an increasing s-subset of {0..q-1} among all
/// s-subsets in lexicographic order.
inline std::uint64_t subset_rank(const std::vector<std::uint32_t>& subset,
                                 std::size_t q) {
    const std::size_t s = subset.size();
    std::uint64_t rank = 0;
    std::uint32_t lo = 0;
    for (std::size_t t = 0; t < s; ++t) {
        for (std::uint32_t v = lo; v < subset[t]; ++v)
            rank += binomial(q - 1 - v, s - 1 - t);
        lo = subset[t] + 1;
    }
    return rank;
}

namespace detail {

inline bool next_combination(std::vector<std::uint32_t>& c, std::size_t q) {
    const std::size_t s = c.size();
    if (s == 0) return false;
    std::size_t i = s;
    while (i > 0) {
        --i;
        if (c[i] != q - s + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// The Taylor complex of an explicit generator list, exactly as given
/// (no minimalization, no reordering): bases are the generator subsets in
/// lexicographic order and the differential sends a subset to its
/// one-smaller subsets with sign (-1)^{j+1} and the lcm-quotient monomial.
template <class Field>
FreeComplex<Field> taylor_of_generators(const VarCtx& ctx,
                                        std::vector<Monomial> gens,
                                        Field field,
                                        std::size_t cap = kDefaultGeneratorCap) {
    const std::size_t q = gens.size();
    if (q > kHardGeneratorLimit)
        throw CapExceeded("generator count " + std::to_string(q) +
                          " exceeds the hard limit of " +
                          std::to_string(kHardGeneratorLimit));
    if (q > cap)
        throw CapExceeded(
            "generator count " + std::to_string(q) + " exceeds the cap of " +
            std::to_string(cap) +
            "; raise it explicitly (--cap) to build a complex this large");
    for (const auto& g : gens)
        if (!(g.context() == ctx || *g.context() == *ctx))
            throw ContextMismatch("generator context mismatch");

    FreeComplex<Field> C(field);
    C.ctx = ctx;
    C.gens = std::move(gens);
    C.modules.resize(q + 1);
    C.diffs.resize(q + 1);

    C.modules[0].push_back(TaylorSymbol{{}, Monomial::unit(ctx)});
    for (std::size_t s = 1; s <= q; ++s) {
        const std::uint64_t count = binomial(q, s);
        C.modules[s].reserve(count);
        std::vector<std::uint32_t> c(s);
        for (std::size_t i = 0; i < s; ++i) c[i] = static_cast<std::uint32_t>(i);
        do {
            Monomial m = C.gens[c[0]];
            for (std::size_t i = 1; i < s; ++i) m = lcm(m, C.gens[c[i]]);
            C.modules[s].push_back(TaylorSymbol{c, std::move(m)});
        } while (detail::next_combination(c, q));
    }

    for (std::size_t s = 1; s <= q; ++s) {
        C.diffs[s].resize(C.modules[s].size());
        for (std::size_t col = 0; col < C.modules[s].size(); ++col) {
            const TaylorSymbol& src = C.modules[s][col];
            auto& entries = C.diffs[s][col];
            entries.reserve(s);
            std::vector<std::uint32_t> target(src.subset);
            for (std::size_t j = 0; j < s; ++j) {
                std::uint32_t removed = target[j];
                target.erase(target.begin() + static_cast<std::ptrdiff_t>(j));
                std::uint32_t row = static_cast<std::uint32_t>(
                    subset_rank(target, q));
                const Monomial& tgt_mdeg = C.modules[s - 1][row].mdeg;
                Monomial mono = div_exact(src.mdeg, tgt_mdeg);
                // (-1)^{j+1} with j the 1-based position of the removed
                // generator within the subset.
                auto coef = field.from_int((j % 2 == 0) ? 1 : -1);
                entries.push_back(DiffEntry<Field>{row, std::move(coef),
                                                   std::move(mono)});
                target.insert(target.begin() + static_cast<std::ptrdiff_t>(j),
                              removed);
            }
            std::sort(entries.begin(), entries.end(),
                      [](const DiffEntry<Field>& a, const DiffEntry<Field>& b) {
                          return a.row < b.row;
                      });
        }
    }
    return C;
}

/// The Taylor complex of S/M over the given field. The zero ideal yields the
/// complex with F_0 alone, which is its resolution.
template <class Field>
FreeComplex<Field> taylor(const MonomialIdeal& M, Field field,
                          std::size_t cap = kDefaultGeneratorCap) {
    return taylor_of_generators(M.context(), M.gens(), field, cap);
}

/// Indices of basis symbols of modules[s] whose multidegree is exactly m.
template <class Field>
std::vector<std::uint32_t> strand_basis(const FreeComplex<Field>& C,
                                        const Monomial& m, std::size_t s) {
    std::vector<std::uint32_t> idx;
    if (s >= C.modules.size()) return idx;
    for (std::uint32_t i = 0; i < C.modules[s].size(); ++i)
        if (C.modules[s][i].mdeg == m) idx.push_back(i);
    return idx;
}

/// All distinct lcms of nonempty generator subsets, in increasing
/// exponentwise-lex order. Computed as the closure of the generators under
/// pairwise lcm, so the cost tracks the lattice size rather than 2^q.
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& M,
                                         std::size_t cap = kDefaultGeneratorCap) {
    if (M.ngens() > cap)
        throw CapExceeded("generator count exceeds the cap of " +
                          std::to_string(cap));
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Monomial> lattice;
    for (const auto& g : M.gens()) {
        std::vector<Monomial> fresh;
        if (seen.insert(g.exponents()).second) fresh.push_back(g);
        for (const auto& l : lattice) {
            Monomial join = lcm(l, g);
            if (seen.insert(join.exponents()).second)
                fresh.push_back(std::move(join));
        }
        for (auto& f : fresh) lattice.push_back(std::move(f));
    }
    std::sort(lattice.begin(), lattice.end(), lex_less);
    return lattice;
}

/// Structural and homological sanity of a complex: shapes consistent, every
/// entry multigraded-homogeneous, and f_{s-1} o f_s = 0 expanded
/// symbolically. Throws InvariantViolation on the first failure.
template <class Field>
void check_complex(const FreeComplex<Field>& C) {
    const auto& F = C.field;
    for (std::size_t s = 0; s < C.modules.size(); ++s) {
        if (C.diffs.size() != C.modules.size())
            throw InvariantViolation("complex: diffs/modules length mismatch");
        if (s == 0) continue;
        if (C.diffs[s].size() != C.modules[s].size())
            throw InvariantViolation("complex: column count mismatch");
        for (std::size_t col = 0; col < C.diffs[s].size(); ++col) {
            for (const auto& e : C.diffs[s][col]) {
                if (e.row >= C.modules[s - 1].size())
                    throw InvariantViolation("complex: row out of range");
                if (F.is_zero(e.coef))
                    throw InvariantViolation("complex: stored zero entry");
                const Monomial& src = C.modules[s][col].mdeg;
                const Monomial& tgt = C.modules[s - 1][e.row].mdeg;
                if (!(e.mono * tgt == src))
                    throw InvariantViolation(
                        "complex: entry is not multigraded-homogeneous");
            }
        }
    }
    for (std::size_t s = 2; s < C.modules.size(); ++s) {
        for (std::size_t col = 0; col < C.diffs[s].size(); ++col) {
            std::map<std::uint32_t, typename Field::Scalar> sums;
            for (const auto& e1 : C.diffs[s][col])
                for (const auto& e2 : C.diffs[s - 1][e1.row]) {
                    auto it = sums.find(e2.row);
                    auto prod = F.mul(e1.coef, e2.coef);
                    if (it == sums.end())
                        sums.emplace(e2.row, std::move(prod));
                    else
                        it->second = F.add(it->second, prod);
                }
            for (const auto& [row, v] : sums)
                if (!F.is_zero(v))
                    throw InvariantViolation(
                        "complex: composite differential is nonzero at row " +
                        std::to_string(row));
        }
    }
}

}  // namespace monres

#endif  // MONRES_COMPLEX_HPP

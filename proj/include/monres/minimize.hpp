#ifndef MONRES_MINIMIZE_HPP
#define MONRES_MINIMIZE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monres/betti.hpp"
#include "monres/complex.hpp"
#include "monres/errors.hpp"

namespace monres {

/// One consecutive cancellation: the basis pair removed from F_s and
/// F_{s-1}, identified by their generator-subset labels.
struct Cancellation {
    std::size_t s;
    std::vector<std::uint32_t> source_subset;
    std::vector<std::uint32_t> target_subset;
};

using CancellationTrace = std::vector<Cancellation>;

/// True when no differential entry is invertible. Over a field an entry is
/// invertible exactly when its monomial part is 1.
template <class Field>
bool is_minimal(const FreeComplex<Field>& C) {
    for (std::size_t s = 1; s < C.diffs.size(); ++s)
        for (const auto& col : C.diffs[s])
            for (const auto& e : col)
                if (e.mono.is_unit()) return false;
    return true;
}

namespace detail {

/// Mutable elimination state. Entries keep scalars only: in a multigraded-
/// homogeneous complex the monomial of an entry is forced to be
/// mdeg(source)/mdeg(target), so it is recomputed on export. An entry is a
/// cancellation candidate iff the two multidegrees coincide.
template <class Field>
struct MinimizeWork {
    using Scalar = typename Field::Scalar;

    const FreeComplex<Field>& in;
    Field field;
    // cols[s][c]: row -> scalar, for the map out of basis element c of F_s.
    std::vector<std::vector<std::map<std::uint32_t, Scalar>>> cols;
    // rowsup[s][r]: columns of f_s with an entry in row r.
    std::vector<std::vector<std::set<std::uint32_t>>> rowsup;
    // units[s]: candidate invertible entries as (col, row), kept sorted so
    // the scan order (increasing source, then target) is a set lookup.
    std::vector<std::set<std::pair<std::uint32_t, std::uint32_t>>> units;
    std::vector<std::vector<char>> alive;
    CancellationTrace trace;

    explicit MinimizeWork(const FreeComplex<Field>& c)
        : in(c), field(c.field) {
        const std::size_t levels = c.modules.size();
        cols.resize(levels);
        rowsup.resize(levels);
        units.resize(levels);
        alive.resize(levels);
        for (std::size_t s = 0; s < levels; ++s) {
            alive[s].assign(c.modules[s].size(), 1);
            if (s == 0) continue;
            cols[s].resize(c.modules[s].size());
            rowsup[s].resize(c.modules[s - 1].size());
            for (std::uint32_t col = 0; col < c.diffs[s].size(); ++col) {
                for (const auto& e : c.diffs[s][col]) {
                    if (field.is_zero(e.coef)) continue;
                    cols[s][col].emplace(e.row, e.coef);
                    rowsup[s][e.row].insert(col);
                    if (e.mono.is_unit()) units[s].insert({col, e.row});
                }
            }
        }
    }

    bool unit_position(std::size_t s, std::uint32_t col,
                       std::uint32_t row) const {
        return in.modules[s][col].mdeg == in.modules[s - 1][row].mdeg;
    }

    void insert_entry(std::size_t s, std::uint32_t col, std::uint32_t row,
                      Scalar v) {
        cols[s][col].emplace(row, std::move(v));
        rowsup[s][row].insert(col);
        if (unit_position(s, col, row)) units[s].insert({col, row});
    }

    void erase_entry(std::size_t s, std::uint32_t col, std::uint32_t row) {
        cols[s][col].erase(row);
        rowsup[s][row].erase(col);
        units[s].erase({col, row});
    }

    /// Cancels the invertible entry of f_s at (source a, target b): deletes
    /// both basis elements, applies the elimination update
    /// f(t,c) -= f(t,a) f(b,a)^{-1} f(b,c) to the remaining entries of f_s,
    /// and drops the dead row/column from the neighbouring differentials.
    void cancel(std::size_t s, std::uint32_t a, std::uint32_t b) {
        Scalar u = cols[s][a].at(b);
        trace.push_back(Cancellation{s, in.modules[s][a].subset,
                                     in.modules[s - 1][b].subset});
        alive[s][a] = 0;
        alive[s - 1][b] = 0;

        // Snapshot column a (without the pivot row) and row b (without the
        // pivot column) before tearing the pivot structures down.
        std::vector<std::pair<std::uint32_t, Scalar>> col_a;
        for (const auto& [t, w] : cols[s][a])
            if (t != b) col_a.emplace_back(t, w);
        std::vector<std::pair<std::uint32_t, Scalar>> row_b;
        for (std::uint32_t c : rowsup[s][b])
            if (c != a) row_b.emplace_back(c, cols[s][c].at(b));

        for (const auto& [t, w] : cols[s][a]) {
            rowsup[s][t].erase(a);
            units[s].erase({a, t});
        }
        cols[s][a].clear();
        for (const auto& [c, v] : row_b) {
            cols[s][c].erase(b);
            units[s].erase({c, b});
        }
        rowsup[s][b].clear();

        for (const auto& [c, v] : row_b) {
            Scalar factor = field.neg(field.div(v, u));
            for (const auto& [t, w] : col_a) {
                Scalar delta = field.mul(factor, w);
                auto it = cols[s][c].find(t);
                if (it == cols[s][c].end()) {
                    if (!field.is_zero(delta))
                        insert_entry(s, c, t, std::move(delta));
                } else {
                    it->second = field.add(it->second, delta);
                    if (field.is_zero(it->second)) erase_entry(s, c, t);
                }
            }
        }

        // f_{s+1} loses row a; f_{s-1} loses column b. No value updates.
        if (s + 1 < cols.size()) {
            std::vector<std::uint32_t> above(rowsup[s + 1][a].begin(),
                                             rowsup[s + 1][a].end());
            for (std::uint32_t c2 : above) {
                cols[s + 1][c2].erase(a);
                units[s + 1].erase({c2, a});
            }
            rowsup[s + 1][a].clear();
        }
        if (s >= 2) {
            for (const auto& [t2, w2] : cols[s - 1][b]) {
                rowsup[s - 1][t2].erase(b);
                units[s - 1].erase({b, t2});
            }
            cols[s - 1][b].clear();
        }
    }
};

}  // namespace detail

/// Consecutive cancellation until no invertible entries remain. Pairs are
/// cancelled in increasing homological degree, then increasing source basis
/// index, then increasing target index, rescanning from the lowest degree a
/// cancellation touched; the order (and hence the trace) is deterministic.
/// The input complex is left untouched.
template <class Field>
std::pair<FreeComplex<Field>, CancellationTrace> minimize(
    const FreeComplex<Field>& C) {
    detail::MinimizeWork<Field> work(C);
    const std::size_t levels = C.modules.size();

    std::size_t s = 1;
    while (s < levels) {
        if (work.units[s].empty()) {
            ++s;
            continue;
        }
        auto [a, b] = *work.units[s].begin();
        work.cancel(s, a, b);
        s = (s >= 2) ? s - 1 : 1;
    }

    FreeComplex<Field> out(C.field);
    out.ctx = C.ctx;
    out.gens = C.gens;

    std::vector<std::vector<std::uint32_t>> remap(levels);
    std::size_t top = 0;
    out.modules.resize(levels);
    for (std::size_t lvl = 0; lvl < levels; ++lvl) {
        remap[lvl].assign(C.modules[lvl].size(), 0);
        for (std::uint32_t i = 0; i < C.modules[lvl].size(); ++i) {
            if (!work.alive[lvl][i]) continue;
            remap[lvl][i] =
                static_cast<std::uint32_t>(out.modules[lvl].size());
            out.modules[lvl].push_back(C.modules[lvl][i]);
        }
        if (!out.modules[lvl].empty()) top = lvl;
    }
    out.modules.resize(top + 1);
    out.diffs.resize(top + 1);
    for (std::size_t lvl = 1; lvl <= top; ++lvl) {
        out.diffs[lvl].resize(out.modules[lvl].size());
        for (std::uint32_t i = 0; i < C.modules[lvl].size(); ++i) {
            if (!work.alive[lvl][i]) continue;
            auto& entries = out.diffs[lvl][remap[lvl][i]];
            for (const auto& [row, coef] : work.cols[lvl][i]) {
                Monomial mono = div_exact(C.modules[lvl][i].mdeg,
                                          C.modules[lvl - 1][row].mdeg);
                entries.push_back(DiffEntry<Field>{remap[lvl - 1][row], coef,
                                                   std::move(mono)});
            }
        }
    }
    return {std::move(out), std::move(work.trace)};
}

/// Reads the Betti table off a minimal complex: symbols counted by
/// homological degree, by the total degree of their multidegree, and by
/// exact multidegree.
template <class Field>
BettiTable betti_from_complex(const FreeComplex<Field>& C) {
    if (!is_minimal(C))
        throw Error("betti numbers require a minimal complex; run minimize");
    BettiTable t;
    t.field = C.field.name();
    for (std::size_t s = 0; s < C.modules.size(); ++s)
        for (const auto& sym : C.modules[s]) t.add(s, sym.mdeg);
    return t;
}

/// The descent chain from a top-degree basis element of a minimal complex:
/// repeatedly steps to the target (lexicographically smallest subset) of a
/// nonzero differential entry, down to homological degree 1. Along the way
/// multidegrees strictly divide each other, so total degrees strictly drop.
template <class Field>
std::vector<TaylorSymbol> descent_chain(const FreeComplex<Field>& C,
                                        std::size_t start_level,
                                        std::uint32_t start_index) {
    if (!is_minimal(C))
        throw Error("descent chains are defined on minimal complexes");
    const std::size_t p = C.top_degree();
    if (start_level != p)
        throw Error("descent chain must start in the top homological degree");
    if (start_index >= C.modules[p].size())
        throw Error("descent chain start index out of range");

    std::vector<TaylorSymbol> chain;
    std::size_t s = p;
    std::uint32_t idx = start_index;
    chain.push_back(C.modules[s][idx]);
    while (s >= 2) {
        const auto& entries = C.diffs[s][idx];
        if (entries.empty())
            throw InvariantViolation(
                "minimal complex has a basis element with zero differential");
        // Entries are sorted by row and basis order is subset-lex order, so
        // the first entry's target has the lexicographically smallest subset.
        idx = entries.front().row;
        --s;
        chain.push_back(C.modules[s][idx]);
    }
    if (s == 1 && C.diffs[1][idx].empty())
        throw InvariantViolation(
            "minimal complex has a basis element with zero differential");
    return chain;
}

}  // namespace monres

#endif  // MONRES_MINIMIZE_HPP

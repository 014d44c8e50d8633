#ifndef MONRES_ORACLE_HPP
#define MONRES_ORACLE_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "monres/betti.hpp"
#include "monres/complex.hpp"
#include "monres/matrix.hpp"
#include "monres/util.hpp"

namespace monres {

/// The multidegree-m strand of a complex: vector spaces spanned by the
/// symbols of multidegree exactly m, connected by the differential entries
/// whose monomial part is 1. basis[s] holds the selected symbol indices and
/// maps[s] the induced matrix V_s -> V_{s-1}.
template <class Field>
struct StrandComplex {
    Field field;
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<Matrix<typename Field::Scalar>> maps;

    explicit StrandComplex(Field f) : field(std::move(f)) {}
};

template <class Field>
StrandComplex<Field> build_strand(const FreeComplex<Field>& C,
                                  const Monomial& m) {
    const std::size_t levels = C.modules.size();
    StrandComplex<Field> strand(C.field);
    strand.basis.resize(levels);
    for (std::size_t s = 0; s < levels; ++s)
        strand.basis[s] = strand_basis(C, m, s);

    strand.maps.reserve(levels);
    strand.maps.emplace_back(0, 0, C.field.zero());  // no map out of V_0
    for (std::size_t s = 1; s < levels; ++s) {
        const auto& rows = strand.basis[s - 1];
        const auto& cols = strand.basis[s];
        Matrix<typename Field::Scalar> D(rows.size(), cols.size(),
                                         C.field.zero());
        if (!rows.empty() && !cols.empty()) {
            std::map<std::uint32_t, std::uint32_t> rowpos;
            for (std::uint32_t i = 0; i < rows.size(); ++i)
                rowpos.emplace(rows[i], i);
            for (std::uint32_t c = 0; c < cols.size(); ++c) {
                for (const auto& e : C.diffs[s][cols[c]]) {
                    if (!e.mono.is_unit()) continue;
                    auto it = rowpos.find(e.row);
                    if (it != rowpos.end()) D.at(it->second, c) = e.coef;
                }
            }
        }
        strand.maps.push_back(std::move(D));
    }
    return strand;
}

/// Consecutive strand maps compose to zero; used by tests.
template <class Field>
bool strand_composes_to_zero(const StrandComplex<Field>& strand) {
    const auto& F = strand.field;
    for (std::size_t s = 2; s < strand.maps.size(); ++s) {
        const auto& A = strand.maps[s - 1];  // V_{s-1} -> V_{s-2}
        const auto& B = strand.maps[s];      // V_s -> V_{s-1}
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j) {
                auto sum = F.zero();
                for (std::size_t t = 0; t < B.rows(); ++t)
                    sum = F.add(sum, F.mul(A.at(i, t), B.at(t, j)));
                if (!F.is_zero(sum)) return false;
            }
    }
    return true;
}

/// Homology dimensions of the strand, i -> dim H_i, zero entries omitted:
/// dim H_i = dim V_i - rank D_i - rank D_{i+1}. Independent of
/// minimization; ranks are computed over the field directly.
template <class Field>
std::map<std::size_t, std::uint64_t> strand_homology(
    const FreeComplex<Field>& C, const Monomial& m) {
    StrandComplex<Field> strand = build_strand(C, m);
    const std::size_t levels = strand.basis.size();

    std::vector<std::size_t> ranks(levels + 1, 0);
    for (std::size_t s = 1; s < levels; ++s)
        ranks[s] = rank(C.field, strand.maps[s]);

    std::map<std::size_t, std::uint64_t> h;
    for (std::size_t s = 0; s < levels; ++s) {
        std::uint64_t dim = strand.basis[s].size();
        if (dim < ranks[s] + ranks[s + 1])
            throw InvariantViolation(
                "strand ranks exceed the strand dimension");
        std::uint64_t val = dim - ranks[s] - ranks[s + 1];
        if (val != 0) h[s] = val;
    }
    return h;
}

/// Homology dimensions of the component spanned by symbols whose multidegree
/// divides m, with the full scalar differential. For a Taylor complex this
/// component is exact away from degree 0 (and in degree 1 once a generator
/// divides m); tests lean on that.
template <class Field>
std::map<std::size_t, std::uint64_t> divides_component_homology(
    const FreeComplex<Field>& C, const Monomial& m) {
    const std::size_t levels = C.modules.size();
    std::vector<std::vector<std::uint32_t>> basis(levels);
    for (std::size_t s = 0; s < levels; ++s)
        for (std::uint32_t i = 0; i < C.modules[s].size(); ++i)
            if (divides(C.modules[s][i].mdeg, m)) basis[s].push_back(i);

    std::vector<std::size_t> ranks(levels + 1, 0);
    for (std::size_t s = 1; s < levels; ++s) {
        if (basis[s].empty() || basis[s - 1].empty()) continue;
        std::map<std::uint32_t, std::uint32_t> rowpos;
        for (std::uint32_t i = 0; i < basis[s - 1].size(); ++i)
            rowpos.emplace(basis[s - 1][i], i);
        Matrix<typename Field::Scalar> D(basis[s - 1].size(), basis[s].size(),
                                         C.field.zero());
        for (std::uint32_t c = 0; c < basis[s].size(); ++c)
            for (const auto& e : C.diffs[s][basis[s][c]])
                D.at(rowpos.at(e.row), c) = e.coef;
        ranks[s] = rank(C.field, D);
    }

    std::map<std::size_t, std::uint64_t> h;
    for (std::size_t s = 0; s < levels; ++s) {
        std::uint64_t dim = basis[s].size();
        if (dim < ranks[s] + ranks[s + 1])
            throw InvariantViolation(
                "component ranks exceed the component dimension");
        std::uint64_t val = dim - ranks[s] - ranks[s + 1];
        if (val != 0) h[s] = val;
    }
    return h;
}

/// Multigraded Betti numbers of S/M at multidegree m, straight from the full
/// Taylor complex by strand homology. All zero when m is not a subset lcm
/// (and not 1).
template <class Field>
std::map<std::size_t, std::uint64_t> strand_betti(
    const MonomialIdeal& M, const Monomial& m, Field field,
    std::size_t cap = kDefaultGeneratorCap) {
    return strand_homology(taylor(M, field, cap), m);
}

/// Full Betti table of S/M by strand homology over every lattice multidegree
/// plus 1. Strands are independent; they are evaluated concurrently and
/// merged in lattice order.
template <class Field>
BettiTable full_betti(const MonomialIdeal& M, Field field,
                      std::size_t cap = kDefaultGeneratorCap) {
    FreeComplex<Field> T = taylor(M, field, cap);
    std::vector<Monomial> mdegs;
    mdegs.push_back(Monomial::unit(M.context()));
    for (auto& m : lcm_lattice(M, cap)) mdegs.push_back(std::move(m));

    using StrandResult = std::map<std::size_t, std::uint64_t>;
    std::vector<StrandResult> per_mdeg = parallel_map_indexed<StrandResult>(
        mdegs.size(),
        [&](std::size_t i) { return strand_homology(T, mdegs[i]); });

    BettiTable t;
    t.field = field.name();
    for (std::size_t i = 0; i < mdegs.size(); ++i)
        for (const auto& [hd, count] : per_mdeg[i])
            t.add(hd, mdegs[i], count);
    return t;
}

}  // namespace monres

#endif  // MONRES_ORACLE_HPP

#ifndef MONRES_BETTI_HPP
#define MONRES_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "monres/monomial.hpp"

namespace monres {

struct MultigradedKeyLess {
    bool operator()(const std::pair<std::size_t, Monomial>& a,
                    const std::pair<std::size_t, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return lex_less(a.second, b.second);
    }
};

/// Total, graded, and multigraded Betti numbers of S/M together with the
/// projective dimension, tagged with the coefficient field. Only nonzero
/// entries are stored. graded keys are (homological degree i, total degree j
/// of the multidegree).
struct BettiTable {
    std::string field;
    std::map<std::size_t, std::uint64_t> total;
    std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> graded;
    std::map<std::pair<std::size_t, Monomial>, std::uint64_t,
             MultigradedKeyLess>
        multigraded;
    std::size_t pd = 0;

    void add(std::size_t i, const Monomial& mdeg, std::uint64_t count = 1) {
        if (count == 0) return;
        total[i] += count;
        graded[{i, mdeg.total_degree()}] += count;
        multigraded[{i, mdeg}] += count;
        if (i > pd) pd = i;
    }

    std::uint64_t total_at(std::size_t i) const {
        auto it = total.find(i);
        return it == total.end() ? 0 : it->second;
    }

    std::uint64_t multigraded_at(std::size_t i, const Monomial& m) const {
        auto it = multigraded.find({i, m});
        return it == multigraded.end() ? 0 : it->second;
    }

    bool operator==(const BettiTable& o) const {
        return field == o.field && pd == o.pd && total == o.total &&
               graded == o.graded && multigraded == o.multigraded;
    }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }
};

}  // namespace monres

#endif  // MONRES_BETTI_HPP

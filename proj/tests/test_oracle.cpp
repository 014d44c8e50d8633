#include <catch2/catch_amalgamated.hpp>

#include "monres/minimize.hpp"
#include "monres/oracle.hpp"
#include "monres/util.hpp"

using namespace monres;

namespace {

Monomial mono(const VarCtx& ctx, std::vector<std::uint32_t> e) {
    return Monomial(ctx, std::move(e));
}

const VarCtx kXy = VarContext::make({"x", "y"});
const VarCtx kXyz = VarContext::make({"x", "y", "z"});

MonomialIdeal triangle() {
    return minimalize(kXyz, {mono(kXyz, {1, 1, 0}), mono(kXyz, {0, 1, 1}),
                             mono(kXyz, {1, 0, 1})});
}

using BettiVec = std::map<std::size_t, std::uint64_t>;

}  // namespace

TEST_CASE("strand betti numbers, hand-computed", "[oracle]") {
    // Triangle at m = xyz: the strand has the three pairs in degree 2 and
    // the triple in degree 3, with a rank-1 map between them: b_2 = 2.
    auto b = strand_betti(triangle(), mono(kXyz, {1, 1, 1}),
                          RationalField{});
    CHECK(b == BettiVec{{2, 2}});

    // (x, y) at m = xy: the single pair has no unit entries out of it.
    MonomialIdeal axes =
        minimalize(kXy, {mono(kXy, {1, 0}), mono(kXy, {0, 1})});
    CHECK(strand_betti(axes, mono(kXy, {1, 1}), RationalField{}) ==
          BettiVec{{2, 1}});

    // m = 1 only sees the empty symbol.
    CHECK(strand_betti(axes, Monomial::unit(kXy), RationalField{}) ==
          BettiVec{{0, 1}});

    // Multidegrees outside the lattice carry nothing.
    CHECK(strand_betti(axes, mono(kXy, {3, 0}), RationalField{}).empty());
}

TEST_CASE("full betti tables from strand homology", "[oracle]") {
    MonomialIdeal axes =
        minimalize(kXy, {mono(kXy, {1, 0}), mono(kXy, {0, 1})});
    BettiTable t = full_betti(axes, RationalField{});
    CHECK(t.total == std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 2},
                                                          {2, 1}});
    CHECK(t.pd == 2);

    MonomialIdeal M = minimalize(kXy, {mono(kXy, {2, 0}), mono(kXy, {1, 1}),
                                       mono(kXy, {0, 2})});
    BettiTable t2 = full_betti(M, RationalField{});
    CHECK(t2.total == std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 3},
                                                           {2, 2}});
    CHECK(t2.pd == 2);

    VarCtx x1 = VarContext::numbered(1);
    BettiTable t3 = full_betti(minimalize(x1, {mono(x1, {4})}),
                               RationalField{});
    CHECK(t3.total == std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 1}});
    CHECK(t3.pd == 1);
}

TEST_CASE("oracle equivalence with the minimization pipeline", "[oracle]") {
    Rng rng(9100);
    for (int t = 0; t < 25; ++t) {
        bool sf = t % 2 == 1;
        MonomialIdeal M = random_ideal(VarContext::numbered(5), 7, 1,
                                       sf ? 4 : 5, sf, rng.next());
        auto run = [&](auto field) {
            BettiTable via_minimize = betti_from_complex(
                minimize(taylor(M, field)).first);
            BettiTable via_oracle = full_betti(M, field);
            CHECK(via_minimize == via_oracle);
        };
        run(RationalField{});
        run(PrimeField{32003});
    }
}

TEST_CASE("strand ranks never exceed the strand dimension", "[oracle]") {
    Rng rng(9200);
    for (int t = 0; t < 20; ++t) {
        MonomialIdeal M = random_ideal(VarContext::numbered(4), 6, 1, 4,
                                       false, rng.next());
        auto C = taylor(M, RationalField{});
        for (const auto& m : lcm_lattice(M)) {
            // strand_homology throws if rank(in) + rank(out) > dim.
            CHECK_NOTHROW(strand_homology(C, m));
        }
    }
}

TEST_CASE("strand maps compose to zero", "[oracle]") {
    Rng rng(9250);
    for (int t = 0; t < 15; ++t) {
        MonomialIdeal M = random_ideal(VarContext::numbered(4), 6, 1, 4,
                                       false, rng.next());
        auto C = taylor(M, PrimeField{2});
        for (const auto& m : lcm_lattice(M)) {
            auto strand = build_strand(C, m);
            CHECK(strand_composes_to_zero(strand));
        }
    }
}

TEST_CASE("squarefree multidegree sanity bound", "[oracle]") {
    // For squarefree ideals whose generators all have degree >= d_min,
    // b_{i,m} vanishes once deg(m) < i + d_min - 1.
    Rng rng(9300);
    for (int t = 0; t < 15; ++t) {
        MonomialIdeal M = random_ideal(VarContext::numbered(5), 6, 2, 4,
                                       true, rng.next());
        std::uint64_t dmin = M.gens()[0].total_degree();
        for (const auto& g : M.gens())
            dmin = std::min(dmin, g.total_degree());
        BettiTable t1 = full_betti(M, RationalField{});
        for (const auto& [key, count] : t1.multigraded) {
            if (key.first == 0) continue;
            CHECK(key.second.total_degree() >= key.first + dmin - 1);
            CHECK(count > 0);
        }
    }
}

TEST_CASE("degenerate ideals flow through both betti paths", "[oracle]") {
    // Zero ideal (an empty restriction): S itself, so b_0 = 1 and pd = 0.
    MonomialIdeal Z = MonomialIdeal::zero(kXy);
    BettiTable via_pipe =
        betti_from_complex(minimize(taylor(Z, RationalField{})).first);
    BettiTable via_oracle = full_betti(Z, RationalField{});
    CHECK(via_pipe == via_oracle);
    CHECK(via_pipe.total == std::map<std::size_t, std::uint64_t>{{0, 1}});
    CHECK(via_pipe.pd == 0);

    // Unit ideal: S/S = 0, every Betti number vanishes.
    MonomialIdeal U = minimalize(kXy, {Monomial::unit(kXy)});
    BettiTable up = betti_from_complex(
        minimize(taylor(U, RationalField{})).first);
    CHECK(up.total.empty());
    CHECK(up.pd == 0);
    CHECK(up == full_betti(U, RationalField{}));
}

TEST_CASE("total and graded tables are marginals of the multigraded one",
          "[oracle]") {
    Rng rng(9400);
    for (int t = 0; t < 20; ++t) {
        MonomialIdeal M = random_ideal(VarContext::numbered(4), 6, 1, 4,
                                       false, rng.next());
        BettiTable b = full_betti(M, RationalField{});
        std::map<std::size_t, std::uint64_t> total;
        std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> graded;
        for (const auto& [key, count] : b.multigraded) {
            total[key.first] += count;
            graded[{key.first, key.second.total_degree()}] += count;
        }
        CHECK(total == b.total);
        CHECK(graded == b.graded);
        CHECK(b.total_at(0) == 1);
    }
}

TEST_CASE("characteristic-independent examples agree across fields",
          "[oracle]") {
    std::vector<MonomialIdeal> ideals = {
        triangle(),
        minimalize(kXy, {mono(kXy, {1, 0}), mono(kXy, {0, 1})}),
        minimalize(kXy, {mono(kXy, {2, 0}), mono(kXy, {1, 1}),
                         mono(kXy, {0, 2})}),
    };
    for (const auto& M : ideals) {
        BettiTable q = full_betti(M, RationalField{});
        for (std::uint32_t p : {2u, 3u, 32003u}) {
            BettiTable zp = full_betti(M, PrimeField{p});
            CHECK(q.total == zp.total);
            CHECK(q.graded == zp.graded);
            CHECK(q.pd == zp.pd);
        }
    }
}

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

}  // namespace

TEST_CASE("cancellation of a redundant generator", "[minimize]") {
    // Generators given as (x, xy): f_2([x,xy]) = 1 [xy] - y [x], so the pair
    // ([x,xy], [xy]) cancels and the minimal complex is 0 -> S -> S.
    auto C = taylor_of_generators(
        kXy, {mono(kXy, {1, 0}), mono(kXy, {1, 1})}, RationalField{});
    auto [minimal, trace] = minimize(C);

    REQUIRE(trace.size() == 1);
    CHECK(trace[0].s == 2);
    CHECK(trace[0].source_subset == std::vector<std::uint32_t>{0, 1});
    CHECK(trace[0].target_subset == std::vector<std::uint32_t>{1});

    CHECK(minimal.ranks() == std::vector<std::size_t>{1, 1});
    REQUIRE(minimal.diffs[1][0].size() == 1);
    CHECK(minimal.diffs[1][0][0].mono == mono(kXy, {1, 0}));
    CHECK(is_minimal(minimal));

    BettiTable t = betti_from_complex(minimal);
    CHECK(t.total_at(0) == 1);
    CHECK(t.total_at(1) == 1);
    CHECK(t.pd == 1);

    // The input complex is untouched.
    CHECK(C.ranks() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("already-minimal complex passes through", "[minimize]") {
    MonomialIdeal M =
        minimalize(kXy, {mono(kXy, {1, 0}), mono(kXy, {0, 1})});
    auto C = taylor(M, RationalField{});
    auto [minimal, trace] = minimize(C);
    CHECK(trace.empty());
    CHECK(minimal.ranks() == std::vector<std::size_t>{1, 2, 1});

    BettiTable t = betti_from_complex(minimal);
    CHECK(t.pd == 2);
    CHECK(t.multigraded_at(2, mono(kXy, {1, 1})) == 1);
    CHECK(t == full_betti(M, RationalField{}));

    VarCtx x1 = VarContext::numbered(1);
    auto P = taylor(minimalize(x1, {mono(x1, {2})}), RationalField{});
    auto [pm, pt] = minimize(P);
    CHECK(pt.empty());
    CHECK(pm.ranks() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("betti numbers of small ideals", "[minimize]") {
    MonomialIdeal M = minimalize(kXy, {mono(kXy, {2, 0}), mono(kXy, {1, 1}),
                                       mono(kXy, {0, 2})});
    auto [minimal, trace] = minimize(taylor(M, RationalField{}));
    BettiTable t = betti_from_complex(minimal);
    CHECK(t.total_at(0) == 1);
    CHECK(t.total_at(1) == 3);
    CHECK(t.total_at(2) == 2);
    CHECK(t.pd == 2);
    CHECK(t == full_betti(M, RationalField{}));
}

TEST_CASE("betti_from_complex rejects non-minimal complexes", "[minimize]") {
    auto C = taylor_of_generators(
        kXy, {mono(kXy, {1, 0}), mono(kXy, {1, 1})}, RationalField{});
    CHECK_FALSE(is_minimal(C));
    CHECK_THROWS_AS(betti_from_complex(C), Error);
}

TEST_CASE("descent chains", "[minimize]") {
    MonomialIdeal T = minimalize(kXyz, {mono(kXyz, {1, 1, 0}),
                                        mono(kXyz, {0, 1, 1}),
                                        mono(kXyz, {1, 0, 1})});
    auto [minimal, trace] = minimize(taylor(T, RationalField{}));
    REQUIRE(minimal.top_degree() == 2);
    REQUIRE(minimal.modules[2].size() == 2);
    for (std::uint32_t i = 0; i < 2; ++i) {
        auto chain = descent_chain(minimal, 2, i);
        REQUIRE(chain.size() == 2);
        CHECK(chain[0].mdeg.total_degree() == 3);
        CHECK(chain[1].mdeg.total_degree() == 2);
    }

    MonomialIdeal Axes =
        minimalize(kXy, {mono(kXy, {1, 0}), mono(kXy, {0, 1})});
    auto [am, at] = minimize(taylor(Axes, RationalField{}));
    auto chain = descent_chain(am, 2, 0);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].mdeg == mono(kXy, {1, 1}));
    CHECK(chain[1].mdeg.total_degree() == 1);

    VarCtx x1 = VarContext::numbered(1);
    auto [pm, pt] = minimize(taylor(minimalize(x1, {mono(x1, {2})}),
                                    RationalField{}));
    auto single = descent_chain(pm, 1, 0);
    CHECK(single.size() == 1);

    CHECK_THROWS_AS(descent_chain(am, 1, 0), Error);  // not the top degree
}

TEST_CASE("minimize leaves no invertible entries and keeps homology",
          "[minimize]") {
    Rng rng(6001);
    for (int t = 0; t < 30; ++t) {
        bool sf = t % 2 == 0;
        MonomialIdeal M = random_ideal(VarContext::numbered(4), 6, 1,
                                       sf ? 4 : 5, sf, rng.next());
        auto run = [&](auto field) {
            auto C = taylor(M, field);
            auto [minimal, trace] = minimize(C);
            CHECK(is_minimal(minimal));
            check_complex(minimal);

            // Each cancelled pair had equal multidegrees (a unit entry).
            for (const auto& c : trace) {
                Monomial src = M.gens()[c.source_subset[0]];
                for (std::size_t i = 1; i < c.source_subset.size(); ++i)
                    src = lcm(src, M.gens()[c.source_subset[i]]);
                Monomial tgt = M.gens()[c.target_subset[0]];
                for (std::size_t i = 1; i < c.target_subset.size(); ++i)
                    tgt = lcm(tgt, M.gens()[c.target_subset[i]]);
                CHECK(src == tgt);
            }

            // Removed symbols come in pairs.
            std::size_t before = 0, after = 0;
            for (const auto& m : C.modules) before += m.size();
            for (const auto& m : minimal.modules) after += m.size();
            CHECK(before - after == 2 * trace.size());

            // Strand homology is preserved multidegree by multidegree,
            // and the minimal complex realizes it as its symbol count.
            for (const auto& m : lcm_lattice(M)) {
                auto in_h = strand_homology(C, m);
                auto out_h = strand_homology(minimal, m);
                CHECK(in_h == out_h);
            }

            BettiTable t1 = betti_from_complex(minimal);
            CHECK(t1.total_at(0) == 1);
            CHECK(t1.total_at(1) == M.ngens());
            CHECK(t1 == full_betti(M, field));
        };
        run(RationalField{});
        run(PrimeField{32003});
    }
}

TEST_CASE("minimize is deterministic", "[minimize]") {
    MonomialIdeal M = random_ideal(VarContext::numbered(4), 6, 1, 4, false,
                                   321);
    auto C = taylor(M, RationalField{});
    auto [m1, t1] = minimize(C);
    auto [m2, t2] = minimize(C);
    REQUIRE(t1.size() == t2.size());
    for (std::size_t i = 0; i < t1.size(); ++i) {
        CHECK(t1[i].s == t2[i].s);
        CHECK(t1[i].source_subset == t2[i].source_subset);
        CHECK(t1[i].target_subset == t2[i].target_subset);
    }
    CHECK(m1.ranks() == m2.ranks());
}

#include <catch2/catch_amalgamated.hpp>

#include "monres/harness.hpp"
#include "monres/output.hpp"

using namespace monres;

namespace {

Monomial mono(const VarCtx& ctx, std::vector<std::uint32_t> e) {
    return Monomial(ctx, std::move(e));
}

const VarCtx kXyz = VarContext::make({"x", "y", "z"});

MonomialIdeal running_example() {
    return minimalize(kXyz, {mono(kXyz, {2, 2, 1}), mono(kXyz, {2, 0, 2}),
                             mono(kXyz, {0, 1, 2})});
}

}  // namespace

TEST_CASE("squarefree bound suite passes", "[harness]") {
    auto report = verify_squarefree_bound(4, 6, 1, 40, 17,
                                          RationalField{});
    CHECK(report.ok());
    CHECK(report.attempted == 40);
    CHECK(report.passed == 40);

    auto report0 = verify_squarefree_bound(4, 6, 0, 25, 18, PrimeField{2});
    CHECK(report0.ok());

    CHECK_THROWS_AS(verify_squarefree_bound(3, 6, 3, 10, 1, RationalField{}),
                    Error);
}

TEST_CASE("general bound suite passes", "[harness]") {
    auto report = verify_syzygy_bound(4, 6, 4, 40, 23, RationalField{});
    CHECK(report.ok());
    CHECK(report.attempted == 40);
}

TEST_CASE("restriction equality on directed examples", "[harness]") {
    MonomialIdeal T = minimalize(kXyz, {mono(kXyz, {1, 1, 0}),
                                        mono(kXyz, {0, 1, 1}),
                                        mono(kXyz, {1, 0, 1})});
    auto report = verify_restriction(T, RationalField{});
    CHECK(report.ok());
    CHECK(report.attempted == 4);  // one check per lattice multidegree

    auto report2 = verify_restriction(running_example(), PrimeField{32003});
    CHECK(report2.ok());
}

TEST_CASE("twin equality on directed examples", "[harness]") {
    auto report = verify_twin(running_example(), RationalField{});
    CHECK(report.ok());
    CHECK(report.attempted == 1);

    // Squarefree: twin is the identity, so the equality is trivial.
    MonomialIdeal T = minimalize(kXyz, {mono(kXyz, {1, 1, 0}),
                                        mono(kXyz, {0, 1, 1})});
    CHECK(verify_twin(T, RationalField{}).ok());

    VarCtx x1 = VarContext::numbered(1);
    CHECK(verify_twin(minimalize(x1, {mono(x1, {5})}), PrimeField{2}).ok());
}

TEST_CASE("compression equality on directed examples", "[harness]") {
    auto report = verify_compression(running_example(), RationalField{});
    CHECK(report.ok());

    MonomialIdeal T = minimalize(kXyz, {mono(kXyz, {1, 1, 0}),
                                        mono(kXyz, {0, 1, 1})});
    CHECK(verify_compression(T, RationalField{}).ok());

    VarCtx x1 = VarContext::numbered(1);
    CHECK(verify_compression(minimalize(x1, {mono(x1, {5})}),
                             PrimeField{32003})
              .ok());
}

TEST_CASE("twin collapse to the unit ideal is handled", "[harness]") {
    // The middle generator attains the componentwise maximum nowhere, so
    // its twin is 1 and the twin ideal is the whole ring.
    VarCtx ctx = VarContext::numbered(2);
    MonomialIdeal M = minimalize(ctx, {mono(ctx, {2, 0}), mono(ctx, {1, 1}),
                                       mono(ctx, {0, 2})});
    CHECK(twin(M).is_unit());
    // Both multigraded vectors vanish at the top multidegree.
    auto r1 = verify_twin(M, RationalField{});
    CHECK(r1.ok());
    auto r2 = verify_compression(M, RationalField{});
    CHECK(r2.ok());
    CHECK(r2.params.at("twin") == "unit ideal");
}

TEST_CASE("reports are reproducible from the seed", "[harness]") {
    auto a = verify_squarefree_bound(4, 5, 1, 20, 99, RationalField{});
    auto b = verify_squarefree_bound(4, 5, 1, 20, 99, RationalField{});
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(a.passed + a.failures.size() == a.attempted);
}

TEST_CASE("failure shrinking finds a smaller witness", "[harness]") {
    VarCtx ctx = VarContext::numbered(4);
    MonomialIdeal I = random_ideal(ctx, 6, 1, 3, false, 4242);
    REQUIRE(I.ngens() >= 4);
    // Synthetic property: "fewer than 3 generators". The shrinker should
    // walk down to a 3-generator witness.
    auto fails = [&](const MonomialIdeal& J)
        -> std::optional<std::pair<std::string, std::string>> {
        if (J.ngens() >= 3)
            return std::make_pair("q = " + std::to_string(J.ngens()),
                                  "q < 3");
        return std::nullopt;
    };
    auto [witness, info] = monres::detail::shrink_failure(
        I, *fails(I), fails);
    CHECK(witness.ngens() == 3);
    CHECK(info.first == "q = 3");
}

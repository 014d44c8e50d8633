#ifndef MONRES_HARNESS_HPP
#define MONRES_HARNESS_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monres/complex.hpp"
#include "monres/ideal.hpp"
#include "monres/ideal_io.hpp"
#include "monres/minimize.hpp"
#include "monres/oracle.hpp"
#include "monres/util.hpp"

namespace monres {

struct TrialFailure {
    std::string ideal;  // ideal file text; enough to replay by hand
    std::string field;
    std::string observed;
    std::string expected;
    std::uint64_t seed = 0;
};

/// Outcome of one verifier run. passed + failures.size() == attempted.
struct VerificationReport {
    std::string check;
    std::map<std::string, std::string> params;
    std::uint64_t attempted = 0;
    std::uint64_t passed = 0;
    std::vector<TrialFailure> failures;
    double wall_seconds = 0.0;

    bool ok() const {
        return failures.empty() && passed == attempted;
    }
};

struct SuiteOptions {
    std::size_t crosscheck_stride = 10;  // pipeline-vs-strand check cadence
    bool check_complexes = true;         // d o d = 0 + homogeneity per trial
    std::size_t cap = kDefaultGeneratorCap;
};

namespace detail {

class WallClock {
public:
    WallClock() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Greedy witness shrinking: while removing one generator keeps the check
/// failing, keep the smaller ideal. Returns the final witness and its
/// failure description.
inline std::pair<MonomialIdeal, std::pair<std::string, std::string>>
shrink_failure(
    MonomialIdeal witness, std::pair<std::string, std::string> info,
    const std::function<
        std::optional<std::pair<std::string, std::string>>(
            const MonomialIdeal&)>& fails) {
    bool improved = true;
    while (improved && witness.ngens() > 1) {
        improved = false;
        for (std::size_t drop = 0; drop < witness.ngens(); ++drop) {
            std::vector<Monomial> rest;
            for (std::size_t i = 0; i < witness.ngens(); ++i)
                if (i != drop) rest.push_back(witness.gens()[i]);
            MonomialIdeal candidate =
                minimalize(witness.context(), std::move(rest));
            if (auto f = fails(candidate)) {
                witness = std::move(candidate);
                info = std::move(*f);
                improved = true;
                break;
            }
        }
    }
    return {std::move(witness), std::move(info)};
}

struct TrialOutcome {
    bool ok = true;
    TrialFailure failure;
};

}  // namespace detail

/// Checks pd(S/M) <= n - k for a random squarefree ideal whose generators
/// all have degree > k, including the strictly-increasing descent chains
/// behind that bound, with periodic cross-checks against the strand oracle.
template <class Field>
VerificationReport verify_squarefree_bound(std::size_t n, std::size_t q_max,
                                           std::size_t k, std::size_t trials,
                                           std::uint64_t seed, Field field,
                                           const SuiteOptions& opts = {}) {
    if (n == 0 || k >= n)
        throw Error("infeasible parameters: need 0 <= k < n");
    if (q_max == 0) throw Error("q_max must be positive");

    detail::WallClock clock;
    VerificationReport report;
    report.check = "t31";
    report.params = {{"n", std::to_string(n)},
                     {"k", std::to_string(k)},
                     {"q_max", std::to_string(q_max)},
                     {"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)},
                     {"field", field.name()}};

    VarCtx ctx = VarContext::numbered(n);
    auto run_trial = [&](std::size_t t) -> detail::TrialOutcome {
        std::uint64_t trial_seed = mix_seed(seed, t);
        Rng r(trial_seed);
        std::size_t q = r.uniform(1, q_max);
        std::uint64_t ideal_seed = r.next();
        MonomialIdeal I =
            random_ideal(ctx, q, static_cast<std::uint32_t>(k + 1),
                         static_cast<std::uint32_t>(n), true, ideal_seed);

        auto fails = [&](const MonomialIdeal& J)
            -> std::optional<std::pair<std::string, std::string>> {
            FreeComplex<Field> T = taylor(J, field, opts.cap);
            if (opts.check_complexes) check_complex(T);
            auto [minimal, trace] = minimize(T);
            BettiTable table = betti_from_complex(minimal);
            if (table.pd > n - k)
                return std::make_pair("pd = " + std::to_string(table.pd),
                                      "pd <= " + std::to_string(n - k));
            // Descent chains from every top-degree symbol must have
            // strictly increasing degrees in [k+1, n].
            std::size_t p = minimal.top_degree();
            if (p >= 1) {
                for (std::uint32_t i = 0; i < minimal.modules[p].size(); ++i) {
                    auto chain = descent_chain(minimal, p, i);
                    for (std::size_t c = 0; c + 1 < chain.size(); ++c)
                        if (chain[c].mdeg.total_degree() <=
                            chain[c + 1].mdeg.total_degree())
                            return std::make_pair(
                                "descent chain degrees not strictly "
                                "decreasing from the top symbol",
                                "deg chain strictly increasing with "
                                "homological degree");
                    if (chain.back().mdeg.total_degree() < k + 1 ||
                        chain.front().mdeg.total_degree() > n)
                        return std::make_pair(
                            "descent chain degrees leave [k+1, n]",
                            "k+1 <= deg <= n along the chain");
                }
            }
            if (opts.crosscheck_stride != 0 &&
                t % opts.crosscheck_stride == 0) {
                BettiTable oracle = full_betti(J, field, opts.cap);
                if (!(oracle == table))
                    return std::make_pair(
                        "minimization pipeline disagrees with the strand "
                        "oracle",
                        "identical Betti tables");
            }
            return std::nullopt;
        };

        detail::TrialOutcome out;
        if (auto f = fails(I)) {
            auto [witness, info] = detail::shrink_failure(I, *f, fails);
            out.ok = false;
            out.failure = TrialFailure{write_ideal_text(witness),
                                       field.name(), info.first, info.second,
                                       trial_seed};
        }
        return out;
    };

    auto outcomes =
        parallel_map_indexed<detail::TrialOutcome>(trials, run_trial);
    report.attempted = trials;
    for (auto& o : outcomes) {
        if (o.ok)
            ++report.passed;
        else
            report.failures.push_back(std::move(o.failure));
    }
    report.wall_seconds = clock.seconds();
    return report;
}

/// Checks pd(S/M) <= n for random arbitrary monomial ideals.
template <class Field>
VerificationReport verify_syzygy_bound(std::size_t n, std::size_t q_max,
                                       std::uint32_t max_deg,
                                       std::size_t trials, std::uint64_t seed,
                                       Field field,
                                       const SuiteOptions& opts = {}) {
    if (n == 0) throw Error("need at least one variable");
    if (q_max == 0 || max_deg == 0)
        throw Error("q_max and max_deg must be positive");

    detail::WallClock clock;
    VerificationReport report;
    report.check = "t46";
    report.params = {{"n", std::to_string(n)},
                     {"q_max", std::to_string(q_max)},
                     {"max_deg", std::to_string(max_deg)},
                     {"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)},
                     {"field", field.name()}};

    VarCtx ctx = VarContext::numbered(n);
    auto run_trial = [&](std::size_t t) -> detail::TrialOutcome {
        std::uint64_t trial_seed = mix_seed(seed, t);
        Rng r(trial_seed);
        std::size_t q = r.uniform(1, q_max);
        std::uint64_t ideal_seed = r.next();
        MonomialIdeal I = random_ideal(ctx, q, 1, max_deg, false, ideal_seed);

        auto fails = [&](const MonomialIdeal& J)
            -> std::optional<std::pair<std::string, std::string>> {
            FreeComplex<Field> T = taylor(J, field, opts.cap);
            if (opts.check_complexes) check_complex(T);
            auto [minimal, trace] = minimize(T);
            BettiTable table = betti_from_complex(minimal);
            if (table.pd > n)
                return std::make_pair("pd = " + std::to_string(table.pd),
                                      "pd <= " + std::to_string(n));
            if (opts.crosscheck_stride != 0 &&
                t % opts.crosscheck_stride == 0) {
                BettiTable oracle = full_betti(J, field, opts.cap);
                if (!(oracle == table))
                    return std::make_pair(
                        "minimization pipeline disagrees with the strand "
                        "oracle",
                        "identical Betti tables");
            }
            return std::nullopt;
        };

        detail::TrialOutcome out;
        if (auto f = fails(I)) {
            auto [witness, info] = detail::shrink_failure(I, *f, fails);
            out.ok = false;
            out.failure = TrialFailure{write_ideal_text(witness),
                                       field.name(), info.first, info.second,
                                       trial_seed};
        }
        return out;
    };

    auto outcomes =
        parallel_map_indexed<detail::TrialOutcome>(trials, run_trial);
    report.attempted = trials;
    for (auto& o : outcomes) {
        if (o.ok)
            ++report.passed;
        else
            report.failures.push_back(std::move(o.failure));
    }
    report.wall_seconds = clock.seconds();
    return report;
}

namespace detail {

inline std::string betti_vector_text(
    const std::map<std::size_t, std::uint64_t>& b) {
    if (b.empty()) return "0";
    std::string out;
    for (const auto& [i, v] : b) {
        if (!out.empty()) out += ", ";
        out += "b_" + std::to_string(i) + " = " + std::to_string(v);
    }
    return out;
}

}  // namespace detail

/// Checks b_{i,m}(S/M) = b_{i,m}(S/M_m) at every lattice multidegree m,
/// entirely through the strand oracle. One attempt per multidegree.
template <class Field>
VerificationReport verify_restriction(const MonomialIdeal& M, Field field,
                                      const SuiteOptions& opts = {}) {
    detail::WallClock clock;
    VerificationReport report;
    report.check = "c42";
    report.params = {{"field", field.name()},
                     {"ideal", format_generators(M)}};

    FreeComplex<Field> T = taylor(M, field, opts.cap);
    if (opts.check_complexes) check_complex(T);
    std::vector<Monomial> lattice = lcm_lattice(M, opts.cap);

    using Cmp = std::optional<TrialFailure>;
    auto outcomes = parallel_map_indexed<Cmp>(
        lattice.size(), [&](std::size_t i) -> Cmp {
            const Monomial& m = lattice[i];
            auto lhs = strand_homology(T, m);
            MonomialIdeal Mm = restrict_to(M, m);
            FreeComplex<Field> Tm = taylor(Mm, field, opts.cap);
            if (opts.check_complexes) check_complex(Tm);
            auto rhs = strand_homology(Tm, m);
            if (lhs == rhs) return std::nullopt;
            return TrialFailure{
                write_ideal_text(M), field.name(),
                "at m = " + format_monomial(m) + ": " +
                    detail::betti_vector_text(lhs) + " for S/M vs " +
                    detail::betti_vector_text(rhs) + " for S/M_m",
                "equal multigraded Betti numbers", 0};
        });

    report.attempted = lattice.size();
    for (auto& o : outcomes) {
        if (!o)
            ++report.passed;
        else
            report.failures.push_back(std::move(*o));
    }
    report.wall_seconds = clock.seconds();
    return report;
}

/// Checks b_{i,m}(S/M) = b_{i,m}(S/M') at the single multidegree
/// m = lcm of all generators, where M' is the twin ideal.
template <class Field>
VerificationReport verify_twin(const MonomialIdeal& M, Field field,
                               const SuiteOptions& opts = {}) {
    detail::WallClock clock;
    VerificationReport report;
    report.check = "t45";
    report.params = {{"field", field.name()},
                     {"ideal", format_generators(M)}};

    const Monomial m = M.top_lcm();
    MonomialIdeal Mt = twin(M);
    FreeComplex<Field> TM = taylor(M, field, opts.cap);
    FreeComplex<Field> TMt = taylor(Mt, field, opts.cap);
    if (opts.check_complexes) {
        check_complex(TM);
        check_complex(TMt);
    }
    auto lhs = strand_homology(TM, m);
    auto rhs = strand_homology(TMt, m);

    report.attempted = 1;
    if (lhs == rhs) {
        report.passed = 1;
    } else {
        report.failures.push_back(TrialFailure{
            write_ideal_text(M), field.name(),
            "at m = " + format_monomial(m) + ": " +
                detail::betti_vector_text(lhs) + " for S/M vs " +
                detail::betti_vector_text(rhs) + " for the twin ideal",
            "equal multigraded Betti numbers at the top lcm", 0});
    }
    report.wall_seconds = clock.seconds();
    return report;
}

/// Twin-then-compress: the compressed ideal must be squarefree with the same
/// generator count, have the same projective dimension as the twin ideal,
/// and its multigraded Betti table must match under the change of variables.
template <class Field>
VerificationReport verify_compression(const MonomialIdeal& M, Field field,
                                      const SuiteOptions& opts = {}) {
    detail::WallClock clock;
    VerificationReport report;
    report.check = "compress";
    report.params = {{"field", field.name()},
                     {"ideal", format_generators(M)}};
    report.attempted = 1;

    auto fail = [&](std::string observed, std::string expected) {
        report.failures.push_back(TrialFailure{write_ideal_text(M),
                                               field.name(),
                                               std::move(observed),
                                               std::move(expected), 0});
    };

    MonomialIdeal Mt = twin(M);
    if (Mt.is_unit()) {
        // A generator attained the componentwise maximum in no variable, so
        // the twin ideal is the whole ring: S/M' = 0, there is nothing to
        // compress and nothing to bound.
        report.params["twin"] = "unit ideal";
        report.passed = 1;
        report.wall_seconds = clock.seconds();
        return report;
    }
    auto [compressed, map] = compress(Mt);
    if (opts.check_complexes) {
        check_complex(taylor(Mt, field, opts.cap));
        check_complex(taylor(compressed, field, opts.cap));
    }

    bool sf = true;
    for (const auto& g : compressed.gens())
        if (!g.is_squarefree()) sf = false;
    if (!sf || compressed.ngens() != Mt.ngens()) {
        fail("compressed ideal is not a squarefree ideal with " +
                 std::to_string(Mt.ngens()) + " generators",
             "squarefree, generator count preserved");
        report.wall_seconds = clock.seconds();
        return report;
    }

    BettiTable twin_table = full_betti(Mt, field, opts.cap);
    BettiTable comp_table = full_betti(compressed, field, opts.cap);

    if (twin_table.pd != comp_table.pd) {
        fail("pd " + std::to_string(twin_table.pd) + " for the twin ideal vs " +
                 std::to_string(comp_table.pd) + " compressed",
             "equal projective dimension");
    } else if (twin_table.total != comp_table.total) {
        fail("total Betti numbers differ between twin and compressed ideals",
             "equal total Betti numbers");
    } else {
        // Multigraded tables must correspond under y_j -> x_j^{alpha_j}.
        bool matched = true;
        std::string detail_msg;
        BettiTable mapped;
        for (const auto& [key, count] : comp_table.multigraded)
            mapped.add(key.first, map.substitute(key.second), count);
        if (!(mapped.multigraded == twin_table.multigraded)) {
            matched = false;
            detail_msg =
                "multigraded Betti tables do not correspond under the "
                "change of variables";
        }
        if (!matched)
            fail(detail_msg, "tables correspond under substitution");
    }

    if (report.failures.empty()) report.passed = 1;
    report.wall_seconds = clock.seconds();
    return report;
}

}  // namespace monres

#endif  // MONRES_HARNESS_HPP

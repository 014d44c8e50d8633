#ifndef MONRES_CLI_HPP
#define MONRES_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monres/field.hpp"
#include "monres/harness.hpp"
#include "monres/ideal_io.hpp"
#include "monres/minimize.hpp"
#include "monres/oracle.hpp"
#include "monres/output.hpp"

namespace monres::cli {

namespace detail {

struct CommonOpts {
    std::string ideal_path;
    std::string gens;
    std::string ring;
    std::string field = "q";
    std::size_t cap = kDefaultGeneratorCap;
    bool json = false;
};

inline void add_input_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--ideal", opts.ideal_path, "ideal file to read");
    cmd->add_option("--gens", opts.gens,
                    "inline comma-separated generator list");
    cmd->add_option("--ring", opts.ring,
                    "ring for --gens: a variable count or space-separated "
                    "names");
}

inline void add_field_option(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--field", opts.field, "coefficient field: q or zp:<prime>")
        ->capture_default_str();
}

inline VarCtx parse_ring_spec(const std::string& spec) {
    auto toks = monres::detail::split_tokens(spec);
    if (toks.empty()) throw Error("empty ring specification");
    if (toks.size() == 1 && monres::detail::all_digits(toks[0].first)) {
        unsigned long n = std::stoul(toks[0].first);
        if (n == 0) throw Error("ring needs at least one variable");
        return VarContext::numbered(n);
    }
    std::vector<std::string> names;
    for (auto& [t, pos] : toks) names.push_back(t);
    return VarContext::make(std::move(names));
}

inline MonomialIdeal load_ideal(const CommonOpts& opts) {
    const bool from_file = !opts.ideal_path.empty();
    const bool inline_gens = !opts.gens.empty();
    if (from_file == inline_gens)
        throw Error("provide exactly one input: --ideal or --gens");
    if (from_file) return read_ideal_file(opts.ideal_path);
    if (opts.ring.empty())
        throw Error("--gens requires --ring");
    VarCtx ctx = parse_ring_spec(opts.ring);
    std::vector<Monomial> gens;
    std::size_t pos = 0;
    const std::string& text = opts.gens;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t b = piece.find_first_not_of(" \t");
        std::size_t e = piece.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw Error("empty generator in --gens");
        gens.push_back(parse_monomial(piece.substr(b, e - b + 1), ctx));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return minimalize(ctx, std::move(gens));
}

inline void emit(std::ostream& out, const Json& j) {
    out << j.dump(2) << "\n";
}

inline void emit_report(const VerificationReport& report, bool timings,
                        const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
    Json j = report_to_json(report, timings);
    if (out_path.empty()) {
        emit(out, j);
    } else {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot write report to '" + out_path + "'");
        f << j.dump(2) << "\n";
    }
    err << report_summary_line(report) << "\n";
}

}  // namespace detail

/// Parses argv-style arguments (program name excluded) and runs one
/// subcommand. Returns 0 on success, 1 when a verification suite reports
/// failures, 2 on usage, parse, or infeasibility errors.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    using detail::CommonOpts;

    CLI::App app{
        "monres: Taylor complexes, minimal free resolutions, and Betti "
        "numbers of monomial ideals over exact fields"};
    app.require_subcommand(1);

    CommonOpts taylor_opts;
    bool taylor_stats = false;
    auto* cmd_taylor =
        app.add_subcommand("taylor", "build the Taylor complex of S/M");
    detail::add_input_options(cmd_taylor, taylor_opts);
    detail::add_field_option(cmd_taylor, taylor_opts);
    cmd_taylor->add_option("--cap", taylor_opts.cap,
                           "generator-count cap")->capture_default_str();
    cmd_taylor->add_flag("--stats", taylor_stats,
                         "emit {q, ranks, distinct_multidegrees} as JSON");
    cmd_taylor->add_flag("--json", taylor_opts.json, "JSON output");

    CommonOpts min_opts;
    bool min_trace = false;
    auto* cmd_min = app.add_subcommand(
        "minimize", "minimize the Taylor complex by consecutive cancellation");
    detail::add_input_options(cmd_min, min_opts);
    detail::add_field_option(cmd_min, min_opts);
    cmd_min->add_option("--cap", min_opts.cap, "generator-count cap")
        ->capture_default_str();
    cmd_min->add_flag("--trace", min_trace,
                      "emit the cancellation trace as JSON lines");
    cmd_min->add_flag("--json", min_opts.json, "JSON output");

    CommonOpts betti_opts;
    bool betti_oracle = false;
    auto* cmd_betti =
        app.add_subcommand("betti", "Betti table and projective dimension");
    detail::add_input_options(cmd_betti, betti_opts);
    detail::add_field_option(cmd_betti, betti_opts);
    cmd_betti->add_option("--cap", betti_opts.cap, "generator-count cap")
        ->capture_default_str();
    cmd_betti->add_flag("--oracle", betti_oracle,
                        "compute by strand homology instead of minimization");
    cmd_betti->add_flag("--json", betti_opts.json, "JSON output");

    CommonOpts pd_opts;
    auto* cmd_pd = app.add_subcommand("pd", "projective dimension of S/M");
    detail::add_input_options(cmd_pd, pd_opts);
    detail::add_field_option(cmd_pd, pd_opts);
    cmd_pd->add_option("--cap", pd_opts.cap, "generator-count cap")
        ->capture_default_str();
    cmd_pd->add_flag("--json", pd_opts.json, "JSON output");

    CommonOpts twin_opts;
    auto* cmd_twin = app.add_subcommand("twin", "twin ideal of M");
    detail::add_input_options(cmd_twin, twin_opts);
    cmd_twin->add_flag("--json", twin_opts.json, "JSON output");

    CommonOpts restrict_opts;
    std::string restrict_mono;
    auto* cmd_restrict = app.add_subcommand(
        "restrict", "ideal generated by the generators dividing a monomial");
    detail::add_input_options(cmd_restrict, restrict_opts);
    cmd_restrict
        ->add_option("--monomial", restrict_mono, "restriction multidegree")
        ->required();
    cmd_restrict->add_flag("--json", restrict_opts.json, "JSON output");

    CommonOpts compress_opts;
    auto* cmd_compress = app.add_subcommand(
        "compress",
        "squarefree compression of the twin ideal (y_j = x_j^alpha_j)");
    detail::add_input_options(cmd_compress, compress_opts);
    cmd_compress->add_flag("--json", compress_opts.json, "JSON output");

    struct RandomOpts {
        std::string ring;
        std::size_t q = 4;
        std::uint32_t min_deg = 1;
        std::uint32_t max_deg = 3;
        bool squarefree = false;
        std::uint64_t seed = 0;
        std::string out_path;
    } random_opts;
    auto* cmd_random =
        app.add_subcommand("random", "generate a seeded random ideal");
    cmd_random->add_option("--ring", random_opts.ring,
                           "variable count or names")->required();
    cmd_random->add_option("--q", random_opts.q, "requested generator count")
        ->capture_default_str();
    cmd_random->add_option("--min-deg", random_opts.min_deg,
                           "minimum generator degree")->capture_default_str();
    cmd_random->add_option("--max-deg", random_opts.max_deg,
                           "maximum generator degree")->capture_default_str();
    cmd_random->add_flag("--squarefree", random_opts.squarefree,
                         "squarefree generators");
    cmd_random->add_option("--seed", random_opts.seed, "RNG seed")
        ->capture_default_str();
    cmd_random->add_option("--out", random_opts.out_path,
                           "write the ideal file here instead of stdout");

    auto* cmd_verify = app.add_subcommand(
        "verify", "randomized and directed verification suites");
    cmd_verify->require_subcommand(1);

    struct VerifyOpts {
        std::size_t n = 4;
        std::size_t k = 0;
        std::size_t q_max = 8;
        std::uint32_t max_deg = 4;
        std::size_t trials = 200;
        std::uint64_t seed = 0;
        std::string field = "q";
        std::string ideal_path;
        std::string out_path;
        bool timings = false;
    } vo;

    auto* v_t31 = cmd_verify->add_subcommand(
        "t31", "squarefree bound: pd <= n - k when generator degrees exceed k");
    v_t31->add_option("--n", vo.n, "number of variables")->capture_default_str();
    v_t31->add_option("--k", vo.k, "degree threshold")->capture_default_str();
    v_t31->add_option("--qmax", vo.q_max, "max requested generators")
        ->capture_default_str();
    v_t31->add_option("--trials", vo.trials, "trial count")->capture_default_str();
    v_t31->add_option("--seed", vo.seed, "master seed")->capture_default_str();
    v_t31->add_option("--field", vo.field, "q or zp:<prime>")
        ->capture_default_str();
    v_t31->add_option("--out", vo.out_path, "report file");
    v_t31->add_flag("--timings", vo.timings, "include wall time in JSON");

    auto* v_t46 = cmd_verify->add_subcommand(
        "t46", "general bound: pd <= n for arbitrary monomial ideals");
    v_t46->add_option("--n", vo.n, "number of variables")->capture_default_str();
    v_t46->add_option("--qmax", vo.q_max, "max requested generators")
        ->capture_default_str();
    v_t46->add_option("--max-deg", vo.max_deg, "max generator degree")
        ->capture_default_str();
    v_t46->add_option("--trials", vo.trials, "trial count")->capture_default_str();
    v_t46->add_option("--seed", vo.seed, "master seed")->capture_default_str();
    v_t46->add_option("--field", vo.field, "q or zp:<prime>")
        ->capture_default_str();
    v_t46->add_option("--out", vo.out_path, "report file");
    v_t46->add_flag("--timings", vo.timings, "include wall time in JSON");

    auto* v_c42 = cmd_verify->add_subcommand(
        "c42", "restriction equality at every lattice multidegree");
    v_c42->add_option("--ideal", vo.ideal_path, "ideal file")->required();
    v_c42->add_option("--field", vo.field, "q or zp:<prime>")
        ->capture_default_str();
    v_c42->add_option("--out", vo.out_path, "report file");
    v_c42->add_flag("--timings", vo.timings, "include wall time in JSON");

    auto* v_t45 = cmd_verify->add_subcommand(
        "t45", "twin-ideal equality at the top multidegree");
    v_t45->add_option("--ideal", vo.ideal_path, "ideal file")->required();
    v_t45->add_option("--field", vo.field, "q or zp:<prime>")
        ->capture_default_str();
    v_t45->add_option("--out", vo.out_path, "report file");
    v_t45->add_flag("--timings", vo.timings, "include wall time in JSON");

    auto* v_compress = cmd_verify->add_subcommand(
        "compress", "twin-then-compress invariants and pd equality");
    v_compress->add_option("--ideal", vo.ideal_path, "ideal file")->required();
    v_compress->add_option("--field", vo.field, "q or zp:<prime>")
        ->capture_default_str();
    v_compress->add_option("--out", vo.out_path, "report file");
    v_compress->add_flag("--timings", vo.timings, "include wall time in JSON");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_taylor) {
            MonomialIdeal M = detail::load_ideal(taylor_opts);
            FieldDesc fd = FieldDesc::parse(taylor_opts.field);
            return with_field(fd, [&](auto field) {
                auto C = taylor(M, field, taylor_opts.cap);
                if (taylor_stats || taylor_opts.json) {
                    detail::emit(out, taylor_stats_json(C, M, taylor_opts.cap));
                } else {
                    out << "field: " << field.name() << "\n";
                    out << "q = " << M.ngens() << "\n";
                    out << "ranks:";
                    for (auto r : C.ranks()) out << " " << r;
                    out << "\n";
                    out << "distinct multidegrees: "
                        << lcm_lattice(M, taylor_opts.cap).size() << "\n";
                }
                return 0;
            });
        }
        if (*cmd_min) {
            MonomialIdeal M = detail::load_ideal(min_opts);
            FieldDesc fd = FieldDesc::parse(min_opts.field);
            return with_field(fd, [&](auto field) {
                auto C = taylor(M, field, min_opts.cap);
                auto [minimal, trace] = minimize(C);
                if (min_trace) {
                    for (const auto& c : trace)
                        out << trace_line_json(c).dump() << "\n";
                    err << trace.size() << " cancellations\n";
                    return 0;
                }
                if (min_opts.json) {
                    Json j;
                    j["field"] = field.name();
                    j["ranks_before"] = C.ranks();
                    j["ranks"] = minimal.ranks();
                    j["cancellations"] = trace.size();
                    detail::emit(out, j);
                } else {
                    out << "field: " << field.name() << "\n";
                    out << "ranks before:";
                    for (auto r : C.ranks()) out << " " << r;
                    out << "\nranks after: ";
                    for (auto r : minimal.ranks()) out << " " << r;
                    out << "\ncancellations: " << trace.size() << "\n";
                }
                return 0;
            });
        }
        if (*cmd_betti) {
            MonomialIdeal M = detail::load_ideal(betti_opts);
            FieldDesc fd = FieldDesc::parse(betti_opts.field);
            return with_field(fd, [&](auto field) {
                BettiTable t =
                    betti_oracle
                        ? full_betti(M, field, betti_opts.cap)
                        : betti_from_complex(
                              minimize(taylor(M, field, betti_opts.cap))
                                  .first);
                if (betti_opts.json)
                    detail::emit(out, betti_to_json(t));
                else
                    out << render_betti_table(t);
                return 0;
            });
        }
        if (*cmd_pd) {
            MonomialIdeal M = detail::load_ideal(pd_opts);
            FieldDesc fd = FieldDesc::parse(pd_opts.field);
            return with_field(fd, [&](auto field) {
                BettiTable t = betti_from_complex(
                    minimize(taylor(M, field, pd_opts.cap)).first);
                if (pd_opts.json) {
                    Json j;
                    j["field"] = field.name();
                    j["pd"] = t.pd;
                    detail::emit(out, j);
                } else {
                    out << "pd = " << t.pd << "\n";
                }
                return 0;
            });
        }
        if (*cmd_twin) {
            MonomialIdeal M = detail::load_ideal(twin_opts);
            MonomialIdeal T = twin(M);
            if (twin_opts.json)
                detail::emit(out, ideal_to_json(T));
            else
                out << format_generators(T) << "\n";
            return 0;
        }
        if (*cmd_restrict) {
            MonomialIdeal M = detail::load_ideal(restrict_opts);
            Monomial m = parse_monomial(restrict_mono, M.context());
            MonomialIdeal R = restrict_to(M, m);
            if (restrict_opts.json)
                detail::emit(out, ideal_to_json(R));
            else
                out << format_generators(R) << "\n";
            return 0;
        }
        if (*cmd_compress) {
            MonomialIdeal M = detail::load_ideal(compress_opts);
            auto [compressed, cmap] = compress(twin(M));
            if (compress_opts.json) {
                Json j = ideal_to_json(compressed);
                j["alpha"] = cmap.alpha;
                j["used_vars"] = cmap.used_vars;
                j["original_ring"] = cmap.source->names();
                detail::emit(out, j);
            } else {
                out << "ring:";
                for (const auto& nm : compressed.context()->names())
                    out << " " << nm;
                out << "\ngens: " << format_generators(compressed) << "\n";
                out << "alpha:";
                for (auto a : cmap.alpha) out << " " << a;
                out << "\nvars:";
                for (const auto& nm : cmap.source->names()) out << " " << nm;
                out << "\n";
            }
            return 0;
        }
        if (*cmd_random) {
            VarCtx ctx = detail::parse_ring_spec(random_opts.ring);
            MonomialIdeal M = random_ideal(
                ctx, random_opts.q, random_opts.min_deg, random_opts.max_deg,
                random_opts.squarefree, random_opts.seed);
            std::string text = write_ideal_text(M);
            if (random_opts.out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(random_opts.out_path);
                if (!f)
                    throw Error("cannot write '" + random_opts.out_path + "'");
                f << text;
            }
            return 0;
        }
        if (*cmd_verify) {
            FieldDesc fd = FieldDesc::parse(vo.field);
            VerificationReport report = with_field(fd, [&](auto field) {
                if (*v_t31)
                    return verify_squarefree_bound(vo.n, vo.q_max, vo.k,
                                                   vo.trials, vo.seed, field);
                if (*v_t46)
                    return verify_syzygy_bound(vo.n, vo.q_max, vo.max_deg,
                                               vo.trials, vo.seed, field);
                MonomialIdeal M = read_ideal_file(vo.ideal_path);
                if (*v_c42) return verify_restriction(M, field);
                if (*v_t45) return verify_twin(M, field);
                return verify_compression(M, field);
            });
            detail::emit_report(report, vo.timings, vo.out_path, out, err);
            return report.ok() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "parse error";
        if (e.line() > 0) err << " at line " << e.line();
        err << " column " << e.col() << ": " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace monres::cli

#endif  // MONRES_CLI_HPP

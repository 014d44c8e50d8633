#ifndef MONRES_OUTPUT_HPP
#define MONRES_OUTPUT_HPP

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "monres/betti.hpp"
#include "monres/complex.hpp"
#include "monres/harness.hpp"
#include "monres/ideal.hpp"
#include "monres/minimize.hpp"

namespace monres {

using Json = nlohmann::ordered_json;

/// Betti table JSON: {"field", "pd", "total": {"i": count},
/// "graded": [{"i","j","b"}...], "multigraded": [{"i","m","b"}...]},
/// graded sorted by (i, j) and multigraded by (i, exponentwise lex).
inline Json betti_to_json(const BettiTable& t) {
    Json j;
    j["field"] = t.field;
    j["pd"] = t.pd;
    Json total = Json::object();
    for (const auto& [i, b] : t.total) total[std::to_string(i)] = b;
    j["total"] = std::move(total);
    Json graded = Json::array();
    for (const auto& [key, b] : t.graded)
        graded.push_back(Json{{"i", key.first}, {"j", key.second}, {"b", b}});
    j["graded"] = std::move(graded);
    Json multi = Json::array();
    for (const auto& [key, b] : t.multigraded)
        multi.push_back(Json{{"i", key.first},
                             {"m", format_monomial(key.second)},
                             {"b", b}});
    j["multigraded"] = std::move(multi);
    return j;
}

/// Conventional triangular layout: column i, row j - i; '.' for zero.
/// The last line is always "pd = <d>".
inline std::string render_betti_table(const BettiTable& t) {
    std::ostringstream out;
    out << "field: " << t.field << "\n";
    if (t.total.empty()) {
        out << "(zero module)\n";
        out << "pd = " << t.pd << "\n";
        return out.str();
    }
    std::size_t imax = t.pd;
    std::uint64_t rmax = 0;  // max j - i
    for (const auto& [key, b] : t.graded) {
        (void)b;
        rmax = std::max(rmax, key.second - key.first);
    }
    auto cell = [&](std::uint64_t row, std::size_t i) -> std::string {
        auto it = t.graded.find({i, row + i});
        return it == t.graded.end() ? "." : std::to_string(it->second);
    };
    std::vector<std::size_t> width(imax + 1, 1);
    for (std::size_t i = 0; i <= imax; ++i) {
        width[i] = std::to_string(i).size();
        width[i] = std::max(width[i],
                            std::to_string(t.total_at(i)).size());
        for (std::uint64_t r = 0; r <= rmax; ++r)
            width[i] = std::max(width[i], cell(r, i).size());
    }
    std::size_t label = std::to_string(rmax).size() + 1;
    label = std::max(label, std::string("total:").size());

    out << std::left << std::setw(static_cast<int>(label)) << "" << " ";
    for (std::size_t i = 0; i <= imax; ++i)
        out << std::right << std::setw(static_cast<int>(width[i])) << i
            << (i == imax ? "" : "  ");
    out << "\n";
    out << std::left << std::setw(static_cast<int>(label)) << "total:" << " ";
    for (std::size_t i = 0; i <= imax; ++i)
        out << std::right << std::setw(static_cast<int>(width[i]))
            << t.total_at(i) << (i == imax ? "" : "  ");
    out << "\n";
    for (std::uint64_t r = 0; r <= rmax; ++r) {
        out << std::left << std::setw(static_cast<int>(label))
            << (std::to_string(r) + ":") << " ";
        for (std::size_t i = 0; i <= imax; ++i)
            out << std::right << std::setw(static_cast<int>(width[i]))
                << cell(r, i) << (i == imax ? "" : "  ");
        out << "\n";
    }
    out << "pd = " << t.pd << "\n";
    return out.str();
}

template <class Field>
Json taylor_stats_json(const FreeComplex<Field>& C,
                       const MonomialIdeal& M, std::size_t cap) {
    Json j;
    j["q"] = M.ngens();
    Json ranks = Json::array();
    for (auto r : C.ranks()) ranks.push_back(r);
    j["ranks"] = std::move(ranks);
    j["distinct_multidegrees"] = lcm_lattice(M, cap).size();
    return j;
}

inline Json trace_line_json(const Cancellation& c) {
    Json j;
    j["s"] = c.s;
    j["source"] = c.source_subset;
    j["target"] = c.target_subset;
    return j;
}

inline Json ideal_to_json(const MonomialIdeal& M) {
    Json j;
    j["ring"] = M.context()->names();
    Json gens = Json::array();
    for (const auto& g : M.gens()) gens.push_back(format_monomial(g));
    j["gens"] = std::move(gens);
    return j;
}

inline Json report_to_json(const VerificationReport& r,
                           bool include_timing = false) {
    Json j;
    j["check"] = r.check;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["attempted"] = r.attempted;
    j["passed"] = r.passed;
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back(Json{{"ideal", f.ideal},
                                {"field", f.field},
                                {"observed", f.observed},
                                {"expected", f.expected},
                                {"seed", f.seed}});
    }
    j["failures"] = std::move(failures);
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

inline std::string report_summary_line(const VerificationReport& r) {
    std::ostringstream out;
    out << r.check << ": " << r.passed << "/" << r.attempted
        << " checks passed (" << r.failures.size() << " failures) ["
        << std::fixed << std::setprecision(2) << r.wall_seconds << " s]";
    return out.str();
}

}  // namespace monres

#endif  // MONRES_OUTPUT_HPP

#pragma once

#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "teg/edge_labelled.hpp"

namespace teg {

/// 17 significant digits, the CSV number format.
inline std::string format_csv(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

/// Edge-list text form of a TEG:
///
///     # delta_t <inf|value>
///     # events <count>
///     # anchor <vertex> <time>      (optional, repeated)
///     # from to iet motif
///     0 1 2.5 ABAC
///
/// IETs are written in shortest round-trip form.
inline void write_teg_text(std::ostream& out, const EdgeLabelledTeg& g, DeltaT dt)
{
    out << "# delta_t " << to_string(dt) << '\n';
    out << "# events " << g.vertex_count() << '\n';
    for (const auto& [v, t] : g.anchors()) out << "# anchor " << v << ' ' << format_exact(t) << '\n';
    out << "# from to iet motif\n";
    for (const LabelledEdge& e : g.edges()) {
        out << e.i << ' ' << e.j << ' ' << format_exact(e.tau) << ' ' << to_string(e.motif) << '\n';
    }
}

struct TegText {
    EdgeLabelledTeg graph;
    DeltaT delta_t = DeltaT::infinite();
};

inline TegText read_teg_text(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> events;
    DeltaT dt = DeltaT::infinite();
    std::vector<LabelledEdge> edges;
    std::map<std::size_t, double> anchors;
    while (std::getline(in, line)) {
        ++lineno;
        const auto fields = detail::split_fields(line, Delimiter::whitespace);
        if (fields.empty()) continue;
        if (fields[0] == "#") {
            if (fields.size() == 3 && fields[1] == "delta_t") {
                double v = 0.0;
                if (fields[2] == "inf") dt = DeltaT::infinite();
                else if (detail::parse_number(fields[2], v)) dt = DeltaT::finite(v);
                else throw ParseError(lineno, "invalid delta_t");
            } else if (fields.size() == 3 && fields[1] == "events") {
                std::size_t n = 0;
                if (!detail::parse_number(fields[2], n)) throw ParseError(lineno, "invalid event count");
                events = n;
            } else if (fields.size() == 4 && fields[1] == "anchor") {
                std::size_t v = 0;
                double t = 0.0;
                if (!detail::parse_number(fields[2], v) || !detail::parse_number(fields[3], t)) {
                    throw ParseError(lineno, "invalid anchor");
                }
                anchors[v] = t;
            }
            continue;
        }
        if (fields[0].front() == '#') continue;
        if (fields.size() != 4) throw ParseError(lineno, "expected 'from to iet motif'");
        LabelledEdge e;
        if (!detail::parse_number(fields[0], e.i) || !detail::parse_number(fields[1], e.j) ||
            !detail::parse_number(fields[2], e.tau)) {
            throw ParseError(lineno, "invalid edge record");
        }
        const auto m = parse_motif(fields[3]);
        if (!m) throw ParseError(lineno, "unknown motif '" + std::string(fields[3]) + "'");
        e.motif = *m;
        edges.push_back(e);
    }
    if (!events) throw InputError("TEG text is missing the '# events <count>' header");
    return {EdgeLabelledTeg(*events, std::move(edges), std::move(anchors)), dt};
}

}  // namespace teg

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "teg/disjoint_set.hpp"
#include "teg/edge_labelled.hpp"

namespace teg {

/// The four conditions an edge-labelled TEG must meet to describe a
/// temporal network.
///  - C1: tau sums agree along every pair of paths between two vertices.
///  - C2: the out-edges of a vertex carry distinct xi_out (one successor per node).
///  - C3: the in-edges of a vertex carry distinct xi_in (no slot prescribed twice).
///  - C4: for a two-node edge (ABAB/ABBA) whose head has a second in-edge, or
///    whose tail has a second out-edge, some path between its endpoints runs
///    through that edge with xi_switch product equal to the label's xi_switch.
///  - realisation: raised only by reconstruction, when C1-C4 hold but the
///    labels still force contradictory nodes or a different graph.
enum class Condition { C1, C2, C3, C4, realisation };

inline std::string_view to_string(Condition c) noexcept
{
    switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
    case Condition::C4: return "C4";
    case Condition::realisation: return "realisation";
    }
    return "?";
}

struct Violation {
    Condition condition;
    std::vector<std::size_t> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<Violation> violations;

    bool consistent() const noexcept { return violations.empty(); }

    bool has(Condition c) const noexcept
    {
        return std::any_of(violations.begin(), violations.end(),
                           [c](const Violation& v) { return v.condition == c; });
    }

    std::size_t count(Condition c) const noexcept
    {
        return static_cast<std::size_t>(std::count_if(
            violations.begin(), violations.end(), [c](const Violation& v) { return v.condition == c; }));
    }
};

inline std::ostream& operator<<(std::ostream& os, const ConsistencyReport& report)
{
    for (const Violation& v : report.violations) os << to_string(v.condition) << ": " << v.detail << '\n';
    return os;
}

struct ConsistencyOptions {
    /// C1 accepts |t_i + tau - t_j| <= tolerance * max(1, |t_i|, |t_j|).
    double relative_time_tolerance = 1e-9;
};

namespace detail {

/// In/out incidence lists (edge indices) over an edge-labelled TEG.
struct LabelledAdjacency {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> in;

    explicit LabelledAdjacency(const EdgeLabelledTeg& g) : out(g.vertex_count()), in(g.vertex_count())
    {
        const auto edges = g.edges();
        for (std::size_t k = 0; k < edges.size(); ++k) {
            out[edges[k].i].push_back(k);
            in[edges[k].j].push_back(k);
        }
    }
};

/// Weakly connected components, each a sorted vertex list; components are
/// ordered by their smallest vertex.
inline std::vector<std::vector<std::size_t>> labelled_components(const EdgeLabelledTeg& g)
{
    DisjointSet sets(g.vertex_count());
    for (const LabelledEdge& e : g.edges()) sets.unite(e.i, e.j);
    std::vector<std::size_t> slot(g.vertex_count(), std::numeric_limits<std::size_t>::max());
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const std::size_t root = sets.find(v);
        if (slot[root] == std::numeric_limits<std::size_t>::max()) {
            slot[root] = comps.size();
            comps.emplace_back();
        }
        comps[slot[root]].push_back(v);
    }
    return comps;
}

struct TimeConflict {
    std::size_t edge;
    double mismatch;
};

/// Assign times relative to `root` by walking the signed graph
/// (A^tau)^T - A^tau breadth-first: forward edges add tau, backward edges
/// subtract it. Every non-tree edge is then checked against the assignment.
/// Times of vertices outside the component are left untouched.
inline std::vector<TimeConflict> propagate_times(const EdgeLabelledTeg& g, const LabelledAdjacency& adj,
                                                 std::size_t root, double root_time,
                                                 std::vector<double>& times, double tolerance)
{
    const auto edges = g.edges();
    std::vector<TimeConflict> conflicts;
    std::vector<char> checked(edges.size(), 0);
    std::deque<std::size_t> queue{root};
    times[root] = root_time;

    auto visit = [&](std::size_t k, std::size_t to, double expected) {
        if (std::isnan(times[to])) {
            times[to] = expected;
            checked[k] = 1;
            queue.push_back(to);
            return;
        }
        if (checked[k]) return;
        checked[k] = 1;
        const double scale = std::max({1.0, std::abs(times[to]), std::abs(expected)});
        const double mismatch = expected - times[to];
        if (std::abs(mismatch) > tolerance * scale) conflicts.push_back({k, mismatch});
    };

    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t k : adj.out[v]) visit(k, edges[k].j, times[v] + edges[k].tau);
        for (std::size_t k : adj.in[v]) visit(k, edges[k].i, times[v] - edges[k].tau);
    }
    return conflicts;
}

inline constexpr std::uint8_t even_parity = 1;  // xi_switch product +1
inline constexpr std::uint8_t odd_parity = 2;   // xi_switch product -1

inline std::uint8_t apply_switch(std::uint8_t mask, Motif m) noexcept
{
    if (xi_switch(m) > 0) return mask;
    return static_cast<std::uint8_t>(((mask & even_parity) ? odd_parity : 0) | ((mask & odd_parity) ? even_parity : 0));
}

inline std::uint8_t parity_of(int xi) noexcept { return xi > 0 ? even_parity : odd_parity; }

/// Parities of xi_switch products over directed paths from `source` to every
/// vertex up to `limit`, optionally ignoring one edge. Vertex order is a
/// topological order (edges go from lower to higher index), so one forward
/// sweep suffices. Entry k corresponds to vertex source + k.
inline std::vector<std::uint8_t> path_parities(const EdgeLabelledTeg& g, const LabelledAdjacency& adj,
                                               std::size_t source, std::size_t limit,
                                               std::size_t skip_edge = std::numeric_limits<std::size_t>::max())
{
    const auto edges = g.edges();
    std::vector<std::uint8_t> mask(limit - source + 1, 0);
    mask[0] = even_parity;
    for (std::size_t w = source; w < limit; ++w) {
        const std::uint8_t here = mask[w - source];
        if (!here) continue;
        for (std::size_t k : adj.out[w]) {
            if (k == skip_edge || edges[k].j > limit) continue;
            mask[edges[k].j - source] |= apply_switch(here, edges[k].motif);
        }
    }
    return mask;
}

inline std::string edge_name(const LabelledEdge& e)
{
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

inline void check_degree_labels(const EdgeLabelledTeg& g, const std::vector<std::vector<std::size_t>>& incident,
                                bool outgoing, ConsistencyReport& report)
{
    const auto edges = g.edges();
    const Condition cond = outgoing ? Condition::C2 : Condition::C3;
    const char* dir = outgoing ? "out" : "in";
    for (std::size_t v = 0; v < incident.size(); ++v) {
        const auto& list = incident[v];
        if (list.size() > 2) {
            Violation viol{cond, {v}, {}, {}};
            for (std::size_t k : list) viol.edges.emplace_back(edges[k].i, edges[k].j);
            viol.detail = "vertex " + std::to_string(v) + " has " + std::to_string(list.size()) + " " + dir +
                          "-edges; at most two are possible";
            report.violations.push_back(std::move(viol));
            continue;
        }
        if (list.size() < 2) continue;
        const LabelledEdge& a = edges[list[0]];
        const LabelledEdge& b = edges[list[1]];
        const XiLabel xa = outgoing ? xi_out(a.motif) : xi_in(a.motif);
        const XiLabel xb = outgoing ? xi_out(b.motif) : xi_in(b.motif);
        if (xa == xb) {
            std::string detail = "vertex " + std::to_string(v) + " " + dir + "-edges " + edge_name(a) + " " +
                                 std::string(to_string(a.motif)) + " and " + edge_name(b) + " " +
                                 std::string(to_string(b.motif)) + " share xi_" + dir + " = " +
                                 std::string(to_string(xa));
            report.violations.push_back({cond, {v}, {{a.i, a.j}, {b.i, b.j}}, std::move(detail)});
        }
    }
}

}  // namespace detail

/// Check C1-C4 and report every violation found. Never throws on
/// inconsistent input.
inline ConsistencyReport check_consistency(const EdgeLabelledTeg& g, const ConsistencyOptions& options = {})
{
    ConsistencyReport report;
    const detail::LabelledAdjacency adj(g);
    const auto edges = g.edges();

    // C1, one breadth-first labelling per component.
    std::vector<double> times(g.vertex_count(), std::numeric_limits<double>::quiet_NaN());
    for (const auto& comp : detail::labelled_components(g)) {
        const auto conflicts = detail::propagate_times(g, adj, comp.front(), 0.0, times, options.relative_time_tolerance);
        for (const auto& c : conflicts) {
            const LabelledEdge& e = edges[c.edge];
            std::ostringstream detail;
            detail.precision(17);
            detail << "edge " << detail::edge_name(e) << " tau " << e.tau
                   << " disagrees with another path between its endpoints by " << c.mismatch;
            report.violations.push_back({Condition::C1, {e.i, e.j}, {{e.i, e.j}}, detail.str()});
        }
    }

    detail::check_degree_labels(g, adj.out, true, report);
    detail::check_degree_labels(g, adj.in, false, report);

    // C4, only two-node edges with a second edge at either end can be involved.
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const LabelledEdge& e = edges[k];
        if (!is_two_node(e.motif)) continue;
        if (adj.out[e.i].size() < 2 && adj.in[e.j].size() < 2) continue;

        const std::uint8_t wanted = detail::parity_of(xi_switch(e.motif));
        std::vector<std::string> problems;

        // The node not carried by (i, j) reaches j along its own chain, which
        // leaves i by the other out-edge and enters j by the other in-edge.
        const auto from_tail = detail::path_parities(g, adj, e.i, e.j, k);
        for (std::size_t other : adj.in[e.j]) {
            if (other == k) continue;
            const std::size_t via = edges[other].i;
            std::uint8_t reach = via >= e.i ? from_tail[via - e.i] : 0;
            reach = detail::apply_switch(reach, edges[other].motif);
            if (!(reach & wanted)) {
                problems.push_back("no path from " + std::to_string(e.i) + " through in-edge " +
                                   detail::edge_name(edges[other]) + " has xi_switch product " +
                                   std::to_string(xi_switch(e.motif)));
            }
        }
        for (std::size_t other : adj.out[e.i]) {
            if (other == k) continue;
            const LabelledEdge& first = edges[other];
            std::uint8_t reach = first.j < e.j ? detail::path_parities(g, adj, first.j, e.j).back() : 0;
            reach = detail::apply_switch(reach, first.motif);
            if (!(reach & wanted)) {
                problems.push_back("no path to " + std::to_string(e.j) + " through out-edge " +
                                   detail::edge_name(first) + " has xi_switch product " +
                                   std::to_string(xi_switch(e.motif)));
            }
        }

        if (!problems.empty()) {
            std::string detail = "edge " + detail::edge_name(e) + " labelled " + std::string(to_string(e.motif)) + ": ";
            for (std::size_t p = 0; p < problems.size(); ++p) detail += (p ? "; " : "") + problems[p];
            report.violations.push_back({Condition::C4, {e.i, e.j}, {{e.i, e.j}}, std::move(detail)});
        }
    }
    return report;
}

}  // namespace teg

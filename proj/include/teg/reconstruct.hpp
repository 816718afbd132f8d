#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "teg/consistency.hpp"

namespace teg {

/// Raised when reconstruction meets a graph that does not describe a
/// temporal network. Carries the report that explains why.
class InconsistentGraphError : public InputError {
public:
    explicit InconsistentGraphError(ConsistencyReport report)
        : InputError(summary(report)), report_(std::move(report))
    {
    }

    const ConsistencyReport& report() const noexcept { return report_; }

private:
    static std::string summary(const ConsistencyReport& r)
    {
        std::string s = "inconsistent edge-labelled TEG";
        for (const Violation& v : r.violations) {
            s += "\n  ";
            s += to_string(v.condition);
            s += ": " + v.detail;
        }
        return s;
    }

    ConsistencyReport report_;
};

/// How component time origins are placed when no anchors are given.
enum class ComponentLayout {
    /// Every component starts at t = 0.
    common_origin,
    /// Components follow one another, separated by `gap`, in order of their
    /// smallest vertex.
    end_to_end,
};

struct ReconstructOptions {
    ComponentLayout layout = ComponentLayout::common_origin;
    double gap = 1.0;
    ConsistencyOptions consistency{};
};

/// Endpoints and route of the maximal signed path through one component.
struct MaximalPath {
    std::vector<std::size_t> vertices;  // earliest ... latest
    double length = 0.0;
};

namespace detail {

struct ComponentTimes {
    std::size_t earliest = 0;
    std::size_t latest = 0;
    /// Parent pointers of the breadth-first tree rooted at `earliest`.
    std::vector<std::size_t> parent;
};

/// Locate the earliest vertex of a component and re-label its times from
/// there so that every time is a sum of tau values along a path from it.
inline ComponentTimes time_component(const EdgeLabelledTeg& g, const LabelledAdjacency& adj,
                                     const std::vector<std::size_t>& comp, std::vector<double>& times,
                                     double tolerance)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    propagate_times(g, adj, comp.front(), 0.0, times, tolerance);
    std::size_t earliest = comp.front();
    for (std::size_t v : comp) {
        if (times[v] < times[earliest]) earliest = v;
    }
    for (std::size_t v : comp) times[v] = nan;

    ComponentTimes ct;
    ct.earliest = earliest;
    ct.parent.assign(g.vertex_count(), std::numeric_limits<std::size_t>::max());
    const auto edges = g.edges();
    std::vector<std::size_t> queue{earliest};
    times[earliest] = 0.0;
    ct.parent[earliest] = earliest;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t v = queue[head];
        for (std::size_t k : adj.out[v]) {
            const std::size_t w = edges[k].j;
            if (!std::isnan(times[w])) continue;
            times[w] = times[v] + edges[k].tau;
            ct.parent[w] = v;
            queue.push_back(w);
        }
        for (std::size_t k : adj.in[v]) {
            const std::size_t w = edges[k].i;
            if (!std::isnan(times[w])) continue;
            times[w] = times[v] - edges[k].tau;
            ct.parent[w] = v;
            queue.push_back(w);
        }
    }
    ct.latest = earliest;
    for (std::size_t v : comp) {
        if (times[v] > times[ct.latest]) ct.latest = v;
    }
    return ct;
}

/// Event slot (0 = source, 1 = target) of the earlier event that a
/// three-node motif carries, and the slot it lands in within the later event.
inline std::pair<int, int> carried_slots(Motif m) noexcept
{
    const auto a = attributes(m);
    return {a.xi_out == XiLabel::A ? 0 : 1, a.xi_in == XiLabel::A ? 0 : 1};
}

}  // namespace detail

/// Maximal path (backward traversal allowed, with negated weight) through
/// the component containing `vertex`. Its endpoints are the earliest and
/// latest events of that component.
inline MaximalPath maximal_path(const EdgeLabelledTeg& g, std::size_t vertex, const ConsistencyOptions& options = {})
{
    const detail::LabelledAdjacency adj(g);
    std::vector<std::size_t> comp;
    for (const auto& c : detail::labelled_components(g)) {
        if (std::binary_search(c.begin(), c.end(), vertex)) {
            comp = c;
            break;
        }
    }
    if (comp.empty()) throw InputError("vertex " + std::to_string(vertex) + " out of range");
    std::vector<double> times(g.vertex_count(), std::numeric_limits<double>::quiet_NaN());
    const auto ct = detail::time_component(g, adj, comp, times, options.relative_time_tolerance);

    MaximalPath path;
    for (std::size_t v = ct.latest;; v = ct.parent[v]) {
        path.vertices.push_back(v);
        if (v == ct.earliest) break;
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    path.length = times[ct.latest] - times[ct.earliest];
    return path;
}

namespace detail {

// The edges implied by the recovered node labels (next event of each node in
// vertex order) must be exactly the input edges, with the input motifs.
// C1-C4 do not rule out a three-node label whose endpoints other paths force
// to share both nodes.
template <class Fail>
void verify_realisation(const EdgeLabelledTeg& g, const std::vector<Event>& events, Fail&& fail)
{
    std::unordered_map<NodeId, std::size_t> last;
    std::vector<std::pair<std::size_t, std::size_t>> implied;
    for (std::size_t v = 0; v < events.size(); ++v) {
        std::optional<std::size_t> previous;
        for (NodeId n : {events[v].source, events[v].target}) {
            auto [it, fresh] = last.try_emplace(n, v);
            if (!fresh) {
                if (it->second != previous) implied.emplace_back(it->second, v);
                previous = it->second;
                it->second = v;
            }
        }
    }
    std::sort(implied.begin(), implied.end());
    const auto edges = g.edges();
    for (std::size_t k = 0; k < std::max(implied.size(), edges.size()); ++k) {
        if (k < implied.size() && (k >= edges.size() || implied[k] != std::pair{edges[k].i, edges[k].j})) {
            fail(Condition::realisation, {implied[k].first, implied[k].second},
                 "vertices " + std::to_string(implied[k].first) + " and " + std::to_string(implied[k].second) +
                     " share a node but are not joined by an edge");
        }
        if (k >= implied.size()) {
            fail(Condition::realisation, {edges[k].i, edges[k].j},
                 "edge (" + std::to_string(edges[k].i) + "," + std::to_string(edges[k].j) + ") joins events sharing no node");
        }
        const LabelledEdge& e = edges[k];
        const Motif actual = classify_motif(events[e.i], events[e.j]);
        if (actual != e.motif) {
            fail(Condition::realisation, {e.i, e.j},
                 "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") is labelled " +
                     std::string(to_string(e.motif)) + " but the other labels force " + std::string(to_string(actual)));
        }
    }
}

}  // namespace detail

/// Recover the events of an edge-labelled TEG, returned in vertex order
/// (event k corresponds to vertex k).
///
/// Per weakly connected component: time the earliest event at 0 (or at its
/// anchor), propagate times along the signed tau graph, then scan events in
/// vertex order and resolve their nodes from the in-edges, giving unprescribed
/// slots fresh labels. Components receive disjoint blocks of node labels in
/// order of their smallest vertex, so a connected input comes out in
/// canonical form.
inline std::vector<Event> reconstruct_events(const EdgeLabelledTeg& g, const ReconstructOptions& options = {})
{
    if (auto report = check_consistency(g, options.consistency); !report.consistent()) {
        throw InconsistentGraphError(std::move(report));
    }

    const detail::LabelledAdjacency adj(g);
    const auto edges = g.edges();
    constexpr NodeId unset = std::numeric_limits<NodeId>::max();
    std::vector<Event> events(g.vertex_count(), Event{unset, unset, 0.0});
    std::vector<double> times(g.vertex_count(), std::numeric_limits<double>::quiet_NaN());
    NodeId next_label = 0;
    double cursor = 0.0;

    auto fail = [](Condition c, std::vector<std::size_t> vertices, std::string detail) {
        ConsistencyReport r;
        r.violations.push_back({c, std::move(vertices), {}, std::move(detail)});
        throw InconsistentGraphError(std::move(r));
    };

    for (const auto& comp : detail::labelled_components(g)) {
        const auto ct = detail::time_component(g, adj, comp, times, options.consistency.relative_time_tolerance);

        // Place the component in absolute time.
        double origin = 0.0;
        std::optional<std::size_t> anchored;
        for (std::size_t v : comp) {
            if (g.anchors().count(v)) {
                anchored = v;
                break;
            }
        }
        if (anchored) {
            origin = g.anchors().at(*anchored) - times[*anchored];
            if (auto it = g.anchors().find(ct.earliest); it != g.anchors().end()) origin = it->second;
            for (std::size_t v : comp) {
                auto it = g.anchors().find(v);
                if (it == g.anchors().end()) continue;
                const double expected = origin + times[v];
                const double scale = std::max({1.0, std::abs(expected), std::abs(it->second)});
                if (std::abs(expected - it->second) > options.consistency.relative_time_tolerance * scale) {
                    throw InputError("anchor of vertex " + std::to_string(v) + " contradicts the tau labels");
                }
            }
        } else if (options.layout == ComponentLayout::end_to_end) {
            origin = cursor;
        }
        for (std::size_t k = 0; k < comp.size(); ++k) {
            const std::size_t v = comp[k];
            auto it = g.anchors().find(v);
            events[v].time = it != g.anchors().end() ? it->second : origin + times[v];
            // Undo rounding that would swap events lying within an ulp or so.
            if (k > 0 && it == g.anchors().end()) {
                const double before = events[comp[k - 1]].time;
                const double scale = std::max(1.0, std::abs(before));
                if (events[v].time < before &&
                    before - events[v].time <= options.consistency.relative_time_tolerance * scale) {
                    events[v].time = before;
                }
            }
        }
        cursor = origin + times[ct.latest] + options.gap;

        // Vertex order is topological (edges run from lower to higher
        // index) and, for graphs built from events, also time order.
        for (std::size_t v : comp) {
            std::array<NodeId, 2> slots{unset, unset};
            auto prescribe = [&](int slot, NodeId node, std::size_t from) {
                if (slots[slot] != unset && slots[slot] != node) {
                    fail(Condition::realisation, {from, v},
                         "vertex " + std::to_string(v) + " has its " + (slot == 0 ? "source" : "target") +
                             " prescribed twice with different nodes");
                }
                slots[slot] = node;
            };
            for (std::size_t k : adj.in[v]) {
                const LabelledEdge& e = edges[k];
                const Event& prev = events[e.i];
                switch (e.motif) {
                case Motif::ABAB:
                    prescribe(0, prev.source, e.i);
                    prescribe(1, prev.target, e.i);
                    break;
                case Motif::ABBA:
                    prescribe(0, prev.target, e.i);
                    prescribe(1, prev.source, e.i);
                    break;
                default: {
                    const auto [from_slot, to_slot] = detail::carried_slots(e.motif);
                    prescribe(to_slot, from_slot == 0 ? prev.source : prev.target, e.i);
                }
                }
            }
            if (slots[0] == unset) slots[0] = next_label++;
            if (slots[1] == unset) slots[1] = next_label++;
            if (slots[0] == slots[1]) {
                fail(Condition::realisation, {v}, "vertex " + std::to_string(v) + " resolves to a self-loop on one node");
            }
            events[v].source = slots[0];
            events[v].target = slots[1];
        }
    }
    detail::verify_realisation(g, events, fail);
    return events;
}

/// Recover the temporal network described by a consistent edge-labelled TEG.
inline TemporalNetwork reconstruct(const EdgeLabelledTeg& g, const ReconstructOptions& options = {})
{
    return TemporalNetwork(reconstruct_events(g, options), TiePolicy::stable_order);
}

}  // namespace teg

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "teg/disjoint_set.hpp"
#include "teg/distribution.hpp"
#include "teg/event_graph.hpp"

namespace teg {

/// One weakly connected temporal component.
struct Component {
    /// Vertex (event) indices, ascending, hence in time order.
    std::vector<std::size_t> events;
    /// Distinct nodes taking part, ascending.
    std::vector<NodeId> nodes;
    double first_time = 0.0;
    double last_time = 0.0;

    std::size_t size() const noexcept { return events.size(); }
    double duration() const noexcept { return last_time - first_time; }
};

/// Partition of TEG vertices into weakly connected components, ordered by
/// event count (largest first), then by earliest event.
class ComponentSet {
public:
    ComponentSet() = default;
    ComponentSet(std::vector<std::size_t> assignment, std::vector<Component> components)
        : assignment_(std::move(assignment)), components_(std::move(components))
    {
    }

    std::size_t size() const noexcept { return components_.size(); }
    const Component& operator[](std::size_t rank) const { return components_[rank]; }
    std::span<const Component> components() const noexcept { return components_; }

    /// Rank of the component containing a vertex.
    std::size_t component_of(std::size_t vertex) const { return assignment_[vertex]; }
    std::span<const std::size_t> assignment() const noexcept { return assignment_; }

    std::size_t largest_size() const noexcept { return components_.empty() ? 0 : components_.front().size(); }

private:
    std::vector<std::size_t> assignment_;
    std::vector<Component> components_;
};

inline ComponentSet weakly_connected_components(const Teg& teg)
{
    const std::size_t n = teg.vertex_count();
    DisjointSet sets(n);
    for (const TegEdge& e : teg.edges()) sets.unite(e.from, e.to);

    // Provisional ids in order of each component's first vertex.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> provisional(n, unset);
    std::vector<std::size_t> id_of_root(n, unset);
    std::vector<Component> comps;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t& id = id_of_root[sets.find(v)];
        if (id == unset) {
            id = comps.size();
            comps.emplace_back();
        }
        provisional[v] = id;
        comps[id].events.push_back(v);
    }

    const auto& net = teg.network();
    for (Component& c : comps) {
        c.first_time = net[c.events.front()].time;
        c.last_time = net[c.events.back()].time;
        c.nodes.reserve(2 * c.events.size());
        for (std::size_t v : c.events) {
            c.nodes.push_back(net[v].source);
            c.nodes.push_back(net[v].target);
        }
        std::sort(c.nodes.begin(), c.nodes.end());
        c.nodes.erase(std::unique(c.nodes.begin(), c.nodes.end()), c.nodes.end());
    }

    // Provisional order already sorts by earliest event, so a stable sort on
    // size gives (size desc, first time asc, id asc).
    std::vector<std::size_t> order(comps.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return comps[a].size() > comps[b].size(); });
    std::vector<std::size_t> rank(comps.size());
    std::vector<Component> ordered;
    ordered.reserve(comps.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
        ordered.push_back(std::move(comps[order[r]]));
    }
    for (auto& a : provisional) a = rank[a];
    return ComponentSet(std::move(provisional), std::move(ordered));
}

// ---------------------------------------------------------------------------
// Largest component as a function of dt

struct SweepPoint {
    DeltaT delta_t;
    double largest_fraction = 0.0;
    std::size_t largest_events = 0;
    std::size_t component_count = 0;
};

/// Largest-component curve over an ascending dt grid. The dt-TEG keeps
/// exactly the edges of the infinite-window TEG whose iet is below dt, so one
/// pass of union-find over edges sorted by iet serves the whole grid.
inline std::vector<SweepPoint> sweep_largest_component(const TemporalNetwork& net, std::span<const DeltaT> grid)
{
    if (grid.empty()) throw InputError("dt grid is empty");
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (grid[k].value() < grid[k - 1].value()) throw InputError("dt grid must be ascending");
    }
    if (net.empty()) throw EmptyScopeError("sweep over an empty temporal network");

    const Teg full = build_teg(net, DeltaT::infinite());
    std::vector<TegEdge> edges(full.edges().begin(), full.edges().end());
    std::stable_sort(edges.begin(), edges.end(), [](const TegEdge& a, const TegEdge& b) { return a.iet < b.iet; });

    DisjointSet sets(net.size());
    std::size_t largest = 1;
    std::size_t next = 0;
    std::vector<SweepPoint> curve;
    curve.reserve(grid.size());
    for (const DeltaT dt : grid) {
        while (next < edges.size() && dt.admits(edges[next].iet)) {
            if (sets.unite(edges[next].from, edges[next].to)) largest = std::max(largest, sets.set_size(edges[next].from));
            ++next;
        }
        curve.push_back({dt, static_cast<double>(largest) / static_cast<double>(net.size()), largest,
                         sets.set_count()});
    }
    return curve;
}

// ---------------------------------------------------------------------------
// Component size distribution

using SizeHistogram = std::map<std::size_t, std::uint64_t>;

inline void accumulate_sizes(const ComponentSet& comps, SizeHistogram& hist)
{
    for (const Component& c : comps.components()) ++hist[c.size()];
}

/// Fraction of components having each size.
inline DiscreteDistribution<std::size_t> component_size_distribution(const ComponentSet& comps)
{
    SizeHistogram hist;
    accumulate_sizes(comps, hist);
    return DiscreteDistribution<std::size_t>::from_counts(hist);
}

inline DiscreteDistribution<std::size_t> component_size_distribution(const Teg& teg)
{
    return component_size_distribution(weakly_connected_components(teg));
}

/// Sizes of every component of every member pooled into one histogram.
inline DiscreteDistribution<std::size_t> pooled_size_distribution(std::span<const ComponentSet> ensemble)
{
    SizeHistogram hist;
    for (const auto& comps : ensemble) accumulate_sizes(comps, hist);
    return DiscreteDistribution<std::size_t>::from_counts(hist);
}

// ---------------------------------------------------------------------------
// Temporal barcode

struct BarcodeRow {
    std::size_t component = 0;  // rank in the ComponentSet
    std::vector<double> times;
};

/// Event times of the `top_k` largest components. Row 0 is the largest,
/// drawn at the bottom.
inline std::vector<BarcodeRow> barcode(const Teg& teg, const ComponentSet& comps, std::size_t top_k)
{
    if (top_k == 0) throw InputError("barcode needs top_k >= 1");
    std::vector<BarcodeRow> rows;
    for (std::size_t r = 0; r < std::min(top_k, comps.size()); ++r) {
        BarcodeRow row{r, {}};
        row.times.reserve(comps[r].size());
        for (std::size_t v : comps[r].events) row.times.push_back(teg.network()[v].time);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<BarcodeRow> barcode(const Teg& teg, std::size_t top_k)
{
    return barcode(teg, weakly_connected_components(teg), top_k);
}

// ---------------------------------------------------------------------------
// Motif and inter-event time distributions

inline MotifCounts motif_counts(const Teg& teg)
{
    MotifCounts counts{};
    for (const TegEdge& e : teg.edges()) ++counts[index_of(e.motif)];
    return counts;
}

/// Motif counts of every component, indexed by rank. Each edge belongs to the
/// component of its endpoints.
inline std::vector<MotifCounts> motif_counts_per_component(const Teg& teg, const ComponentSet& comps)
{
    std::vector<MotifCounts> counts(comps.size(), MotifCounts{});
    for (const TegEdge& e : teg.edges()) ++counts[comps.component_of(e.from)][index_of(e.motif)];
    return counts;
}

/// Motif distribution over all edges. Throws EmptyScopeError without edges.
inline MotifDistribution motif_distribution(const Teg& teg)
{
    return motif_distribution_from_counts(motif_counts(teg));
}

/// One distribution per component with at least one edge, paired with the
/// component rank.
inline std::vector<std::pair<std::size_t, MotifDistribution>> motif_distribution_per_component(
    const Teg& teg, const ComponentSet& comps)
{
    std::vector<std::pair<std::size_t, MotifDistribution>> out;
    const auto counts = motif_counts_per_component(teg, comps);
    for (std::size_t r = 0; r < counts.size(); ++r) {
        if (total(counts[r]) > 0) out.emplace_back(r, motif_distribution_from_counts(counts[r]));
    }
    return out;
}

/// IETs of the edges matching an optional motif, within an optional component.
inline std::vector<double> iet_samples(const Teg& teg, std::optional<Motif> condition = std::nullopt,
                                       const ComponentSet* comps = nullptr,
                                       std::optional<std::size_t> component = std::nullopt)
{
    std::vector<double> out;
    for (const TegEdge& e : teg.edges()) {
        if (condition && e.motif != *condition) continue;
        if (comps && component && comps->component_of(e.from) != *component) continue;
        out.push_back(e.iet);
    }
    return out;
}

/// Empirical CCDF of the IETs, optionally conditioned on the motif:
/// Pr(iet > t | m). Throws EmptyScopeError when no edge matches.
inline EmpiricalCcdf iet_distribution(const Teg& teg, std::optional<Motif> condition = std::nullopt)
{
    auto samples = iet_samples(teg, condition);
    if (samples.empty()) {
        throw EmptyScopeError(condition ? "no edges with motif " + std::string(to_string(*condition))
                                        : std::string("no edges in the TEG"));
    }
    return EmpiricalCcdf(std::move(samples));
}

// ---------------------------------------------------------------------------
// Static aggregation

struct AggregateSummary {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    /// edge_count / (n (n - 1)), ordered pairs.
    double density = 0.0;
    /// Fraction of directed edges whose reverse is also present.
    double reciprocity = 0.0;
};

/// Directed graph with one edge per ordered node pair that interacted.
struct AggregateGraph {
    std::vector<NodeId> nodes;                       // ascending
    std::vector<std::pair<NodeId, NodeId>> edges;    // ascending, unique

    AggregateSummary summary() const
    {
        AggregateSummary s;
        s.node_count = nodes.size();
        s.edge_count = edges.size();
        if (s.node_count > 1) {
            s.density = static_cast<double>(s.edge_count) /
                        (static_cast<double>(s.node_count) * static_cast<double>(s.node_count - 1));
        }
        if (s.edge_count > 0) {
            std::size_t reciprocated = 0;
            for (const auto& [u, v] : edges) {
                if (std::binary_search(edges.begin(), edges.end(), std::pair{v, u})) ++reciprocated;
            }
            s.reciprocity = static_cast<double>(reciprocated) / static_cast<double>(s.edge_count);
        }
        return s;
    }

    /// Number of weakly connected components over `nodes`.
    std::size_t component_count() const
    {
        DisjointSet sets(nodes.size());
        auto index = [this](NodeId n) {
            return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), n) - nodes.begin());
        };
        for (const auto& [u, v] : edges) sets.unite(index(u), index(v));
        return sets.set_count();
    }
};

namespace detail {

template <typename Range>
AggregateGraph aggregate_events(const Range& events)
{
    AggregateGraph g;
    for (const Event& e : events) {
        g.nodes.push_back(e.source);
        g.nodes.push_back(e.target);
        g.edges.emplace_back(e.source, e.target);
    }
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

}  // namespace detail

inline AggregateGraph aggregate_network(const TemporalNetwork& net) { return detail::aggregate_events(net.events()); }

inline AggregateGraph aggregate_component(const Teg& teg, const ComponentSet& comps, std::size_t rank)
{
    if (rank >= comps.size()) throw InputError("component " + std::to_string(rank) + " does not exist");
    std::vector<Event> events;
    events.reserve(comps[rank].size());
    for (std::size_t v : comps[rank].events) events.push_back(teg.network()[v]);
    return detail::aggregate_events(events);
}

}  // namespace teg

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "teg/event.hpp"
#include "teg/motif.hpp"

namespace teg {

/// Adjacency window. Infinity is an explicit state, not a large float.
class DeltaT {
public:
    static constexpr DeltaT infinite() noexcept { return DeltaT(); }

    static DeltaT finite(double value)
    {
        if (std::isinf(value) && value > 0.0) return infinite();
        if (!(value > 0.0)) throw InputError("delta t must be positive, got " + format_exact(value));
        return DeltaT(value);
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }

    /// The window length, or +inf.
    constexpr double value() const noexcept
    {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }

    /// Whether an inter-event gap lies inside the (open) window.
    constexpr bool admits(double gap) const noexcept { return infinite_ || gap < value_; }

    friend constexpr bool operator==(const DeltaT&, const DeltaT&) = default;

private:
    constexpr DeltaT() = default;
    constexpr explicit DeltaT(double v) : value_(v), infinite_(false) {}

    double value_ = 0.0;
    bool infinite_ = true;
};

inline std::string to_string(DeltaT dt) { return dt.is_infinite() ? "inf" : format_exact(dt.value()); }

/// Events sharing at least one node with 0 < t_j - t_i < dt.
inline bool is_dt_adjacent(const Event& earlier, const Event& later, DeltaT dt) noexcept
{
    const double gap = later.time - earlier.time;
    return earlier.shares_node(later) && gap > 0.0 && dt.admits(gap);
}

struct TegEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    double iet = 0.0;
    Motif motif = Motif::ABAB;

    friend bool operator==(const TegEdge&, const TegEdge&) = default;
};

/// At most two incident edges per direction (each event has two nodes).
class IncidentEdges {
public:
    void push(std::size_t edge)
    {
        if (count_ == slots_.size()) throw std::logic_error("vertex degree exceeds two");
        slots_[count_++] = edge;
    }
    std::span<const std::size_t> view() const noexcept { return {slots_.data(), count_}; }
    std::size_t size() const noexcept { return count_; }

private:
    std::array<std::size_t, 2> slots_{};
    std::size_t count_ = 0;
};

/// The dt-temporal event graph: one vertex per event (vertex k is event k of
/// the network) and an edge from each event to the next event of each of its
/// nodes, when that next event falls within the window.
class Teg {
public:
    Teg(std::shared_ptr<const TemporalNetwork> network, DeltaT dt, std::vector<TegEdge> edges)
        : network_(std::move(network)), dt_(dt), edges_(std::move(edges)),
          out_(network_->size()), in_(network_->size())
    {
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            out_[edges_[k].from].push(k);
            in_[edges_[k].to].push(k);
        }
    }

    const TemporalNetwork& network() const noexcept { return *network_; }
    std::shared_ptr<const TemporalNetwork> shared_network() const noexcept { return network_; }
    DeltaT delta_t() const noexcept { return dt_; }

    std::size_t vertex_count() const noexcept { return network_->size(); }
    std::span<const TegEdge> edges() const noexcept { return edges_; }
    const TegEdge& edge(std::size_t k) const { return edges_[k]; }

    /// Indices into edges() of the out-/in-edges of a vertex.
    std::span<const std::size_t> out_edges(std::size_t vertex) const { return out_[vertex].view(); }
    std::span<const std::size_t> in_edges(std::size_t vertex) const { return in_[vertex].view(); }

private:
    std::shared_ptr<const TemporalNetwork> network_;
    DeltaT dt_;
    std::vector<TegEdge> edges_;
    std::vector<IncidentEdges> out_;
    std::vector<IncidentEdges> in_;
};

/// Build the dt-TEG in one pass over the events, tracking the latest event of
/// every node. Edges are emitted in order of their target vertex.
///
/// The network's event order is the total order: with tied timestamps the
/// earlier-listed event precedes, and the linking edge carries iet = 0.
inline Teg build_teg(std::shared_ptr<const TemporalNetwork> network, DeltaT dt)
{
    const TemporalNetwork& net = *network;
    std::vector<TegEdge> edges;
    edges.reserve(2 * net.size());
    std::unordered_map<NodeId, std::size_t> last;
    last.reserve(net.nodes().size());

    auto link = [&](std::size_t from, std::size_t to) {
        const double gap = net[to].time - net[from].time;
        if (dt.admits(gap)) edges.push_back({from, to, gap, classify_motif(net[from], net[to])});
    };

    for (std::size_t j = 0; j < net.size(); ++j) {
        const Event& e = net[j];
        const auto src = last.find(e.source);
        const auto dst = last.find(e.target);
        const bool has_src = src != last.end();
        const bool has_dst = dst != last.end();
        if (has_src && has_dst && src->second == dst->second) {
            link(src->second, j);
        } else {
            // Lower index first keeps edges sorted by (to, from).
            if (has_src && has_dst && dst->second < src->second) {
                link(dst->second, j);
                link(src->second, j);
            } else {
                if (has_src) link(src->second, j);
                if (has_dst) link(dst->second, j);
            }
        }
        last[e.source] = j;
        last[e.target] = j;
    }
    return Teg(std::move(network), dt, std::move(edges));
}

inline Teg build_teg(const TemporalNetwork& net, DeltaT dt)
{
    return build_teg(std::make_shared<const TemporalNetwork>(net), dt);
}

}  // namespace teg

#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "teg/event_graph.hpp"

namespace teg {

struct LabelledEdge {
    std::size_t i = 0;
    std::size_t j = 0;
    double tau = 0.0;
    Motif motif = Motif::ABAB;

    friend bool operator==(const LabelledEdge&, const LabelledEdge&) = default;
};

/// A TEG with event contents removed: the upper-triangular pair of the
/// inter-event-time matrix and the motif matrix, stored as one sparse list
/// of (i, j, tau, motif) records sorted by (i, j). Optional anchors give the
/// absolute time of some vertices.
class EdgeLabelledTeg {
public:
    EdgeLabelledTeg() = default;

    EdgeLabelledTeg(std::size_t vertex_count, std::vector<LabelledEdge> edges,
                    std::map<std::size_t, double> anchors = {})
        : vertex_count_(vertex_count), edges_(std::move(edges)), anchors_(std::move(anchors))
    {
        std::sort(edges_.begin(), edges_.end(), [](const LabelledEdge& a, const LabelledEdge& b) {
            return a.i != b.i ? a.i < b.i : a.j < b.j;
        });
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            const LabelledEdge& e = edges_[k];
            const std::string key = "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
            if (e.j >= vertex_count_) throw InputError("edge " + key + " references a missing vertex");
            if (e.i >= e.j) throw InputError("edge " + key + " is not upper-triangular");
            if (!std::isfinite(e.tau) || e.tau < 0.0) {
                throw InputError("edge " + key + " has a negative or non-finite tau");
            }
            if (k > 0 && edges_[k - 1].i == e.i && edges_[k - 1].j == e.j) {
                throw InputError("edge " + key + " appears twice");
            }
        }
        for (const auto& [v, t] : anchors_) {
            if (v >= vertex_count_) throw InputError("anchor on missing vertex " + std::to_string(v));
            if (!std::isfinite(t)) throw InputError("anchor on vertex " + std::to_string(v) + " is not finite");
        }
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::span<const LabelledEdge> edges() const noexcept { return edges_; }
    const std::map<std::size_t, double>& anchors() const noexcept { return anchors_; }
    bool has_anchors() const noexcept { return !anchors_.empty(); }

    const LabelledEdge* find(std::size_t i, std::size_t j) const
    {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{i, j},
                                   [](const LabelledEdge& e, const std::pair<std::size_t, std::size_t>& key) {
                                       return e.i != key.first ? e.i < key.first : e.j < key.second;
                                   });
        return it != edges_.end() && it->i == i && it->j == j ? &*it : nullptr;
    }

    std::optional<double> tau(std::size_t i, std::size_t j) const
    {
        if (const auto* e = find(i, j)) return e->tau;
        return std::nullopt;
    }

    std::optional<Motif> motif(std::size_t i, std::size_t j) const
    {
        if (const auto* e = find(i, j)) return e->motif;
        return std::nullopt;
    }

    friend bool operator==(const EdgeLabelledTeg&, const EdgeLabelledTeg&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<LabelledEdge> edges_;
    std::map<std::size_t, double> anchors_;
};

/// Drop the events of a TEG, keeping edge keys and (tau, mu) labels. With
/// `keep_anchors`, every vertex records its absolute event time.
inline EdgeLabelledTeg strip_events(const Teg& teg, bool keep_anchors = false)
{
    std::vector<LabelledEdge> edges;
    edges.reserve(teg.edges().size());
    for (const TegEdge& e : teg.edges()) edges.push_back({e.from, e.to, e.iet, e.motif});
    std::map<std::size_t, double> anchors;
    if (keep_anchors) {
        for (std::size_t v = 0; v < teg.vertex_count(); ++v) anchors.emplace_hint(anchors.end(), v, teg.network()[v].time);
    }
    return EdgeLabelledTeg(teg.vertex_count(), std::move(edges), std::move(anchors));
}

// ---------------------------------------------------------------------------
// JSON file format:
//   {"vertex_count": n, "delta_t": <number|"inf">?,
//    "edges": [{"i":..,"j":..,"tau":..,"motif":"ABAC"}, ...],
//    "anchors": {"<index>": time, ...}?}

inline nlohmann::json to_json(const EdgeLabelledTeg& g, std::optional<DeltaT> dt = std::nullopt)
{
    nlohmann::json doc;
    doc["vertex_count"] = g.vertex_count();
    if (dt) {
        if (dt->is_infinite()) doc["delta_t"] = "inf";
        else doc["delta_t"] = dt->value();
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const LabelledEdge& e : g.edges()) {
        edges.push_back({{"i", e.i}, {"j", e.j}, {"tau", e.tau}, {"motif", std::string(to_string(e.motif))}});
    }
    doc["edges"] = std::move(edges);
    if (g.has_anchors()) {
        nlohmann::json anchors = nlohmann::json::object();
        for (const auto& [v, t] : g.anchors()) anchors[std::to_string(v)] = t;
        doc["anchors"] = std::move(anchors);
    }
    return doc;
}

inline EdgeLabelledTeg edge_labelled_from_json(const nlohmann::json& doc)
{
    try {
        if (!doc.is_object()) throw InputError("edge-labelled TEG must be a JSON object");
        if (!doc.contains("vertex_count") || !doc.at("vertex_count").is_number_unsigned()) {
            throw InputError("missing or invalid 'vertex_count'");
        }
        const std::size_t n = doc.at("vertex_count").get<std::size_t>();
        std::vector<LabelledEdge> edges;
        if (doc.contains("edges")) {
            for (const auto& rec : doc.at("edges")) {
                LabelledEdge e;
                e.i = rec.at("i").get<std::size_t>();
                e.j = rec.at("j").get<std::size_t>();
                e.tau = rec.at("tau").get<double>();
                const auto name = rec.at("motif").get<std::string>();
                const auto m = parse_motif(name);
                if (!m) throw InputError("unknown motif '" + name + "'");
                e.motif = *m;
                edges.push_back(e);
            }
        }
        std::map<std::size_t, double> anchors;
        if (doc.contains("anchors")) {
            for (const auto& [key, value] : doc.at("anchors").items()) {
                std::size_t v = 0;
                if (!detail::parse_number(std::string_view(key), v)) throw InputError("invalid anchor index '" + key + "'");
                anchors[v] = value.get<double>();
            }
        }
        return EdgeLabelledTeg(n, std::move(edges), std::move(anchors));
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed edge-labelled TEG: ") + ex.what());
    }
}

inline std::optional<DeltaT> delta_t_from_json(const nlohmann::json& doc)
{
    if (!doc.contains("delta_t")) return std::nullopt;
    const auto& v = doc.at("delta_t");
    if (v.is_string() && v.get<std::string>() == "inf") return DeltaT::infinite();
    if (v.is_number()) return DeltaT::finite(v.get<double>());
    throw InputError("invalid 'delta_t'");
}

}  // namespace teg

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "teg/errors.hpp"

namespace teg {

using NodeId = std::uint64_t;

/// One instantaneous directed interaction `source -> target` at `time`.
struct Event {
    NodeId source = 0;
    NodeId target = 0;
    double time = 0.0;

    friend bool operator==(const Event&, const Event&) = default;

    bool involves(NodeId node) const noexcept { return source == node || target == node; }

    bool shares_node(const Event& other) const noexcept
    {
        return involves(other.source) || involves(other.target);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Event& e)
{
    return os << '(' << e.source << ',' << e.target << ',' << e.time << ')';
}

/// How events with equal timestamps are treated.
///
/// `stable_order` keeps the input order of tied events as the total order;
/// `reject` refuses any tie.
enum class TiePolicy { reject, stable_order };

/// A time-ordered event sequence together with its node registry.
///
/// Immutable after construction. Events are stably sorted by time, so input
/// order is the secondary key for equal timestamps.
class TemporalNetwork {
public:
    TemporalNetwork() = default;

    explicit TemporalNetwork(std::vector<Event> events,
                             TiePolicy policy = TiePolicy::stable_order)
        : events_(std::move(events)), policy_(policy)
    {
        for (std::size_t k = 0; k < events_.size(); ++k) {
            const Event& e = events_[k];
            if (e.source == e.target) {
                throw InputError("event " + std::to_string(k) + " is a self-loop on node " +
                                 std::to_string(e.source));
            }
            if (!std::isfinite(e.time) || e.time < 0.0) {
                throw InputError("event " + std::to_string(k) +
                                 " has a negative or non-finite time");
            }
        }
        std::stable_sort(events_.begin(), events_.end(),
                         [](const Event& a, const Event& b) { return a.time < b.time; });
        for (std::size_t k = 1; k < events_.size(); ++k) {
            if (events_[k].time == events_[k - 1].time) ++ties_;
        }
        if (policy_ == TiePolicy::reject && ties_ > 0) {
            throw InputError(std::to_string(ties_) +
                             " event(s) share a timestamp with their predecessor "
                             "(tie policy: reject)");
        }

        nodes_.reserve(2 * events_.size());
        for (const Event& e : events_) {
            nodes_.push_back(e.source);
            nodes_.push_back(e.target);
        }
        std::sort(nodes_.begin(), nodes_.end());
        nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    }

    std::span<const Event> events() const noexcept { return events_; }
    const Event& operator[](std::size_t k) const { return events_[k]; }
    std::size_t size() const noexcept { return events_.size(); }
    bool empty() const noexcept { return events_.empty(); }

    /// Sorted, unique node identifiers appearing in any event.
    std::span<const NodeId> nodes() const noexcept { return nodes_; }

    TiePolicy tie_policy() const noexcept { return policy_; }

    /// Number of events whose time equals their predecessor's.
    std::size_t tie_count() const noexcept { return ties_; }

    /// Equality of the event sequences; the tie policy is not compared.
    friend bool operator==(const TemporalNetwork& a, const TemporalNetwork& b)
    {
        return a.events_ == b.events_;
    }

private:
    std::vector<Event> events_;
    std::vector<NodeId> nodes_;
    TiePolicy policy_ = TiePolicy::stable_order;
    std::size_t ties_ = 0;
};

/// Shift time so the first event is at 0 and relabel nodes 0, 1, 2, ... in
/// order of first appearance (source before target within an event).
inline TemporalNetwork canonicalize(const TemporalNetwork& net)
{
    if (net.empty()) throw InputError("cannot canonicalize an empty temporal network");

    const double origin = net[0].time;
    std::unordered_map<NodeId, NodeId> relabel;
    relabel.reserve(net.nodes().size());
    auto label = [&relabel](NodeId n) {
        auto [it, fresh] = relabel.try_emplace(n, static_cast<NodeId>(relabel.size()));
        return it->second;
    };

    std::vector<Event> out;
    out.reserve(net.size());
    for (const Event& e : net.events()) {
        const NodeId s = label(e.source);
        const NodeId t = label(e.target);
        out.push_back({s, t, e.time - origin});
    }
    return TemporalNetwork(std::move(out), net.tie_policy());
}

// ---------------------------------------------------------------------------
// Event-list text format

enum class Delimiter { whitespace, comma };

struct ParseOptions {
    Delimiter delimiter = Delimiter::whitespace;
    /// Column index of the source, target and time fields. Extra columns are
    /// ignored.
    std::size_t source_column = 0;
    std::size_t target_column = 1;
    std::size_t time_column = 2;
    /// Drop self-loop lines instead of failing.
    bool skip_self_loops = false;
    TiePolicy tie_policy = TiePolicy::stable_order;
};

struct ParseStats {
    std::size_t lines = 0;
    std::size_t comments = 0;
    std::size_t skipped_self_loops = 0;
    /// Exact repeats of an earlier (source, target, time) triple. Kept.
    std::size_t duplicates = 0;
    /// Events sharing a timestamp with their predecessor after sorting.
    std::size_t ties = 0;
};

struct ParsedNetwork {
    TemporalNetwork network;
    ParseStats stats;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line, Delimiter delim)
{
    std::vector<std::string_view> fields;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    if (delim == Delimiter::whitespace) {
        std::size_t k = 0;
        while (k < line.size()) {
            while (k < line.size() && is_space(line[k])) ++k;
            const std::size_t begin = k;
            while (k < line.size() && !is_space(line[k])) ++k;
            if (k > begin) fields.push_back(line.substr(begin, k - begin));
        }
    } else {
        std::size_t begin = 0;
        while (true) {
            const std::size_t comma = line.find(',', begin);
            std::string_view f = line.substr(begin, comma == std::string_view::npos ? line.npos : comma - begin);
            while (!f.empty() && is_space(f.front())) f.remove_prefix(1);
            while (!f.empty() && is_space(f.back())) f.remove_suffix(1);
            fields.push_back(f);
            if (comma == std::string_view::npos) break;
            begin = comma + 1;
        }
    }
    return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& out)
{
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end && !text.empty();
}

struct TripleHash {
    std::size_t operator()(const Event& e) const noexcept
    {
        std::size_t h = std::hash<NodeId>{}(e.source);
        h ^= std::hash<NodeId>{}(e.target) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<double>{}(e.time) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace detail

/// Parse a line-oriented event list. Blank lines and lines starting with `#`
/// are skipped.
inline ParsedNetwork parse_events(std::istream& in, const ParseOptions& options = {})
{
    ParseStats stats;
    std::vector<Event> events;
    std::unordered_map<Event, std::size_t, detail::TripleHash> seen;
    const std::size_t needed =
        std::max({options.source_column, options.target_column, options.time_column}) + 1;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        const auto first = view.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (view[first] == '#') {
            ++stats.comments;
            continue;
        }
        ++stats.lines;

        const auto fields = detail::split_fields(view, options.delimiter);
        if (fields.size() < needed) {
            throw ParseError(lineno, "expected at least " + std::to_string(needed) +
                                         " fields, found " + std::to_string(fields.size()));
        }
        Event e;
        if (!detail::parse_number(fields[options.source_column], e.source)) {
            throw ParseError(lineno, "invalid source node '" +
                                         std::string(fields[options.source_column]) + "'");
        }
        if (!detail::parse_number(fields[options.target_column], e.target)) {
            throw ParseError(lineno, "invalid target node '" +
                                         std::string(fields[options.target_column]) + "'");
        }
        if (!detail::parse_number(fields[options.time_column], e.time) || !std::isfinite(e.time)) {
            throw ParseError(lineno, "invalid time '" + std::string(fields[options.time_column]) + "'");
        }
        if (e.time < 0.0) throw ParseError(lineno, "negative time");
        if (e.source == e.target) {
            if (options.skip_self_loops) {
                ++stats.skipped_self_loops;
                continue;
            }
            throw ParseError(lineno, "self-loop on node " + std::to_string(e.source));
        }
        if (!seen.try_emplace(e, lineno).second) ++stats.duplicates;
        events.push_back(e);
    }

    TemporalNetwork net(std::move(events), options.tie_policy);
    stats.ties = net.tie_count();
    return {std::move(net), stats};
}

/// Shortest decimal text that parses back to exactly `value`.
inline std::string format_exact(double value)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

/// Write events as `source target time` lines; times are round-trip exact.
inline void write_events(std::ostream& out, const TemporalNetwork& net)
{
    for (const Event& e : net.events()) {
        out << e.source << ' ' << e.target << ' ' << format_exact(e.time) << '\n';
    }
}

}  // namespace teg

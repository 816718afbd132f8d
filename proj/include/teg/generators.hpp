#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "teg/distribution.hpp"
#include "teg/event.hpp"
#include "teg/random.hpp"

namespace teg {

/// Inter-event time law of the random generator.
///   power_law(a):   density a x^(a-1) on [0, 1], sampled as U^(1/a)
///   exponential(l): rate l, sampled as -ln(U) / l
///   deterministic(c): always c
class IetSampler {
public:
    enum class Kind { power_law, exponential, deterministic };

    static IetSampler power_law(double a) { return IetSampler(Kind::power_law, a); }
    static IetSampler exponential(double rate) { return IetSampler(Kind::exponential, rate); }
    static IetSampler deterministic(double c) { return IetSampler(Kind::deterministic, c); }

    Kind kind() const noexcept { return kind_; }
    double parameter() const noexcept { return param_; }

    /// E[X], the mean step.
    double mean() const noexcept
    {
        switch (kind_) {
        case Kind::power_law: return param_ / (param_ + 1.0);
        case Kind::exponential: return 1.0 / param_;
        case Kind::deterministic: return param_;
        }
        return 0.0;
    }

    double sample(Rng& rng) const
    {
        switch (kind_) {
        case Kind::power_law: return std::pow(rng.uniform_open(), 1.0 / param_);
        case Kind::exponential: return -std::log(rng.uniform_open()) / param_;
        case Kind::deterministic: return param_;
        }
        return 0.0;
    }

private:
    IetSampler(Kind kind, double param) : kind_(kind), param_(param)
    {
        if (!(param > 0.0) || !std::isfinite(param)) {
            throw InputError("IET sampler parameter must be positive and finite, got " + format_exact(param));
        }
    }

    Kind kind_;
    double param_;
};

struct GeneratorConfig {
    std::size_t node_count = 2;
    std::size_t event_count = 1;
    IetSampler iet = IetSampler::power_law(0.2);
    std::uint64_t seed = 0;
};

/// Random temporal network: starting from t = 0, repeatedly advance t by a
/// sampled IET and add an event between two distinct nodes drawn uniformly
/// from {1, ..., N}.
///
/// Times are strictly increasing. A step that vanishes in floating point
/// (t + x == t) advances t to the next representable value instead.
inline TemporalNetwork generate_random(const GeneratorConfig& cfg)
{
    if (cfg.node_count < 2) throw InputError("generator needs at least two nodes");
    if (cfg.event_count < 1) throw InputError("generator needs at least one event");

    Rng rng(cfg.seed);
    std::vector<Event> events;
    events.reserve(cfg.event_count);
    double t = 0.0;
    const std::uint64_t n = cfg.node_count;
    for (std::size_t k = 0; k < cfg.event_count; ++k) {
        const double step = cfg.iet.sample(rng);
        const double next = t + step;
        t = next > t ? next : std::nextafter(t, std::numeric_limits<double>::infinity());
        const std::uint64_t u = rng.below(n);
        std::uint64_t v = rng.below(n - 1);
        if (v >= u) ++v;
        events.push_back({u + 1, v + 1, t});
    }
    return TemporalNetwork(std::move(events), TiePolicy::reject);
}

/// Time-shuffle null model: node pairs stay with their events while the time
/// stamps are permuted uniformly (Fisher-Yates), then re-sorted.
inline TemporalNetwork time_shuffle(const TemporalNetwork& net, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<double> times;
    times.reserve(net.size());
    for (const Event& e : net.events()) times.push_back(e.time);
    for (std::size_t k = times.size(); k > 1; --k) {
        const std::size_t pick = static_cast<std::size_t>(rng.below(k));
        std::swap(times[k - 1], times[pick]);
    }
    std::vector<Event> events;
    events.reserve(net.size());
    for (std::size_t k = 0; k < net.size(); ++k) events.push_back({net[k].source, net[k].target, times[k]});
    return TemporalNetwork(std::move(events), TiePolicy::stable_order);
}

/// Expected motif distribution of the random generator with N nodes:
/// 1/(4N-6) for ABAB and ABBA, (N-2)/(4N-6) for the three-node motifs.
struct AnalyticMotifProbabilities {
    std::uint64_t denominator = 0;
    std::array<std::uint64_t, motif_count> numerators{};
    MotifDistribution distribution;
};

inline AnalyticMotifProbabilities analytic_motif_probabilities(std::size_t node_count)
{
    if (node_count < 3) throw InputError("analytic motif probabilities need N >= 3");
    AnalyticMotifProbabilities out;
    out.denominator = 4 * static_cast<std::uint64_t>(node_count) - 6;
    MotifCounts counts{};
    for (Motif m : all_motifs) counts[index_of(m)] = is_two_node(m) ? 1 : node_count - 2;
    out.numerators = counts;
    out.distribution = motif_distribution_from_counts(counts);
    return out;
}

}  // namespace teg

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "teg/components.hpp"
#include "teg/generators.hpp"
#include "teg/parallel.hpp"

namespace teg {

/// Motif frequencies across ensemble members.
struct MotifEnsemble {
    std::vector<MotifCounts> per_run;
    /// Mean over runs of each run's motif frequency.
    std::array<double, motif_count> mean{};
    /// Standard error of that mean (sample sd / sqrt(runs)).
    std::array<double, motif_count> standard_error{};
    /// Counts summed over all runs.
    MotifCounts pooled{};
};

inline MotifEnsemble summarize_motif_ensemble(std::vector<MotifCounts> per_run)
{
    MotifEnsemble out;
    out.per_run = std::move(per_run);
    const double runs = static_cast<double>(out.per_run.size());
    if (out.per_run.empty()) throw EmptyScopeError("empty ensemble");
    std::vector<std::array<double, motif_count>> freq;
    for (const auto& c : out.per_run) {
        out.pooled += c;
        const auto d = motif_distribution_from_counts(c);
        std::array<double, motif_count> f{};
        for (std::size_t k = 0; k < motif_count; ++k) {
            f[k] = d.mass[k];
            out.mean[k] += f[k] / runs;
        }
        freq.push_back(f);
    }
    if (out.per_run.size() > 1) {
        for (std::size_t k = 0; k < motif_count; ++k) {
            double ss = 0.0;
            for (const auto& f : freq) ss += (f[k] - out.mean[k]) * (f[k] - out.mean[k]);
            out.standard_error[k] = std::sqrt(ss / (runs - 1.0)) / std::sqrt(runs);
        }
    }
    return out;
}

/// Motif counts of `runs` time-shuffled copies of a network; run r uses
/// derive_seed(seed, r).
inline MotifEnsemble shuffled_motif_ensemble(const TemporalNetwork& net, DeltaT dt, std::size_t runs,
                                             std::uint64_t seed, unsigned threads = default_thread_count())
{
    auto counts = ensemble_map(runs, threads, [&](std::size_t r) {
        return motif_counts(build_teg(time_shuffle(net, derive_seed(seed, r)), dt));
    });
    return summarize_motif_ensemble(std::move(counts));
}

/// Motif counts of `runs` random networks; run r uses derive_seed(cfg.seed, r).
inline MotifEnsemble random_motif_ensemble(const GeneratorConfig& cfg, DeltaT dt, std::size_t runs,
                                           unsigned threads = default_thread_count())
{
    auto counts = ensemble_map(runs, threads, [&](std::size_t r) {
        GeneratorConfig member = cfg;
        member.seed = derive_seed(cfg.seed, r);
        return motif_counts(build_teg(generate_random(member), dt));
    });
    return summarize_motif_ensemble(std::move(counts));
}

}  // namespace teg

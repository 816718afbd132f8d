#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "teg/errors.hpp"
#include "teg/motif.hpp"

namespace teg {

/// Probability mass over a sorted support.
template <typename T>
struct DiscreteDistribution {
    std::vector<T> support;
    std::vector<double> mass;
    std::uint64_t samples = 0;

    /// Normalise a count table. Throws EmptyScopeError when every count is 0.
    static DiscreteDistribution from_counts(const std::map<T, std::uint64_t>& counts)
    {
        DiscreteDistribution d;
        for (const auto& [value, n] : counts) d.samples += n;
        if (d.samples == 0) throw EmptyScopeError("distribution over an empty sample");
        for (const auto& [value, n] : counts) {
            d.support.push_back(value);
            d.mass.push_back(static_cast<double>(n) / static_cast<double>(d.samples));
        }
        return d;
    }

    double probability(const T& value) const
    {
        auto it = std::lower_bound(support.begin(), support.end(), value);
        return it != support.end() && *it == value ? mass[static_cast<std::size_t>(it - support.begin())] : 0.0;
    }
};

/// Edge counts per motif, indexed by index_of(Motif).
using MotifCounts = std::array<std::uint64_t, motif_count>;

inline std::uint64_t total(const MotifCounts& counts) noexcept
{
    std::uint64_t n = 0;
    for (auto c : counts) n += c;
    return n;
}

inline MotifCounts& operator+=(MotifCounts& a, const MotifCounts& b) noexcept
{
    for (std::size_t k = 0; k < motif_count; ++k) a[k] += b[k];
    return a;
}

/// Distribution over all six motifs; absent motifs carry zero mass.
using MotifDistribution = DiscreteDistribution<Motif>;

inline MotifDistribution motif_distribution_from_counts(const MotifCounts& counts)
{
    MotifDistribution d;
    d.samples = total(counts);
    if (d.samples == 0) throw EmptyScopeError("motif distribution over a scope without edges");
    for (Motif m : all_motifs) {
        d.support.push_back(m);
        d.mass.push_back(static_cast<double>(counts[index_of(m)]) / static_cast<double>(d.samples));
    }
    return d;
}

/// Shannon entropy in bits; zero masses contribute nothing.
inline double shannon_entropy(std::span<const double> mass) noexcept
{
    double h = 0.0;
    for (double p : mass) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

template <typename T>
double shannon_entropy(const DiscreteDistribution<T>& d) noexcept
{
    return shannon_entropy(std::span<const double>(d.mass));
}

/// Right-continuous empirical survival function Pr(X > x).
class EmpiricalCcdf {
public:
    explicit EmpiricalCcdf(std::vector<double> samples)
    {
        if (samples.empty()) throw EmptyScopeError("empirical CCDF of an empty sample");
        std::sort(samples.begin(), samples.end());
        n_ = samples.size();
        double sum = 0.0;
        for (std::size_t k = 0; k < n_;) {
            std::size_t run = k;
            while (run < n_ && samples[run] == samples[k]) ++run;
            support_.push_back(samples[k]);
            survival_.push_back(static_cast<double>(n_ - run) / static_cast<double>(n_));
            sum += samples[k] * static_cast<double>(run - k);
            k = run;
        }
        mean_ = sum / static_cast<double>(n_);
    }

    /// Distinct sample values, ascending.
    std::span<const double> support() const noexcept { return support_; }
    /// Pr(X > support()[k]).
    std::span<const double> survival() const noexcept { return survival_; }

    double operator()(double x) const noexcept
    {
        auto it = std::upper_bound(support_.begin(), support_.end(), x);
        if (it == support_.begin()) return 1.0;
        return survival_[static_cast<std::size_t>(it - support_.begin()) - 1];
    }

    std::size_t sample_count() const noexcept { return n_; }
    double mean() const noexcept { return mean_; }

private:
    std::vector<double> support_;
    std::vector<double> survival_;
    std::size_t n_ = 0;
    double mean_ = 0.0;
};

/// -integral Pr(X > x) log2 Pr(X > x) dx, evaluated exactly on the
/// piecewise-constant empirical survival function.
inline double cumulative_residual_entropy(const EmpiricalCcdf& ccdf) noexcept
{
    const auto x = ccdf.support();
    const auto s = ccdf.survival();
    double cre = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        if (s[k] > 0.0 && s[k] < 1.0) cre -= s[k] * std::log2(s[k]) * (x[k + 1] - x[k]);
    }
    return cre;
}

inline double cumulative_residual_entropy(std::vector<double> samples)
{
    return cumulative_residual_entropy(EmpiricalCcdf(std::move(samples)));
}

}  // namespace teg

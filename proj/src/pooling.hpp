#pragma once

// Internal day-pooled accumulation shared by the estimator translation units.
// Not installed; estimator outputs must stay bit-reproducible, so every user
// of this header accumulates in ascending index order, two passes.

#include <cmath>
#include <cstdint>
#include <vector>

#include "lobkit/frames.hpp"

namespace lobkit::detail {

struct DayRange {
    std::size_t begin = 0;
    std::size_t end = 0;
};

inline std::vector<DayRange> day_ranges(const FrameSeries& frames) {
    std::vector<DayRange> out;
    const auto& v = frames.frames;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j].day == v[i].day) ++j;
        out.push_back({i, j});
        i = j;
    }
    return out;
}

// Term window touching offsets [off_lo, off_hi] from anchor i stays inside
// the day and inside one halt segment.
inline bool window_ok(const std::vector<TransactionFrame>& v, std::size_t i,
                      const DayRange& d, std::int64_t off_lo, std::int64_t off_hi) {
    const std::int64_t lo = static_cast<std::int64_t>(i) + off_lo;
    const std::int64_t hi = static_cast<std::int64_t>(i) + off_hi;
    if (lo < static_cast<std::int64_t>(d.begin)) return false;
    if (hi >= static_cast<std::int64_t>(d.end)) return false;
    return v[static_cast<std::size_t>(lo)].segment ==
           v[static_cast<std::size_t>(hi)].segment;
}

struct MeanResult {
    double value = 0.0;
    double se = 0.0;
    std::int64_t n = 0;
};

// Equal-weight day pooling. Single-day se is the i.i.d. term se; multi-day se
// is the cross-day dispersion / sqrt(D).
template <typename Valid, typename Term>
MeanResult pooled_mean(const std::vector<DayRange>& days, Valid&& valid,
                       Term&& term) {
    std::vector<double> day_means;
    std::vector<DayRange> day_used;
    std::int64_t total_n = 0;
    for (const auto& d : days) {
        double sum = 0.0;
        std::int64_t n = 0;
        for (std::size_t i = d.begin; i < d.end; ++i) {
            if (valid(i, d)) {
                sum += term(i);
                ++n;
            }
        }
        if (n == 0) continue;
        day_means.push_back(sum / static_cast<double>(n));
        day_used.push_back(d);
        total_n += n;
    }
    MeanResult r;
    r.n = total_n;
    if (day_means.empty()) return r;

    if (day_means.size() == 1) {
        r.value = day_means[0];
        const auto& d = day_used[0];
        double ss = 0.0;
        for (std::size_t i = d.begin; i < d.end; ++i) {
            if (valid(i, d)) {
                const double dev = term(i) - r.value;
                ss += dev * dev;
            }
        }
        if (total_n > 1)
            r.se = std::sqrt(ss / (static_cast<double>(total_n) *
                                   static_cast<double>(total_n - 1)));
        return r;
    }

    double sum = 0.0;
    for (double m : day_means) sum += m;
    const double d_count = static_cast<double>(day_means.size());
    r.value = sum / d_count;
    double ss = 0.0;
    for (double m : day_means) {
        const double dev = m - r.value;
        ss += dev * dev;
    }
    r.se = std::sqrt(ss / ((d_count - 1.0) * d_count));
    return r;
}

}  // namespace lobkit::detail

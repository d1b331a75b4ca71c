#include "lobkit/stats.hpp"

#include <algorithm>
#include <cmath>

#include "lobkit/error.hpp"
#include "lobkit/util.hpp"
#include "pooling.hpp"

namespace lobkit {

using detail::DayRange;
using detail::MeanResult;
using detail::day_ranges;
using detail::pooled_mean;
using detail::window_ok;

namespace {

// E[eps_{t+k} * (q_{t+lag} - q_t)] over an aligned value series (frame units
// in, dollars out).
MeanResult sign_weighted_change(const FrameSeries& frames,
                                std::span<const double> values, int k, int lag) {
    const auto& v = frames.frames;
    const auto days = day_ranges(frames);
    const std::int64_t off_lo = std::min<std::int64_t>({0, k, lag});
    const std::int64_t off_hi = std::max<std::int64_t>({0, k, lag});
    return pooled_mean(
        days,
        [&](std::size_t i, const DayRange& d) {
            return window_ok(v, i, d, off_lo, off_hi);
        },
        [&](std::size_t i) {
            const auto sign = static_cast<double>(
                v[static_cast<std::size_t>(static_cast<std::int64_t>(i) + k)].sign);
            const double dq =
                values[static_cast<std::size_t>(static_cast<std::int64_t>(i) + lag)] -
                values[i];
            return sign * dq * kDollarsPerUnit;
        });
}

std::vector<double> mid_units(const FrameSeries& frames) {
    std::vector<double> out;
    out.reserve(frames.size());
    for (const auto& f : frames.frames) out.push_back(f.mid);
    return out;
}

const char* kInsufficient = "not enough data for requested lag";

}  // namespace

const LagRow& LagTable::at(std::int64_t lag) const {
    for (const auto& r : rows)
        if (r.lag == lag) return r;
    throw Error(ErrorCode::InsufficientData,
                "lag " + std::to_string(lag) + " not present in table");
}

bool LagTable::has(std::int64_t lag) const {
    for (const auto& r : rows)
        if (r.lag == lag) return true;
    return false;
}

std::string lag_table_to_csv(const LagTable& table,
                             const std::vector<std::string>& header_lines) {
    std::string out;
    for (const auto& h : header_lines) {
        out += "# ";
        out += h;
        out += '\n';
    }
    out += "lag,value,se,n\n";
    for (const auto& r : table.rows) {
        out += format_int(r.lag);
        out += ',';
        out += format_double(r.value);
        out += ',';
        out += format_double(r.se);
        out += ',';
        out += format_int(r.n);
        out += '\n';
    }
    return out;
}

LagTable sign_autocorrelation(const FrameSeries& frames, int max_lag) {
    const auto& v = frames.frames;
    const auto days = day_ranges(frames);
    LagTable table;
    for (int lag = 0; lag <= max_lag; ++lag) {
        const auto res = pooled_mean(
            days,
            [&](std::size_t i, const DayRange& d) {
                return window_ok(v, i, d, 0, lag);
            },
            [&](std::size_t i) {
                return static_cast<double>(
                    v[i].sign * v[i + static_cast<std::size_t>(lag)].sign);
            });
        if (res.n == 0) throw Error(ErrorCode::InsufficientData, kInsufficient);
        table.rows.push_back({lag, res.value, res.se, res.n});
    }
    return table;
}

LagTable sign_autocorrelation(std::span<const int> signs, int max_lag) {
    FrameSeries tmp;
    tmp.frames.resize(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        tmp.frames[i].t = static_cast<std::int64_t>(i);
        tmp.frames[i].sign = signs[i];
    }
    return sign_autocorrelation(tmp, max_lag);
}

LagTable response_function(const FrameSeries& frames, int max_lag) {
    const auto values = mid_units(frames);
    LagTable table;
    for (int lag = 0; lag <= max_lag; ++lag) {
        const auto res = sign_weighted_change(frames, values, 0, lag);
        if (res.n == 0) throw Error(ErrorCode::InsufficientData, kInsufficient);
        table.rows.push_back({lag, res.value, res.se, res.n});
    }
    return table;
}

double response_at(const FrameSeries& frames, int lag, double* se_out,
                   std::int64_t* n_out) {
    const auto values = mid_units(frames);
    const auto res = sign_weighted_change(frames, values, 0, lag);
    if (res.n == 0) throw Error(ErrorCode::InsufficientData, kInsufficient);
    if (se_out) *se_out = res.se;
    if (n_out) *n_out = res.n;
    return res.value;
}

LagTable shifted_response(const FrameSeries& frames, int k, int max_lag) {
    const auto values = mid_units(frames);
    LagTable table;
    for (int lag = 0; lag <= max_lag; ++lag) {
        const auto res = sign_weighted_change(frames, values, k, lag);
        if (res.n == 0) throw Error(ErrorCode::InsufficientData, kInsufficient);
        table.rows.push_back({lag, res.value, res.se, res.n});
    }
    return table;
}

double shifted_response_at(const FrameSeries& frames, int k, int lag,
                           double* se_out, std::int64_t* n_out) {
    const auto values = mid_units(frames);
    const auto res = sign_weighted_change(frames, values, k, lag);
    if (res.n == 0) throw Error(ErrorCode::InsufficientData, kInsufficient);
    if (se_out) *se_out = res.se;
    if (n_out) *n_out = res.n;
    return res.value;
}

std::vector<MrrRelationRow> mrr_relation_test(const LagTable& c_table,
                                              const LagTable& r_table,
                                              std::span<const int> lags) {
    const double c1 = c_table.value_at(1);
    if (!(c1 < 1.0))
        throw Error(ErrorCode::DegenerateAutocorrelation, "C(1) >= 1");
    std::vector<MrrRelationRow> rows;
    const double r1 = r_table.value_at(1);
    for (int lag : lags) {
        const auto& c = c_table.at(lag);
        const auto& r = r_table.at(lag);
        if (!(c.value < 1.0))
            throw Error(ErrorCode::DegenerateAutocorrelation,
                        "C(" + std::to_string(lag) + ") >= 1");
        const double factor = (1.0 - c1) / (1.0 - c.value);
        MrrRelationRow row;
        row.lag = lag;
        row.rescaled = r.value * factor;
        row.ratio_to_r1 = r1 != 0.0 ? row.rescaled / r1 : 0.0;
        row.se = r.se * factor;
        rows.push_back(row);
    }
    return rows;
}

ImbalanceImpactGrid impact_by_imbalance_on(const FrameSeries& frames,
                                           std::span<const double> values,
                                           std::span<const std::int64_t> lags,
                                           int bins) {
    if (bins < 1) throw Error(ErrorCode::InvalidConfig, "bins must be >= 1");
    const auto& v = frames.frames;
    const auto days = day_ranges(frames);
    ImbalanceImpactGrid grid;
    grid.bins = bins;
    grid.lags.assign(lags.begin(), lags.end());
    grid.cells.assign(static_cast<std::size_t>(bins),
                      std::vector<GridCell>(lags.size()));

    auto bin_of = [&](double imb) {
        int b = static_cast<int>(std::fabs(imb) * static_cast<double>(bins));
        return std::min(b, bins - 1);
    };

    for (std::size_t li = 0; li < lags.size(); ++li) {
        const std::int64_t lag = lags[li];
        for (int b = 0; b < bins; ++b) {
            const auto res = pooled_mean(
                days,
                [&](std::size_t i, const DayRange& d) {
                    return bin_of(v[i].imbalance) == b &&
                           window_ok(v, i, d, 0, lag);
                },
                [&](std::size_t i) {
                    const double s = v[i].imbalance < 0.0 ? -1.0 : 1.0;
                    const double dq =
                        values[i + static_cast<std::size_t>(lag)] - values[i];
                    return s * dq * kDollarsPerUnit;
                });
            // Empty bins stay n = 0 rather than being interpolated.
            grid.cells[static_cast<std::size_t>(b)][li] = {res.value, res.se, res.n};
        }
    }
    return grid;
}

ImbalanceImpactGrid impact_by_imbalance(const FrameSeries& frames,
                                        std::span<const std::int64_t> lags,
                                        int bins) {
    const auto values = mid_units(frames);
    return impact_by_imbalance_on(frames, values, lags, bins);
}

DepletionImpact depletion_impact(std::span<const DepletionEvent> depletions,
                                 const FrameSeries& frames, int horizon,
                                 std::optional<DepletionCause> cause) {
    const auto& v = frames.frames;
    std::vector<double> terms;
    terms.reserve(depletions.size());
    for (const auto& d : depletions) {
        if (cause && d.cause != *cause) continue;
        if (d.anchor_frame < 0) continue;
        const std::size_t a = static_cast<std::size_t>(d.anchor_frame);
        const std::size_t j = a + static_cast<std::size_t>(horizon);
        if (j >= v.size()) continue;
        if (v[j].day != v[a].day || v[j].segment != v[a].segment) continue;
        const double dir = d.side == BookSide::Ask ? 1.0 : -1.0;
        terms.push_back(dir * (v[j].mid - d.pre_mid) * kDollarsPerUnit);
    }
    if (terms.empty())
        throw Error(ErrorCode::InsufficientData, "no measurable depletions");
    DepletionImpact out;
    out.n = static_cast<std::int64_t>(terms.size());
    double sum = 0.0;
    for (double t : terms) sum += t;
    out.value = sum / static_cast<double>(terms.size());
    double ss = 0.0;
    for (double t : terms) {
        const double dev = t - out.value;
        ss += dev * dev;
    }
    if (terms.size() > 1)
        out.se = std::sqrt(ss / (static_cast<double>(terms.size()) *
                                 static_cast<double>(terms.size() - 1)));
    return out;
}

double depletion_impact_prediction(const MarketConfig& cfg) {
    return 0.5 * cfg.tick_size + cfg.rebate;
}

LagTable midprice_return_covariance(const FrameSeries& frames, int max_lag) {
    const auto& v = frames.frames;
    const auto values = mid_units(frames);
    const auto days = day_ranges(frames);
    LagTable table;
    for (int lag = 0; lag <= max_lag; ++lag) {
        const auto res = pooled_mean(
            days,
            [&](std::size_t i, const DayRange& d) {
                return window_ok(v, i, d, 0, lag + 1);
            },
            [&](std::size_t i) {
                const std::size_t j = i + static_cast<std::size_t>(lag);
                const double r_late = (values[j + 1] - values[j]) * kDollarsPerUnit;
                const double r_early = (values[i + 1] - values[i]) * kDollarsPerUnit;
                return r_late * r_early;
            });
        if (res.n == 0) throw Error(ErrorCode::InsufficientData, kInsufficient);
        table.rows.push_back({lag, res.value, res.se, res.n});
    }
    return table;
}

std::vector<CovIdentityRow> covariance_identity_test(const FrameSeries& frames,
                                                     int max_lag,
                                                     double r_infinity,
                                                     double gap_floor) {
    const LagTable cov = midprice_return_covariance(frames, max_lag);
    const auto values = mid_units(frames);
    auto shifted_r1 = [&](int k) {
        const auto res = sign_weighted_change(frames, values, k, 1);
        if (res.n == 0) throw Error(ErrorCode::InsufficientData, kInsufficient);
        return res.value;
    };
    std::vector<CovIdentityRow> rows;
    for (int lag = 1; lag <= max_lag; ++lag) {
        const double rk = shifted_r1(lag);
        const double rk1 = shifted_r1(lag + 1);
        CovIdentityRow row;
        row.lag = lag;
        row.lhs = cov.value_at(lag);
        row.rhs = r_infinity * (rk - rk1);
        row.gap = std::fabs(row.lhs - row.rhs) /
                  std::max({std::fabs(row.lhs), std::fabs(row.rhs), gap_floor});
        rows.push_back(row);
    }
    return rows;
}

GEstimate estimate_G(const LagTable& c_table, const LagTable& r_table,
                     int lag_star) {
    GEstimate est;
    est.lag_star = lag_star;
    est.method = GMethod::Plateau;

    const auto& c_star = c_table.at(lag_star);
    if (1.0 - c_star.value < 1e-6)
        throw Error(ErrorCode::DegenerateAutocorrelation,
                    "C(lag*) too close to 1");
    const auto& r_star = r_table.at(lag_star);
    est.g_hat = r_star.value / (1.0 - c_star.value);

    for (int lag = 1; lag <= lag_star; ++lag) {
        if (!c_table.has(lag) || !r_table.has(lag)) continue;
        const auto& c = c_table.at(lag);
        const auto& r = r_table.at(lag);
        if (1.0 - c.value < 1e-6) continue;
        const double g = r.value / (1.0 - c.value);
        const double se = r.se / (1.0 - c.value);
        est.per_lag.rows.push_back({lag, g, se, r.n});
    }

    const int lo = std::max(2, lag_star - 20);
    double max_slope = 0.0;
    for (int lag = lo; lag <= lag_star; ++lag) {
        if (!est.per_lag.has(lag) || !est.per_lag.has(lag - 1)) continue;
        const double g = est.per_lag.value_at(lag);
        const double g_prev = est.per_lag.value_at(lag - 1);
        if (est.g_hat != 0.0)
            max_slope = std::max(max_slope,
                                 std::fabs(g - g_prev) / std::fabs(est.g_hat));
    }
    est.max_rel_slope = max_slope;
    est.flat = max_slope < 0.05;
    return est;
}

SpreadCheck implied_spread_check(const LagTable& c_table, const LagTable& r_table,
                                 const FrameSeries& frames) {
    const double c1 = c_table.value_at(1);
    if (!(c1 < 1.0))
        throw Error(ErrorCode::DegenerateAutocorrelation, "C(1) >= 1");
    if (frames.empty()) throw Error(ErrorCode::EmptyInput, "no frames");
    SpreadCheck out;
    out.implied = 2.0 * r_table.value_at(1) / (1.0 - c1);
    double sum = 0.0;
    for (const auto& f : frames.frames) sum += f.spread_dollars();
    out.realized = sum / static_cast<double>(frames.size());
    out.ratio = out.realized != 0.0 ? out.implied / out.realized : 0.0;
    return out;
}

}  // namespace lobkit

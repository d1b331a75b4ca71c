#include "lobkit/proxy.hpp"

#include <cmath>

#include "lobkit/error.hpp"
#include "lobkit/util.hpp"
#include "pooling.hpp"

namespace lobkit {

using detail::DayRange;
using detail::day_ranges;
using detail::pooled_mean;
using detail::window_ok;

const char* proxy_variant_name(ProxyVariant variant) {
    switch (variant) {
        case ProxyVariant::SquaredVolume: return "squared";
        case ProxyVariant::LinearRebate: return "linear";
        case ProxyVariant::Vwap: return "vwap";
        case ProxyVariant::Mid: return "mid";
    }
    return "unknown";
}

ProxyVariant proxy_variant_from_name(const std::string& name) {
    if (name == "squared") return ProxyVariant::SquaredVolume;
    if (name == "linear") return ProxyVariant::LinearRebate;
    if (name == "vwap") return ProxyVariant::Vwap;
    if (name == "mid") return ProxyVariant::Mid;
    throw Error(ErrorCode::InvalidConfig, "unknown proxy variant '" + name + "'");
}

ProxySeries compute_proxy(const FrameSeries& frames, ProxyVariant variant,
                          const MarketConfig& cfg) {
    ProxySeries out;
    out.variant = variant;
    out.cfg = cfg;
    out.values.reserve(frames.size());
    const double r_units = cfg.rebate * kUnitsPerDollar;
    for (const auto& f : frames.frames) {
        if (f.bid_depth <= 0 || f.ask_depth <= 0)
            throw Error(ErrorCode::EmptySide,
                        "frame t=" + std::to_string(f.t) + " has an empty side");
        const double vb = static_cast<double>(f.bid_depth);
        const double va = static_cast<double>(f.ask_depth);
        double value = 0.0;
        switch (variant) {
            case ProxyVariant::SquaredVolume: {
                const double wa = va * va, wb = vb * vb;
                value = (wa * (f.bid - r_units) + wb * (f.ask + r_units)) / (wa + wb);
                break;
            }
            case ProxyVariant::LinearRebate:
                value = (va * (f.bid - r_units) + vb * (f.ask + r_units)) / (va + vb);
                break;
            case ProxyVariant::Vwap:
                value = (va * f.bid + vb * f.ask) / (va + vb);
                break;
            case ProxyVariant::Mid:
                value = f.mid;
                break;
        }
        out.values.push_back(value);
    }
    return out;
}

LagTable proxy_response(const FrameSeries& frames, const ProxySeries& proxy,
                        int max_lag) {
    if (proxy.values.size() != frames.size())
        throw Error(ErrorCode::InvalidConfig, "proxy not aligned with frames");
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
                return static_cast<double>(v[i].sign) *
                       (proxy.values[i + static_cast<std::size_t>(lag)] -
                        proxy.values[i]) *
                       kDollarsPerUnit;
            });
        if (res.n == 0)
            throw Error(ErrorCode::InsufficientData, "not enough frames");
        table.rows.push_back({lag, res.value, res.se, res.n});
    }
    return table;
}

LagTable return_correlation(const FrameSeries& frames,
                            std::span<const double> values, int max_lag) {
    if (values.size() != frames.size())
        throw Error(ErrorCode::InvalidConfig, "series not aligned with frames");
    const auto& v = frames.frames;
    const auto days = day_ranges(frames);

    // One-step squared-return normalizer over the whole sample.
    double denom_sum = 0.0;
    std::int64_t denom_n = 0;
    for (const auto& d : days) {
        for (std::size_t i = d.begin; i < d.end; ++i) {
            if (!window_ok(v, i, d, 0, 1)) continue;
            const double r = (values[i + 1] - values[i]) * kDollarsPerUnit;
            denom_sum += r * r;
            ++denom_n;
        }
    }
    if (denom_n == 0)
        throw Error(ErrorCode::InsufficientData, "no one-step returns");
    const double denom = denom_sum / static_cast<double>(denom_n);
    if (denom == 0.0)
        throw Error(ErrorCode::ZeroVariance, "constant value series");

    LagTable table;
    for (int lag = 1; lag <= max_lag; ++lag) {
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
        if (res.n == 0)
            throw Error(ErrorCode::InsufficientData, "not enough returns");
        table.rows.push_back({lag, res.value / denom, res.se / denom, res.n});
    }
    return table;
}

LagTable signature_plot(const FrameSeries& frames, std::span<const double> values,
                        std::span<const std::int64_t> lags) {
    if (values.size() != frames.size())
        throw Error(ErrorCode::InvalidConfig, "series not aligned with frames");
    const auto& v = frames.frames;
    const auto days = day_ranges(frames);
    LagTable table;
    for (std::int64_t lag : lags) {
        if (lag < 1)
            throw Error(ErrorCode::InvalidConfig, "signature lag must be >= 1");
        const auto res = pooled_mean(
            days,
            [&](std::size_t i, const DayRange& d) {
                return window_ok(v, i, d, 0, lag);
            },
            [&](std::size_t i) {
                const double dq =
                    (values[i + static_cast<std::size_t>(lag)] - values[i]) *
                    kDollarsPerUnit;
                return dq * dq;
            });
        if (res.n == 0)
            throw Error(ErrorCode::InsufficientData, "not enough samples");
        const double sigma = std::sqrt(res.value / static_cast<double>(lag));
        double se = 0.0;
        if (sigma > 0.0) se = res.se / (2.0 * sigma * static_cast<double>(lag));
        table.rows.push_back({lag, sigma, se, res.n});
    }
    return table;
}

CaptureResult imbalance_information_capture(const FrameSeries& frames,
                                            const ProxySeries& proxy,
                                            int horizon, int bins) {
    const std::int64_t lag_list[1] = {horizon};
    const auto mid_grid = impact_by_imbalance(frames, lag_list, bins);
    const auto proxy_grid =
        impact_by_imbalance_on(frames, proxy.values, lag_list, bins);

    CaptureResult out;
    out.horizon = horizon;
    double weighted = 0.0;
    std::int64_t weight_n = 0;
    for (int b = 0; b < bins; ++b) {
        const auto& mid_cell = mid_grid.cell(b, 0);
        const auto& proxy_cell = proxy_grid.cell(b, 0);
        CaptureBin cb;
        cb.bin = b;
        cb.n = mid_cell.n;
        cb.mid_impact = mid_cell.value;
        cb.proxy_impact = proxy_cell.value;
        if (mid_cell.n > 0 && mid_cell.value != 0.0)
            cb.capture = 1.0 - proxy_cell.value / mid_cell.value;
        out.bins_out.push_back(cb);
        if (b >= bins / 2 && mid_cell.n > 0 && mid_cell.value != 0.0) {
            weighted += cb.capture * static_cast<double>(mid_cell.n);
            weight_n += mid_cell.n;
        }
    }
    if (weight_n > 0) out.aggregate = weighted / static_cast<double>(weight_n);
    return out;
}

NewsCovarianceEstimate news_trade_covariance(const FrameSeries& frames,
                                             const ProxySeries& proxy) {
    if (proxy.values.size() != frames.size())
        throw Error(ErrorCode::InvalidConfig, "proxy not aligned with frames");
    NewsCovarianceEstimate est;
    est.r1 = response_at(frames, 1);
    est.r1_shifted = shifted_response_at(frames, 1, 1);
    const LagTable rp = proxy_response(frames, proxy, 1);
    est.rp1 = rp.value_at(1);
    // The identity is kept exact by construction; the se comes from the
    // combined per-term series (all three components share the lag-1 window).
    est.value = est.r1 + est.r1_shifted - est.rp1;

    const auto& v = frames.frames;
    const auto days = day_ranges(frames);
    const auto res = pooled_mean(
        days,
        [&](std::size_t i, const DayRange& d) { return window_ok(v, i, d, 0, 1); },
        [&](std::size_t i) {
            const double dx = (v[i + 1].mid - v[i].mid) * kDollarsPerUnit;
            const double dp =
                (proxy.values[i + 1] - proxy.values[i]) * kDollarsPerUnit;
            return static_cast<double>(v[i].sign) * dx +
                   static_cast<double>(v[i + 1].sign) * dx -
                   static_cast<double>(v[i].sign) * dp;
        });
    est.se = res.se;
    est.n = res.n;
    return est;
}

std::string proxy_to_csv(const ProxySeries& proxy,
                         const std::vector<std::string>& header_lines) {
    std::string out;
    out += "# lobkit-proxy v1 variant=";
    out += proxy_variant_name(proxy.variant);
    out += " rebate_units=" + format_double(proxy.cfg.rebate * kUnitsPerDollar);
    out += '\n';
    for (const auto& h : header_lines) {
        out += "# ";
        out += h;
        out += '\n';
    }
    out += "t,value\n";
    for (std::size_t i = 0; i < proxy.values.size(); ++i) {
        out += format_int(static_cast<std::int64_t>(i));
        out += ',';
        out += format_double(proxy.values[i]);
        out += '\n';
    }
    return out;
}

}  // namespace lobkit

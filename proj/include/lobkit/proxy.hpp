#pragma once

#include <span>
#include <string>
#include <vector>

#include "lobkit/frames.hpp"
#include "lobkit/lag_table.hpp"
#include "lobkit/stats.hpp"
#include "lobkit/types.hpp"

namespace lobkit {

enum class ProxyVariant : int { SquaredVolume = 0, LinearRebate = 1, Vwap = 2, Mid = 3 };

const char* proxy_variant_name(ProxyVariant variant);
ProxyVariant proxy_variant_from_name(const std::string& name);

// Fundamental-price proxy series, aligned with the frames it was computed
// from. Values are in frame price units (1e-4 dollars).
struct ProxySeries {
    ProxyVariant variant = ProxyVariant::SquaredVolume;
    MarketConfig cfg;
    std::vector<double> values;

    std::span<const double> span() const { return values; }
};

// SquaredVolume: [Va^2 (b - r) + Vb^2 (a + r)] / (Va^2 + Vb^2)
// LinearRebate:  [Va (b - r) + Vb (a + r)] / (Va + Vb)
// Vwap:          [Va b + Vb a] / (Va + Vb)
// Mid:           (a + b) / 2
// The rebate-adjusted variants can leave (b, a); Vwap cannot.
ProxySeries compute_proxy(const FrameSeries& frames, ProxyVariant variant,
                          const MarketConfig& cfg);

// R^(q)(lag) = E[eps_t * (q_{t+lag} - q_t)] in dollars.
LagTable proxy_response(const FrameSeries& frames, const ProxySeries& proxy,
                        int max_lag);

// corr_q(lag): lag-separated return covariance normalized by the one-step
// squared return, per the paper's convention.
LagTable return_correlation(const FrameSeries& frames,
                            std::span<const double> values, int max_lag);

// sigma_q(lag) = sqrt(E[(q_{t+lag} - q_t)^2] / lag) in dollars; flat for a
// martingale.
LagTable signature_plot(const FrameSeries& frames, std::span<const double> values,
                        std::span<const std::int64_t> lags);

struct CaptureBin {
    int bin = 0;               // |iota| in [bin/bins, (bin+1)/bins)
    double capture = 0.0;      // 1 - R^(proxy)(h|iota) / R^(mid)(h|iota)
    double proxy_impact = 0.0; // dollars
    double mid_impact = 0.0;   // dollars
    std::int64_t n = 0;
};

struct CaptureResult {
    std::vector<CaptureBin> bins_out;
    double aggregate = 0.0;  // n-weighted capture over |iota| >= 0.5 bins
    int horizon = 0;
};

// How much of the imbalance information the proxy has already absorbed.
CaptureResult imbalance_information_capture(const FrameSeries& frames,
                                            const ProxySeries& proxy,
                                            int horizon, int bins = 10);

struct NewsCovarianceEstimate {
    double value = 0.0;  // E[eps_{t+1} W_t], dollars
    double se = 0.0;
    double r1 = 0.0;          // R(1)
    double r1_shifted = 0.0;  // R_1(1)
    double rp1 = 0.0;         // R^(proxy)(1)
    std::int64_t n = 0;
};

// value = R(1) + R_1(1) - R^(proxy)(1); positive means news pull the next
// trade in their direction.
NewsCovarianceEstimate news_trade_covariance(const FrameSeries& frames,
                                             const ProxySeries& proxy);

// Proxy CSV: `t,value` in price units with '#' headers.
std::string proxy_to_csv(const ProxySeries& proxy,
                         const std::vector<std::string>& header_lines = {});

}  // namespace lobkit

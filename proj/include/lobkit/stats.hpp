#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lobkit/frames.hpp"
#include "lobkit/lag_table.hpp"
#include "lobkit/types.hpp"

namespace lobkit {

// Estimation conventions shared by every routine here:
//  - a (t, t+lag) pair contributes only when both endpoints (and any shifted
//    sign index) fall in the same halt-delimited segment;
//  - terms are accumulated in ascending frame order, two-pass (mean, then
//    squared deviations), so results are bit-reproducible and match a naive
//    double-loop reference exactly;
//  - with a single day the standard error is the i.i.d. term se; with D > 1
//    days the value is the equal-weight day average and the se is the
//    cross-day dispersion / sqrt(D).
// Prices enter in frame units and leave in dollars.

// C(lag) = E[eps_{t+lag} * eps_t]; C(0) == 1 exactly.
LagTable sign_autocorrelation(const FrameSeries& frames, int max_lag);
LagTable sign_autocorrelation(std::span<const int> signs, int max_lag);

// R(lag) = E[eps_t * (x_{t+lag} - x_t)] in dollars. Negative lags supported
// (the sign stays at t, the price window runs backward).
LagTable response_function(const FrameSeries& frames, int max_lag);
double response_at(const FrameSeries& frames, int lag, double* se_out = nullptr,
                   std::int64_t* n_out = nullptr);

// R_k(lag) = E[eps_{t+k} * (x_{t+lag} - x_t)].
LagTable shifted_response(const FrameSeries& frames, int k, int max_lag);
double shifted_response_at(const FrameSeries& frames, int k, int lag,
                           double* se_out = nullptr, std::int64_t* n_out = nullptr);

struct MrrRelationRow {
    std::int64_t lag = 0;
    double rescaled = 0.0;      // R(lag) * (1 - C(1)) / (1 - C(lag))
    double ratio_to_r1 = 0.0;   // rescaled / R(1)
    double se = 0.0;            // R(lag) se scaled by the same factor
};

// The parameter-free MRR prediction: every row's `rescaled` should equal R(1).
std::vector<MrrRelationRow> mrr_relation_test(const LagTable& c_table,
                                              const LagTable& r_table,
                                              std::span<const int> lags);

struct GridCell {
    double value = 0.0;  // dollars
    double se = 0.0;
    std::int64_t n = 0;
};

// 10 equidistant |imbalance| bins x lags; sell-side observations enter with
// flipped sign so buy pressure is positive in every bin.
struct ImbalanceImpactGrid {
    int bins = 10;
    std::vector<std::int64_t> lags;
    std::vector<std::vector<GridCell>> cells;  // [bin][lag index]

    const GridCell& cell(int bin, std::size_t lag_index) const {
        return cells[static_cast<std::size_t>(bin)][lag_index];
    }
};

// R(lag | iota) on the mid price.
ImbalanceImpactGrid impact_by_imbalance(const FrameSeries& frames,
                                        std::span<const std::int64_t> lags,
                                        int bins = 10);
// Same conditioning applied to an arbitrary aligned value series (dollars
// out; `values` in frame units). Used for proxy-vs-mid capture comparisons.
ImbalanceImpactGrid impact_by_imbalance_on(const FrameSeries& frames,
                                           std::span<const double> values,
                                           std::span<const std::int64_t> lags,
                                           int bins = 10);

struct DepletionImpact {
    double value = 0.0;  // dollars, signed toward the depletion direction
    double se = 0.0;
    std::int64_t n = 0;
};

// Mean mid move, in the depletion direction, `horizon` transactions after a
// queue depletion. The model predicts tick/2 + rebate.
DepletionImpact depletion_impact(std::span<const DepletionEvent> depletions,
                                 const FrameSeries& frames, int horizon,
                                 std::optional<DepletionCause> cause = std::nullopt);
double depletion_impact_prediction(const MarketConfig& cfg);

// cov_x(lag) = E[(x_{t+1+lag} - x_{t+lag}) * (x_{t+1} - x_t)] in dollars^2.
LagTable midprice_return_covariance(const FrameSeries& frames, int max_lag);

struct CovIdentityRow {
    std::int64_t lag = 0;
    double lhs = 0.0;  // cov_x(lag)
    double rhs = 0.0;  // R(inf) * [R_lag(1) - R_{lag+1}(1)]
    double gap = 0.0;  // |lhs - rhs| / max(|lhs|, |rhs|, floor)
};

// Diagnostic, not an assertion: the identity is expected to hold on
// continuous/small-tick data and fail on large-tick data.
std::vector<CovIdentityRow> covariance_identity_test(const FrameSeries& frames,
                                                     int max_lag,
                                                     double r_infinity,
                                                     double gap_floor = 1e-12);

enum class GMethod : int { Plateau = 0, PerLag = 1 };

struct GEstimate {
    double g_hat = 0.0;     // dollars
    GMethod method = GMethod::Plateau;
    int lag_star = 50;
    LagTable per_lag;       // G(lag) = R(lag) / (1 - C(lag))
    double max_rel_slope = 0.0;  // over [lag_star - 20, lag_star]
    bool flat = true;            // max_rel_slope < 0.05
};

GEstimate estimate_G(const LagTable& c_table, const LagTable& r_table,
                     int lag_star);

struct SpreadCheck {
    double implied = 0.0;   // 2 R(1) / (1 - C(1)), dollars
    double realized = 0.0;  // mean pre-trade spread, dollars
    double ratio = 0.0;     // implied / realized
};

SpreadCheck implied_spread_check(const LagTable& c_table, const LagTable& r_table,
                                 const FrameSeries& frames);

}  // namespace lobkit

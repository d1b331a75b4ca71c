#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lobkit/frames.hpp"
#include "lobkit/types.hpp"

namespace lobkit {

struct ReportOptions {
    std::string ticker = "UNKNOWN";
    std::vector<int> relation_lags = {2, 3, 4, 5, 10, 20};
    int horizon = 50;     // plateau lag for permanent impacts
    int bins = 10;
    int max_lag = 50;
    std::vector<std::string> provenance;  // extra '#' header lines
};

// Emits the four paper-shaped tables as (filename, csv) pairs, all with
// columns `ticker,statistic,value,se`:
//   table1: R(1) and the rescaled R(lag) values,
//   table2: permanent impact of depletions (pooled and by cause) and of a
//           large imbalance, plus the tick/2 + rebate prediction,
//   table3: lag-1 return correlations of the three proxies and the mid,
//   table4: mean price, mean spread, C(1), implied news covariance.
std::vector<std::pair<std::string, std::string>> build_report(
    const FrameSeries& frames, const std::vector<DepletionEvent>& depletions,
    const ReportOptions& opts);

}  // namespace lobkit

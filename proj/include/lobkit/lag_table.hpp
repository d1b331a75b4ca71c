#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lobkit {

struct LagRow {
    std::int64_t lag = 0;
    double value = 0.0;
    double se = 0.0;
    std::int64_t n = 0;
};

struct LagTable {
    std::vector<LagRow> rows;

    const LagRow& at(std::int64_t lag) const;
    bool has(std::int64_t lag) const;
    double value_at(std::int64_t lag) const { return at(lag).value; }
};

// CSV body: `lag,value,se,n`; header lines are prefixed with '#'.
std::string lag_table_to_csv(const LagTable& table,
                             const std::vector<std::string>& header_lines = {});

}  // namespace lobkit

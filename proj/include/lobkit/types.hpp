#pragma once

#include <cstdint>
#include <vector>

namespace lobkit {

// Prices are carried as integer multiples of 1e-4 dollars ("price units",
// the LOBSTER convention: dollars x 10000). A one-cent tick is 100 units.
// Conversion to dollars happens only at the estimator/report boundary.
inline constexpr double kDollarsPerUnit = 1e-4;
inline constexpr double kUnitsPerDollar = 1e4;

using Price = std::int64_t;   // 1e-4 dollar units
using Shares = std::int64_t;
using OrderId = std::int64_t;

// Empty-level sentinel used by LOBSTER order-book files. Ask side uses
// +9999999999, bid side -9999999999; we accept either sign on either side.
inline constexpr Price kEmptyLevelSentinel = 9999999999LL;

enum class EventType : int {
    Submission = 1,
    PartialCancel = 2,
    Deletion = 3,
    ExecVisible = 4,
    ExecHidden = 5,
    Halt = 7,
};

enum class BookSide : int { Bid = 0, Ask = 1 };

// One parsed order-book message. `direction` is the side of the *resting*
// limit order (+1 buy, -1 sell); for executions the aggressor sign is the
// negative of it.
struct LobEvent {
    double time_s = 0.0;       // seconds after midnight
    EventType type = EventType::Submission;
    OrderId order_id = 0;
    Shares size = 0;
    Price price = 0;           // 1e-4 dollar units, exactly as given
    int direction = 0;         // +1 buy, -1 sell (0 only for halts)
};

struct SnapshotLevel {
    Price ask_price = kEmptyLevelSentinel;
    Shares ask_size = 0;
    Price bid_price = -kEmptyLevelSentinel;
    Shares bid_size = 0;

    bool ask_empty() const {
        return ask_size == 0 || ask_price == kEmptyLevelSentinel ||
               ask_price == -kEmptyLevelSentinel;
    }
    bool bid_empty() const {
        return bid_size == 0 || bid_price == kEmptyLevelSentinel ||
               bid_price == -kEmptyLevelSentinel;
    }
};

struct BookSnapshot {
    std::vector<SnapshotLevel> levels;  // level 1 first
};

struct SessionWindow {
    double start_s = 37800.0;  // 10:30, one hour after the open
    double end_s = 54000.0;    // 15:00, one hour before the close

    bool contains(double t) const { return t >= start_s && t < end_s; }
};

struct MarketConfig {
    double tick_size = 0.01;   // dollars
    double rebate = 0.003;     // dollars per share
    int levels_tracked = 10;

    Price tick_units() const {
        return static_cast<Price>(tick_size * kUnitsPerDollar + 0.5);
    }
};

// Per-transaction snapshot of the pre-trade book, in transaction time.
// One frame corresponds to one market order (possibly walking several
// resting orders). Mid can be a half unit, hence double; for parsed data
// bid/ask/mid are exact integers in units.
struct TransactionFrame {
    std::int64_t t = 0;        // transaction index within the day stream
    double wall_time_s = 0.0;
    int sign = 0;              // +1 buyer-initiated, -1 seller-initiated
    double bid = 0.0;          // 1e-4 dollar units
    double ask = 0.0;
    double mid = 0.0;
    Shares bid_depth = 0;
    Shares ask_depth = 0;
    double imbalance = 0.0;    // (Vb - Va) / (Vb + Va)
    Shares traded_size = 0;
    bool depleted = false;     // this transaction emptied a best queue
    std::int32_t segment = 0;  // halt-delimited run; lags never cross it
    std::int32_t day = 0;      // instrument-day index (one per input file)

    double mid_dollars() const { return mid * kDollarsPerUnit; }
    double spread_dollars() const { return (ask - bid) * kDollarsPerUnit; }
};

enum class DepletionCause : int { Execution = 0, Cancellation = 1 };

struct DepletionEvent {
    std::int64_t anchor_frame = -1;  // frame whose pre-trade mid is pre_mid
    std::int64_t event_row = -1;     // source event index (cancellations)
    BookSide side = BookSide::Ask;
    DepletionCause cause = DepletionCause::Execution;
    double pre_mid = 0.0;            // units, immediately before the update
    double post_mid = 0.0;           // units, immediately after the update
};

enum class TickRegime : int { Large = 0, Medium = 1, Small = 2 };

const char* tick_regime_name(TickRegime regime);

struct TickRegimeResult {
    TickRegime regime = TickRegime::Medium;
    double mean_spread = 0.0;  // dollars
};

}  // namespace lobkit

#pragma once

#include <list>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lobkit/types.hpp"

namespace lobkit {

struct BestQuote {
    Price price = 0;
    Shares depth = 0;
};

// What a single event did to the book. Captured pre/post best quotes let
// callers attribute mid moves to event kinds without re-querying the book.
struct BookDelta {
    EventType type = EventType::Submission;
    BookSide side = BookSide::Bid;
    Price price = 0;
    Shares size = 0;
    OrderId order_id = 0;
    bool mutated = false;          // false for hidden execs, halts, no-ops
    bool unknown_id = false;       // cancel/exec of an id we never tracked
    bool depleted_level = false;   // a best level reached zero depth
    std::optional<BestQuote> pre_bid, pre_ask;
    std::optional<BestQuote> post_bid, post_ask;

    bool mid_changed() const;
};

struct ReconcileMismatch {
    int level = 0;            // 1-based
    BookSide side = BookSide::Bid;
    std::string field;        // "price" or "size"
    std::int64_t book_value = 0;
    std::int64_t snapshot_value = 0;
};

struct ReconcileReport {
    std::vector<ReconcileMismatch> mismatches;
    int levels_checked = 0;

    bool pass() const { return mismatches.empty(); }
};

// Price-time-priority book over integer price units. FIFO queues per level;
// order ids indexed for O(1) cancel/execute lookup.
class Book {
public:
    explicit Book(int levels_tracked = 10) : levels_tracked_(levels_tracked) {}

    // Applies a visible-book event (types 1-4). Types 5 and 7 are accepted
    // and reported as non-mutating. Throws Error(CrossedBook) if a submission
    // would cross or lock the opposite side.
    BookDelta apply(const LobEvent& event);

    // Installs one synthetic resting order per snapshot level. Used to
    // bootstrap replays that begin mid-session; later operations on untracked
    // real ids fall through to these aggregates.
    void seed_from_snapshot(const BookSnapshot& snapshot);

    std::optional<BestQuote> best_bid() const;
    std::optional<BestQuote> best_ask() const;

    // Mid in price units; half-units are exact. Empty if either side is.
    std::optional<double> mid() const;

    ReconcileReport reconcile(const BookSnapshot& snapshot, int levels) const;

    std::int64_t unknown_id_count() const { return unknown_ids_; }
    std::int64_t seed_adjustments() const { return seed_adjustments_; }

private:
    struct Order {
        OrderId id;
        Shares size;
    };
    struct Level {
        std::list<Order> queue;
        Shares total = 0;
    };
    struct OrderRef {
        BookSide side;
        Price price;
        std::list<Order>::iterator it;
    };

    using BidMap = std::map<Price, Level, std::greater<Price>>;
    using AskMap = std::map<Price, Level>;

    BookDelta make_delta(const LobEvent& event) const;
    void finish_delta(BookDelta& delta) const;
    void insert_order(BookSide side, Price price, OrderId id, Shares size);
    // Removes up to `size` shares from an order; erases it (and its level)
    // when it hits zero. Returns true if the level at that price vanished
    // while being the best.
    bool reduce_order(const OrderRef& ref, Shares size, bool remove_all);
    // nullopt when no seeded order rests at that price; otherwise whether the
    // reduction emptied the best level.
    std::optional<bool> reduce_seed(BookSide side, Price price, Shares size);

    BidMap bids_;
    AskMap asks_;
    std::unordered_map<OrderId, OrderRef> orders_;
    int levels_tracked_;
    OrderId next_seed_id_ = -1;  // synthetic ids are negative
    std::int64_t unknown_ids_ = 0;
    std::int64_t seed_adjustments_ = 0;
};

}  // namespace lobkit

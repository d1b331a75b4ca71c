#include "lobkit/book.hpp"

#include "lobkit/error.hpp"

namespace lobkit {

bool BookDelta::mid_changed() const {
    const bool pre_ok = pre_bid && pre_ask;
    const bool post_ok = post_bid && post_ask;
    if (pre_ok != post_ok) return true;
    if (!pre_ok) return false;
    return pre_bid->price + pre_ask->price != post_bid->price + post_ask->price;
}

std::optional<BestQuote> Book::best_bid() const {
    if (bids_.empty()) return std::nullopt;
    const auto& [price, level] = *bids_.begin();
    return BestQuote{price, level.total};
}

std::optional<BestQuote> Book::best_ask() const {
    if (asks_.empty()) return std::nullopt;
    const auto& [price, level] = *asks_.begin();
    return BestQuote{price, level.total};
}

std::optional<double> Book::mid() const {
    const auto b = best_bid();
    const auto a = best_ask();
    if (!b || !a) return std::nullopt;
    return 0.5 * (static_cast<double>(b->price) + static_cast<double>(a->price));
}

BookDelta Book::make_delta(const LobEvent& event) const {
    BookDelta d;
    d.type = event.type;
    d.side = event.direction >= 0 ? BookSide::Bid : BookSide::Ask;
    d.price = event.price;
    d.size = event.size;
    d.order_id = event.order_id;
    d.pre_bid = best_bid();
    d.pre_ask = best_ask();
    return d;
}

void Book::finish_delta(BookDelta& delta) const {
    delta.post_bid = best_bid();
    delta.post_ask = best_ask();
}

void Book::insert_order(BookSide side, Price price, OrderId id, Shares size) {
    if (side == BookSide::Bid) {
        auto& level = bids_[price];
        level.queue.push_back({id, size});
        level.total += size;
        orders_[id] = {side, price, std::prev(level.queue.end())};
    } else {
        auto& level = asks_[price];
        level.queue.push_back({id, size});
        level.total += size;
        orders_[id] = {side, price, std::prev(level.queue.end())};
    }
}

bool Book::reduce_order(const OrderRef& ref, Shares size, bool remove_all) {
    const Shares removed = remove_all ? ref.it->size : std::min(size, ref.it->size);
    ref.it->size -= removed;
    bool depleted = false;
    auto drop = [&](auto& side_map) {
        auto lvl_it = side_map.find(ref.price);
        auto& level = lvl_it->second;
        level.total -= removed;
        if (ref.it->size == 0) {
            orders_.erase(ref.it->id);
            level.queue.erase(ref.it);
            if (level.queue.empty()) {
                const bool was_best = lvl_it == side_map.begin();
                side_map.erase(lvl_it);
                depleted = was_best;
            }
        }
    };
    if (ref.side == BookSide::Bid)
        drop(bids_);
    else
        drop(asks_);
    return depleted;
}

std::optional<bool> Book::reduce_seed(BookSide side, Price price, Shares size) {
    // Bootstrap fallback: an untracked real id acting at a seeded level is
    // charged against the synthetic aggregate order resting there.
    auto apply = [&](auto& side_map) -> std::optional<bool> {
        auto lvl_it = side_map.find(price);
        if (lvl_it == side_map.end()) return std::nullopt;
        auto& level = lvl_it->second;
        for (auto it = level.queue.begin(); it != level.queue.end(); ++it) {
            if (it->id < 0) {
                const Shares removed = std::min(size, it->size);
                it->size -= removed;
                level.total -= removed;
                if (it->size == 0) {
                    orders_.erase(it->id);
                    level.queue.erase(it);
                }
                if (level.queue.empty()) {
                    const bool was_best = lvl_it == side_map.begin();
                    side_map.erase(lvl_it);
                    return was_best;
                }
                return false;
            }
        }
        return std::nullopt;
    };
    std::optional<bool> res =
        side == BookSide::Bid ? apply(bids_) : apply(asks_);
    if (res) ++seed_adjustments_;
    return res;
}

BookDelta Book::apply(const LobEvent& event) {
    BookDelta delta = make_delta(event);
    switch (event.type) {
        case EventType::Submission: {
            if (delta.side == BookSide::Bid) {
                const auto a = best_ask();
                if (a && event.price >= a->price)
                    throw Error(ErrorCode::CrossedBook,
                                "buy submission at or through the ask");
            } else {
                const auto b = best_bid();
                if (b && event.price <= b->price)
                    throw Error(ErrorCode::CrossedBook,
                                "sell submission at or through the bid");
            }
            if (orders_.count(event.order_id)) {
                // Duplicate id: keep the original, flag the row.
                delta.unknown_id = true;
                ++unknown_ids_;
                break;
            }
            insert_order(delta.side, event.price, event.order_id, event.size);
            delta.mutated = true;
            break;
        }
        case EventType::PartialCancel:
        case EventType::Deletion:
        case EventType::ExecVisible: {
            auto it = orders_.find(event.order_id);
            if (it == orders_.end()) {
                const auto adjusted =
                    reduce_seed(delta.side, event.price, event.size);
                delta.depleted_level = adjusted.value_or(false);
                delta.mutated = adjusted.has_value();
                delta.unknown_id = true;
                ++unknown_ids_;
                break;
            }
            const bool remove_all = event.type == EventType::Deletion;
            delta.depleted_level = reduce_order(it->second, event.size, remove_all);
            delta.mutated = true;
            break;
        }
        case EventType::ExecHidden:
        case EventType::Halt:
            break;  // no visible-book mutation
    }
    finish_delta(delta);
    return delta;
}

void Book::seed_from_snapshot(const BookSnapshot& snapshot) {
    for (const auto& lvl : snapshot.levels) {
        if (!lvl.ask_empty()) insert_order(BookSide::Ask, lvl.ask_price, next_seed_id_--, lvl.ask_size);
        if (!lvl.bid_empty()) insert_order(BookSide::Bid, lvl.bid_price, next_seed_id_--, lvl.bid_size);
    }
}

ReconcileReport Book::reconcile(const BookSnapshot& snapshot, int levels) const {
    ReconcileReport report;
    const int n = std::min<int>(levels, static_cast<int>(snapshot.levels.size()));
    report.levels_checked = n;

    auto bid_it = bids_.begin();
    auto ask_it = asks_.begin();
    for (int k = 0; k < n; ++k) {
        const auto& snap = snapshot.levels[static_cast<std::size_t>(k)];

        if (ask_it == asks_.end()) {
            if (!snap.ask_empty()) {
                report.mismatches.push_back(
                    {k + 1, BookSide::Ask, "price", 0, snap.ask_price});
            }
        } else {
            if (snap.ask_empty()) {
                report.mismatches.push_back(
                    {k + 1, BookSide::Ask, "price", ask_it->first, 0});
            } else {
                if (ask_it->first != snap.ask_price)
                    report.mismatches.push_back({k + 1, BookSide::Ask, "price",
                                                 ask_it->first, snap.ask_price});
                if (ask_it->second.total != snap.ask_size)
                    report.mismatches.push_back({k + 1, BookSide::Ask, "size",
                                                 ask_it->second.total, snap.ask_size});
            }
            ++ask_it;
        }

        if (bid_it == bids_.end()) {
            if (!snap.bid_empty()) {
                report.mismatches.push_back(
                    {k + 1, BookSide::Bid, "price", 0, snap.bid_price});
            }
        } else {
            if (snap.bid_empty()) {
                report.mismatches.push_back(
                    {k + 1, BookSide::Bid, "price", bid_it->first, 0});
            } else {
                if (bid_it->first != snap.bid_price)
                    report.mismatches.push_back({k + 1, BookSide::Bid, "price",
                                                 bid_it->first, snap.bid_price});
                if (bid_it->second.total != snap.bid_size)
                    report.mismatches.push_back({k + 1, BookSide::Bid, "size",
                                                 bid_it->second.total, snap.bid_size});
            }
            ++bid_it;
        }
    }
    return report;
}

}  // namespace lobkit

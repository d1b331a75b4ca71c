#include "lobkit/transactions.hpp"

#include <cmath>

#include "lobkit/error.hpp"

namespace lobkit {

namespace {

struct PendingGroup {
    bool active = false;
    double wall_time = 0.0;
    int aggressor = 0;
    Shares size = 0;
    BestQuote pre_bid{}, pre_ask{};
    bool depleted = false;
    bool pre_valid = false;
    // Depletions observed while the group's market order walked the book.
    std::vector<DepletionEvent> depletions;
};

}  // namespace

ReplayResult extract_transactions(std::span<const LobEvent> events,
                                  const MarketConfig& cfg,
                                  const ReplayOptions& opts) {
    ReplayResult result;
    result.frames.market = cfg;
    Book book(cfg.levels_tracked);

    if (opts.seed_from_first_snapshot && opts.snapshots && !opts.snapshots->empty())
        book.seed_from_snapshot(opts.snapshots->front());

    std::int32_t segment = 0;
    PendingGroup group;

    auto flush = [&]() {
        if (!group.active) return;
        group.active = false;
        if (!group.pre_valid) {
            ++result.stats.skipped_frames;
            group.depletions.clear();
            return;
        }
        TransactionFrame f;
        f.t = static_cast<std::int64_t>(result.frames.frames.size());
        f.wall_time_s = group.wall_time;
        f.sign = group.aggressor;
        f.bid = static_cast<double>(group.pre_bid.price);
        f.ask = static_cast<double>(group.pre_ask.price);
        f.mid = 0.5 * (f.bid + f.ask);
        f.bid_depth = group.pre_bid.depth;
        f.ask_depth = group.pre_ask.depth;
        f.imbalance = static_cast<double>(group.pre_bid.depth - group.pre_ask.depth) /
                      static_cast<double>(group.pre_bid.depth + group.pre_ask.depth);
        f.traded_size = group.size;
        f.depleted = group.depleted;
        f.segment = segment;
        result.frames.frames.push_back(f);
        for (auto d : group.depletions) {
            d.anchor_frame = f.t;
            result.depletions.push_back(d);
        }
        group.depletions.clear();
    };

    for (std::size_t i = 0; i < events.size(); ++i) {
        const LobEvent& e = events[i];
        ++result.stats.events;

        if (e.type == EventType::ExecVisible) {
            const int aggressor = -e.direction;
            const bool joins = group.active && group.wall_time == e.time_s &&
                               group.aggressor == aggressor;
            if (!joins) {
                flush();
                group.active = true;
                group.wall_time = e.time_s;
                group.aggressor = aggressor;
                group.size = 0;
                group.depleted = false;
                const auto b = book.best_bid();
                const auto a = book.best_ask();
                group.pre_valid = b.has_value() && a.has_value();
                if (group.pre_valid) {
                    group.pre_bid = *b;
                    group.pre_ask = *a;
                }
            }
            const auto pre_mid = book.mid();
            const BookDelta delta = book.apply(e);
            if (delta.unknown_id) ++result.stats.unknown_ids;
            group.size += e.size;
            result.stats.executed_volume += e.size;
            if (delta.depleted_level) {
                group.depleted = true;
                DepletionEvent d;
                d.event_row = static_cast<std::int64_t>(i);
                d.side = delta.side;
                d.cause = DepletionCause::Execution;
                d.pre_mid = pre_mid.value_or(0.0);
                d.post_mid = book.mid().value_or(d.pre_mid);
                group.depletions.push_back(d);
            }
        } else {
            flush();
            if (e.type == EventType::Halt) {
                ++result.stats.halts;
                ++segment;
            } else if (e.type == EventType::ExecHidden) {
                ++result.stats.hidden_execs;
            } else {
                const auto pre_mid = book.mid();
                const BookDelta delta = book.apply(e);
                if (delta.unknown_id) ++result.stats.unknown_ids;
                if (delta.depleted_level &&
                    (e.type == EventType::Deletion ||
                     e.type == EventType::PartialCancel)) {
                    DepletionEvent d;
                    d.anchor_frame =
                        static_cast<std::int64_t>(result.frames.frames.size()) - 1;
                    d.event_row = static_cast<std::int64_t>(i);
                    d.side = delta.side;
                    d.cause = DepletionCause::Cancellation;
                    d.pre_mid = pre_mid.value_or(0.0);
                    d.post_mid = book.mid().value_or(d.pre_mid);
                    result.depletions.push_back(d);
                }
            }
        }

        if (opts.snapshots && i < opts.snapshots->size()) {
            const auto report =
                book.reconcile((*opts.snapshots)[i], opts.reconcile_levels);
            if (!report.pass()) ++result.stats.reconcile_failures;
        }
    }
    flush();
    result.stats.unknown_ids = book.unknown_id_count();
    return result;
}

std::vector<DepletionEvent> detect_depletions(std::span<const LobEvent> events,
                                              const MarketConfig& cfg) {
    return extract_transactions(events, cfg).depletions;
}

TickRegimeResult classify_tick_regime(const FrameSeries& frames) {
    if (frames.empty())
        throw Error(ErrorCode::EmptyInput, "no frames to classify");
    double sum = 0.0;
    for (const auto& f : frames.frames) sum += f.spread_dollars();
    TickRegimeResult r;
    r.mean_spread = sum / static_cast<double>(frames.size());
    if (r.mean_spread < 0.013)
        r.regime = TickRegime::Large;
    else if (r.mean_spread > 0.04)
        r.regime = TickRegime::Small;
    else
        r.regime = TickRegime::Medium;
    return r;
}

std::vector<DepletionEvent> depletions_from_frames(const FrameSeries& frames) {
    std::vector<DepletionEvent> out;
    const auto& v = frames.frames;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (!v[i].depleted) continue;
        if (v[i + 1].segment != v[i].segment || v[i + 1].day != v[i].day) continue;
        DepletionEvent d;
        d.anchor_frame = static_cast<std::int64_t>(i);
        d.cause = DepletionCause::Execution;
        d.pre_mid = v[i].mid;
        d.post_mid = v[i + 1].mid;
        d.side = d.post_mid >= d.pre_mid ? BookSide::Ask : BookSide::Bid;
        out.push_back(d);
    }
    return out;
}

}  // namespace lobkit

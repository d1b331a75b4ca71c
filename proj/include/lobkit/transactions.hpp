#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lobkit/book.hpp"
#include "lobkit/frames.hpp"
#include "lobkit/types.hpp"

namespace lobkit {

struct ReplayOptions {
    // When set, row i of `snapshots` is compared against the book after
    // event i; mismatches are collected.
    const std::vector<BookSnapshot>* snapshots = nullptr;
    bool seed_from_first_snapshot = false;
    int reconcile_levels = 1;
};

struct ReplayStats {
    std::int64_t events = 0;
    std::int64_t hidden_execs = 0;
    std::int64_t halts = 0;
    std::int64_t unknown_ids = 0;
    std::int64_t executed_volume = 0;   // visible executed shares
    std::int64_t skipped_frames = 0;    // pre-trade book had an empty side
    std::int64_t reconcile_failures = 0;
};

struct ReplayResult {
    FrameSeries frames;
    std::vector<DepletionEvent> depletions;
    ReplayStats stats;
};

// Replays events through a Book and emits transaction frames. Consecutive
// visible executions sharing a wall time and aggressor side collapse into a
// single frame (one market order walking the queue); the frame records the
// book immediately before the first fill. Halts advance the segment id.
ReplayResult extract_transactions(std::span<const LobEvent> events,
                                  const MarketConfig& cfg,
                                  const ReplayOptions& opts = {});

// Depletions only (keeps the signature light when frames are not needed).
std::vector<DepletionEvent> detect_depletions(std::span<const LobEvent> events,
                                              const MarketConfig& cfg);

// Mean pre-trade spread in transaction time, bucketed into the paper's
// large/medium/small tick classes.
TickRegimeResult classify_tick_regime(const FrameSeries& frames);

// Rebuilds execution-caused depletion events from frame flags; this is how
// simulator output (which has no order-level events) feeds the depletion
// impact estimator.
std::vector<DepletionEvent> depletions_from_frames(const FrameSeries& frames);

}  // namespace lobkit

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lobkit/types.hpp"

namespace lobkit {

// Row-level problem discovered while parsing. Malformed rows are skipped and
// reported rather than aborting the whole file; the caller decides whether a
// non-empty error list is fatal.
struct ParseIssue {
    std::int64_t row = 0;  // 0-based row index in the file
    std::string message;
    bool fatal = false;    // errors vs warnings
};

struct ParseReport {
    std::vector<ParseIssue> issues;
    std::int64_t rows_total = 0;
    std::int64_t rows_ok = 0;

    bool has_errors() const {
        for (const auto& i : issues)
            if (i.fatal) return true;
        return false;
    }
};

struct ParseOptions {
    // Non-decreasing timestamps are a warning by default; set to treat them
    // as hard errors.
    bool strict_time = false;
};

struct ParsedMessages {
    std::vector<LobEvent> events;
    ParseReport report;
};

struct ParsedSnapshots {
    std::vector<BookSnapshot> snapshots;
    ParseReport report;
};

// LOBSTER message file: rows of `time,type,orderid,size,price,direction`.
ParsedMessages parse_message_file(std::istream& source, const ParseOptions& opts = {});
ParsedMessages parse_message_string(std::string_view text, const ParseOptions& opts = {});
ParsedMessages parse_message_path(const std::string& path, const ParseOptions& opts = {});

// LOBSTER order-book file: rows of 4K columns
// `ask_p1,ask_v1,bid_p1,bid_v1,...`; row i is the book after message row i.
ParsedSnapshots parse_snapshot_file(std::istream& source, int levels);
ParsedSnapshots parse_snapshot_string(std::string_view text, int levels);
ParsedSnapshots parse_snapshot_path(const std::string& path, int levels);

// Keeps events with window.start_s <= time_s < window.end_s. Events are
// assumed time-ordered; the result is a contiguous subsequence.
std::vector<LobEvent> filter_session(const std::vector<LobEvent>& events,
                                     const SessionWindow& window);

// Serializes an event back to a LOBSTER message row (no trailing newline).
// Round-trips input bytes up to numeric canonicalization of the time field.
std::string serialize_event(const LobEvent& event);

}  // namespace lobkit

#include "lobkit/lobster.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include "lobkit/util.hpp"

namespace lobkit {

namespace {

bool valid_event_type(std::int64_t t) {
    switch (t) {
        case 1: case 2: case 3: case 4: case 5: case 7: return true;
        default: return false;
    }
}

// One message row; returns false with `why` set on malformed input.
bool parse_message_row(std::string_view line, LobEvent& e, std::string& why) {
    const auto cols = split_view(line, ',');
    if (cols.size() != 6) {
        why = "expected 6 columns, got " + std::to_string(cols.size());
        return false;
    }
    std::int64_t type_raw = 0, dir = 0;
    if (!parse_double(cols[0], e.time_s) || e.time_s < 0.0) {
        why = "bad time field";
        return false;
    }
    if (!parse_int64(cols[1], type_raw)) {
        why = "bad type field";
        return false;
    }
    if (!valid_event_type(type_raw)) {
        why = "unknown event type " + std::string(cols[1]);
        return false;
    }
    e.type = static_cast<EventType>(type_raw);
    if (!parse_int64(cols[2], e.order_id)) {
        why = "bad order id";
        return false;
    }
    if (!parse_int64(cols[3], e.size)) {
        why = "bad size";
        return false;
    }
    if (!parse_int64(cols[4], e.price)) {
        why = "bad price";
        return false;
    }
    if (!parse_int64(cols[5], dir)) {
        why = "bad direction";
        return false;
    }
    e.direction = static_cast<int>(dir);

    if (e.type != EventType::Halt) {
        if (e.size <= 0) {
            why = "non-positive size";
            return false;
        }
        if (e.price <= 0) {
            why = "non-positive price";
            return false;
        }
        if (e.direction != 1 && e.direction != -1) {
            why = "direction must be +1 or -1";
            return false;
        }
    }
    return true;
}

template <typename LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
    std::size_t start = 0;
    while (start <= text.size()) {
        if (start == text.size()) break;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(line);
        start = end + 1;
    }
}

}  // namespace

ParsedMessages parse_message_string(std::string_view text, const ParseOptions& opts) {
    ParsedMessages out;
    double prev_time = -1.0;
    std::int64_t row = 0;
    for_each_line(text, [&](std::string_view line) {
        if (line.empty()) {
            ++row;
            return;
        }
        ++out.report.rows_total;
        LobEvent e;
        std::string why;
        if (!parse_message_row(line, e, why)) {
            out.report.issues.push_back({row, why, true});
        } else {
            if (e.time_s < prev_time) {
                out.report.issues.push_back(
                    {row, "non-monotone timestamp", opts.strict_time});
                if (opts.strict_time) {
                    ++row;
                    return;
                }
            }
            prev_time = std::max(prev_time, e.time_s);
            out.events.push_back(e);
            ++out.report.rows_ok;
        }
        ++row;
    });
    return out;
}

ParsedMessages parse_message_file(std::istream& source, const ParseOptions& opts) {
    std::ostringstream ss;
    ss << source.rdbuf();
    return parse_message_string(ss.str(), opts);
}

ParsedMessages parse_message_path(const std::string& path, const ParseOptions& opts) {
    return parse_message_string(read_file(path), opts);
}

ParsedSnapshots parse_snapshot_string(std::string_view text, int levels) {
    ParsedSnapshots out;
    std::int64_t row = 0;
    const std::size_t want = static_cast<std::size_t>(levels) * 4;
    for_each_line(text, [&](std::string_view line) {
        if (line.empty()) {
            ++row;
            return;
        }
        ++out.report.rows_total;
        const auto cols = split_view(line, ',');
        if (cols.size() != want) {
            out.report.issues.push_back(
                {row,
                 "expected " + std::to_string(want) + " columns, got " +
                     std::to_string(cols.size()),
                 true});
            ++row;
            return;
        }
        BookSnapshot snap;
        snap.levels.resize(static_cast<std::size_t>(levels));
        bool ok = true;
        for (int k = 0; k < levels && ok; ++k) {
            auto& lvl = snap.levels[static_cast<std::size_t>(k)];
            ok = parse_int64(cols[4 * k + 0], lvl.ask_price) &&
                 parse_int64(cols[4 * k + 1], lvl.ask_size) &&
                 parse_int64(cols[4 * k + 2], lvl.bid_price) &&
                 parse_int64(cols[4 * k + 3], lvl.bid_size);
            if (!ok) {
                out.report.issues.push_back({row, "bad numeric field", true});
                break;
            }
            if (lvl.ask_size < 0 || lvl.bid_size < 0) {
                out.report.issues.push_back({row, "negative size", true});
                ok = false;
            }
        }
        if (ok) {
            out.snapshots.push_back(std::move(snap));
            ++out.report.rows_ok;
        }
        ++row;
    });
    return out;
}

ParsedSnapshots parse_snapshot_file(std::istream& source, int levels) {
    std::ostringstream ss;
    ss << source.rdbuf();
    return parse_snapshot_string(ss.str(), levels);
}

ParsedSnapshots parse_snapshot_path(const std::string& path, int levels) {
    return parse_snapshot_string(read_file(path), levels);
}

std::vector<LobEvent> filter_session(const std::vector<LobEvent>& events,
                                     const SessionWindow& window) {
    std::vector<LobEvent> out;
    out.reserve(events.size());
    for (const auto& e : events) {
        if (window.contains(e.time_s)) out.push_back(e);
    }
    return out;
}

std::string serialize_event(const LobEvent& event) {
    char time_buf[40];
    std::snprintf(time_buf, sizeof(time_buf), "%.9f", event.time_s);
    std::string out(time_buf);
    out += ',';
    out += format_int(static_cast<std::int64_t>(event.type));
    out += ',';
    out += format_int(event.order_id);
    out += ',';
    out += format_int(event.size);
    out += ',';
    out += format_int(event.price);
    out += ',';
    out += format_int(event.direction);
    return out;
}

}  // namespace lobkit

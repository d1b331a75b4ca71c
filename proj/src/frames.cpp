#include "lobkit/frames.hpp"

#include <algorithm>

#include "lobkit/error.hpp"
#include "lobkit/util.hpp"

namespace lobkit {

int FrameSeries::day_count() const {
    int days = 0;
    std::int32_t last = -1;
    for (const auto& f : frames) {
        if (f.day != last) {
            ++days;
            last = f.day;
        }
    }
    return days;
}

void FrameSeries::append_day(const FrameSeries& other) {
    if (frames.empty()) {
        *this = other;
        return;
    }
    const std::int32_t day_base = frames.back().day + 1;
    const std::int32_t seg_base = frames.back().segment + 1;
    frames.reserve(frames.size() + other.frames.size());
    for (TransactionFrame f : other.frames) {
        f.day += day_base;
        f.segment += seg_base;
        frames.push_back(f);
    }
}

std::vector<double> mid_dollars(const FrameSeries& series) {
    std::vector<double> out;
    out.reserve(series.size());
    for (const auto& f : series.frames) out.push_back(f.mid_dollars());
    return out;
}

std::string frames_to_csv(const FrameSeries& series,
                          const std::vector<std::string>& header_lines) {
    std::string out;
    out.reserve(64 * series.size() + 256);
    out += "# lobkit-frames v1\n";
    out += "# tick_units=" + format_int(series.market.tick_units());
    out += " rebate_units=" +
           format_double(series.market.rebate * kUnitsPerDollar);
    out += " price_unit_dollars=0.0001\n";
    for (const auto& h : header_lines) {
        out += "# ";
        out += h;
        out += '\n';
    }
    out += "t,wall_time,eps,bid,ask,mid,vbid,vask,imb,size,depleted,segment\n";
    for (const auto& f : series.frames) {
        out += format_int(f.t);
        out += ',';
        out += format_double(f.wall_time_s);
        out += ',';
        out += format_int(f.sign);
        out += ',';
        out += format_double(f.bid);
        out += ',';
        out += format_double(f.ask);
        out += ',';
        out += format_double(f.mid);
        out += ',';
        out += format_int(f.bid_depth);
        out += ',';
        out += format_int(f.ask_depth);
        out += ',';
        out += format_double(f.imbalance);
        out += ',';
        out += format_int(f.traded_size);
        out += ',';
        out += f.depleted ? '1' : '0';
        out += ',';
        out += format_int(f.segment);
        out += '\n';
    }
    return out;
}

FrameSeries frames_from_csv(const std::string& text) {
    FrameSeries series;
    std::size_t start = 0;
    bool saw_header_row = false;
    std::int64_t row = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string_view line(text.data() + start, end - start);
        start = end + 1;
        ++row;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.front() == '#') {
            // Metadata header; pick up tick/rebate if present.
            const auto fields = split_view(line.substr(1), ' ');
            for (auto f : fields) {
                std::int64_t iv = 0;
                double dv = 0.0;
                if (f.substr(0, 11) == "tick_units=" &&
                    parse_int64(f.substr(11), iv))
                    series.market.tick_size = static_cast<double>(iv) * kDollarsPerUnit;
                if (f.substr(0, 13) == "rebate_units=" &&
                    parse_double(f.substr(13), dv))
                    series.market.rebate = dv * kDollarsPerUnit;
            }
            continue;
        }
        if (!saw_header_row) {
            saw_header_row = true;  // column header
            continue;
        }
        const auto cols = split_view(line, ',');
        if (cols.size() != 12)
            throw Error(ErrorCode::MalformedRow,
                        "frame row " + std::to_string(row) + ": expected 12 columns");
        TransactionFrame f;
        std::int64_t sign = 0, depleted = 0, segment = 0;
        const bool ok = parse_int64(cols[0], f.t) &&
                        parse_double(cols[1], f.wall_time_s) &&
                        parse_int64(cols[2], sign) && parse_double(cols[3], f.bid) &&
                        parse_double(cols[4], f.ask) && parse_double(cols[5], f.mid) &&
                        parse_int64(cols[6], f.bid_depth) &&
                        parse_int64(cols[7], f.ask_depth) &&
                        parse_double(cols[8], f.imbalance) &&
                        parse_int64(cols[9], f.traded_size) &&
                        parse_int64(cols[10], depleted) &&
                        parse_int64(cols[11], segment);
        if (!ok)
            throw Error(ErrorCode::MalformedRow,
                        "frame row " + std::to_string(row) + ": bad field");
        f.sign = static_cast<int>(sign);
        f.depleted = depleted != 0;
        f.segment = static_cast<std::int32_t>(segment);
        series.frames.push_back(f);
    }
    return series;
}

FrameSeries frames_from_csv_path(const std::string& path) {
    return frames_from_csv(read_file(path));
}

void write_frames_csv(const std::string& path, const FrameSeries& series,
                      const std::vector<std::string>& header_lines) {
    write_file(path, frames_to_csv(series, header_lines));
}

FrameSeries load_frame_days(const std::vector<std::string>& paths) {
    FrameSeries all;
    for (const auto& p : paths) {
        FrameSeries day = frames_from_csv_path(p);
        all.append_day(day);
    }
    return all;
}

}  // namespace lobkit

#pragma once

#include <span>
#include <string>
#include <vector>

#include "lobkit/types.hpp"

namespace lobkit {

// Transaction-time dataset. Frames are ordered by (day, segment, t); segment
// ids are globally non-decreasing so a lag window is valid iff its endpoints
// share a segment. Days are the unit of cross-sectional error bars.
struct FrameSeries {
    std::vector<TransactionFrame> frames;
    MarketConfig market;

    std::size_t size() const { return frames.size(); }
    bool empty() const { return frames.empty(); }
    const TransactionFrame& operator[](std::size_t i) const { return frames[i]; }

    int day_count() const;

    // Appends another day's frames, re-basing day and segment ids.
    void append_day(const FrameSeries& other);
};

// Mid prices in dollars, aligned with frames.
std::vector<double> mid_dollars(const FrameSeries& series);

// Frame CSV interchange format shared by ingest and simulate:
//   t,wall_time,eps,bid,ask,mid,vbid,vask,imb,size,depleted,segment
// prices in 1e-4 dollar units; '#' header lines carry tick/rebate metadata
// plus caller-supplied provenance lines.
std::string frames_to_csv(const FrameSeries& series,
                          const std::vector<std::string>& header_lines = {});
FrameSeries frames_from_csv(const std::string& text);
FrameSeries frames_from_csv_path(const std::string& path);
void write_frames_csv(const std::string& path, const FrameSeries& series,
                      const std::vector<std::string>& header_lines = {});

// Loads one or more frame CSVs as consecutive days.
FrameSeries load_frame_days(const std::vector<std::string>& paths);

}  // namespace lobkit

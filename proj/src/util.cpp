#include "lobkit/util.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lobkit/error.hpp"
#include "lobkit/types.hpp"

namespace lobkit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownEventType: return "UnknownEventType";
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
        case ErrorCode::ColumnCountMismatch: return "ColumnCountMismatch";
        case ErrorCode::NegativeSize: return "NegativeSize";
        case ErrorCode::UnknownOrderId: return "UnknownOrderId";
        case ErrorCode::CrossedBook: return "CrossedBook";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::DegenerateAutocorrelation: return "DegenerateAutocorrelation";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::EmptySide: return "EmptySide";
        case ErrorCode::EmptyBin: return "EmptyBin";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

const char* tick_regime_name(TickRegime regime) {
    switch (regime) {
        case TickRegime::Large: return "large";
        case TickRegime::Medium: return "medium";
        case TickRegime::Small: return "small";
    }
    return "unknown";
}

std::uint64_t Rng::splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::next_u64() {
    // xorshift64* core seeded through splitmix.
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
}

double Rng::uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

std::string format_double(double value) {
    if (std::isfinite(value)) {
        const double rounded = std::nearbyint(value);
        if (rounded == value && std::fabs(value) < 9.007199254740992e15) {
            return format_int(static_cast<std::int64_t>(rounded));
        }
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

std::string format_int(std::int64_t value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

bool parse_int64(std::string_view text, std::int64_t& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_double(std::string_view text, double& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

std::vector<std::string_view> split_view(std::string_view line, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string(buf);
}

std::string file_checksum_hex(const std::string& path) {
    return fnv1a64_hex(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::IoError, "short write to " + path);
}

}  // namespace lobkit

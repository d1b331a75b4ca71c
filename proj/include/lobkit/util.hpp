#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lobkit {

// Deterministic RNG used by the simulator. Distributions are implemented
// here (not via <random> adapters) so that a given seed produces the same
// stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix(seed + 0x9e3779b97f4a7c15ULL)) {
        // Warm-up keeps short seeds from producing correlated first draws.
        for (int i = 0; i < 4; ++i) next_u64();
    }

    std::uint64_t next_u64();

    // Uniform on (0, 1), never exactly 0 or 1.
    double uniform01();

    // Standard normal via Box-Muller (no cached spare; two uniforms per draw).
    double normal();
    double normal(double sigma) { return sigma == 0.0 ? 0.0 : sigma * normal(); }

    bool bernoulli(double p) { return uniform01() < p; }

    int sign() { return (next_u64() & 1u) ? 1 : -1; }

private:
    static std::uint64_t splitmix(std::uint64_t x);
    std::uint64_t state_;
};

// Canonical number formatting for all artifacts: integers print without a
// decimal point, everything else as the shortest round-trip decimal.
std::string format_double(double value);
std::string format_int(std::int64_t value);

// Strict parsers; return false on any trailing garbage.
bool parse_int64(std::string_view text, std::int64_t& out);
bool parse_double(std::string_view text, double& out);

// Splits on a single-character delimiter without allocation of the pieces.
std::vector<std::string_view> split_view(std::string_view line, char delim);

// FNV-1a 64-bit checksum; used for provenance headers (integrity hint, not
// cryptographic).
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string file_checksum_hex(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace lobkit

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ecckit/graph.hpp"

namespace ecckit {

enum class GenKind { Alpha2, Theorem1, Theorem8Eligible };

/// Parameters of a seeded generator run. density is the edge-keep
/// probability of the complement draw.
struct GenSpec {
    int n = 8;
    double density = 0.5;
    std::uint64_t seed = 0;
    GenKind kind = GenKind::Alpha2;
};

/// splitmix64: the fixed, platform-independent generator behind every
/// seeded draw, so identical specs reproduce bit-identically everywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

/// Streams every labeled graph with independence number exactly 2 on n
/// vertices, each exactly once, in ascending order of the complement's edge
/// mask. Capped at n <= 7 (capacity_error beyond).
class AlphaTwoEnumerator {
public:
    explicit AlphaTwoEnumerator(int n);
    std::optional<Graph> next();

    int vertices() const { return n_; }
    std::uint64_t mask_limit() const { return limit_; }

    /// True when the complement graph encoded by mask has no triangle.
    static bool mask_is_triangle_free(int n, std::uint64_t mask);
    /// The alpha-2 graph whose complement is the (triangle-free, nonempty)
    /// graph encoded by mask.
    static Graph alpha_two_from_mask(int n, std::uint64_t mask);

private:
    int n_;
    std::uint64_t limit_;
    std::uint64_t mask_ = 0;
};

/// Seeded alpha-2 sample: draw the complement at the given density, delete
/// the lexicographically first edge of each triangle until none remain, add
/// one uniform edge if the complement came out empty, then complement.
Graph gen_alpha_two(const GenSpec& spec);

/// Seeded instance for the theorem-1 route: a two-clique diameter-3 core
/// (n-2 vertices) under a dominating apex pair. Returns the graph and the
/// apex edge. Requires kind=Theorem1 and n >= 6.
std::pair<Graph, std::pair<int, int>> gen_theorem1_instance(const GenSpec& spec);

/// Seeded instance with no supercycle and no incompatible double top, by
/// rejection over gen_alpha_two draws; generation_error reports the attempt
/// count when the retry budget runs out.
Graph gen_theorem8_instance(const GenSpec& spec);

} // namespace ecckit

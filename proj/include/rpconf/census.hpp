#pragma once

// Reproducible random sampling of integer point configurations and the
// classification census. Every sample draws from an independent generator
// seeded by (seed, index), so results do not depend on the thread count.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "rpconf/catalog.hpp"
#include "rpconf/conic.hpp"

namespace rpconf {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + index * 0x100000001b3ULL);
    std::seed_seq seq{detail::splitmix64(s), detail::splitmix64(s), detail::splitmix64(s),
                      detail::splitmix64(s)};
    return std::mt19937_64(seq);
}

// n affine points (x : y : 1) with integer coordinates in [-bound, bound]
inline std::vector<Point> sample_points(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(Rat(d(rng)), Rat(d(rng)), Rat(1));
    return pts;
}

struct CensusResult {
    std::map<std::string, std::size_t> histogram;  // class name -> count
    std::size_t generic = 0;
    std::size_t rejected = 0;  // non-generic samples
    std::size_t unknown = 0;   // generic but not matching any cataloged class
};

// Classify `samples` random configurations of n points (n = 6 or 7).
inline CensusResult run_census(std::uint64_t seed, std::size_t samples, std::size_t n,
                               long bound, unsigned jobs = 1) {
    if (jobs == 0) jobs = 1;
    std::vector<CensusResult> parts(jobs);
    auto work = [&](unsigned j) {
        CensusResult& r = parts[j];
        for (std::size_t idx = j; idx < samples; idx += jobs) {
            std::mt19937_64 rng = substream(seed, idx);
            std::vector<Point> pts = sample_points(rng, n, bound);
            if (!genericity_report(pts).fully_generic) {
                ++r.rejected;
                continue;
            }
            ++r.generic;
            try {
                std::string name = n == 6 ? six_class_name(six_class(pts))
                                          : seven_class(pts).str();
                ++r.histogram[name];
            } catch (const UnknownClass&) {
                ++r.unknown;
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
        for (auto& t : threads) t.join();
    }
    CensusResult total;
    for (const auto& p : parts) {
        total.generic += p.generic;
        total.rejected += p.rejected;
        total.unknown += p.unknown;
        for (const auto& [k, v] : p.histogram) total.histogram[k] += v;
    }
    return total;
}

}  // namespace rpconf

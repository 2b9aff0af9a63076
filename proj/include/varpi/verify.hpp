#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "varpi/geom.hpp"

namespace varpi {

struct Violation {
    std::string check;       // name of the failed check
    std::uint64_t seed = 0;  // sub-seed that replays the failing shape/map
    std::string shape_dump;
    double observed = 0.0;
    double bound = 0.0;
};

// Result of one property-suite run. Violations and coverage are bit-identical
// for identical (seed, trials, tol); timings are wall-clock seconds and are
// excluded from that contract.
struct SuiteReport {
    std::uint64_t trials = 0;
    std::vector<Violation> violations;
    std::vector<std::pair<std::string, double>> timings;          // per check
    std::vector<std::pair<std::string, std::uint64_t>> coverage;  // per public operation
};

// n_generators points drawn area-uniformly from the annulus 0.3 <= |p| <= 1
// (SplitMix64 stream (seed, attempt)), then symmetric_hull; degenerate draws
// retry with the next stream, up to 64 attempts.
SymmetricPolygon random_symmetric_polygon(std::uint64_t seed, std::size_t n_generators);

// Rotation * diag * rotation with condition number <= cond_max (uniform in
// [1, cond_max]), |det| log-uniform in [1e-2, 1e2], and a random orientation
// sign.
LinearMap2 random_linear_map(std::uint64_t seed, double cond_max);

// Runs every module invariant on `trials` seeded random shapes and maps and
// returns the report; a passing build yields an empty violations list.
// Invariant slacks are the pinned per-module values; `tol` feeds the
// tolerance arguments of certificate-producing operations, and certified
// enclosures on smooth bodies clamp it to >= 1e-6 so eccentric bodies stay
// within the 2^20 refinement cap. Expensive smooth-body sub-checks run on
// min(trials, 50) draws; trials = 0 returns a trivially empty report.
SuiteReport run_suite(std::uint64_t seed, std::uint64_t trials, double tol);

}  // namespace varpi

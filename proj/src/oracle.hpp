#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "index.hpp"

namespace freeindex {

/// Configuration of the brute-force index search. Defaults are the contract
/// the acceptance checks run with.
struct OracleConfig {
    std::uint32_t restarts = 200;
    double init_step = 0.25;
    double step_tolerance = 1e-7;
    std::uint32_t max_iters_per_restart = 5000;
    std::uint64_t rng_seed = 0;
    bool seed_with_witness = false;
};

struct OracleResult {
    double min_v = 0.0;
    Operator2<double> argmin = Operator2<double>::identity();
    std::uint64_t evaluations = 0;
    std::vector<double> per_restart_minima;
};

/// Estimates n(F(M)) = inf{v(T) : ||T|| = 1} by multi-restart coordinate
/// pattern search over the four matrix entries, renormalizing by the exact
/// polyhedral operator norm after every trial step. Never consults the
/// closed-form index unless seed_with_witness is set, in which case the
/// constructed witness is prepended as an extra restart. Deterministic for a
/// fixed config; restart i draws from a generator seeded rng_seed + i.
OracleResult estimate_index(const TriangleMetric<double>& m, const OracleConfig& cfg);

enum class TriangleMode {
    UniformScalene,
    Isosceles,
    NearAligned,      // min Gromov product in (0, 0.05 * max distance]
    NearEquilateral,  // pairwise distance ratios within [0.95, 1.05]
};

const char* to_string(TriangleMode mode);

/// Random valid non-aligned metric in the requested family, normalized so the
/// largest distance is 1.
TriangleMetric<double> random_triangle(std::mt19937_64& rng, TriangleMode mode);

struct SweepRecord {
    TriangleMetric<double> metric;
    double formula_index;
    double oracle_min;
    double gap;  // oracle_min - formula_index
    Regime regime;
    std::uint64_t seed;  // oracle seed used for this record
};

/// n records cycling through the given modes; triangles come from a master
/// generator seeded cfg.rng_seed and record i runs the oracle with seed
/// cfg.rng_seed + (i+1)*1000003.
std::vector<SweepRecord> sweep(std::size_t n, const OracleConfig& cfg,
                               std::span<const TriangleMode> modes);

}  // namespace freeindex

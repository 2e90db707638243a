#include "oracle.hpp"

#include <cmath>
#include <limits>

namespace freeindex {

namespace {

// Hand-rolled draws so results are reproducible across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

double gaussian(std::mt19937_64& rng) {
    double u1 = 1.0 - uniform01(rng);  // (0, 1]
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

Operator2<double> gaussian_start(std::mt19937_64& rng) {
    return {gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
}

// Start in the family the minimizers live in: each basis molecule is sent to
// a random convex combination of two adjacent hexagon vertices (a face
// point), the second image shrunk by a random factor.
Operator2<double> structured_start(std::mt19937_64& rng, const HexGeometry<double>& g) {
    const auto cycle = signed_molecules(g.metric);
    auto random_face_point = [&]() {
        std::size_t i = static_cast<std::size_t>(rng() % 6);
        const Vec2<double>& a = cycle[i].coords;
        const Vec2<double>& b = cycle[(i + 1) % 6].coords;
        double lambda = uniform01(rng);
        return lambda * a + (1.0 - lambda) * b;
    };
    Vec2<double> col1 = random_face_point();
    double shrink = uniform(rng, 0.3, 1.0);
    Vec2<double> col2 = shrink * random_face_point();
    return {col1.c1, col2.c1, col1.c2, col2.c2};
}

}  // namespace

const char* to_string(TriangleMode mode) {
    switch (mode) {
        case TriangleMode::UniformScalene:  return "uniform_scalene";
        case TriangleMode::Isosceles:       return "isosceles";
        case TriangleMode::NearAligned:     return "near_aligned";
        case TriangleMode::NearEquilateral: return "near_equilateral";
    }
    return "?";
}

TriangleMetric<double> random_triangle(std::mt19937_64& rng, TriangleMode mode) {
    switch (mode) {
        case TriangleMode::UniformScalene: {
            for (;;) {
                double a = uniform(rng, 0.05, 1.0);
                double b = uniform(rng, 0.05, 1.0);
                double c = uniform(rng, 0.05, 1.0);
                double max = std::max({a, b, c});
                double min_gromov = std::min({b + c - a, a + c - b, a + b - c});
                if (min_gromov <= 1e-6 * max) continue;  // keep strictly non-aligned
                return TriangleMetric<double>::validate(a / max, b / max, c / max);
            }
        }
        case TriangleMode::Isosceles: {
            double base = uniform(rng, 0.05, 1.95);
            double scale = std::max(base, 1.0);
            std::array<double, 3> d{1.0 / scale, 1.0 / scale, 1.0 / scale};
            d[rng() % 3] = base / scale;
            return TriangleMetric<double>::validate(d[0], d[1], d[2]);
        }
        case TriangleMode::NearAligned: {
            double a = uniform(rng, 0.5, 1.0);
            double b = uniform(rng, 0.5, 1.0);
            // g <= (0.05/1.05)(a+b) guarantees g <= 0.05*d_xy after normalizing
            double g = (1.0 - uniform01(rng)) * (0.05 / 1.05) * (a + b);
            double dxy = a + b - g;
            return TriangleMetric<double>::validate(1.0, a / dxy, b / dxy);
        }
        case TriangleMode::NearEquilateral: {
            double a = uniform(rng, 0.96, 1.0);
            double b = uniform(rng, 0.96, 1.0);
            double c = uniform(rng, 0.96, 1.0);
            double max = std::max({a, b, c});
            return TriangleMetric<double>::validate(a / max, b / max, c / max);
        }
    }
    raise(ErrorCode::Internal, "bad triangle mode");
}

OracleResult estimate_index(const TriangleMetric<double>& m, const OracleConfig& cfg) {
    if (cfg.restarts < 1) raise(ErrorCode::InvalidArgument, "restarts must be >= 1");
    if (!(cfg.init_step > 0.0) || !(cfg.step_tolerance > 0.0)) {
        raise(ErrorCode::InvalidArgument, "oracle steps must be positive");
    }

    // Relabeling is an isometry, so search in canonical coordinates; that is
    // also the basis the witness is expressed in.
    auto [canon, cls] = canonicalize(m);
    const auto geom = make_geometry(canon);

    OracleResult result;
    result.min_v = std::numeric_limits<double>::infinity();

    auto radius = [&](const Operator2<double>& T) {
        ++result.evaluations;
        return numerical_radius(geom, T);
    };

    auto run_restart = [&](Operator2<double> start) {
        double n = op_norm(geom, start);
        if (!(n > 1e-300)) return;  // degenerate start; skip
        Operator2<double> T = (1.0 / n) * start;
        double fT = radius(T);
        double step = cfg.init_step;
        std::uint32_t sweeps = 0;
        while (step >= cfg.step_tolerance && sweeps < cfg.max_iters_per_restart) {
            bool improved = false;
            for (int k = 0; k < 4; ++k) {
                for (double dir : {step, -step}) {
                    Operator2<double> U = T;
                    U.entry(k) += dir;
                    double un = op_norm(geom, U);
                    if (!(un > 1e-300)) continue;
                    U = (1.0 / un) * U;
                    double fU = radius(U);
                    if (fU < fT) {
                        T = U;
                        fT = fU;
                        improved = true;
                    }
                }
            }
            ++sweeps;
            if (!improved) step *= 0.5;
        }
        result.per_restart_minima.push_back(fT);
        if (fT < result.min_v) {
            result.min_v = fT;
            result.argmin = T;
        }
    };

    if (cfg.seed_with_witness && cls.tag != ClassTag::Aligned) {
        run_restart(numerical_index(canon).witness->op);
    }
    for (std::uint32_t i = 0; i < cfg.restarts; ++i) {
        std::mt19937_64 rng(cfg.rng_seed + i);
        run_restart(i % 2 == 0 ? gaussian_start(rng) : structured_start(rng, geom));
    }
    return result;
}

std::vector<SweepRecord> sweep(std::size_t n, const OracleConfig& cfg,
                               std::span<const TriangleMode> modes) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "sweep needs n >= 1");
    if (modes.empty()) raise(ErrorCode::InvalidArgument, "sweep needs at least one mode");

    std::mt19937_64 master(cfg.rng_seed);
    std::vector<SweepRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TriangleMetric<double> tri = random_triangle(master, modes[i % modes.size()]);
        OracleConfig per = cfg;
        per.rng_seed = cfg.rng_seed + (i + 1) * 1000003ULL;
        auto report = numerical_index(tri);
        auto estimate = estimate_index(tri, per);
        records.push_back({tri, report.index, estimate.min_v, estimate.min_v - report.index,
                           report.regime, per.rng_seed});
    }
    return records;
}

}  // namespace freeindex

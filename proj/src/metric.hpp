#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "errors.hpp"
#include "numeric.hpp"

namespace freeindex {

enum class PointId : int { X = 0, Y = 1, Z = 2 };

inline const char* to_string(PointId p) {
    switch (p) {
        case PointId::X: return "x";
        case PointId::Y: return "y";
        case PointId::Z: return "z";
    }
    return "?";
}

/// The point not in {a, b}. Requires a != b.
constexpr PointId third_point(PointId a, PointId b) {
    return static_cast<PointId>(3 - static_cast<int>(a) - static_cast<int>(b));
}

enum class ClassTag {
    Aligned,
    Equilateral,
    IsoscelesLong,  // the two largest distances coincide
    IsoscelesFat,   // the two smallest distances coincide
    Scalene,
};

inline const char* to_string(ClassTag t) {
    switch (t) {
        case ClassTag::Aligned:       return "aligned";
        case ClassTag::Equilateral:   return "equilateral";
        case ClassTag::IsoscelesLong: return "isosceles_long";
        case ClassTag::IsoscelesFat:  return "isosceles_fat";
        case ClassTag::Scalene:       return "scalene";
    }
    return "?";
}

struct Classification {
    ClassTag tag = ClassTag::Scalene;
    /// canonical_to_original[i] is the input point that plays the role of
    /// canonical point i (X, Y, Z in that order; canonical Z is the basepoint).
    std::array<PointId, 3> canonical_to_original{PointId::X, PointId::Y, PointId::Z};
};

/// A metric on three points {x, y, z}: the three pairwise distances.
/// Constructed only through validate(), so every instance satisfies the
/// metric axioms (triangle inequalities with equality allowed).
template <class S>
class TriangleMetric {
public:
    static TriangleMetric validate(S d_xy, S d_xz, S d_yz) {
        using Ops = ScalarOps<S>;
        auto check_positive = [](const S& d, const char* name) {
            if (!Ops::positive(d)) {
                raise(ErrorCode::NonPositiveDistance,
                      std::string(name) + " must be a positive distance");
            }
        };
        check_positive(d_xy, "d(x,y)");
        check_positive(d_xz, "d(x,z)");
        check_positive(d_yz, "d(y,z)");

        auto check_triangle = [](const S& longest, const S& a, const S& b, const char* triple) {
            S slack = a + b - longest;
            if (Ops::triangle_violated(slack)) {
                raise(ErrorCode::TriangleInequalityViolated, triple);
            }
        };
        check_triangle(d_xy, d_xz, d_yz, "d(x,y) > d(x,z) + d(y,z)");
        check_triangle(d_xz, d_xy, d_yz, "d(x,z) > d(x,y) + d(y,z)");
        check_triangle(d_yz, d_xy, d_xz, "d(y,z) > d(x,y) + d(x,z)");
        return TriangleMetric(std::move(d_xy), std::move(d_xz), std::move(d_yz));
    }

    const S& d_xy() const { return d_xy_; }
    const S& d_xz() const { return d_xz_; }
    const S& d_yz() const { return d_yz_; }

    const S& d(PointId a, PointId b) const {
        if (a == b) raise(ErrorCode::SamePoint, "distance requires two distinct points");
        if (a == PointId::Z || b == PointId::Z) {
            return (a == PointId::X || b == PointId::X) ? d_xz_ : d_yz_;
        }
        return d_xy_;
    }

    /// Distance to the basepoint z. Requires p != Z.
    const S& rho(PointId p) const { return d(p, PointId::Z); }

private:
    TriangleMetric(S d_xy, S d_xz, S d_yz)
        : d_xy_(std::move(d_xy)), d_xz_(std::move(d_xz)), d_yz_(std::move(d_yz)) {}

    S d_xy_, d_xz_, d_yz_;
};

/// Gromov product of the two points other than `apex`, with respect to
/// `apex`: d(p,apex) + d(q,apex) - d(p,q). Non-negative for valid metrics;
/// zero exactly when `apex` lies on the metric segment between p and q.
template <class S>
S gromov(const TriangleMetric<S>& m, PointId apex) {
    switch (apex) {
        case PointId::Z: return m.d_xz() + m.d_yz() - m.d_xy();
        case PointId::Y: return m.d_xy() + m.d_yz() - m.d_xz();
        case PointId::X: return m.d_xy() + m.d_xz() - m.d_yz();
    }
    raise(ErrorCode::Internal, "bad point id");
}

/// d(p,q) * G_apex(p,q), where {p,q} are the points other than `apex`.
template <class S>
S weighted_gromov(const TriangleMetric<S>& m, PointId apex) {
    switch (apex) {
        case PointId::Z: return m.d_xy() * gromov(m, apex);
        case PointId::Y: return m.d_xz() * gromov(m, apex);
        case PointId::X: return m.d_yz() * gromov(m, apex);
    }
    raise(ErrorCode::Internal, "bad point id");
}

template <class S>
bool is_aligned(const TriangleMetric<S>& m) {
    using Ops = ScalarOps<S>;
    return Ops::aligned_zero(gromov(m, PointId::X)) ||
           Ops::aligned_zero(gromov(m, PointId::Y)) ||
           Ops::aligned_zero(gromov(m, PointId::Z));
}

/// Optimal contribution of the pair (p,q): the smallest contribution to a
/// numerical radius that a norm-one operator sending the molecule m_{p,q} to
/// the opposite face can achieve. wG_r(p,q) / (wG_q(p,r) + wG_p(q,r)) with r
/// the third point.
template <class S>
S optimal_contribution(const TriangleMetric<S>& m, PointId p, PointId q) {
    if (p == q) raise(ErrorCode::SamePoint, "optimal_contribution requires two distinct points");
    if (is_aligned(m)) {
        raise(ErrorCode::AlignedMetric, "optimal contribution is undefined on aligned metrics");
    }
    PointId r = third_point(p, q);
    return weighted_gromov(m, r) / (weighted_gromov(m, q) + weighted_gromov(m, p));
}

/// Metric ratio of the pair (p,q): d(p,q) / (d(p,r) + d(q,r)), in (0, 1].
template <class S>
S metric_ratio(const TriangleMetric<S>& m, PointId p, PointId q) {
    if (p == q) raise(ErrorCode::SamePoint, "metric_ratio requires two distinct points");
    PointId r = third_point(p, q);
    return m.d(p, q) / (m.d(p, r) + m.d(q, r));
}

/// Relabels the points so that d(x,y) >= d(x,z) >= d(y,z), i.e. canonical z
/// is the basepoint 0 and d(x,y) >= rho(x) >= rho(y). Ties keep the input
/// order (stable), so symmetric inputs get the identity permutation.
template <class S>
std::pair<TriangleMetric<S>, Classification> canonicalize(const TriangleMetric<S>& m) {
    using Ops = ScalarOps<S>;

    struct Entry {
        const S* dist;
        PointId opposite;  // the point not on this distance's pair
    };
    std::array<Entry, 3> entries{{{&m.d_xy(), PointId::Z},
                                  {&m.d_xz(), PointId::Y},
                                  {&m.d_yz(), PointId::X}}};
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return *a.dist > *b.dist; });

    // Largest distance becomes d(x,y), so its opposite point becomes the
    // basepoint z; the middle entry's opposite becomes y; the smallest's, x.
    auto canon = TriangleMetric<S>::validate(*entries[0].dist, *entries[1].dist, *entries[2].dist);

    Classification cls;
    cls.canonical_to_original = {entries[2].opposite, entries[1].opposite, entries[0].opposite};

    const S& d = canon.d_xy();
    const S& rx = canon.d_xz();
    const S& ry = canon.d_yz();
    if (is_aligned(canon)) {
        cls.tag = ClassTag::Aligned;
    } else if (Ops::eq(d, rx) && Ops::eq(rx, ry)) {
        cls.tag = ClassTag::Equilateral;
    } else if (Ops::eq(d, rx)) {
        cls.tag = ClassTag::IsoscelesLong;
    } else if (Ops::eq(rx, ry)) {
        cls.tag = ClassTag::IsoscelesFat;
    } else {
        cls.tag = ClassTag::Scalene;
    }
    return {std::move(canon), cls};
}

}  // namespace freeindex

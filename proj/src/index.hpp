#pragma once

#include <optional>

#include "operators.hpp"

namespace freeindex {

enum class Regime {
    Aligned,     // some triangle inequality is an equality; index is 1
    RatioCase,   // the metric ratio R_y(x,0) attains the index
    ContopCase,  // the optimal contribution nu_op(x,0) attains the index
};

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::Aligned:    return "aligned";
        case Regime::RatioCase:  return "ratio_case";
        case Regime::ContopCase: return "contop_case";
    }
    return "?";
}

/// The scalar quantities of the index formula, in canonical labels
/// (d(x,y) >= rho(x) >= rho(y), basepoint z = 0).
template <class S>
struct IndexComponents {
    S nu_op_x0;    // optimal contribution of (x,0); the contop candidate
    S ratio_y_x0;  // metric ratio R_y(x,0); the ratio candidate
    S nu_op_xy;
    S nu_op_y0;
    S ratio_0_xy;
    S ratio_x_y0;
    S threshold;   // (d(x,y)^2 + rho(y)^2) / (d(x,y) + rho(y)); the regime split
};

/// Witness operator together with the constants that define its two columns,
/// for auditability of the construction.
template <class S>
struct WitnessBuild {
    Operator2<S> op;
    Regime regime = Regime::RatioCase;
    S primary;   // alpha_x (ratio case) or lambda_x (contop case)
    S lambda_y;
    S scale;     // index / nu_op(y,0)
};

template <class S>
struct IndexReport {
    IndexReport(TriangleMetric<S> input_, TriangleMetric<S> canonical_, Classification cls)
        : input(std::move(input_)), canonical(std::move(canonical_)), classification(cls) {}

    TriangleMetric<S> input;
    TriangleMetric<S> canonical;
    Classification classification;
    S index{};
    Regime regime = Regime::Aligned;
    std::optional<IndexComponents<S>> components;  // absent for aligned metrics
    std::optional<WitnessBuild<S>> witness;        // absent for aligned metrics
    // For aligned metrics these certify the identity, which attains index 1.
    bool witness_norm_one = false;
    bool witness_radius_matches = false;

    bool certified() const { return witness_norm_one && witness_radius_matches; }
};

/// The weight lambda placing the image of the molecule m_{p,q} on the face
/// anchored at the third point r so that its contribution is minimal:
/// lambda = wG_q(p,r) / (wG_q(p,r) + wG_p(q,r)), in (0,1). The optimally
/// placed image is lambda*m_{p,r} + (1-lambda)*m_{q,r}.
template <class S>
S optimal_lambda(const TriangleMetric<S>& m, PointId p, PointId q) {
    if (p == q) raise(ErrorCode::SamePoint, "optimal_lambda requires two distinct points");
    if (is_aligned(m)) {
        raise(ErrorCode::AlignedMetric, "optimal lambda is undefined on aligned metrics");
    }
    S wq = weighted_gromov(m, q);
    S wp = weighted_gromov(m, p);
    return wq / (wq + wp);
}

namespace detail {

template <class S>
void require_canonical(const TriangleMetric<S>& m, const char* where) {
    if (m.d_xy() < m.d_xz() || m.d_xz() < m.d_yz()) {
        raise(ErrorCode::InvalidArgument,
              std::string(where) + " requires canonical label order d(x,y) >= d(x,z) >= d(y,z)");
    }
}

template <class S>
void require_triangle(const TriangleMetric<S>& m, const char* where) {
    if (is_aligned(m)) {
        raise(ErrorCode::AlignedMetric, std::string(where) + " requires a non-aligned metric");
    }
}

}  // namespace detail

/// Interpolation weight for the image of m_{x,0} in the ratio-regime witness:
/// alpha_x = 1 - rho(y) G_y(x,0) / ((d(x,y) + rho(y)) G_0(x,y)). The vector
/// u = alpha_x m_{y,x} + (1-alpha_x) m_{y,0} satisfies |<rho_0, u>| <= R_y(x,0).
template <class S>
S alpha_x(const TriangleMetric<S>& m) {
    detail::require_canonical(m, "alpha_x");
    detail::require_triangle(m, "alpha_x");
    S nu_x0 = optimal_contribution(m, PointId::X, PointId::Z);
    S ratio = metric_ratio(m, PointId::X, PointId::Z);
    if (ratio < nu_x0) {
        raise(ErrorCode::WrongRegime, "alpha_x requires R_y(x,0) >= nu_op(x,0)");
    }
    const S& ry = m.rho(PointId::Y);
    return S(1) - (ry * gromov(m, PointId::Y)) / ((m.d_xy() + ry) * gromov(m, PointId::Z));
}

namespace detail {

/// Common second column: the optimally placed image of m_{y,0} on the face
/// anchored at x, scaled so its contribution drops to the target index.
/// target must not exceed nu_op(y,0), so the image stays inside the ball.
template <class S>
Vec2<S> scaled_y_image(const TriangleMetric<S>& m, const S& target, S& lambda_y_out, S& scale_out) {
    S lambda_y = optimal_lambda(m, PointId::Y, PointId::Z);
    S nu_y0 = optimal_contribution(m, PointId::Y, PointId::Z);
    if (target > nu_y0 && !ScalarOps<S>::eq(target, nu_y0)) {
        raise(ErrorCode::Internal, "witness scaling would leave the unit ball");
    }
    S scale = target / nu_y0;
    Vec2<S> myx = molecule(m, PointId::Y, PointId::X).coords;
    Vec2<S> mx0 = molecule(m, PointId::X, PointId::Z).coords;
    Vec2<S> image = scale * (lambda_y * myx - (S(1) - lambda_y) * mx0);
    lambda_y_out = std::move(lambda_y);
    scale_out = std::move(scale);
    return image;
}

template <class S>
Operator2<S> from_columns(const Vec2<S>& col1, const Vec2<S>& col2) {
    return {col1.c1, col2.c1, col1.c2, col2.c2};
}

}  // namespace detail

/// Norm-one operator with numerical radius exactly R_y(x,0), for canonical
/// metrics where the metric ratio dominates.
template <class S>
WitnessBuild<S> build_ratio_witness(const TriangleMetric<S>& m) {
    S a = alpha_x(m);  // also enforces canonical order and the regime
    S ratio = metric_ratio(m, PointId::X, PointId::Z);

    Vec2<S> myx = molecule(m, PointId::Y, PointId::X).coords;
    Vec2<S> my0 = molecule(m, PointId::Y, PointId::Z).coords;
    Vec2<S> col1 = a * myx + (S(1) - a) * my0;

    S lambda_y{}, scale{};
    Vec2<S> col2 = detail::scaled_y_image(m, ratio, lambda_y, scale);

    WitnessBuild<S> w{detail::from_columns(col1, col2), Regime::RatioCase, std::move(a),
                      std::move(lambda_y), std::move(scale)};
    return w;
}

template <class S>
Operator2<S> build_ratio_operator(const TriangleMetric<S>& m) {
    return build_ratio_witness(m).op;
}

/// Norm-one operator with numerical radius exactly nu_op(x,0), for canonical
/// metrics where the optimal contribution dominates.
template <class S>
WitnessBuild<S> build_contop_witness(const TriangleMetric<S>& m) {
    detail::require_canonical(m, "build_contop_operator");
    detail::require_triangle(m, "build_contop_operator");
    S nu_x0 = optimal_contribution(m, PointId::X, PointId::Z);
    S ratio = metric_ratio(m, PointId::X, PointId::Z);
    if (nu_x0 < ratio) {
        raise(ErrorCode::WrongRegime, "build_contop_operator requires nu_op(x,0) >= R_y(x,0)");
    }
    // The construction needs nu_op(x,0) <= R_0(x,y) so the image of m_{x,y}
    // stays inside the ball; re-verified rather than assumed.
    S ratio_0_xy = metric_ratio(m, PointId::X, PointId::Y);
    if (nu_x0 > ratio_0_xy && !ScalarOps<S>::eq(nu_x0, ratio_0_xy)) {
        raise(ErrorCode::Internal, "expected nu_op(x,0) <= R_0(x,y) on canonical metrics");
    }

    S lambda_x = optimal_lambda(m, PointId::X, PointId::Z);
    Vec2<S> myx = molecule(m, PointId::Y, PointId::X).coords;
    Vec2<S> my0 = molecule(m, PointId::Y, PointId::Z).coords;
    Vec2<S> col1 = lambda_x * myx + (S(1) - lambda_x) * my0;

    S lambda_y{}, scale{};
    Vec2<S> col2 = detail::scaled_y_image(m, nu_x0, lambda_y, scale);

    WitnessBuild<S> w{detail::from_columns(col1, col2), Regime::ContopCase, std::move(lambda_x),
                      std::move(lambda_y), std::move(scale)};
    return w;
}

template <class S>
Operator2<S> build_contop_operator(const TriangleMetric<S>& m) {
    return build_contop_witness(m).op;
}

/// The three values max{nu_op(p,q), R_r(p,q)}, one per pair, in the order
/// (x,y), (x,z), (y,z). Each bounds from below the numerical radius of any
/// norm-one operator sending m_{p,q} to the sphere, and some molecule always
/// goes to the sphere, so their min bounds the numerical index.
template <class S>
std::array<S, 3> lower_bound_components(const TriangleMetric<S>& m) {
    detail::require_triangle(m, "lower_bound_components");
    auto component = [&](PointId p, PointId q) {
        S nu = optimal_contribution(m, p, q);
        S ratio = metric_ratio(m, p, q);
        return nu > ratio ? nu : ratio;
    };
    return {component(PointId::X, PointId::Y), component(PointId::X, PointId::Z),
            component(PointId::Y, PointId::Z)};
}

/// The numerical index of F(M) with witness and certification. Aligned
/// metrics give index 1 (the ball is a rhombus and F(M) is the L1 plane);
/// otherwise the index is max{nu_op(x,0), R_y(x,0)} in canonical labels and
/// the matching construction provides a norm-one operator attaining it.
template <class S>
IndexReport<S> numerical_index(const TriangleMetric<S>& m) {
    using Ops = ScalarOps<S>;
    auto [canon, cls] = canonicalize(m);
    IndexReport<S> rep(m, canon, cls);

    const S one = Ops::from_int(1);
    if (cls.tag == ClassTag::Aligned) {
        rep.index = one;
        rep.regime = Regime::Aligned;
        auto id = Operator2<S>::identity();
        rep.witness_norm_one = Ops::eq(op_norm(canon, id), one);
        rep.witness_radius_matches = Ops::eq(numerical_radius(canon, id), one);
        return rep;
    }

    IndexComponents<S> c{optimal_contribution(canon, PointId::X, PointId::Z),
                         metric_ratio(canon, PointId::X, PointId::Z),
                         optimal_contribution(canon, PointId::X, PointId::Y),
                         optimal_contribution(canon, PointId::Y, PointId::Z),
                         metric_ratio(canon, PointId::X, PointId::Y),
                         metric_ratio(canon, PointId::Y, PointId::Z),
                         (canon.d_xy() * canon.d_xy() + canon.d_yz() * canon.d_yz()) /
                             (canon.d_xy() + canon.d_yz())};

    // Ties go to the ratio construction; both are valid at the boundary.
    const bool ratio_case = !(c.ratio_y_x0 < c.nu_op_x0);
    rep.regime = ratio_case ? Regime::RatioCase : Regime::ContopCase;
    rep.index = ratio_case ? c.ratio_y_x0 : c.nu_op_x0;
    rep.components = std::move(c);

    WitnessBuild<S> w = ratio_case ? build_ratio_witness(canon) : build_contop_witness(canon);
    rep.witness_norm_one = Ops::eq(op_norm(canon, w.op), one);
    rep.witness_radius_matches = Ops::eq(numerical_radius(canon, w.op), rep.index);
    rep.witness = std::move(w);
    return rep;
}

/// Triangle whose free space has numerical index exactly alpha, for
/// alpha in [1/2, 1]: the isosceles family with unit legs and base
/// (1-alpha)/alpha, degenerating to the aligned triple (2,1,1) at alpha = 1.
template <class S>
TriangleMetric<S> design_triangle(const S& alpha) {
    const S half = S(1) / S(2);
    if (alpha < half || alpha > S(1)) {
        raise(ErrorCode::AlphaOutOfRange, "target index must lie in [1/2, 1]");
    }
    if (alpha == S(1)) {
        return TriangleMetric<S>::validate(S(2), S(1), S(1));
    }
    S base = (S(1) - alpha) / alpha;
    return TriangleMetric<S>::validate(std::move(base), S(1), S(1));
}

}  // namespace freeindex

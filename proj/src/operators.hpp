#pragma once

#include <vector>

#include "freespace.hpp"

namespace freeindex {

/// Linear operator on F(M) in the molecule basis; column j is the image of
/// the j-th basis molecule, so apply(T, m_{x,0}) = (t11, t21).
template <class S>
struct Operator2 {
    S t11{}, t12{}, t21{}, t22{};

    static Operator2 identity() { return {S(1), S(0), S(0), S(1)}; }
    static Operator2 zero() { return {S(0), S(0), S(0), S(0)}; }

    S& entry(int k) {
        switch (k) {
            case 0: return t11;
            case 1: return t12;
            case 2: return t21;
            default: return t22;
        }
    }
    const S& entry(int k) const { return const_cast<Operator2*>(this)->entry(k); }

    friend Operator2 operator+(const Operator2& a, const Operator2& b) {
        return {a.t11 + b.t11, a.t12 + b.t12, a.t21 + b.t21, a.t22 + b.t22};
    }
    friend Operator2 operator-(const Operator2& a, const Operator2& b) {
        return {a.t11 - b.t11, a.t12 - b.t12, a.t21 - b.t21, a.t22 - b.t22};
    }
    friend Operator2 operator*(const S& s, const Operator2& a) {
        return {s * a.t11, s * a.t12, s * a.t21, s * a.t22};
    }
    Operator2 operator-() const { return {-t11, -t12, -t21, -t22}; }
};

template <class S>
Vec2<S> apply(const Operator2<S>& T, const Vec2<S>& v) {
    return {T.t11 * v.c1 + T.t12 * v.c2, T.t21 * v.c1 + T.t22 * v.c2};
}

/// Per-metric cache of molecules, face functionals and incidence pairs; the
/// search oracle evaluates millions of radii against a fixed metric.
template <class S>
struct HexGeometry {
    TriangleMetric<S> metric;
    std::array<Molecule<S>, 3> molecules;      // m_{x,0}, m_{y,0}, m_{x,y}
    std::array<Functional<S>, 3> functionals;  // rho_x, rho_y, rho_z
    std::vector<IncidencePair<S>> pairs;
};

template <class S>
HexGeometry<S> make_geometry(const TriangleMetric<S>& m) {
    return {m,
            {molecule(m, PointId::X, PointId::Z), molecule(m, PointId::Y, PointId::Z),
             molecule(m, PointId::X, PointId::Y)},
            {face_functional(m, PointId::X), face_functional(m, PointId::Y),
             face_functional(m, PointId::Z)},
            incidence_pairs(m)};
}

template <class S>
S norm(const HexGeometry<S>& g, const Vec2<S>& v) {
    using Ops = ScalarOps<S>;
    S best = Ops::abs(evaluate(g.functionals[0], v));
    for (int i = 1; i < 3; ++i) {
        S cand = Ops::abs(evaluate(g.functionals[i], v));
        if (cand > best) best = cand;
    }
    return best;
}

/// Operator norm: the unit ball is the absolute convex hull of the three
/// molecules, so the norm is attained at one of them.
template <class S>
S op_norm(const HexGeometry<S>& g, const Operator2<S>& T) {
    S best = norm(g, apply(T, g.molecules[0].coords));
    for (int i = 1; i < 3; ++i) {
        S cand = norm(g, apply(T, g.molecules[i].coords));
        if (cand > best) best = cand;
    }
    return best;
}

template <class S>
S op_norm(const TriangleMetric<S>& m, const Operator2<S>& T) {
    return op_norm(make_geometry(m), T);
}

/// Contribution of a molecule to the numerical radius of T: the largest
/// |<f, T mol>| over the signed face functionals f with <f, mol> = 1.
template <class S>
S contribution(const TriangleMetric<S>& m, const Operator2<S>& T, const Molecule<S>& mol) {
    using Ops = ScalarOps<S>;
    const S one = Ops::from_int(1);
    const Vec2<S> image = apply(T, mol.coords);
    bool found = false;
    S best{};
    for (const auto& f : signed_functionals(m)) {
        if (!Ops::eq(evaluate(f, mol.coords), one)) continue;
        S cand = Ops::abs(evaluate(f, image));
        if (!found || cand > best) best = cand;
        found = true;
    }
    if (!found) raise(ErrorCode::Internal, "molecule with no incident face");
    return best;
}

/// Numerical radius via the vertex-face incidence enumeration. Exact, not
/// approximate: face points other than vertices never exceed vertex values.
template <class S>
S numerical_radius(const HexGeometry<S>& g, const Operator2<S>& T) {
    using Ops = ScalarOps<S>;
    S best = Ops::from_int(0);
    for (const auto& pair : g.pairs) {
        S cand = Ops::abs(evaluate(pair.face, apply(T, pair.vertex.coords)));
        if (cand > best) best = cand;
    }
    return best;
}

template <class S>
S numerical_radius(const TriangleMetric<S>& m, const Operator2<S>& T) {
    return numerical_radius(make_geometry(m), T);
}

}  // namespace freeindex

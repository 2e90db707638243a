#pragma once

#include <array>
#include <vector>

#include "metric.hpp"

namespace freeindex {

/// Coordinates in the molecule basis (m_{x,0}, m_{y,0}).
template <class S>
struct Vec2 {
    S c1{};
    S c2{};

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
    friend Vec2 operator*(const S& s, const Vec2& v) { return {s * v.c1, s * v.c2}; }
    Vec2 operator-() const { return {-c1, -c2}; }
};

/// The norm-one vector (delta_from - delta_to) / d(from, to).
template <class S>
struct Molecule {
    PointId from;
    PointId to;
    Vec2<S> coords;
};

/// Linear form on F(M); acts on Vec2(c1, c2) as a*c1 + b*c2. The base form
/// rho_p (sign +1) takes value 1 on both molecules pointing into its anchor;
/// the six signed forms define the maximal faces of the unit ball.
template <class S>
struct Functional {
    S a{};
    S b{};
    PointId anchor;
    int sign = 1;
};

template <class S>
S evaluate(const Functional<S>& f, const Vec2<S>& v) {
    return f.a * v.c1 + f.b * v.c2;
}

template <class S>
Functional<S> negate(const Functional<S>& f) {
    return {-f.a, -f.b, f.anchor, -f.sign};
}

/// A (signed vertex, signed face) pair with <face, vertex> = 1.
template <class S>
struct IncidencePair {
    Molecule<S> vertex;
    Functional<S> face;
};

template <class S>
Molecule<S> molecule(const TriangleMetric<S>& m, PointId from, PointId to) {
    if (from == to) raise(ErrorCode::SamePoint, "molecule requires two distinct points");
    // base orientations; the reverse pair negates the coordinates
    if (from == PointId::X && to == PointId::Z) return {from, to, {S(1), S(0)}};
    if (from == PointId::Y && to == PointId::Z) return {from, to, {S(0), S(1)}};
    if (from == PointId::X && to == PointId::Y) {
        return {from, to, {m.rho(PointId::X) / m.d_xy(), -(m.rho(PointId::Y) / m.d_xy())}};
    }
    Molecule<S> rev = molecule(m, to, from);
    return {from, to, -rev.coords};
}

/// The norm-one form rho_anchor solving <rho_p, m_{q,p}> = 1 = <rho_p, m_{r,p}>.
template <class S>
Functional<S> face_functional(const TriangleMetric<S>& m, PointId anchor) {
    std::array<PointId, 2> others{};
    switch (anchor) {
        case PointId::X: others = {PointId::Y, PointId::Z}; break;
        case PointId::Y: others = {PointId::X, PointId::Z}; break;
        case PointId::Z: others = {PointId::X, PointId::Y}; break;
    }
    Vec2<S> u = molecule(m, others[0], anchor).coords;
    Vec2<S> v = molecule(m, others[1], anchor).coords;
    // a*u + b*v = (1, 1), solved by Cramer's rule
    S det = u.c1 * v.c2 - u.c2 * v.c1;
    if (ScalarOps<S>::is_zero(det)) {
        raise(ErrorCode::Internal, "singular system defining a face functional");
    }
    S a = (v.c2 - u.c2) / det;
    S b = (u.c1 - v.c1) / det;
    return {std::move(a), std::move(b), anchor, 1};
}

/// Norm on F(M): the unit ball is cut out by the six half-spaces
/// {|<rho_p, .>| <= 1}, so the norm is the max of the three |evaluations|.
template <class S>
S norm(const TriangleMetric<S>& m, const Vec2<S>& v) {
    using Ops = ScalarOps<S>;
    S best = Ops::abs(evaluate(face_functional(m, PointId::X), v));
    for (PointId p : {PointId::Y, PointId::Z}) {
        S cand = Ops::abs(evaluate(face_functional(m, p), v));
        if (cand > best) best = cand;
    }
    return best;
}

/// The six signed molecules, in hexagon vertex order when traversed as
/// [0]=m_{x,0}, [1]=m_{x,y}, [2]=m_{z,y}, [3]=m_{z,x}, [4]=m_{y,x}, [5]=m_{y,0}.
template <class S>
std::array<Molecule<S>, 6> signed_molecules(const TriangleMetric<S>& m) {
    return {molecule(m, PointId::X, PointId::Z), molecule(m, PointId::X, PointId::Y),
            molecule(m, PointId::Z, PointId::Y), molecule(m, PointId::Z, PointId::X),
            molecule(m, PointId::Y, PointId::X), molecule(m, PointId::Y, PointId::Z)};
}

template <class S>
std::array<Functional<S>, 6> signed_functionals(const TriangleMetric<S>& m) {
    std::array<Functional<S>, 6> out{
        face_functional(m, PointId::X), {}, face_functional(m, PointId::Y), {},
        face_functional(m, PointId::Z), {}};
    out[1] = negate(out[0]);
    out[3] = negate(out[2]);
    out[5] = negate(out[4]);
    return out;
}

/// All pairs (signed molecule, signed face functional) whose pairing is
/// exactly 1. Non-aligned metrics give 12 pairs (each of the 6 vertices lies
/// on 2 faces). Aligned metrics keep non-extreme molecules and coinciding
/// functionals, so the count exceeds 12; the extra pairs are harmless when
/// maximizing since a convex-combination vertex never beats its endpoints.
template <class S>
std::vector<IncidencePair<S>> incidence_pairs(const TriangleMetric<S>& m) {
    using Ops = ScalarOps<S>;
    std::vector<IncidencePair<S>> out;
    const auto mols = signed_molecules(m);
    const auto funcs = signed_functionals(m);
    const S one = Ops::from_int(1);
    for (const auto& mol : mols) {
        for (const auto& f : funcs) {
            if (Ops::eq(evaluate(f, mol.coords), one)) {
                out.push_back({mol, f});
            }
        }
    }
    return out;
}

}  // namespace freeindex

#pragma once

#include <array>
#include <optional>
#include <string>

#include "operators.hpp"

namespace freeindex {

/// Drawing of the unit ball plus the geometry it was produced from, so
/// callers (and tests) can check the emitted vertices without re-parsing.
struct BallRender {
    std::string svg;
    std::array<Vec2<double>, 6> hexagon;  // signed molecules, in boundary order
    std::array<std::string, 6> vertex_names;
    std::array<std::string, 6> face_names;  // face_names[i] labels edge (i, i+1)
    std::optional<std::array<Vec2<double>, 6>> image;  // T(hexagon), when drawn
    int attaining_vertex = -1;  // hexagon index of the pair attaining v(T)
    int attaining_face = -1;    // edge index of that pair's face
};

/// Deterministic SVG 1.1 drawing: the hexagon conv{±m_{x,0}, ±m_{y,0},
/// ±m_{x,y}} with labeled vertices and faces, scaled so the circumradius maps
/// to 200 units. With an operator, overlays the image polygon T(B) and marks
/// the incidence pair attaining the numerical radius.
BallRender render_ball(const TriangleMetric<double>& m, const Operator2<double>* op);

}  // namespace freeindex

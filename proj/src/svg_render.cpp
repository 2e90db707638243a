#include "svg_render.hpp"

#include <cmath>
#include <cstdio>

namespace freeindex {

namespace {

constexpr double kView = 500.0;
constexpr double kCenter = kView / 2.0;
constexpr double kTargetRadius = 200.0;

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

struct Mapper {
    double scale;
    double px(const Vec2<double>& v) const { return kCenter + scale * v.c1; }
    double py(const Vec2<double>& v) const { return kCenter - scale * v.c2; }
    std::string point(const Vec2<double>& v) const { return fmt("%.3f,%.3f", px(v), py(v)); }
};

std::string polygon_points(const std::array<Vec2<double>, 6>& poly, const Mapper& map) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        if (i) out += ' ';
        out += map.point(poly[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::string data_coords(const std::array<Vec2<double>, 6>& poly) {
    std::string out;
    char buf[96];
    for (int i = 0; i < 6; ++i) {
        const auto& v = poly[static_cast<std::size_t>(i)];
        std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", i ? " " : "", v.c1, v.c2);
        out += buf;
    }
    return out;
}

int vertex_cycle_index(const Molecule<double>& mol) {
    // order of signed_molecules(): m_x0, m_xy, m_zy, m_zx, m_yx, m_y0
    static constexpr std::pair<PointId, PointId> cycle[6] = {
        {PointId::X, PointId::Z}, {PointId::X, PointId::Y}, {PointId::Z, PointId::Y},
        {PointId::Z, PointId::X}, {PointId::Y, PointId::X}, {PointId::Y, PointId::Z}};
    for (int i = 0; i < 6; ++i) {
        if (cycle[i].first == mol.from && cycle[i].second == mol.to) return i;
    }
    return -1;
}

int face_edge_index(const Functional<double>& f) {
    // edge i joins cycle vertices i and i+1; its face, in the same order:
    // -rho_x, +rho_y, -rho_0, +rho_x, -rho_y, +rho_0
    static constexpr std::pair<PointId, int> edges[6] = {
        {PointId::X, -1}, {PointId::Y, +1}, {PointId::Z, -1},
        {PointId::X, +1}, {PointId::Y, -1}, {PointId::Z, +1}};
    for (int i = 0; i < 6; ++i) {
        if (edges[i].first == f.anchor && edges[i].second == f.sign) return i;
    }
    return -1;
}

}  // namespace

BallRender render_ball(const TriangleMetric<double>& m, const Operator2<double>* op) {
    BallRender out;
    const auto cycle = signed_molecules(m);
    for (int i = 0; i < 6; ++i) out.hexagon[static_cast<std::size_t>(i)] = cycle[static_cast<std::size_t>(i)].coords;
    out.vertex_names = {"m_x0", "m_xy", "m_zy", "m_zx", "m_yx", "m_y0"};
    out.face_names = {"-rho_x", "+rho_y", "-rho_0", "+rho_x", "-rho_y", "+rho_0"};

    if (op) {
        std::array<Vec2<double>, 6> image{};
        for (int i = 0; i < 6; ++i) {
            image[static_cast<std::size_t>(i)] = apply(*op, out.hexagon[static_cast<std::size_t>(i)]);
        }
        out.image = image;

        // locate the incidence pair attaining the numerical radius
        double best = -1.0;
        for (const auto& pair : incidence_pairs(m)) {
            double v = std::fabs(evaluate(pair.face, apply(*op, pair.vertex.coords)));
            if (v > best) {
                best = v;
                out.attaining_vertex = vertex_cycle_index(pair.vertex);
                out.attaining_face = face_edge_index(pair.face);
            }
        }
    }

    double circumradius = 0.0;
    for (const auto& v : out.hexagon) {
        circumradius = std::max(circumradius, std::hypot(v.c1, v.c2));
    }
    Mapper map{kTargetRadius / circumradius};

    std::string& svg = out.svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" "
               "height=\"%.0f\" viewBox=\"0 0 500 500\">\n", kView, kView);
    svg += "<rect x=\"0\" y=\"0\" width=\"500\" height=\"500\" fill=\"#ffffff\"/>\n";
    svg += fmt("<line x1=\"0\" y1=\"%.1f\" x2=\"%.1f\" y2=\"250\" stroke=\"#d0d0d0\" "
               "stroke-width=\"1\"/>\n", kCenter, kView);
    svg += fmt("<line x1=\"%.1f\" y1=\"0\" x2=\"250\" y2=\"%.1f\" stroke=\"#d0d0d0\" "
               "stroke-width=\"1\"/>\n", kCenter, kView);

    svg += "<polygon id=\"ball\" points=\"" + polygon_points(out.hexagon, map) +
           "\" data-coords=\"" + data_coords(out.hexagon) +
           "\" fill=\"#dbeafe\" fill-opacity=\"0.6\" stroke=\"#1d4ed8\" stroke-width=\"2\"/>\n";

    if (out.image) {
        svg += "<polygon id=\"image\" points=\"" + polygon_points(*out.image, map) +
               "\" data-coords=\"" + data_coords(*out.image) +
               "\" fill=\"#fecaca\" fill-opacity=\"0.5\" stroke=\"#b91c1c\" "
               "stroke-width=\"1.5\"/>\n";
    }

    if (out.attaining_face >= 0) {
        const auto& a = out.hexagon[static_cast<std::size_t>(out.attaining_face)];
        const auto& b = out.hexagon[static_cast<std::size_t>((out.attaining_face + 1) % 6)];
        svg += fmt("<line x1=\"%.3f\" y1=\"%.3f\" ", map.px(a), map.py(a));
        svg += fmt("x2=\"%.3f\" y2=\"%.3f\" stroke=\"#15803d\" stroke-width=\"5\" "
                   "stroke-linecap=\"round\"/>\n", map.px(b), map.py(b));
    }

    for (int i = 0; i < 6; ++i) {
        const auto& v = out.hexagon[static_cast<std::size_t>(i)];
        bool attains = i == out.attaining_vertex;
        svg += fmt("<circle cx=\"%.3f\" cy=\"%.3f\" ", map.px(v), map.py(v));
        svg += attains ? "r=\"7\" fill=\"#15803d\"/>\n" : "r=\"4\" fill=\"#1d4ed8\"/>\n";
        Vec2<double> lv{1.14 * v.c1, 1.14 * v.c2};
        svg += fmt("<text x=\"%.3f\" y=\"%.3f\" font-family=\"monospace\" font-size=\"14\" "
                   "text-anchor=\"middle\">", map.px(lv), map.py(lv));
        svg += out.vertex_names[static_cast<std::size_t>(i)] + "</text>\n";
    }

    for (int i = 0; i < 6; ++i) {
        const auto& a = out.hexagon[static_cast<std::size_t>(i)];
        const auto& b = out.hexagon[static_cast<std::size_t>((i + 1) % 6)];
        Vec2<double> mid{0.62 * (a.c1 + b.c1), 0.62 * (a.c2 + b.c2)};
        svg += fmt("<text x=\"%.3f\" y=\"%.3f\" font-family=\"monospace\" font-size=\"12\" "
                   "text-anchor=\"middle\" fill=\"#374151\">", map.px(mid), map.py(mid));
        svg += out.face_names[static_cast<std::size_t>(i)] + "</text>\n";
    }

    svg += "</svg>\n";
    return out;
}

}  // namespace freeindex

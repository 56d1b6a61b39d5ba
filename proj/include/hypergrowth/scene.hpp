#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "hypergrowth/disk.hpp"
#include "hypergrowth/errors.hpp"
#include "hypergrowth/geometry.hpp"

namespace hypergrowth {

inline constexpr double placement_tolerance = 1e-9;

// Layer fills: the first three follow the usual yellow/red/purple coloring
// of the first three rings; deeper layers cycle.
inline constexpr std::array<const char*, 6> layer_palette = {
    "#f2c500", "#d93025", "#7b2d8e", "#2f6fb2", "#2e9d4e", "#ef7d16"};

inline std::string layer_color(int layer) {
    const auto idx = static_cast<std::size_t>(((layer - 1) % 6 + 6) % 6);
    return layer_palette[idx];
}

/// One rendered triangle; corners[k] is the position of the source
/// triangle's vertices[k], edges[k] joins corners[k] to corners[(k+1)%3].
struct scene_triangle {
    triangle_id id = no_triangle;
    int layer = 0;
    std::array<disk_point, 3> corners;
    std::array<geodesic_arc, 3> edges;
};

struct canvas_spec {
    int width = 1000;
    int height = 1000;
    bool unit_circle_outline = true;
};

struct tiling_scene {
    std::int64_t n = 0;
    int radius = 0;
    std::vector<scene_triangle> triangles;
    std::vector<disk_point> vertex_positions;  // indexed by vertex id
    canvas_spec canvas;
    double max_placement_mismatch = 0;  // worst disagreement between reflection paths
};

/*
    Poincare-disk layout of a combinatorial disk (n >= 7). The base vertex
    sits at the origin with its first spoke along the positive x-axis; the
    first fan is placed from the exact hyperbolic side length, and every
    further triangle is the image of an already placed one under reflection
    (circle inversion) across their shared geodesic edge. A vertex reached
    along several reflection paths must land on the same point; the worst
    mismatch is recorded and must stay within placement_tolerance.
*/
inline tiling_scene layout(const disk_complex& dc) {
    if (dc.n < 7) throw unsupported_n("hyperbolic rendering requires n >= 7, got " + std::to_string(dc.n));
    if (dc.closed) throw already_closed("cannot lay out a closed complex");

    tiling_scene scene;
    scene.n = dc.n;
    scene.radius = dc.radius;
    if (dc.radius == 0) return scene;

    std::vector<cplx> pos(dc.vertices.size());
    std::vector<char> placed(dc.vertices.size(), 0);

    // Side length of the equilateral tile with interior angle 2 pi / n.
    const double angle = 2 * std::acos(-1.0) / static_cast<double>(dc.n);
    const double cosh_side = std::cos(angle) / (1 - std::cos(angle));
    const double side = std::acosh(cosh_side);
    const double ring_radius = std::tanh(side / 2);  // Euclidean radius of the first ring

    const vertex_id base = dc.base_vertex();
    pos[static_cast<std::size_t>(base)] = 0;
    placed[static_cast<std::size_t>(base)] = 1;

    // First fan, walked in rotation order around the base vertex.
    const auto& fan = dc.vertices[static_cast<std::size_t>(base)].incident;
    std::int64_t slot = 0;
    for (std::size_t j = 0; j < fan.size(); ++j) {
        const auto& tri = dc.triangles[static_cast<std::size_t>(fan[j])];
        for (vertex_id v : tri.vertices) {
            if (v == base || placed[static_cast<std::size_t>(v)]) continue;
            pos[static_cast<std::size_t>(v)] = std::polar(ring_radius, angle * static_cast<double>(slot));
            placed[static_cast<std::size_t>(v)] = 1;
            ++slot;
        }
    }
    if (slot != dc.n) throw internal_error("base fan placement visited " + std::to_string(slot) + " ring vertices");

    // Breadth-first reflection over the triangle adjacency.
    std::vector<char> visited(dc.triangles.size(), 0);
    std::deque<triangle_id> queue;
    for (triangle_id t : fan) {
        visited[static_cast<std::size_t>(t)] = 1;
        queue.push_back(t);
    }

    while (!queue.empty()) {
        const triangle_id t = queue.front();
        queue.pop_front();
        const auto& tri = dc.triangles[static_cast<std::size_t>(t)];
        for (int k = 0; k < 3; ++k) {
            const vertex_id a = tri.vertices[static_cast<std::size_t>(k)];
            const vertex_id b = tri.vertices[static_cast<std::size_t>((k + 1) % 3)];
            const vertex_id opposite = tri.vertices[static_cast<std::size_t>((k + 2) % 3)];
            const auto& entry = dc.edge_index.at(edge_key(a, b));
            const triangle_id other = entry.tris[0] == t ? entry.tris[1] : entry.tris[0];
            if (other == no_triangle) continue;
            const vertex_id target = detail::third_vertex(dc, other, a, b);

            const auto arc = geodesic_between(disk_point::from_complex(pos[static_cast<std::size_t>(a)]),
                                              disk_point::from_complex(pos[static_cast<std::size_t>(b)]));
            const cplx candidate = reflect_across(arc).apply(pos[static_cast<std::size_t>(opposite)]);
            if (!placed[static_cast<std::size_t>(target)]) {
                pos[static_cast<std::size_t>(target)] = candidate;
                placed[static_cast<std::size_t>(target)] = 1;
            } else {
                const double mismatch = std::abs(pos[static_cast<std::size_t>(target)] - candidate);
                if (mismatch > scene.max_placement_mismatch) scene.max_placement_mismatch = mismatch;
                if (mismatch > placement_tolerance)
                    throw numerical_degeneracy("vertex " + std::to_string(target) +
                                               " reached with mismatch " + std::to_string(mismatch));
            }
            if (!visited[static_cast<std::size_t>(other)]) {
                visited[static_cast<std::size_t>(other)] = 1;
                queue.push_back(other);
            }
        }
    }

    for (std::size_t v = 0; v < placed.size(); ++v)
        if (!placed[v]) throw internal_error("vertex " + std::to_string(v) + " never placed");

    scene.vertex_positions.reserve(pos.size());
    for (const cplx& z : pos) scene.vertex_positions.push_back(disk_point::from_complex(z));

    scene.triangles.reserve(dc.triangles.size());
    for (const auto& tri : dc.triangles) {
        scene_triangle st;
        st.id = tri.id;
        st.layer = tri.birth_layer;
        for (int k = 0; k < 3; ++k)
            st.corners[static_cast<std::size_t>(k)] =
                disk_point::from_complex(pos[static_cast<std::size_t>(tri.vertices[static_cast<std::size_t>(k)])]);
        for (int k = 0; k < 3; ++k)
            st.edges[static_cast<std::size_t>(k)] = geodesic_between(
                st.corners[static_cast<std::size_t>(k)], st.corners[static_cast<std::size_t>((k + 1) % 3)]);
        scene.triangles.push_back(std::move(st));
    }
    return scene;
}

} // namespace hypergrowth

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypergrowth/errors.hpp"

namespace hypergrowth {

using vertex_id = std::int32_t;
using triangle_id = std::int32_t;

inline constexpr triangle_id no_triangle = -1;
inline constexpr vertex_id no_vertex = -1;

/// A vertex together with its rotation system: incident triangles kept in
/// fan order (consecutive entries share an edge through this vertex).
struct vertex_record {
    vertex_id id = no_vertex;
    int birth_layer = 0;
    std::vector<triangle_id> incident;
    bool saturated = false;
};

struct triangle_record {
    triangle_id id = no_triangle;
    std::array<vertex_id, 3> vertices{no_vertex, no_vertex, no_vertex};
    int birth_layer = 0;
};

/// The 1 or 2 triangles glued along an edge; boundary edges have exactly 1.
struct edge_entry {
    std::array<triangle_id, 2> tris{no_triangle, no_triangle};

    int count() const { return tris[0] == no_triangle ? 0 : (tris[1] == no_triangle ? 1 : 2); }
};

struct build_limits {
    std::uint64_t max_triangles = 5'000'000;
};

// Unordered vertex pair packed into one hashable key.
inline std::uint64_t edge_key(vertex_id u, vertex_id v) {
    const auto lo = static_cast<std::uint32_t>(u < v ? u : v);
    const auto hi = static_cast<std::uint32_t>(u < v ? v : u);
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

/*
    The combinatorial disk D_n(r) in the triangle complex X_n (n triangles
    around every vertex): D_n(0) is a single vertex, and each growth step
    adjoins every triangle of X_n that touches the current disk.

    Growth walks the boundary cycle b_0, ..., b_{m-1} once. A boundary
    vertex b_i still missing d = n - k_i triangles receives a fan of d
    triangles filling its outside gap. The fan is stitched to its
    neighbours' fans through shared triangles:

      * the first triangle of b_i's fan sits on the boundary edge
        (b_{i-1}, b_i) and was already created while processing b_{i-1}
        (so the walk starts the fan from that triangle's apex);
      * the last triangle sits on (b_i, b_{i+1}) and is created now, to be
        picked up when the walk reaches b_{i+1};
      * the spokes strictly between those two end at fresh vertices owned
        by b_i alone.

    For n <= 5 the deficits shrink until fans degenerate (d = 1 produces the
    single triangle (b_{i-1}, b_i, b_{i+1}); d = 2 merges the two shared
    apexes), which is exactly how the three Platonic closures appear. The
    walk handles those cases with no special casing: the third vertex of a
    fan triangle is fresh only when it is not forced to be an existing one.
*/
struct disk_complex {
    std::int64_t n = 0;
    int radius = 0;
    bool closed = false;
    int closure_layer = -1;  // layer at which the complex closed, or -1

    std::vector<vertex_record> vertices;
    std::vector<triangle_record> triangles;
    std::unordered_map<std::uint64_t, edge_entry> edge_index;
    std::vector<vertex_id> boundary_cycle;  // empty once closed

    vertex_id base_vertex() const { return 0; }
};

namespace detail {

inline vertex_id new_vertex(disk_complex& dc, int layer) {
    const auto id = static_cast<vertex_id>(dc.vertices.size());
    dc.vertices.push_back({id, layer, {}, false});
    return id;
}

inline bool shares_spoke(const disk_complex& dc, triangle_id s, triangle_id t, vertex_id v) {
    for (vertex_id a : dc.triangles[static_cast<std::size_t>(s)].vertices) {
        if (a == v) continue;
        for (vertex_id b : dc.triangles[static_cast<std::size_t>(t)].vertices)
            if (a == b) return true;
    }
    return false;
}

// Keeps the incident list a contiguous fan: a triangle may only ever attach
// at one of the two open ends of the chain.
inline void attach_to_fan(disk_complex& dc, vertex_id v, triangle_id t) {
    auto& rec = dc.vertices[static_cast<std::size_t>(v)];
    auto& fan = rec.incident;
    if (fan.empty() || shares_spoke(dc, fan.back(), t, v)) {
        fan.push_back(t);
    } else if (shares_spoke(dc, fan.front(), t, v)) {
        fan.insert(fan.begin(), t);
    } else {
        throw internal_error("rotation system would become discontiguous at vertex " +
                             std::to_string(v));
    }
    if (static_cast<std::int64_t>(fan.size()) > dc.n)
        throw internal_error("vertex " + std::to_string(v) + " oversaturated");
    rec.saturated = static_cast<std::int64_t>(fan.size()) == dc.n;
}

inline triangle_id add_triangle(disk_complex& dc, vertex_id a, vertex_id b, vertex_id c,
                                int layer) {
    const auto id = static_cast<triangle_id>(dc.triangles.size());
    dc.triangles.push_back({id, {a, b, c}, layer});
    const std::array<std::pair<vertex_id, vertex_id>, 3> es{{{a, b}, {b, c}, {c, a}}};
    for (auto [u, v] : es) {
        auto& entry = dc.edge_index[edge_key(u, v)];
        const int k = entry.count();
        if (k == 2)
            throw internal_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") would exceed two incident triangles");
        entry.tris[static_cast<std::size_t>(k)] = id;
    }
    attach_to_fan(dc, a, id);
    attach_to_fan(dc, b, id);
    attach_to_fan(dc, c, id);
    return id;
}

// Triangle on edge (u, v) born in `layer`, or no_triangle.
inline triangle_id layer_triangle_on_edge(const disk_complex& dc, vertex_id u, vertex_id v,
                                          int layer) {
    const auto it = dc.edge_index.find(edge_key(u, v));
    if (it == dc.edge_index.end()) return no_triangle;
    for (triangle_id t : it->second.tris)
        if (t != no_triangle && dc.triangles[static_cast<std::size_t>(t)].birth_layer == layer)
            return t;
    return no_triangle;
}

inline vertex_id third_vertex(const disk_complex& dc, triangle_id t, vertex_id u, vertex_id v) {
    for (vertex_id w : dc.triangles[static_cast<std::size_t>(t)].vertices)
        if (w != u && w != v) return w;
    throw internal_error("degenerate triangle " + std::to_string(t));
}

inline int incident_count(const disk_complex& dc, vertex_id v) {
    return static_cast<int>(dc.vertices[static_cast<std::size_t>(v)].incident.size());
}

// Layer 1: one complete fan of n triangles around the base vertex.
inline void grow_first_fan(disk_complex& dc) {
    const int layer = 1;
    std::vector<vertex_id> ring;
    ring.reserve(static_cast<std::size_t>(dc.n));
    for (std::int64_t j = 0; j < dc.n; ++j) ring.push_back(new_vertex(dc, layer));
    for (std::int64_t j = 0; j < dc.n; ++j)
        add_triangle(dc, dc.base_vertex(), ring[static_cast<std::size_t>(j)],
                     ring[static_cast<std::size_t>((j + 1) % dc.n)], layer);
    dc.boundary_cycle = std::move(ring);
}

inline void finish_layer(disk_complex& dc, const std::vector<vertex_id>& created, int layer) {
    std::vector<vertex_id> next_boundary;
    next_boundary.reserve(created.size());
    for (vertex_id v : created)
        if (!dc.vertices[static_cast<std::size_t>(v)].saturated) next_boundary.push_back(v);

    if (next_boundary.empty()) {
        for (const auto& rec : dc.vertices)
            if (!rec.saturated)
                throw internal_error("closure with unsaturated vertex " + std::to_string(rec.id));
        dc.closed = true;
        dc.closure_layer = layer;
        dc.boundary_cycle.clear();
    } else {
        if (next_boundary.size() != created.size())
            throw internal_error("partially saturated new layer");
        dc.boundary_cycle = std::move(next_boundary);
    }
    dc.radius = layer;
}

} // namespace detail

/// Adjoins every triangle of X_n that shares a vertex with the current disk.
/// Detects closure (n in {3,4,5}) and then marks the complex closed.
inline void grow_layer(disk_complex& dc, const build_limits& limits = {}) {
    if (dc.closed) throw already_closed("cannot grow a closed complex");
    const int layer = dc.radius + 1;

    if (dc.radius == 0) {
        if (static_cast<std::uint64_t>(dc.n) > limits.max_triangles)
            throw resource_limit("first fan of " + std::to_string(dc.n) +
                                 " triangles exceeds limit");
        detail::grow_first_fan(dc);
        std::vector<vertex_id> created(dc.boundary_cycle);
        detail::finish_layer(dc, created, layer);
        return;
    }

    const std::vector<vertex_id> cycle = dc.boundary_cycle;
    const auto m = static_cast<std::int64_t>(cycle.size());

    // Projected growth. Each boundary edge's shared triangle is counted once
    // from each end, so for n >= 6 the projection is exact; for n <= 5 the
    // whole complex is at most 20 triangles anyway.
    std::uint64_t deficit_sum = 0;
    for (vertex_id b : cycle)
        deficit_sum += static_cast<std::uint64_t>(
            std::max<std::int64_t>(0, dc.n - detail::incident_count(dc, b)));
    const std::uint64_t projected =
        dc.n >= 6 ? deficit_sum - static_cast<std::uint64_t>(m) : deficit_sum;
    if (dc.triangles.size() + projected > limits.max_triangles)
        throw resource_limit("layer " + std::to_string(layer) + " projects " +
                             std::to_string(dc.triangles.size() + projected) + " triangles, limit " +
                             std::to_string(limits.max_triangles));

    std::vector<vertex_id> created;
    created.reserve(projected);
    vertex_id first_apex = no_vertex;

    for (std::int64_t i = 0; i < m; ++i) {
        const vertex_id b = cycle[static_cast<std::size_t>(i)];
        const vertex_id prev = cycle[static_cast<std::size_t>((i - 1 + m) % m)];
        const vertex_id next = cycle[static_cast<std::size_t>((i + 1) % m)];
        const vertex_id right_target = (i == m - 1) ? first_apex : next;

        const std::int64_t deficit = dc.n - detail::incident_count(dc, b);
        if (deficit < 0) throw internal_error("oversaturated boundary vertex");
        if (deficit == 0) {
            // Gap already sealed by earlier fans (only happens close to closure).
            const auto it = dc.edge_index.find(edge_key(b, right_target));
            if (it == dc.edge_index.end() || it->second.count() != 2)
                throw internal_error("saturated boundary vertex with open gap at " +
                                     std::to_string(b));
            continue;
        }

        // Start the fan at the apex of the already-built shared triangle on
        // edge (prev, b); at the very start of the walk there is none yet and
        // the fan starts at prev itself.
        vertex_id spoke = prev;
        if (const triangle_id t = detail::layer_triangle_on_edge(dc, prev, b, layer);
            t != no_triangle)
            spoke = detail::third_vertex(dc, t, prev, b);

        for (std::int64_t j = 1; j <= deficit; ++j) {
            vertex_id tail;
            if (j == deficit) {
                tail = right_target;
            } else {
                tail = detail::new_vertex(dc, layer);
                created.push_back(tail);
            }
            detail::add_triangle(dc, b, spoke, tail, layer);
            if (i == 0 && j == 1) first_apex = tail;
            spoke = tail;
        }
    }

    for (vertex_id b : cycle)
        if (!dc.vertices[static_cast<std::size_t>(b)].saturated)
            throw internal_error("boundary vertex " + std::to_string(b) +
                                 " left unsaturated after growth");

    detail::finish_layer(dc, created, layer);
}

/// D_n(r): starts from a bare vertex and grows r layers. If the complex
/// closes earlier (n in {3,4,5}) the closed complex is returned as is, with
/// radius equal to the closure layer.
inline disk_complex build_disk(std::int64_t n, int r, const build_limits& limits = {}) {
    if (n < 3) throw invalid_n("triangle complexes need n >= 3, got " + std::to_string(n));
    if (r < 0) throw invalid_radius("negative radius " + std::to_string(r));

    disk_complex dc;
    dc.n = n;
    detail::new_vertex(dc, 0);
    dc.boundary_cycle = {dc.base_vertex()};

    for (int layer = 1; layer <= r && !dc.closed; ++layer) grow_layer(dc, limits);
    return dc;
}

} // namespace hypergrowth

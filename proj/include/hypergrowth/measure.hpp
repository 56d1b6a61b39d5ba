#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hypergrowth/disk.hpp"
#include "hypergrowth/errors.hpp"

namespace hypergrowth {

enum class boundary_color { blue, yellow };  // 2 resp. 3 incident disk triangles

struct disk_metrics {
    int r = 0;
    std::uint64_t vertex_count = 0;    // V
    std::uint64_t edge_count = 0;      // E
    std::uint64_t triangle_count = 0;  // F
    std::uint64_t perimeter = 0;       // P, boundary edge count
    std::uint64_t area = 0;            // A, equals F
    std::uint64_t blue_count = 0;      // B
    std::uint64_t yellow_count = 0;    // Y
    std::int64_t euler = 0;            // V - E + F
};

/// Exact counts. A closed complex reports P = 0 and B = Y = 0.
inline disk_metrics measure(const disk_complex& dc) {
    disk_metrics m;
    m.r = dc.radius;
    m.vertex_count = dc.vertices.size();
    m.edge_count = dc.edge_index.size();
    m.triangle_count = dc.triangles.size();
    m.area = m.triangle_count;
    m.euler = static_cast<std::int64_t>(m.vertex_count) - static_cast<std::int64_t>(m.edge_count) +
              static_cast<std::int64_t>(m.triangle_count);
    if (dc.boundary_cycle.size() >= 3) m.perimeter = dc.boundary_cycle.size();
    for (vertex_id v : dc.boundary_cycle) {
        const auto k = dc.vertices[static_cast<std::size_t>(v)].incident.size();
        if (k == 2) ++m.blue_count;
        if (k == 3) ++m.yellow_count;
    }
    return m;
}

struct boundary_classification {
    std::map<vertex_id, boundary_color> colors;
    std::uint64_t blue = 0;
    std::uint64_t yellow = 0;
};

/// Colors every boundary vertex by its count of inside triangles (2 blue,
/// 3 yellow). Only defined for n >= 6: near the small-n closures the counts
/// leave {2,3} and the notion stops making sense.
inline boundary_classification classify_boundary(const disk_complex& dc) {
    if (dc.n < 6) throw invalid_n("classify_boundary requires n >= 6, got " + std::to_string(dc.n));
    if (dc.radius < 1) throw invalid_radius("classify_boundary requires radius >= 1");
    if (dc.closed) throw already_closed("classify_boundary requires an open complex");

    boundary_classification result;
    for (vertex_id v : dc.boundary_cycle) {
        const auto k = dc.vertices[static_cast<std::size_t>(v)].incident.size();
        if (k == 2) {
            result.colors.emplace(v, boundary_color::blue);
            ++result.blue;
        } else if (k == 3) {
            result.colors.emplace(v, boundary_color::yellow);
            ++result.yellow;
        } else {
            throw classification_violation("boundary vertex " + std::to_string(v) + " touches " +
                                           std::to_string(k) + " triangles");
        }
    }
    return result;
}

/// The boundary as one closed vertex cycle, verified against the edge index:
/// consecutive vertices must share a boundary (single-triangle) edge, and
/// every boundary edge must be used exactly once.
inline std::vector<vertex_id> boundary_cycle(const disk_complex& dc) {
    if (dc.closed) throw already_closed("closed complexes have no boundary");
    if (dc.radius < 1) throw invalid_radius("boundary_cycle requires radius >= 1");

    const auto& cycle = dc.boundary_cycle;
    std::uint64_t boundary_edges = 0;
    for (const auto& [key, entry] : dc.edge_index)
        if (entry.count() == 1) ++boundary_edges;
    if (cycle.size() < 3 || boundary_edges != cycle.size())
        throw not_a_disk("boundary is not a single cycle: " + std::to_string(cycle.size()) +
                         " cycle vertices vs " + std::to_string(boundary_edges) +
                         " boundary edges");
    const auto m = static_cast<std::int64_t>(cycle.size());
    for (std::int64_t i = 0; i < m; ++i) {
        const vertex_id u = cycle[static_cast<std::size_t>(i)];
        const vertex_id v = cycle[static_cast<std::size_t>((i + 1) % m)];
        const auto it = dc.edge_index.find(edge_key(u, v));
        if (it == dc.edge_index.end() || it->second.count() != 1)
            throw not_a_disk("consecutive boundary vertices " + std::to_string(u) + "," +
                             std::to_string(v) + " do not share a boundary edge");
    }
    return cycle;
}

struct validation_check {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct validation_report {
    std::vector<validation_check> checks;
    bool all_pass = true;

    void add(std::string name, bool pass, std::string detail = {}) {
        all_pass = all_pass && pass;
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

/// Re-derives the structural invariants from the raw tables, trusting none
/// of the cached fields. Failures carry the offending ids.
inline validation_report validate_complex(const disk_complex& dc) {
    validation_report report;

    // Edge index matches the triangle table exactly.
    {
        std::map<std::uint64_t, std::set<triangle_id>> derived;
        for (const auto& tri : dc.triangles) {
            const auto [a, b, c] = tri.vertices;
            derived[edge_key(a, b)].insert(tri.id);
            derived[edge_key(b, c)].insert(tri.id);
            derived[edge_key(c, a)].insert(tri.id);
        }
        bool ok = derived.size() == dc.edge_index.size();
        std::string detail;
        for (const auto& [key, tris] : derived) {
            const auto it = dc.edge_index.find(key);
            std::set<triangle_id> stored;
            if (it != dc.edge_index.end())
                for (triangle_id t : it->second.tris)
                    if (t != no_triangle) stored.insert(t);
            if (it == dc.edge_index.end() || stored != tris || tris.empty() || tris.size() > 2) {
                ok = false;
                detail = "edge index mismatch at key " + std::to_string(key);
                break;
            }
        }
        report.add("edge_incidence", ok, detail);
    }

    // Boundary edges are exactly the 1-incidence edges, in cycle order.
    {
        bool ok = true;
        std::string detail;
        std::set<std::uint64_t> boundary_edges;
        for (const auto& [key, entry] : dc.edge_index)
            if (entry.count() == 1) boundary_edges.insert(key);
        if (dc.closed || dc.radius == 0) {
            ok = boundary_edges.empty();
            if (!ok) detail = "closed/trivial complex with boundary edges";
        } else {
            const auto m = static_cast<std::int64_t>(dc.boundary_cycle.size());
            std::set<std::uint64_t> cycle_edges;
            for (std::int64_t i = 0; i < m; ++i)
                cycle_edges.insert(edge_key(dc.boundary_cycle[static_cast<std::size_t>(i)],
                                            dc.boundary_cycle[static_cast<std::size_t>((i + 1) % m)]));
            ok = cycle_edges == boundary_edges && static_cast<std::int64_t>(cycle_edges.size()) == m;
            if (!ok) detail = "boundary cycle does not match 1-incidence edges";
        }
        report.add("boundary_edges", ok, detail);
    }

    // Euler characteristic: disk 1, sphere 2, bare vertex 1.
    {
        const auto euler = static_cast<std::int64_t>(dc.vertices.size()) -
                           static_cast<std::int64_t>(dc.edge_index.size()) +
                           static_cast<std::int64_t>(dc.triangles.size());
        const std::int64_t expected = dc.closed ? 2 : 1;
        report.add("euler", euler == expected,
                   euler == expected ? "" : "V-E+F = " + std::to_string(euler) + ", expected " +
                                                std::to_string(expected));
    }

    // Interior vertices are saturated with exactly n triangles.
    {
        std::set<vertex_id> on_boundary(dc.boundary_cycle.begin(), dc.boundary_cycle.end());
        bool ok = true;
        std::string detail;
        for (const auto& rec : dc.vertices) {
            const bool interior = !on_boundary.contains(rec.id);
            const auto k = static_cast<std::int64_t>(rec.incident.size());
            if (interior && (k != dc.n || !rec.saturated)) {
                ok = false;
                detail = "interior vertex " + std::to_string(rec.id) + " has " + std::to_string(k) +
                         " triangles";
                break;
            }
            if (rec.saturated != (k == dc.n)) {
                ok = false;
                detail = "saturation flag wrong at vertex " + std::to_string(rec.id);
                break;
            }
        }
        report.add("interior_saturation", ok, detail);
    }

    // Rotation systems: each incident list is a contiguous fan, closed for
    // saturated vertices.
    {
        bool ok = true;
        std::string detail;
        for (const auto& rec : dc.vertices) {
            const auto s = static_cast<std::int64_t>(rec.incident.size());
            for (std::int64_t i = 0; i + 1 < s; ++i) {
                if (!detail::shares_spoke(dc, rec.incident[static_cast<std::size_t>(i)],
                                          rec.incident[static_cast<std::size_t>(i + 1)], rec.id)) {
                    ok = false;
                    detail = "fan gap at vertex " + std::to_string(rec.id);
                    break;
                }
            }
            if (ok && rec.saturated && s >= 2 &&
                !detail::shares_spoke(dc, rec.incident[static_cast<std::size_t>(s - 1)],
                                      rec.incident[0], rec.id)) {
                ok = false;
                detail = "saturated fan does not close at vertex " + std::to_string(rec.id);
            }
            if (!ok) break;
        }
        report.add("fan_contiguity", ok, detail);
    }

    // Boundary vertices touch 2 or 3 triangles (n >= 6 only).
    if (dc.n >= 6 && dc.radius >= 1 && !dc.closed) {
        bool ok = true;
        std::string detail;
        for (vertex_id v : dc.boundary_cycle) {
            const auto k = dc.vertices[static_cast<std::size_t>(v)].incident.size();
            if (k != 2 && k != 3) {
                ok = false;
                detail = "boundary vertex " + std::to_string(v) + " touches " + std::to_string(k);
                break;
            }
        }
        report.add("boundary_classification", ok, detail);
    }

    // Triangle birth layers cover 1..radius.
    if (!dc.triangles.empty()) {
        std::set<int> layers;
        bool in_range = true;
        for (const auto& tri : dc.triangles) {
            layers.insert(tri.birth_layer);
            in_range = in_range && tri.birth_layer >= 1 && tri.birth_layer <= dc.radius;
        }
        const bool ok = in_range && static_cast<int>(layers.size()) == dc.radius;
        report.add("layer_coverage", ok, ok ? "" : "birth layers do not cover 1..r");
    }

    return report;
}

} // namespace hypergrowth

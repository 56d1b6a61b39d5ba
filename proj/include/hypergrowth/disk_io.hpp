#pragma once

#include <ostream>

#include "hypergrowth/disk.hpp"

namespace hypergrowth {

// Line-oriented complex dump, deterministic by construction (ids are dense
// and ordered):
//
//   tiling n=<n> r=<r> closed=<0|1>
//   v <id> <birth_layer>
//   t <id> <v0> <v1> <v2> <birth_layer>
//   b <boundary ids in cycle order>
inline void write_complex(const disk_complex& dc, std::ostream& out) {
    out << "tiling n=" << dc.n << " r=" << dc.radius << " closed=" << (dc.closed ? 1 : 0) << '\n';
    for (const auto& rec : dc.vertices) out << "v " << rec.id << ' ' << rec.birth_layer << '\n';
    for (const auto& tri : dc.triangles)
        out << "t " << tri.id << ' ' << tri.vertices[0] << ' ' << tri.vertices[1] << ' '
            << tri.vertices[2] << ' ' << tri.birth_layer << '\n';
    out << 'b';
    for (vertex_id v : dc.boundary_cycle) out << ' ' << v;
    out << '\n';
}

} // namespace hypergrowth

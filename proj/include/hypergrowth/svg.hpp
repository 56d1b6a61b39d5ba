#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/scene.hpp"

namespace hypergrowth {

namespace detail {

// Fixed-point, locale-independent number formatting keeps emission
// byte-deterministic.
inline std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 8);
    return std::string(buf, res.ptr);
}

inline void append_edge(std::string& out, const geodesic_arc& arc, disk_point to) {
    if (std::holds_alternative<diameter_segment>(arc)) {
        out += "L " + fmt(to.x) + ' ' + fmt(to.y) + ' ';
        return;
    }
    const auto& circ = std::get<circular_arc>(arc);
    // Geodesic chords inside the disk always span less than pi, so the
    // large-arc flag is fixed at 0 and only the sweep varies.
    out += "A " + fmt(circ.radius) + ' ' + fmt(circ.radius) + " 0 0 " + (circ.ccw ? '1' : '0') +
           ' ' + fmt(to.x) + ' ' + fmt(to.y) + ' ';
}

} // namespace detail

/// Serializes the scene to an SVG 1.1 document, one filled path per
/// triangle in id order. Pure function of the scene.
inline std::string render_svg(const tiling_scene& scene) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(scene.canvas.width) +
           "\" height=\"" + std::to_string(scene.canvas.height) +
           "\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
    if (scene.canvas.unit_circle_outline)
        out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999999\" "
               "stroke-width=\"0.004\"/>\n";
    for (const auto& tri : scene.triangles) {
        out += "<path d=\"M " + detail::fmt(tri.corners[0].x) + ' ' + detail::fmt(tri.corners[0].y) + ' ';
        for (int k = 0; k < 3; ++k)
            detail::append_edge(out, tri.edges[static_cast<std::size_t>(k)],
                                tri.corners[static_cast<std::size_t>((k + 1) % 3)]);
        out += "Z\" fill=\"" + layer_color(tri.layer) +
               "\" stroke=\"#1a1a1a\" stroke-width=\"0.0035\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

/// Writes the SVG document and returns the byte count written.
inline std::size_t emit_svg(const tiling_scene& scene, const std::filesystem::path& path) {
    const std::string doc = render_svg(scene);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw output_unwritable("cannot open " + path.string());
    out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
    out.flush();
    if (!out) throw output_unwritable("write failed for " + path.string());
    return doc.size();
}

} // namespace hypergrowth

#pragma once

#include <sstream>
#include <string>

#include "barrier_cover/model.hpp"

namespace barrier_cover {

// Static SVG sketch of an instance: the barrier segment, each sensor disk at
// its original position, and (when a solution is given) the relocated disks
// with movement arrows. Y is flipped so positive sensor y draws above the
// barrier.
inline std::string render_svg(const Instance& inst, const Solution* sol = nullptr) {
    double lo_x = 0, hi_x = inst.barrier_length, lo_y = 0, hi_y = 0;
    for (const auto& s : inst.sensors) {
        lo_x = std::min(lo_x, s.x - s.r);
        hi_x = std::max(hi_x, s.x + s.r);
        lo_y = std::min(lo_y, s.y - s.r);
        hi_y = std::max(hi_y, s.y + s.r);
    }
    const double r_max = inst.max_radius();
    lo_y = std::min(lo_y, -r_max);
    hi_y = std::max(hi_y, r_max);
    const double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y) + 0.5;
    lo_x -= pad, hi_x += pad, lo_y -= pad, hi_y += pad;

    const double scale = 640.0 / (hi_x - lo_x);
    const auto px = [&](double x) { return (x - lo_x) * scale; };
    const auto py = [&](double y) { return (hi_y - y) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\""
        << (hi_y - lo_y) * scale << "\" viewBox=\"0 0 640 "
        << (hi_y - lo_y) * scale << "\">\n";
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
        << px(inst.barrier_length) << "\" y2=\"" << py(0)
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (double tick : {0.0, inst.barrier_length})
        svg << "  <line x1=\"" << px(tick) << "\" y1=\"" << py(0) - 6 << "\" x2=\""
            << px(tick) << "\" y2=\"" << py(0) + 6
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";

    for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
        const Sensor& s = inst.sensors[i];
        svg << "  <circle cx=\"" << px(s.x) << "\" cy=\"" << py(s.y) << "\" r=\""
            << s.r * scale
            << "\" fill=\"steelblue\" fill-opacity=\"0.25\" stroke=\"steelblue\"/>\n";
        if (!sol || i >= sol->positions.size() || !sol->positions[i]) continue;
        const double c = *sol->positions[i];
        svg << "  <circle cx=\"" << px(c) << "\" cy=\"" << py(0) << "\" r=\""
            << s.r * scale
            << "\" fill=\"seagreen\" fill-opacity=\"0.25\" stroke=\"seagreen\"/>\n";
        svg << "  <line x1=\"" << px(s.x) << "\" y1=\"" << py(s.y) << "\" x2=\""
            << px(c) << "\" y2=\"" << py(0)
            << "\" stroke=\"crimson\" stroke-dasharray=\"4 3\" "
               "marker-end=\"url(#tip)\"/>\n";
    }
    svg << "  <defs><marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
           "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"crimson\"/></marker></defs>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace barrier_cover

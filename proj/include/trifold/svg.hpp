#pragma once

// Minimal static SVG rendering of the univalence domain boundary: one path
// per segment kind in a fixed 800x800 viewport with equal-aspect axes.

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "trifold/domain.hpp"

namespace trifold {

namespace detail {

inline std::string fmt_px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace detail

inline void write_domain_svg(std::ostream& os, const DomainBoundary& bd) {
    constexpr double kView = 800.0;
    constexpr double kMargin = 60.0;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const BoundarySample& s : bd.samples) {
        xmin = std::min(xmin, s.p.x);
        xmax = std::max(xmax, s.p.x);
        ymin = std::min(ymin, s.p.y);
        ymax = std::max(ymax, s.p.y);
    }
    // equal aspect: one scale for both axes, centered
    const double span = std::max(xmax - xmin, ymax - ymin);
    const double scale = (kView - 2.0 * kMargin) / span;
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    auto px = [&](double x) { return kView / 2.0 + (x - cx) * scale; };
    auto py = [&](double y) { return kView / 2.0 - (y - cy) * scale; };  // y up

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
          "viewBox=\"0 0 800 800\">\n"
       << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // axes through the origin
    os << "<line x1=\"" << detail::fmt_px(px(xmin)) << "\" y1=\"" << detail::fmt_px(py(0))
       << "\" x2=\"" << detail::fmt_px(px(xmax)) << "\" y2=\"" << detail::fmt_px(py(0))
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << detail::fmt_px(px(0)) << "\" y1=\"" << detail::fmt_px(py(ymin))
       << "\" x2=\"" << detail::fmt_px(px(0)) << "\" y2=\"" << detail::fmt_px(py(ymax))
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

    static const std::map<SegmentKind, const char*> colors = {
        {SegmentKind::Gamma1, "#1f5fd6"},
        {SegmentKind::Gamma2Plus, "#1f9e4b"},
        {SegmentKind::Gamma2Minus, "#1f9e4b"},
        {SegmentKind::Gamma3Plus, "#d62728"},
        {SegmentKind::Gamma3Minus, "#d62728"},
    };

    for (const auto& [kind, color] : colors) {
        std::string d;
        bool first = true;
        for (const BoundarySample& s : bd.samples) {
            if (s.kind != kind) continue;
            d += first ? "M " : "L ";
            d += detail::fmt_px(px(s.p.x)) + " " + detail::fmt_px(py(s.p.y)) + " ";
            first = false;
        }
        os << "<path id=\"" << segment_name(kind) << "\" d=\"" << d
           << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }

    const CornerPoint c = corner_point(bd.fold_order);
    os << "<circle cx=\"" << detail::fmt_px(px(c.a)) << "\" cy=\"" << detail::fmt_px(py(c.b))
       << "\" r=\"4\" fill=\"black\"/>\n";

    os << "<text x=\"20\" y=\"30\" font-family=\"sans-serif\" font-size=\"18\">U_"
       << bd.fold_order << " boundary</text>\n"
       << "<text x=\"20\" y=\"55\" font-family=\"sans-serif\" font-size=\"14\" "
          "fill=\"#1f5fd6\">gamma1</text>\n"
       << "<text x=\"90\" y=\"55\" font-family=\"sans-serif\" font-size=\"14\" "
          "fill=\"#1f9e4b\">gamma2+/-</text>\n"
       << "<text x=\"185\" y=\"55\" font-family=\"sans-serif\" font-size=\"14\" "
          "fill=\"#d62728\">gamma3+/-</text>\n"
       << "</svg>\n";
}

}  // namespace trifold

#include "loopconv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace loopconv {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_delta_svg(const std::vector<DeltaPoint>& points,
                             const std::vector<DeltaPoint>& vertices, const PlotOptions& opts) {
    const double margin = 60.0;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto extend = [&](const DeltaPoint& p) {
        if (p.v.v.empty()) return;
        xmin = std::min(xmin, p.v.v[0]);
        xmax = std::max(xmax, p.v.v[0]);
        ymin = std::min(ymin, p.energy);
        ymax = std::max(ymax, p.energy);
    };
    for (const auto& p : points) extend(p);
    for (const auto& p : vertices) extend(p);
    if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (xmax - xmin < 1e-9) xmin -= 0.5, xmax += 0.5;
    if (ymax - ymin < 1e-9) ymin -= 0.5, ymax += 0.5;
    const double w = opts.width, h = opts.height;
    auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (w - 2 * margin); };
    auto sy = [&](double y) { return h - margin - (y - ymin) / (ymax - ymin) * (h - 2 * margin); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opts.width) + "\" height=\"" +
         std::to_string(opts.height) + "\" viewBox=\"0 0 " + std::to_string(opts.width) + " " +
         std::to_string(opts.height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(h - margin) + "\" x2=\"" + fmt(w - margin) + "\" y2=\"" +
         fmt(h - margin) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(margin) + "\" x2=\"" + fmt(margin) + "\" y2=\"" +
         fmt(h - margin) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt(w / 2) + "\" y=\"" + fmt(h - 20) + "\" text-anchor=\"middle\" font-size=\"14\">v1 [" +
         fmt(xmin) + ", " + fmt(xmax) + "]</text>\n";
    s += "<text x=\"20\" y=\"" + fmt(h / 2) + "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
         fmt(h / 2) + ")\">E [" + fmt(ymin) + ", " + fmt(ymax) + "]</text>\n";
    if (!opts.title.empty())
        s += "<text x=\"" + fmt(w / 2) + "\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">" + escape(opts.title) +
             "</text>\n";
    s += "<g fill=\"steelblue\" fill-opacity=\"0.5\">\n";
    for (const auto& p : points) {
        if (p.v.v.empty()) continue;
        s += "<circle cx=\"" + fmt(sx(p.v.v[0])) + "\" cy=\"" + fmt(sy(p.energy)) + "\" r=\"1.5\"/>\n";
    }
    s += "</g>\n<g fill=\"none\" stroke=\"crimson\" stroke-width=\"2\">\n";
    for (const auto& p : vertices) {
        if (p.v.v.empty()) continue;
        const double x = sx(p.v.v[0]), y = sy(p.energy);
        s += "<rect x=\"" + fmt(x - 4) + "\" y=\"" + fmt(y - 4) + "\" width=\"8\" height=\"8\"/>\n";
    }
    s += "</g>\n</svg>\n";
    return s;
}

}  // namespace loopconv

#pragma once

#include <string>
#include <vector>

#include "loopconv/moment.hpp"

namespace loopconv {

struct PlotOptions {
    int width = 800;
    int height = 600;
    std::string title;
};

/// Scatter of (v1, E) with v1 horizontal and E vertical, plus vertex markers.
std::string render_delta_svg(const std::vector<DeltaPoint>& points,
                             const std::vector<DeltaPoint>& vertices,
                             const PlotOptions& opts = {});

}  // namespace loopconv

#pragma once

#include <cstdint>
#include <vector>

#include "chartalt/figure.hpp"

namespace chartalt {

// Rasterizes a host figure into PNG bytes at the figure's current DPI. The
// renderer is deterministic: equal figures yield identical bytes.
std::vector<std::uint8_t> render_figure_png(const host::Figure& fig);

}  // namespace chartalt

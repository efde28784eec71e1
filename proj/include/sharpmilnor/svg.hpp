#pragma once

#include "sharpmilnor/frame.hpp"

#include <string>

namespace sharpmilnor {

// Static plot of a frame: its lines, the anchors, and the final/second point
// of every line.
std::string plot_svg(const SharpFrame& frame);

}  // namespace sharpmilnor

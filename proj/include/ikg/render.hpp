#pragma once

#include <string>

#include "ikg/poset.hpp"
#include "ikg/representations.hpp"

namespace ikg {

enum class RenderFormat { svg, ascii };

// Intervals drawn per class on stacked tracks; byte-stable for equal input.
std::string render_intervals(const IntervalKRep& rep, RenderFormat format);
// SVG, minimal elements on the bottom row.
std::string render_hasse(const Poset& p);
std::string render_curves(const FunctionRep& rep);

}  // namespace ikg

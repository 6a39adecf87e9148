#pragma once

#include "skel/curve_skeleton.hpp"
#include "skel/decomp.hpp"

#include <optional>
#include <string>

namespace skel {

// Graphviz output. Node order follows the skeleton order respectively the
// component/copy order, so equal inputs render to equal text.
std::string render_skeleton_dot(const CurveSkeleton& sk,
                                const std::optional<Cocycle>& cocycle = std::nullopt);

std::string render_decomp_dot(const DecompositionDatum& datum);

}  // namespace skel

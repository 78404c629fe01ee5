#pragma once

#include "spectral/graph.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace spectral {

/// Renders a 1-D or 2-D point set (one point per column) as a standalone
/// SVG document. 1-D points are placed on a horizontal axis. Points are
/// colored by label when labels are given. Throws PlotDimension for more
/// than two rows and ShapeError for an empty point set or mismatched labels.
std::string scatter_svg(const Matrix& coords,
                        const std::optional<std::vector<int>>& labels = std::nullopt);

/// scatter_svg written to `path`; nothing is written when rendering fails.
void emit_scatter_svg(const Matrix& coords, const std::optional<std::vector<int>>& labels,
                      const std::filesystem::path& path);

}  // namespace spectral

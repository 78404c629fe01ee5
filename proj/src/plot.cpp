#include "spectral/plot.hpp"

#include "spectral/error.hpp"
#include "spectral/io.hpp"

#include <fmt/format.h>

#include <array>

namespace spectral {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 40.0;

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

double to_pixel(double value, double lo, double hi, double pixels) {
  if (hi <= lo) return 0.5 * pixels;
  return (value - lo) / (hi - lo) * pixels;
}

}  // namespace

std::string scatter_svg(const Matrix& coords, const std::optional<std::vector<int>>& labels) {
  if (coords.rows() > 2) {
    throw Error(ErrorKind::PlotDimension,
                "can only plot 1-D or 2-D embeddings, got " + std::to_string(coords.rows()));
  }
  if (coords.rows() < 1 || coords.cols() < 1) {
    throw Error(ErrorKind::ShapeError, "nothing to plot");
  }
  if (labels && static_cast<Index>(labels->size()) != coords.cols()) {
    throw Error(ErrorKind::ShapeError, "label count does not match point count");
  }
  const bool one_d = coords.rows() == 1;
  const double x_lo = coords.row(0).minCoeff();
  const double x_hi = coords.row(0).maxCoeff();
  const double y_lo = one_d ? 0.0 : coords.row(1).minCoeff();
  const double y_hi = one_d ? 0.0 : coords.row(1).maxCoeff();
  const double inner_w = kWidth - 2.0 * kMargin;
  const double inner_h = kHeight - 2.0 * kMargin;

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kWidth, kHeight);
  if (one_d) {
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", kMargin,
        0.5 * kHeight, kWidth - kMargin);
  } else {
    svg += fmt::format(
        "<rect x=\"{0}\" y=\"{0}\" width=\"{1}\" height=\"{2}\" fill=\"none\" "
        "stroke=\"black\"/>\n",
        kMargin, inner_w, inner_h);
  }
  for (Index i = 0; i < coords.cols(); ++i) {
    const double cx = kMargin + to_pixel(coords(0, i), x_lo, x_hi, inner_w);
    const double cy = one_d ? 0.5 * kHeight
                            : kHeight - kMargin - to_pixel(coords(1, i), y_lo, y_hi, inner_h);
    const char* color = kPalette[0];
    if (labels) {
      const auto slot = static_cast<std::size_t>(((*labels)[static_cast<std::size_t>(i)] - 1) %
                                                  static_cast<int>(kPalette.size()) +
                                              static_cast<int>(kPalette.size())) %
                        kPalette.size();
      color = kPalette[slot];
    }
    svg += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"{}\"/>\n", cx, cy,
                       color);
  }
  svg += "</svg>\n";
  return svg;
}

void emit_scatter_svg(const Matrix& coords, const std::optional<std::vector<int>>& labels,
                      const std::filesystem::path& path) {
  io::write_file(path, scatter_svg(coords, labels));
}

}  // namespace spectral

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace chipfire::io {

enum class FigureKind { stable_dots, distance_polyline, row_profiles, diff_signmap };

std::optional<FigureKind> parse_figure_kind(std::string_view s);
std::string_view to_string(FigureKind k);

struct RenderSpec {
    FigureKind kind = FigureKind::stable_dots;
    unsigned n = 0;
    std::filesystem::path output;
    double width = 1200;
    double height = 400;
    double dot_radius = 2.5;
};

/// Throws std::invalid_argument for non-positive geometry.
void validate(const RenderSpec& spec);

/// Standalone SVG document for the figure.
///  stable-dots:       rows run left to right; circle.chip (filled) where F is odd,
///                     circle.empty (hollow) where F is even and nonzero.
///  distance-polyline: circle.point per distance i = -m..m joined by one polyline.
///  row-profiles:      last Pascal row, first longest row, first bottom-triangle row.
///  diff-signmap:      circle.plus / circle.zero / circle.minus per consecutive difference of F'.
std::string render_svg(const RenderSpec& spec);

/// Renders and writes atomically to spec.output.
void render_to_file(const RenderSpec& spec);

}  // namespace chipfire::io

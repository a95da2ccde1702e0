#include "chipfire/io/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "chipfire/difftable.hpp"
#include "chipfire/stable.hpp"
#include "chipfire/structure.hpp"

namespace chipfire::io {

namespace {

constexpr double kMargin = 20;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

/// Maps data coordinates onto the drawable area (y grows upwards in data space).
struct Frame {
    double x0, x1, y0, y1;
    double width, height;

    double px(double x) const {
        const double span = x1 > x0 ? x1 - x0 : 1;
        return kMargin + (x - x0) / span * (width - 2 * kMargin);
    }
    double py(double y) const {
        const double span = y1 > y0 ? y1 - y0 : 1;
        return height - kMargin - (y - y0) / span * (height - 2 * kMargin);
    }
};

class Svg {
public:
    Svg(double w, double h) {
        os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
            << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    void circle(std::string_view cls, double cx, double cy, double r, std::string_view style) {
        os_ << "<circle class=\"" << cls << "\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r)
            << "\" " << style << "/>\n";
    }

    void polyline(std::string_view cls, const std::vector<std::pair<double, double>>& pts, std::string_view style) {
        os_ << "<polyline class=\"" << cls << "\" fill=\"none\" " << style << " points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k) os_ << (k ? " " : "") << num(pts[k].first) << ',' << num(pts[k].second);
        os_ << "\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2) {
        os_ << "<line class=\"axis\" x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
            << "\" y2=\"" << num(y2) << "\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";
    }

    void title(std::string_view text) { os_ << "<title>" << text << "</title>\n"; }

    std::string finish() {
        os_ << "</svg>\n";
        return os_.str();
    }

private:
    std::ostringstream os_;
};

constexpr std::string_view kFilled = "fill=\"black\"";
constexpr std::string_view kHollow = "fill=\"white\" stroke=\"black\" stroke-width=\"0.8\"";
constexpr std::string_view kGray = "fill=\"#999\"";

std::string render_stable(const RenderSpec& spec) {
    const auto rows = collect_rows(spec.n);
    const double last = static_cast<double>(rows.back().index);
    Frame f{0, std::max(last, 1.0), -std::max(last, 1.0), std::max(last, 1.0), spec.width, spec.height};
    // Only the occupied band of distances is interesting; tighten the vertical extent to it.
    std::int64_t reach = 0;
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k) reach = std::max(reach, std::abs(r.point(k).distance()));
    f.y0 = -static_cast<double>(std::max<std::int64_t>(reach, 1));
    f.y1 = static_cast<double>(std::max<std::int64_t>(reach, 1));

    Svg svg(spec.width, spec.height);
    svg.title("stable configuration, n=" + std::to_string(spec.n));
    svg.line(f.px(0), f.py(0), f.px(f.x1), f.py(0));
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            const auto p = r.point(k);
            const double cx = f.px(static_cast<double>(r.index));
            const double cy = f.py(static_cast<double>(p.distance()));
            if (r.values[k].is_odd()) {
                svg.circle("chip", cx, cy, spec.dot_radius, kFilled);
            } else {
                svg.circle("empty", cx, cy, spec.dot_radius, kHollow);
            }
        }
    }
    return svg.finish();
}

std::string render_distance(const RenderSpec& spec) {
    const DistanceDistribution d = distance_distribution(spec.n);
    double top = 1;
    for (auto c : d.counts) top = std::max(top, static_cast<double>(c.raw()));
    const double m = static_cast<double>(d.half_width);
    const Frame f{-std::max(m, 1.0), std::max(m, 1.0), 0, top, spec.width, spec.height};

    Svg svg(spec.width, spec.height);
    svg.title("distance distribution, n=" + std::to_string(spec.n));
    svg.line(f.px(f.x0), f.py(0), f.px(f.x1), f.py(0));
    std::vector<std::pair<double, double>> pts;
    for (std::int64_t i = -d.half_width; i <= d.half_width; ++i) {
        pts.emplace_back(f.px(static_cast<double>(i)), f.py(static_cast<double>(d.at(i).raw())));
    }
    svg.polyline("distribution", pts, "stroke=\"black\" stroke-width=\"1\"");
    for (const auto& [x, y] : pts) svg.circle("point", x, y, spec.dot_radius, kFilled);
    return svg.finish();
}

std::string render_profiles(const RenderSpec& spec) {
    const auto rows = collect_rows(spec.n);
    const Segmentation seg = segment(spec.n);
    struct Profile {
        const Row* row;
        std::string_view cls;
        std::string_view stroke;
        std::string_view dots;
    };
    const Profile profiles[] = {
        {&rows[spec.n], "pascal", "stroke=\"black\" stroke-dasharray=\"6,4\"", kFilled},
        {&rows[seg.first_longest_row], "longest", "stroke=\"black\"", kFilled},
        {&rows[rows.size() - seg.raw_bottom_height], "bottom", "stroke=\"#999\"", kGray},
    };
    double top = 1;
    std::size_t widest = 1;
    for (const auto& p : profiles) {
        widest = std::max(widest, p.row->size());
        for (auto v : p.row->values) top = std::max(top, static_cast<double>(v.raw()));
    }
    const double half = static_cast<double>(widest) / 2;
    const Frame f{-half, half, 0, top, spec.width, spec.height};

    Svg svg(spec.width, spec.height);
    svg.title("row profiles, n=" + std::to_string(spec.n));
    svg.line(f.px(f.x0), f.py(0), f.px(f.x1), f.py(0));
    for (const auto& p : profiles) {
        std::vector<std::pair<double, double>> pts;
        const double centre = static_cast<double>(p.row->size() - 1) / 2;
        for (std::size_t k = 0; k < p.row->size(); ++k) {
            pts.emplace_back(f.px(static_cast<double>(k) - centre), f.py(static_cast<double>(p.row->values[k].raw())));
        }
        svg.polyline(p.cls, pts, p.stroke);
        for (const auto& [x, y] : pts) svg.circle(p.cls, x, y, spec.dot_radius, p.dots);
    }
    return svg.finish();
}

std::string render_signmap(const RenderSpec& spec) {
    std::vector<DiffRow> table = diff_table(spec.n);
    const double last = static_cast<double>(table.back().index);
    std::int64_t reach = 1;
    for (const auto& d : table) {
        reach = std::max<std::int64_t>(reach, std::abs(2 * static_cast<std::int64_t>(d.y_min) - static_cast<std::int64_t>(d.index)));
    }
    const Frame f{0, last, -static_cast<double>(reach), static_cast<double>(reach), spec.width, spec.height};

    Svg svg(spec.width, spec.height);
    svg.title("signs of consecutive differences in F', n=" + std::to_string(spec.n));
    for (const auto& d : table) {
        const auto signs = sign_row(d);
        for (std::size_t k = 0; k < signs.size(); ++k) {
            // Between entries k and k+1: distance (2y - index) + 1.
            const double dist = static_cast<double>(2 * static_cast<std::int64_t>(d.y_min + k) - static_cast<std::int64_t>(d.index) + 1);
            const double cx = f.px(static_cast<double>(d.index));
            const double cy = f.py(dist);
            switch (signs[k]) {
                case Sign::plus: svg.circle("plus", cx, cy, spec.dot_radius, kFilled); break;
                case Sign::zero: svg.circle("zero", cx, cy, spec.dot_radius, kHollow); break;
                case Sign::minus: svg.circle("minus", cx, cy, spec.dot_radius, kGray); break;
            }
        }
    }
    return svg.finish();
}

}  // namespace

std::optional<FigureKind> parse_figure_kind(std::string_view s) {
    if (s == "stable-dots") return FigureKind::stable_dots;
    if (s == "distance-polyline") return FigureKind::distance_polyline;
    if (s == "row-profiles") return FigureKind::row_profiles;
    if (s == "diff-signmap") return FigureKind::diff_signmap;
    return std::nullopt;
}

std::string_view to_string(FigureKind k) {
    switch (k) {
        case FigureKind::stable_dots: return "stable-dots";
        case FigureKind::distance_polyline: return "distance-polyline";
        case FigureKind::row_profiles: return "row-profiles";
        case FigureKind::diff_signmap: return "diff-signmap";
    }
    return "?";
}

void validate(const RenderSpec& spec) {
    if (!(spec.width > 2 * kMargin) || !(spec.height > 2 * kMargin)) {
        throw std::invalid_argument("figure dimensions must exceed " + num(2 * kMargin) + " pixels");
    }
    if (!(spec.dot_radius > 0)) throw std::invalid_argument("dot radius must be positive");
    if (spec.kind == FigureKind::row_profiles && spec.n < 1) {
        throw std::invalid_argument("row-profiles needs n >= 1");
    }
}

std::string render_svg(const RenderSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case FigureKind::stable_dots: return render_stable(spec);
        case FigureKind::distance_polyline: return render_distance(spec);
        case FigureKind::row_profiles: return render_profiles(spec);
        case FigureKind::diff_signmap: return render_signmap(spec);
    }
    throw std::invalid_argument("unknown figure kind");
}

void render_to_file(const RenderSpec& spec) {
    const std::string doc = render_svg(spec);
    auto tmp = spec.output;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::ios_base::failure("cannot open " + tmp.string() + " for writing");
        out << doc;
        if (!out.flush()) throw std::ios_base::failure("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, spec.output);
}

}  // namespace chipfire::io

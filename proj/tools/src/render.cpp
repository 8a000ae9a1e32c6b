#include <cstdio>
#include <set>
#include <sstream>

#include "gfb/cli.hpp"
#include "gfb/tiling.hpp"

namespace gfb::cli {

namespace {

constexpr std::uint64_t kMaxRenderTiles = 20000;
constexpr double kMargin = 24.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string render_svg(Algorithm algo, int depth, const RenderOptions& options) {
    if (algo == Algorithm::Classical) throw InvalidInput("render needs a two-dimensional algorithm");
    if (depth < 0) throw InvalidInput("render: negative depth");
    if (options.label_cap < 0) throw InvalidInput("render: negative label cap");
    if (tile_count(algo, depth) > kMaxRenderTiles) {
        throw CapacityError("render: more than " + std::to_string(kMaxRenderTiles) + " triangles");
    }
    const double s = options.size;
    auto px = [&](const LatticeVector& v) {
        const double x = kMargin + s * static_cast<double>(v.y1) / static_cast<double>(v.x);
        const double y = kMargin + s * (1.0 - static_cast<double>(v.y2) / static_cast<double>(v.x));
        return fmt(x) + "," + fmt(y);
    };
    auto polygon = [&](const Basis& b, const char* cls) {
        return "<polygon class=\"" + std::string(cls) + "\" points=\"" + px(b.g[0]) + " " + px(b.g[1]) + " " +
               px(b.g[2]) + "\"/>\n";
    };

    std::ostringstream os;
    const std::string dim = fmt(s + 2 * kMargin);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << dim << "\" height=\"" << dim
       << "\" viewBox=\"0 0 " << dim << ' ' << dim << "\">\n"
       << "<title>Til_" << depth << " of algorithm " << to_string(algo) << "</title>\n"
       << "<style>.tile{fill:none;stroke:#000;stroke-width:0.6}"
          ".root{fill:none;stroke:#000;stroke-width:2.4}"
          "text{font-family:sans-serif;font-size:9px;fill:#a00}</style>\n"
       << "<g id=\"tiles\">\n";
    std::set<LatticeVector> vertices;
    std::uint64_t tiles = 0;
    enumerate(algo, depth, [&](const Tile& t) {
        os << polygon(t.basis, "tile");
        ++tiles;
        for (const auto& v : t.basis.g) vertices.insert(v);
    });
    os << "</g>\n<g id=\"roots\">\n";
    for (const auto& b : initial_bases(algo)) os << polygon(b, "root");
    os << "</g>\n<g id=\"labels\">\n";
    int labels = 0;
    for (const auto& v : vertices) {
        if (labels == options.label_cap) break;
        const auto at = px(v);
        const auto comma = at.find(',');
        os << "<text x=\"" << at.substr(0, comma) << "\" y=\"" << at.substr(comma + 1) << "\">"
           << RationalPoint(v).label() << "</text>\n";
        ++labels;
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace gfb::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gfb/lattice.hpp"

namespace gfb::cli {

/// Exit codes: 0 success, 1 domain/capacity error or failed verification,
/// 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`
/// unless --out redirects them; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct RenderOptions {
    int label_cap = 200;
    double size = 800.0;
};

/// SVG 1.1 picture of Til_depth: one polygon per tile, depth-0 outlines
/// emphasized, vertex labels "(a1,a2)/q" for at most label_cap vertices.
std::string render_svg(Algorithm algo, int depth, const RenderOptions& options = {});

} // namespace gfb::cli

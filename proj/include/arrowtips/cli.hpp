#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrowtips/attachment.hpp"

namespace arrowtips::cli {

enum ExitCode : int { ok = 0, usage_error = 2, io_error = 3 };

/// Reference segment every gallery tip is attached to.
inline constexpr double gallery_segment_length = 40.0;

/// "M x,y L x,y C x1,y1 x2,y2 x,y ..." with a single leading moveto.
/// Throws InvalidPathError on malformed input.
HostPath parse_path_literal(std::string_view literal);

/// Every registry tip at the end of the reference segment; one row per tip, one
/// column per width.
std::string gallery_document(std::span<const double> widths, const std::string& paint);

std::string render_spec_document(const std::string& spec, const HostPath& path, double width,
                                 const std::string& paint);

/// "left=<v> right=<v>" at 15 significant digits.
std::string extents_line(const std::string& tip, Side side, double width);

/// Entry point behind the `arrowtips` executable. Diagnostics go to `err`; files
/// are written only after the command succeeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arrowtips::cli

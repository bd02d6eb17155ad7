#pragma once

#include <string>
#include <vector>

#include "proxcatch/geometry.hpp"

namespace proxcatch {

/* Point files are CSV with an `x,y` header, one point per row, decimal
   reals, LF or CRLF line endings. */
std::vector<Point> read_points_csv(const std::string& path);

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

/* Writes `content` to `path` atomically (temp file + rename), or to stdout
   when path is "-". Nothing is left behind on failure. */
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace proxcatch

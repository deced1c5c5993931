#pragma once

#include <filesystem>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowvor/geometry.hpp"
#include "flowvor/simulation.hpp"
#include "flowvor/voronoi_cell.hpp"

namespace flowvor {

/// Filesystem-level failure (open, read, write). Distinct from malformed
/// content, which raises std::invalid_argument.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Generator read from an input file, keyed by the file's own ID column.
struct NamedPoint {
    long long id = 0;
    Point pos;
};

/// Parses `id,x,y` rows behind a mandatory header line.
std::vector<NamedPoint> parse_points_csv(std::istream& in);

/// Parses a JSON array of {"id": .., "x": .., "y": ..} objects.
std::vector<NamedPoint> parse_points_json(const std::string& text);

/// Reads a generator file, dispatching on the .csv / .json extension.
std::vector<NamedPoint> read_points(const std::filesystem::path& path);

std::string stats_to_json(const SimStats& stats);
SimStats stats_from_json(const std::string& text);

/// Summary line pair followed by one `ng,count` row per histogram bucket.
std::string stats_to_csv(const SimStats& stats);

/// Writes stats in the format implied by the path extension.
void write_stats(const SimStats& stats, const std::filesystem::path& path);

/// Event scripts: either a bare JSON array of events or an object with
/// optional "p1" ([x, y]) and "capacity" plus an "events" array. An event is
/// {"op": "insert", "id": n, "x": .., "y": ..} or {"op": "delete", "id": n}.
DemoScript parse_demo_script(const std::string& text);
DemoScript read_demo_script(const std::filesystem::path& path);

std::string demo_log_to_json(std::span<const DemoLogEntry> log);

/// SVG rendering of a cell. `pool` must list the generators in the same
/// order they were handed to compute_cell, so that arc contributor IDs
/// (index + 2) can be matched back to the file IDs shown as labels. Every
/// contributor keeps one color for both its marker and its boundary arcs.
std::string cell_to_svg(const VoronoiCell& cell, std::span<const NamedPoint> pool);

void write_text_file(const std::string& text, const std::filesystem::path& path);

}  // namespace flowvor

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "flowvor/geometry.hpp"

namespace flowvor {

/// Connected piece of the cell boundary owed to one pool generator.
/// `contributor` is the pool ID (index + 2, matching CandidateSet).
struct CellArc {
    int contributor = 0;
    std::vector<Point> points;
};

struct CellStats {
    std::uint64_t samples_tested = 0;
    std::uint64_t energy_comparisons = 0;
};

/// Sampled closed cell of `owner` clipped to `box`. Boundary pieces on the
/// box frame are kept separately from generator-contributed arcs. Arcs are
/// ordered by angle around the owner; the cell is star-shaped around its
/// generator, so this ordering traces the region.
struct VoronoiCell {
    Point owner;
    Rect box;
    std::size_t resolution = 0;
    std::vector<CellArc> arcs;
    std::vector<std::vector<Point>> box_edges;
    CellStats stats;

    /// All boundary samples merged into one angularly ordered loop.
    std::vector<Point> polygon() const;
};

/// Exact closed-cell membership: no pool generator beats the owner at p.
/// Comparisons are flow-independent, so no tolerance is involved.
bool cell_contains(Point p1, std::span<const Point> pool, Point p);

/// Builds the cell by sampling the boundary against every pool generator and
/// keeping the samples that survive against the whole pool (within a
/// boundary tolerance of 1e-9 scaled by the box size). Requires the pool to
/// satisfy the position assumption, box to contain p1, and resolution >= 16.
VoronoiCell compute_cell(Point p1, std::span<const Point> pool, const Rect& box,
                         std::size_t resolution);

/// Same result as compute_cell, but only the non-dominated pool points are
/// sampled and compared against, which shrinks the work by roughly the
/// pool-to-candidate-count ratio.
VoronoiCell compute_cell_prefiltered(Point p1, std::span<const Point> pool,
                                     const Rect& box, std::size_t resolution);

/// Pool IDs whose boundary contribution to the cell has real extent: at
/// least two surviving samples farther apart than the sampling pitch
/// (box diagonal / resolution). Single-point contacts do not count.
std::vector<int> exact_neighbors(Point p1, std::span<const Point> pool,
                                 const Rect& box, std::size_t resolution);

}  // namespace flowvor

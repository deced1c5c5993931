#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "flowvor/energy.hpp"
#include "flowvor/geometry.hpp"

namespace flowvor {

/// Equal-energy boundary between two generators. With distinct x and y the
/// boundary is one hyperbola branch wrapped around the downstream generator;
/// with equal x it is the horizontal line through the midpoint; with equal y
/// it is the half-line running downstream from the downstream generator.
///
/// The branch is described in a local frame: origin at `center` (the segment
/// midpoint), abscissa rotated by `alpha` so the downstream generator sits at
/// (+c, 0). In that frame the boundary is x'^2/a^2 - y'^2/b_axis^2 = 1 with
/// x' >= a. Invariant: c^2 == a^2 + b_axis^2, all three positive.
struct HyperbolaBranch {
    Point center;
    double alpha = 0.0;
    double a = 0.0;
    double b_axis = 0.0;
    double c = 0.0;
};

struct PerpendicularLine {
    double y_level = 0.0;
};

struct DownstreamHalfLine {
    Point origin;
};

using Bisector = std::variant<HyperbolaBranch, PerpendicularLine, DownstreamHalfLine>;

/// Coordinates of p in the frame with origin at the midpoint of p1p2 and
/// abscissa along p1 -> p2. Throws std::invalid_argument on a degenerate pair.
Point to_local(Point p, Point p1, Point p2);

/// Inverse of to_local for the same pair.
Point from_local(Point q, Point p1, Point p2);

/// Boundary of {energy(p1,.) <= energy(p2,.)} versus {energy(p2,.) <= energy(p1,.)}.
/// The described point set is symmetric in the argument order.
Bisector bisector(Point p1, Point p2);

/// Point of the boundary nearest to the upstream generator: the branch vertex
/// for the generic case, the midpoint for equal x, the downstream generator
/// for equal y.
Point closest_boundary_point(Point p1, Point p2);

/// Absolute tolerance on |energy(p1,q) - energy(p2,q)| used to accept q as a
/// boundary point.
double bisector_tolerance(Point p1, Point p2, const FlowField& flow = {});

bool bisector_contains(Point p1, Point p2, Point q, const FlowField& flow = {});

/// Up to n boundary points inside bbox, ordered monotonically along the
/// boundary. When the closest boundary point lies in bbox it is one of the
/// samples. Empty when the boundary misses bbox.
std::vector<Point> sample_bisector(Point p1, Point p2, const Rect& bbox, std::size_t n);

}  // namespace flowvor

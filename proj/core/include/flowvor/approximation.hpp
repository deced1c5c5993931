#pragma once

#include <span>
#include <utility>
#include <vector>

#include "flowvor/geometry.hpp"

namespace flowvor {

/// Radius of the largest disk around p_i guaranteed to lie inside p_i's cell:
/// half the minimum over the other generators of dist + x-offset. Always
/// non-negative; zero when some other generator sits straight downstream.
double disk_radius(Point p_i, std::span<const Point> others);

/// Pool points whose boundary with p1 touches p1's guaranteed disk, i.e. the
/// minimizers of the disk-radius expression. Every one of them is a true cell
/// neighbor of p1. Ties within 1e-12 (absolute) are all returned.
std::vector<Point> lower_bound_neighbors(Point p1, std::span<const Point> pool);

/// Extends `base` (a set of known true neighbors, typically the disk argmin
/// set) with every pool point whose closest boundary point toward p1 is
/// strictly nearest to it in energy among all pool points. The result is
/// still a set of true cell neighbors.
std::vector<Point> augment_lower_bound(Point p1, std::span<const Point> pool,
                                       std::span<const Point> base);

/// Ray from `origin` in direction `dir` (unit length).
struct HalfLine {
    Point origin;
    Point dir;
};

/// Asymptote rays of the boundary between p1 and p2, both emanating from the
/// segment midpoint: one horizontal pointing downstream, one at twice the
/// pair's inclination angle. With equal y the two coincide; with equal x they
/// join into the full horizontal line through the midpoint. Directions are
/// built from cross and dot products, never from tan, so the vertical
/// configuration is exact.
std::pair<HalfLine, HalfLine> asymptote_lines(Point p1, Point p2);

enum class WedgeSide {
    Cone,        // the convex angular sector spanned by the two rays
    Complement,  // closure of everything outside that sector
};

/// Closed angular region bounded by two rays from `apex`. line_b is always
/// the horizontal downstream ray; line_a is the doubled-angle ray. `inside`
/// points from the apex into the sector and disambiguates the degenerate
/// case where the rays are opposite and the sector is a half-plane.
struct Wedge {
    Point apex;
    HalfLine line_a;
    HalfLine line_b;
    WedgeSide side = WedgeSide::Cone;
    Point inside;
};

/// Inner bound: wedge_lower(p1, p2) is contained in the region where p1 wins
/// {p : energy(p1,p) <= energy(p2,p)}.
Wedge wedge_lower(Point p1, Point p2);

/// Outer bound: wedge_upper(p1, p2) contains the region where p1 wins.
Wedge wedge_upper(Point p1, Point p2);

/// Membership in the closed region denoted by the wedge. The apex and the
/// boundary rays belong to both a sector and its complement.
bool wedge_contains(const Wedge& w, Point p);

}  // namespace flowvor

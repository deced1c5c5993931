#include "flowvor/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "flowvor/bisector.hpp"
#include "flowvor/energy.hpp"

namespace flowvor {

namespace {

constexpr double kRadiusTieTolerance = 1e-12;

void require_pair(Point p1, Point p2) {
    if (!is_finite(p1) || !is_finite(p2)) {
        throw std::invalid_argument("non-finite point");
    }
    if (p1 == p2) {
        throw std::invalid_argument("degenerate pair");
    }
}

double radius_term(Point p_i, Point p_j) {
    return 0.5 * (dist(p_i, p_j) + p_j.x - p_i.x);
}

/// Unit direction of the doubled inclination angle of p1 -> p2, computed from
/// the offset components so the straight-up case stays exact.
Point doubled_angle_dir(Point p1, Point p2) {
    const double ax = 0.5 * (p2.x - p1.x);
    const double by = 0.5 * (p2.y - p1.y);
    const double c2 = ax * ax + by * by;
    return {(ax * ax - by * by) / c2, 2.0 * ax * by / c2};
}

Point toward_downstream(Point p1, Point p2) {
    // For equal x the sector degenerates to a half-plane; aim it at p2 so the
    // complement is exactly p1's half.
    const Point up = p1.x <= p2.x ? p1 : p2;
    const Point down = p1.x <= p2.x ? p2 : p1;
    const double len = dist(up, down);
    return {(down.x - up.x) / len, (down.y - up.y) / len};
}

Wedge make_wedge(Point apex, Point p1, Point p2, WedgeSide side) {
    Wedge w;
    w.apex = apex;
    w.line_a = {apex, doubled_angle_dir(p1, p2)};
    w.line_b = {apex, {1.0, 0.0}};
    w.side = side;
    w.inside = toward_downstream(p1, p2);
    return w;
}

}  // namespace

double disk_radius(Point p_i, std::span<const Point> others) {
    if (others.empty()) {
        throw std::invalid_argument("empty generator set");
    }
    double r = std::numeric_limits<double>::infinity();
    for (const Point& p_j : others) {
        require_pair(p_i, p_j);
        r = std::min(r, radius_term(p_i, p_j));
    }
    return r;
}

std::vector<Point> lower_bound_neighbors(Point p1, std::span<const Point> pool) {
    const double rmin = disk_radius(p1, pool);
    std::vector<Point> out;
    for (const Point& p : pool) {
        if (radius_term(p1, p) <= rmin + kRadiusTieTolerance) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<Point> augment_lower_bound(Point p1, std::span<const Point> pool,
                                       std::span<const Point> base) {
    std::vector<Point> out(base.begin(), base.end());
    for (const Point& pk : pool) {
        const bool in_base =
            std::find(out.begin(), out.end(), pk) != out.end();
        if (in_base) {
            continue;
        }
        const Point contact = closest_boundary_point(p1, pk);
        bool strictly_nearest = true;
        for (const Point& pl : pool) {
            if (pl == pk) {
                continue;
            }
            if (!(energy(pk, contact, {}) < energy(pl, contact, {}))) {
                strictly_nearest = false;
                break;
            }
        }
        if (strictly_nearest) {
            out.push_back(pk);
        }
    }
    return out;
}

std::pair<HalfLine, HalfLine> asymptote_lines(Point p1, Point p2) {
    require_pair(p1, p2);
    const Point mid = 0.5 * (p1 + p2);
    return {HalfLine{mid, doubled_angle_dir(p1, p2)}, HalfLine{mid, {1.0, 0.0}}};
}

Wedge wedge_lower(Point p1, Point p2) {
    require_pair(p1, p2);
    const Point mid = 0.5 * (p1 + p2);
    if (p1.x < p2.x) {
        return make_wedge(mid, p1, p2, WedgeSide::Complement);
    }
    if (p1.x > p2.x) {
        return make_wedge(closest_boundary_point(p1, p2), p1, p2, WedgeSide::Cone);
    }
    return make_wedge(mid, p1, p2, WedgeSide::Complement);
}

Wedge wedge_upper(Point p1, Point p2) {
    require_pair(p1, p2);
    const Point mid = 0.5 * (p1 + p2);
    if (p1.x < p2.x) {
        return make_wedge(closest_boundary_point(p1, p2), p1, p2, WedgeSide::Complement);
    }
    if (p1.x > p2.x) {
        return make_wedge(mid, p1, p2, WedgeSide::Cone);
    }
    return make_wedge(mid, p1, p2, WedgeSide::Complement);
}

bool wedge_contains(const Wedge& w, Point p) {
    const Point off = p - w.apex;
    const Point v = w.line_a.dir;
    bool in_open;
    bool in_closed;
    if (v.y != 0.0) {
        // off = s * (1,0) + t * v
        const double t = off.y / v.y;
        const double s = off.x - t * v.x;
        in_open = s > 0.0 && t > 0.0;
        in_closed = s >= 0.0 && t >= 0.0;
    } else if (v.x > 0.0) {
        // Rays coincide: the sector is the downstream ray itself.
        in_closed = off.y == 0.0 && off.x >= 0.0;
        in_open = false;
    } else {
        // Opposite rays: the sector is the half-plane `inside` points into.
        const double side = w.inside.y >= 0.0 ? off.y : -off.y;
        in_open = side > 0.0;
        in_closed = side >= 0.0;
    }
    return w.side == WedgeSide::Cone ? in_closed : !in_open;
}

}  // namespace flowvor

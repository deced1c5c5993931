#include "flowvor/bisector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flowvor {

namespace {

void require_distinct(Point p1, Point p2) {
    if (!is_finite(p1) || !is_finite(p2)) {
        throw std::invalid_argument("non-finite point");
    }
    if (p1 == p2) {
        throw std::invalid_argument("degenerate pair");
    }
}

/// Largest |t| whose branch point can still fall inside bbox, conservatively
/// bounded through the circumscribed disk of bbox around `center`.
double parameter_bound(const HyperbolaBranch& h, const Rect& bbox) {
    const Point corners[4] = {bbox.min,
                              {bbox.max.x, bbox.min.y},
                              {bbox.min.x, bbox.max.y},
                              bbox.max};
    double r = 0.0;
    for (const Point& q : corners) {
        r = std::max(r, dist(h.center, q));
    }
    if (r < h.a) {
        return -1.0;  // vertex already outside the disk, branch misses bbox
    }
    const double tx = std::acosh(std::max(r / h.a, 1.0));
    const double ty = std::asinh(r / h.b_axis);
    return std::min(tx, ty);
}

Point branch_point(const HyperbolaBranch& h, double t) {
    const double lx = h.a * std::cosh(t);
    const double ly = h.b_axis * std::sinh(t);
    const double ca = std::cos(h.alpha);
    const double sa = std::sin(h.alpha);
    return {h.center.x + ca * lx - sa * ly, h.center.y + sa * lx + ca * ly};
}

}  // namespace

Point to_local(Point p, Point p1, Point p2) {
    require_distinct(p1, p2);
    const Point mid = 0.5 * (p1 + p2);
    const double alpha = std::atan2(p2.y - p1.y, p2.x - p1.x);
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    const Point w = p - mid;
    return {w.x * ca + w.y * sa, -w.x * sa + w.y * ca};
}

Point from_local(Point q, Point p1, Point p2) {
    require_distinct(p1, p2);
    const Point mid = 0.5 * (p1 + p2);
    const double alpha = std::atan2(p2.y - p1.y, p2.x - p1.x);
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    return {mid.x + q.x * ca - q.y * sa, mid.y + q.x * sa + q.y * ca};
}

Bisector bisector(Point p1, Point p2) {
    require_distinct(p1, p2);
    if (p1.x == p2.x) {
        return PerpendicularLine{0.5 * (p1.y + p2.y)};
    }
    if (p1.y == p2.y) {
        return DownstreamHalfLine{p1.x > p2.x ? p1 : p2};
    }
    // One code path for every sign combination: orient the local frame from
    // the upstream generator to the downstream one, so the branch is always
    // the x' >= a side.
    const Point up = p1.x < p2.x ? p1 : p2;
    const Point down = p1.x < p2.x ? p2 : p1;
    HyperbolaBranch h;
    h.center = 0.5 * (up + down);
    h.alpha = std::atan2(down.y - up.y, down.x - up.x);
    h.a = 0.5 * (down.x - up.x);
    h.b_axis = 0.5 * std::abs(down.y - up.y);
    h.c = 0.5 * dist(up, down);
    return h;
}

Point closest_boundary_point(Point p1, Point p2) {
    require_distinct(p1, p2);
    const double c = 0.5 * dist(p1, p2);
    const double a = 0.5 * (p2.x - p1.x);  // signed half x-offset
    const double f = (c + a) / (2.0 * c);
    return p1 + f * (p2 - p1);
}

double bisector_tolerance(Point p1, Point p2, const FlowField& flow) {
    return 1e-9 * (1.0 + flow.speed * dist(p1, p2));
}

bool bisector_contains(Point p1, Point p2, Point q, const FlowField& flow) {
    const double diff = energy(p1, q, flow) - energy(p2, q, flow);
    return std::abs(diff) <= bisector_tolerance(p1, p2, flow);
}

std::vector<Point> sample_bisector(Point p1, Point p2, const Rect& bbox, std::size_t n) {
    require_distinct(p1, p2);
    if (!bbox.valid()) {
        throw std::invalid_argument("invalid bbox");
    }
    if (n == 0) {
        return {};
    }

    const Bisector b = bisector(p1, p2);
    std::vector<Point> out;
    out.reserve(n);

    if (const auto* line = std::get_if<PerpendicularLine>(&b)) {
        if (line->y_level < bbox.min.y || line->y_level > bbox.max.y) {
            return {};
        }
        const Point vertex = closest_boundary_point(p1, p2);
        const double x0 = bbox.min.x;
        const double x1 = bbox.max.x;
        std::size_t snap = n;  // sample index replaced by the vertex abscissa
        if (vertex.x >= x0 && vertex.x <= x1 && n > 1) {
            const double step = (x1 - x0) / static_cast<double>(n - 1);
            snap = static_cast<std::size_t>(std::lround((vertex.x - x0) / step));
        }
        for (std::size_t i = 0; i < n; ++i) {
            double x = n == 1 ? vertex.x
                              : x0 + (x1 - x0) * static_cast<double>(i) /
                                         static_cast<double>(n - 1);
            if (i == snap) {
                x = vertex.x;
            }
            out.push_back({x, line->y_level});
        }
        return out;
    }

    if (const auto* ray = std::get_if<DownstreamHalfLine>(&b)) {
        if (ray->origin.y < bbox.min.y || ray->origin.y > bbox.max.y ||
            ray->origin.x > bbox.max.x) {
            return {};
        }
        const double x0 = std::max(ray->origin.x, bbox.min.x);
        const double x1 = bbox.max.x;
        if (x0 == x1 || n == 1) {
            out.push_back({x0, ray->origin.y});
            return out;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double x = x0 + (x1 - x0) * static_cast<double>(i) /
                                      static_cast<double>(n - 1);
            out.push_back({x, ray->origin.y});
        }
        return out;
    }

    const auto& h = std::get<HyperbolaBranch>(b);
    const double tmax = parameter_bound(h, bbox);
    if (tmax < 0.0) {
        return {};
    }
    if (n == 1 || tmax == 0.0) {
        const Point vertex = branch_point(h, 0.0);
        if (bbox.contains(vertex)) {
            out.push_back(vertex);
        }
        return out;
    }
    std::size_t snap = n;
    if (bbox.contains(branch_point(h, 0.0))) {
        const double step = 2.0 * tmax / static_cast<double>(n - 1);
        snap = static_cast<std::size_t>(std::lround(tmax / step));
    }
    for (std::size_t i = 0; i < n; ++i) {
        double t = -tmax + 2.0 * tmax * static_cast<double>(i) /
                               static_cast<double>(n - 1);
        if (i == snap) {
            t = 0.0;
        }
        const Point q = branch_point(h, t);
        if (bbox.contains(q)) {
            out.push_back(q);
        }
    }
    return out;
}

}  // namespace flowvor

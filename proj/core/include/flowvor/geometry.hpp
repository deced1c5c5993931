#pragma once

#include <cmath>

namespace flowvor {

/// Plane point, also used as a 2-vector.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend constexpr bool operator!=(Point a, Point b) { return !(a == b); }
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3-D cross product; positive when b lies counterclockwise of a.
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

inline double norm(Point a) { return std::sqrt(a.x * a.x + a.y * a.y); }

inline double dist(Point a, Point b) { return norm(b - a); }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Axis-aligned rectangle given by its min and max corners.
struct Rect {
    Point min;
    Point max;

    bool valid() const { return is_finite(min) && is_finite(max) && min.x < max.x && min.y < max.y; }
    bool contains(Point p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    double diagonal() const { return dist(min, max); }
    Point center() const { return {0.5 * (min.x + max.x), 0.5 * (min.y + max.y)}; }
};

}  // namespace flowvor

#pragma once

#include <cstddef>

#include "flowvor/geometry.hpp"

namespace flowvor {

/// Uniform ambient drift of strength `speed` along +x. `speed` must be positive.
struct FlowField {
    double speed = 1.0;
};

/// Constant minimum-energy control taking a vehicle from one point to another
/// through the flow. The applied control vector is -(c1, c2)/2, held for
/// duration t_f.
struct OptimalControl {
    double c1 = 0.0;
    double c2 = 0.0;
    double t_f = 0.0;

    Point control() const { return {-0.5 * c1, -0.5 * c2}; }
    double magnitude() const { return norm(control()); }
};

/// Minimum control energy to travel from p1 to p2 under the flow.
/// Zero exactly when p2 is directly downstream of p1 (same y, x2 >= x1);
/// asymmetric in its arguments otherwise.
double energy(Point p1, Point p2, const FlowField& flow);

/// Minimizing control for the trip p1 -> p2. Throws std::invalid_argument
/// on a degenerate pair (p1 == p2) or a non-positive flow speed.
OptimalControl optimal_control(Point p1, Point p2, const FlowField& flow);

/// Flow-independent comparison key: dist(generator, p) + generator.x.
/// Ranking generators by this value ranks them by energy(generator, p).
double weighted_distance(Point generator, Point p);

struct TrajectoryResult {
    Point endpoint;
    double energy_used = 0.0;
};

/// Integrates the optimally controlled vehicle with fixed-step Euler over
/// [0, t_f] and accumulates the spent control energy. The drift and control
/// are constant, so the discretization error is rounding-level only.
TrajectoryResult simulate_trajectory(Point p1, Point p2, const FlowField& flow,
                                     std::size_t steps);

}  // namespace flowvor

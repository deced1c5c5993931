#include "flowvor/energy.hpp"

#include <stdexcept>

namespace flowvor {

namespace {

void require_valid(Point p1, Point p2, const FlowField& flow) {
    if (!is_finite(p1) || !is_finite(p2)) {
        throw std::invalid_argument("non-finite point");
    }
    if (!(flow.speed > 0.0)) {
        throw std::invalid_argument("flow speed must be positive");
    }
}

}  // namespace

double energy(Point p1, Point p2, const FlowField& flow) {
    require_valid(p1, p2, flow);
    const double d = dist(p1, p2);
    return 2.0 * flow.speed * (d + p1.x - p2.x);
}

OptimalControl optimal_control(Point p1, Point p2, const FlowField& flow) {
    require_valid(p1, p2, flow);
    const double d = dist(p1, p2);
    if (d == 0.0) {
        throw std::invalid_argument("degenerate pair");
    }
    const double b = flow.speed;
    OptimalControl u;
    u.c1 = 2.0 * b * (1.0 + (p1.x - p2.x) / d);
    u.c2 = 2.0 * b * (p1.y - p2.y) / d;
    u.t_f = d / b;
    return u;
}

double weighted_distance(Point generator, Point p) {
    return dist(generator, p) + generator.x;
}

TrajectoryResult simulate_trajectory(Point p1, Point p2, const FlowField& flow,
                                     std::size_t steps) {
    if (steps == 0) {
        throw std::invalid_argument("steps must be positive");
    }
    const OptimalControl u = optimal_control(p1, p2, flow);
    const Point uvec = u.control();
    const Point velocity = {uvec.x + flow.speed, uvec.y};
    const double power = dot(uvec, uvec);
    const double dt = u.t_f / static_cast<double>(steps);

    TrajectoryResult result;
    result.endpoint = p1;
    for (std::size_t k = 0; k < steps; ++k) {
        result.endpoint = result.endpoint + dt * velocity;
        result.energy_used += power * dt;
    }
    return result;
}

}  // namespace flowvor

#include "flowvor/dominance.hpp"

#include <stdexcept>

namespace flowvor {

Scenario classify(Point p1, Point p2) {
    if (!is_finite(p1) || !is_finite(p2)) {
        throw std::invalid_argument("non-finite point");
    }
    if (p1 == p2) {
        throw std::invalid_argument("degenerate pair");
    }
    if (p1.y < p2.y) {
        return Scenario::A;
    }
    if (p1.y > p2.y) {
        return Scenario::B;
    }
    return p1.x > p2.x ? Scenario::C : Scenario::D;
}

bool dominates(Point p1, Point p2, Point p3) {
    const Scenario s = classify(p1, p2);
    if (p3 == p1) {
        throw std::invalid_argument("p3 coincides with the base generator");
    }
    if (p3 == p2) {
        return true;
    }
    // Sideness via cross products of the offsets from p1; slopes are never
    // formed, so vertical configurations need no special casing.
    const double side = (p3.y - p1.y) * (p2.x - p1.x) - (p3.x - p1.x) * (p2.y - p1.y);
    switch (s) {
        case Scenario::A:
            return p3.y >= p2.y && side <= 0.0;
        case Scenario::B:
            return p3.y <= p2.y && side >= 0.0;
        case Scenario::C:
            return p3.y != p2.y || p3.x < p1.x;
        case Scenario::D:
            return p3.y == p2.y && p3.x >= p2.x;
    }
    return false;  // unreachable
}

DominanceOutcome dominance_outcome(Point p1, Point p2, Point p3) {
    const bool fwd = dominates(p1, p2, p3);
    const bool bwd = dominates(p1, p3, p2);
    if (fwd && bwd) {
        return DominanceOutcome::Mutual;
    }
    if (fwd) {
        return DominanceOutcome::FirstDominates;
    }
    if (bwd) {
        return DominanceOutcome::SecondDominates;
    }
    return DominanceOutcome::Incomparable;
}

AssumptionReport check_assumption(Point p1, std::span<const Point> pool) {
    AssumptionReport report;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const Point p = pool[i];
        if (p == p1) {
            report.violations.push_back(
                {i, AssumptionViolation::Kind::CoincidesWithBase, 0});
            continue;
        }
        if (p.y == p1.y && p.x <= p1.x) {
            report.violations.push_back(
                {i, AssumptionViolation::Kind::UpstreamOnStreamline, 0});
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (pool[j] == p) {
                report.violations.push_back(
                    {i, AssumptionViolation::Kind::DuplicatePoint, j});
                break;
            }
        }
    }
    return report;
}

}  // namespace flowvor

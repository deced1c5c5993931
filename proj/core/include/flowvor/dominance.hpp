#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "flowvor/geometry.hpp"

namespace flowvor {

/// Thrown when a point pool violates the standing position requirement
/// relative to the base generator (see check_assumption).
class AssumptionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Position of p2 relative to the base generator p1, which selects the
/// dominance test to apply.
enum class Scenario {
    A,  // y1 < y2
    B,  // y1 > y2
    C,  // y1 == y2, x1 > x2 (p2 straight upstream)
    D,  // y1 == y2, x1 < x2 (p2 straight downstream)
};

/// Classifies p2 against p1. Throws std::invalid_argument on coincident points.
Scenario classify(Point p1, Point p2);

/// True when discarding p3 cannot change the cell of p1 once p2 is present:
/// the constraint from p2 already implies the constraint from p3.
/// Reflexive (p3 == p2 gives true). Coordinate equality is exact and the
/// sideness tests use cross products, so the predicate is total and
/// deterministic for representable inputs. Throws std::invalid_argument when
/// p2 or p3 coincides with p1.
bool dominates(Point p1, Point p2, Point p3);

enum class DominanceOutcome {
    FirstDominates,
    SecondDominates,
    Mutual,
    Incomparable,
};

/// Joint outcome of dominates(p1, p2, p3) and dominates(p1, p3, p2).
DominanceOutcome dominance_outcome(Point p1, Point p2, Point p3);

struct AssumptionViolation {
    enum class Kind {
        CoincidesWithBase,   // pool point equals p1
        DuplicatePoint,      // pool point equals an earlier pool point
        UpstreamOnStreamline,  // same y as p1 with x <= x1
    };
    std::size_t index = 0;
    Kind kind = Kind::CoincidesWithBase;
    std::size_t other = 0;  // earlier index for DuplicatePoint
};

struct AssumptionReport {
    std::vector<AssumptionViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Verifies that all pool points are pairwise distinct, distinct from p1, and
/// that none sits on p1's streamline at or upstream of p1. Under this
/// condition dominance is a strict partial order on the pool, which the
/// neighbor algorithms rely on.
AssumptionReport check_assumption(Point p1, std::span<const Point> pool);

}  // namespace flowvor

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowvor/geometry.hpp"

namespace flowvor {

struct SimConfig {
    std::size_t n_points = 1;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    double square_half_width = 1.0;
    bool record_per_trial = false;
};

struct SimStats {
    std::size_t n_points = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double avg_ng = 0.0;
    std::map<std::size_t, std::size_t> histogram;  // candidate count -> trials
    double ratio_r = 0.0;  // n_points / avg_ng
    std::vector<std::size_t> per_trial;  // filled only when requested

    friend bool operator==(const SimStats&, const SimStats&) = default;
};

/// Output scrambler of the splitmix64 stream.
std::uint64_t splitmix64(std::uint64_t state);

/// Seed for one trial: output number `index + 1` of the splitmix64 stream
/// started at `base`. Trials can therefore run in any order, or in parallel,
/// with identical results.
std::uint64_t trial_seed(std::uint64_t base, std::size_t index);

/// n points drawn uniformly from [-half_width, half_width]^2 by a
/// mt19937_64 engine seeded with `seed`, using the top 53 bits per
/// coordinate. Draws that would violate the position assumption against a
/// base generator at the origin, or duplicate an earlier point, are
/// redrawn. Identical seeds give identical points.
std::vector<Point> generate_points(std::size_t n, std::uint64_t seed,
                                   double half_width);

/// Monte-Carlo estimate of the neighbor-candidate count: per trial, draw a
/// pool around the origin and record how many points survive the sorted
/// upper-bound algorithm.
SimStats run_trials(const SimConfig& config);

struct DemoEvent {
    enum class Op { Insert, Erase } op = Op::Insert;
    std::size_t id = 0;
    Point pos;  // ignored for Erase
};

struct DemoScript {
    Point p1;
    std::size_t capacity = 256;
    std::vector<DemoEvent> events;
};

struct DemoLogEntry {
    std::size_t index = 0;
    DemoEvent event;
    std::vector<std::size_t> neighbors;  // after the event
    bool recompute_needed = false;       // neighbor set changed
};

/// Raised when a script event cannot be applied; carries the event index and
/// whether the cause was a position-assumption violation.
class DemoEventError : public std::runtime_error {
  public:
    DemoEventError(std::size_t index, const std::string& what, bool assumption);
    std::size_t index() const { return index_; }
    bool assumption_violation() const { return assumption_; }

  private:
    std::size_t index_;
    bool assumption_;
};

/// Replays a script through a DominanceGraph, logging the neighbor set after
/// every event and whether it changed (which is when a vehicle would have to
/// recompute its cell).
std::vector<DemoLogEntry> run_dynamic_demo(const DemoScript& script);

}  // namespace flowvor

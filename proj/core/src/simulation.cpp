#include "flowvor/simulation.hpp"

#include <random>

#include "flowvor/dominance.hpp"
#include "flowvor/dominance_graph.hpp"
#include "flowvor/neighbor_bounds.hpp"

namespace flowvor {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t index) {
    return splitmix64(base + kGolden * (static_cast<std::uint64_t>(index) + 1));
}

std::vector<Point> generate_points(std::size_t n, std::uint64_t seed,
                                   double half_width) {
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("half width must be positive");
    }
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        const double x = half_width * (2.0 * uniform01(rng) - 1.0);
        const double y = half_width * (2.0 * uniform01(rng) - 1.0);
        const Point p{x, y};
        if (p.y == 0.0 && p.x <= 0.0) {
            continue;  // on or upstream of the origin's streamline
        }
        bool duplicate = false;
        for (const Point& q : pts) {
            if (q == p) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            pts.push_back(p);
        }
    }
    return pts;
}

SimStats run_trials(const SimConfig& config) {
    if (config.trials == 0) {
        throw std::invalid_argument("at least one trial required");
    }
    SimStats stats;
    stats.n_points = config.n_points;
    stats.trials = config.trials;
    stats.seed = config.seed;
    if (config.record_per_trial) {
        stats.per_trial.reserve(config.trials);
    }

    std::size_t total = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
        const CandidateSet cs = CandidateSet::make(
            {0.0, 0.0}, generate_points(config.n_points, trial_seed(config.seed, t),
                                        config.square_half_width));
        const std::size_t ng = upper_bound_sorted(cs).ids.size();
        total += ng;
        ++stats.histogram[ng];
        if (config.record_per_trial) {
            stats.per_trial.push_back(ng);
        }
    }
    stats.avg_ng = static_cast<double>(total) / static_cast<double>(config.trials);
    stats.ratio_r = static_cast<double>(config.n_points) / stats.avg_ng;
    return stats;
}

DemoEventError::DemoEventError(std::size_t index, const std::string& what,
                               bool assumption)
    : std::runtime_error("event " + std::to_string(index) + ": " + what),
      index_(index),
      assumption_(assumption) {}

std::vector<DemoLogEntry> run_dynamic_demo(const DemoScript& script) {
    DominanceGraph graph(script.p1, script.capacity);
    std::vector<DemoLogEntry> log;
    log.reserve(script.events.size());
    std::vector<std::size_t> previous;
    for (std::size_t i = 0; i < script.events.size(); ++i) {
        const DemoEvent& ev = script.events[i];
        try {
            if (ev.op == DemoEvent::Op::Insert) {
                graph.insert_at(ev.id, ev.pos);
            } else {
                graph.erase(ev.id);
            }
        } catch (const AssumptionError& e) {
            throw DemoEventError(i, e.what(), true);
        } catch (const std::exception& e) {
            throw DemoEventError(i, e.what(), false);
        }
        DemoLogEntry entry;
        entry.index = i;
        entry.event = ev;
        entry.neighbors = graph.neighbors();
        entry.recompute_needed = entry.neighbors != previous;
        previous = entry.neighbors;
        log.push_back(std::move(entry));
    }
    return log;
}

}  // namespace flowvor

#include "flowvor/voronoi_cell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flowvor/bisector.hpp"
#include "flowvor/dominance.hpp"
#include "flowvor/energy.hpp"
#include "flowvor/neighbor_bounds.hpp"

namespace flowvor {

namespace {

struct Contributor {
    int id;
    Point pos;
};

double boundary_tolerance(const Rect& box) {
    // Half of the energy-unit tolerance 1e-9 * (1 + diameter), expressed on
    // the flow-independent comparison key.
    return 0.5e-9 * (1.0 + box.diagonal());
}

/// True when no generator in `pool` beats p1 at sample `s` by more than the
/// tolerance. Counts every comparison and stops at the first winner.
bool survives(Point p1, std::span<const Point> pool, Point s, double tol,
              CellStats& stats) {
    const double own = weighted_distance(p1, s);
    for (const Point& r : pool) {
        ++stats.energy_comparisons;
        if (weighted_distance(r, s) < own - tol) {
            return false;
        }
    }
    return true;
}

void append_runs(std::vector<CellArc>& arcs, int id,
                 const std::vector<Point>& samples,
                 const std::vector<bool>& kept) {
    CellArc run{id, {}};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (kept[i]) {
            run.points.push_back(samples[i]);
        } else if (!run.points.empty()) {
            arcs.push_back(std::move(run));
            run = {id, {}};
        }
    }
    if (!run.points.empty()) {
        arcs.push_back(std::move(run));
    }
}

VoronoiCell build_cell(Point p1, std::span<const Contributor> contributors,
                       std::span<const Point> constraint_pool, const Rect& box,
                       std::size_t resolution) {
    VoronoiCell cell;
    cell.owner = p1;
    cell.box = box;
    cell.resolution = resolution;
    const double tol = boundary_tolerance(box);

    for (const Contributor& contrib : contributors) {
        const std::vector<Point> samples =
            sample_bisector(p1, contrib.pos, box, resolution);
        std::vector<bool> kept(samples.size(), false);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            ++cell.stats.samples_tested;
            kept[i] = survives(p1, constraint_pool, samples[i], tol, cell.stats);
        }
        append_runs(cell.arcs, contrib.id, samples, kept);
    }

    const auto angle_of = [&p1](const CellArc& arc) {
        const Point mid = arc.points[arc.points.size() / 2];
        return std::atan2(mid.y - p1.y, mid.x - p1.x);
    };
    std::sort(cell.arcs.begin(), cell.arcs.end(),
              [&angle_of](const CellArc& a, const CellArc& b) {
                  return angle_of(a) < angle_of(b);
              });

    // Box frame pieces: exact membership, no tolerance.
    const Point corners[5] = {box.min,
                              {box.max.x, box.min.y},
                              box.max,
                              {box.min.x, box.max.y},
                              box.min};
    for (int e = 0; e < 4; ++e) {
        std::vector<Point> samples;
        std::vector<bool> kept;
        for (std::size_t i = 0; i < resolution; ++i) {
            const double f = static_cast<double>(i) / static_cast<double>(resolution - 1);
            const Point s = corners[e] + f * (corners[e + 1] - corners[e]);
            samples.push_back(s);
            kept.push_back(survives(p1, constraint_pool, s, 0.0, cell.stats));
        }
        std::vector<Point> run;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (kept[i]) {
                run.push_back(samples[i]);
            } else if (!run.empty()) {
                cell.box_edges.push_back(std::move(run));
                run.clear();
            }
        }
        if (!run.empty()) {
            cell.box_edges.push_back(std::move(run));
        }
    }
    return cell;
}

void validate_inputs(Point p1, std::span<const Point> pool, const Rect& box,
                     std::size_t resolution) {
    if (!box.valid()) {
        throw std::invalid_argument("invalid box");
    }
    if (!box.contains(p1)) {
        throw std::invalid_argument("box excludes the owner");
    }
    if (resolution < 16) {
        throw std::invalid_argument("resolution too small");
    }
    if (!check_assumption(p1, pool).ok()) {
        throw AssumptionError("pool violates the position assumption");
    }
}

}  // namespace

std::vector<Point> VoronoiCell::polygon() const {
    std::vector<Point> pts;
    for (const CellArc& arc : arcs) {
        pts.insert(pts.end(), arc.points.begin(), arc.points.end());
    }
    for (const auto& edge : box_edges) {
        pts.insert(pts.end(), edge.begin(), edge.end());
    }
    const Point o = owner;
    std::sort(pts.begin(), pts.end(), [&o](Point a, Point b) {
        return std::atan2(a.y - o.y, a.x - o.x) < std::atan2(b.y - o.y, b.x - o.x);
    });
    const double merge_eps = 1e-12 * (1.0 + box.diagonal());
    std::vector<Point> loop;
    for (const Point& p : pts) {
        if (loop.empty() || dist(loop.back(), p) > merge_eps) {
            loop.push_back(p);
        }
    }
    return loop;
}

bool cell_contains(Point p1, std::span<const Point> pool, Point p) {
    const double own = weighted_distance(p1, p);
    for (const Point& r : pool) {
        if (weighted_distance(r, p) < own) {
            return false;
        }
    }
    return true;
}

VoronoiCell compute_cell(Point p1, std::span<const Point> pool, const Rect& box,
                         std::size_t resolution) {
    validate_inputs(p1, pool, box, resolution);
    std::vector<Contributor> contributors;
    contributors.reserve(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        contributors.push_back({CandidateSet::id_of(i), pool[i]});
    }
    return build_cell(p1, contributors, pool, box, resolution);
}

VoronoiCell compute_cell_prefiltered(Point p1, std::span<const Point> pool,
                                     const Rect& box, std::size_t resolution) {
    validate_inputs(p1, pool, box, resolution);
    const CandidateSet cs =
        CandidateSet::make(p1, std::vector<Point>(pool.begin(), pool.end()));
    const UpperBoundResult bound = upper_bound_sorted(cs);

    std::vector<Contributor> contributors;
    std::vector<Point> reduced;
    contributors.reserve(bound.ids.size());
    reduced.reserve(bound.ids.size());
    for (int id : bound.ids) {
        const Point p = cs.pool[CandidateSet::index_of(id)];
        contributors.push_back({id, p});
        reduced.push_back(p);
    }
    return build_cell(p1, contributors, reduced, box, resolution);
}

std::vector<int> exact_neighbors(Point p1, std::span<const Point> pool,
                                 const Rect& box, std::size_t resolution) {
    const VoronoiCell cell = compute_cell(p1, pool, box, resolution);
    const double pitch = box.diagonal() / static_cast<double>(resolution);

    std::vector<int> ids;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const int id = CandidateSet::id_of(i);
        Point lo{0, 0};
        Point hi{0, 0};
        bool any = false;
        for (const CellArc& arc : cell.arcs) {
            if (arc.contributor != id) {
                continue;
            }
            for (const Point& p : arc.points) {
                if (!any) {
                    lo = hi = p;
                    any = true;
                } else {
                    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
                    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
                }
            }
        }
        if (any && dist(lo, hi) > pitch) {
            ids.push_back(id);
        }
    }
    return ids;
}

}  // namespace flowvor

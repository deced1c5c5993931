// Command-line front end: neighbor candidate sets, sampled cells with SVG
// output, Monte-Carlo statistics, and dynamic insert/delete replays.
//
// Exit codes: 0 success, 1 invalid input, 2 position-assumption violation,
// 3 file I/O failure.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowvor/dominance.hpp"
#include "flowvor/io.hpp"
#include "flowvor/neighbor_bounds.hpp"
#include "flowvor/simulation.hpp"
#include "flowvor/voronoi_cell.hpp"

namespace {

using namespace flowvor;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitAssumption = 2;
constexpr int kExitIo = 3;

double parse_number(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    }
    return v;
}

std::vector<double> parse_tuple(const std::string& text, std::size_t count,
                                const std::string& what) {
    std::vector<double> vals;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(',', start);
        const std::string_view piece =
            pos == std::string::npos
                ? std::string_view(text).substr(start)
                : std::string_view(text).substr(start, pos - start);
        vals.push_back(parse_number(piece));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    if (vals.size() != count) {
        throw std::invalid_argument(what + " needs " + std::to_string(count) +
                                    " comma-separated numbers");
    }
    return vals;
}

Point parse_point(const std::string& text, const std::string& what) {
    const auto v = parse_tuple(text, 2, what);
    return {v[0], v[1]};
}

Rect parse_box(const std::string& text) {
    const auto v = parse_tuple(text, 4, "--box");
    const Rect box{{v[0], v[1]}, {v[2], v[3]}};
    if (!box.valid()) {
        throw std::invalid_argument("--box must satisfy xmin<xmax and ymin<ymax");
    }
    return box;
}

std::vector<Point> positions(const std::vector<NamedPoint>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const NamedPoint& p : pts) {
        out.push_back(p.pos);
    }
    return out;
}

void print_assumption_report(const AssumptionReport& report,
                             const std::vector<NamedPoint>& pts) {
    std::cerr << "position assumption violated:\n";
    for (const AssumptionViolation& v : report.violations) {
        std::cerr << "  id " << pts[v.index].id << ": ";
        switch (v.kind) {
            case AssumptionViolation::Kind::CoincidesWithBase:
                std::cerr << "coincides with p1\n";
                break;
            case AssumptionViolation::Kind::DuplicatePoint:
                std::cerr << "duplicates id " << pts[v.other].id << "\n";
                break;
            case AssumptionViolation::Kind::UpstreamOnStreamline:
                std::cerr << "on p1's streamline at or upstream of p1\n";
                break;
        }
    }
}

int run_neighbors(const std::string& input, const std::string& p1_text,
                  const std::string& algo) {
    const std::vector<NamedPoint> pts = read_points(input);
    const Point p1 = parse_point(p1_text, "--p1");
    const AssumptionReport report = check_assumption(p1, positions(pts));
    if (!report.ok()) {
        print_assumption_report(report, pts);
        return kExitAssumption;
    }
    const CandidateSet cs = CandidateSet::make(p1, positions(pts));
    const UpperBoundResult result =
        algo == "simple" ? upper_bound_simple(cs) : upper_bound_sorted(cs);

    std::vector<long long> ids;
    for (int internal : result.ids) {
        ids.push_back(pts[CandidateSet::index_of(internal)].id);
    }
    std::sort(ids.begin(), ids.end());
    std::cout << "neighbors:";
    for (long long id : ids) {
        std::cout << " " << id;
    }
    std::cout << "\ncount: " << ids.size()
              << "\ndominance_tests: " << result.dominance_tests << "\n";
    return kExitOk;
}

int run_cell(const std::string& input, const std::string& p1_text,
             const std::string& box_text, std::size_t resolution, bool prefilter,
             const std::string& svg_path) {
    const std::vector<NamedPoint> pts = read_points(input);
    const Point p1 = parse_point(p1_text, "--p1");
    const Rect box = parse_box(box_text);
    const std::vector<Point> pool = positions(pts);

    const VoronoiCell cell = prefilter
                                 ? compute_cell_prefiltered(p1, pool, box, resolution)
                                 : compute_cell(p1, pool, box, resolution);

    std::cout << "arcs: " << cell.arcs.size() << "\n";
    for (const CellArc& arc : cell.arcs) {
        const NamedPoint& g = pts[CandidateSet::index_of(arc.contributor)];
        std::cout << "  contributor " << g.id << ": " << arc.points.size()
                  << " samples\n";
    }
    std::cout << "box_edges: " << cell.box_edges.size()
              << "\nsamples_tested: " << cell.stats.samples_tested
              << "\nenergy_comparisons: " << cell.stats.energy_comparisons << "\n";

    if (!svg_path.empty()) {
        write_text_file(cell_to_svg(cell, pts), svg_path);
        std::cout << "svg: " << svg_path << "\n";
    }
    return kExitOk;
}

int run_simulate(std::size_t n, std::size_t trials, std::uint64_t seed,
                 double half_width, bool per_trial, const std::string& out) {
    SimConfig config;
    config.n_points = n;
    config.trials = trials;
    config.seed = seed;
    config.square_half_width = half_width;
    config.record_per_trial = per_trial;

    const SimStats stats = run_trials(config);
    std::cout << "n_points: " << stats.n_points << "\ntrials: " << stats.trials
              << "\navg_ng: " << stats.avg_ng << "\nratio_r: " << stats.ratio_r
              << "\n";
    if (!out.empty()) {
        write_stats(stats, out);
        std::cout << "out: " << out << "\n";
    }
    return kExitOk;
}

int run_demo(const std::string& script_path, const std::string& out) {
    const DemoScript script = read_demo_script(script_path);
    const std::vector<DemoLogEntry> log = run_dynamic_demo(script);
    const std::string json = demo_log_to_json(log);
    if (out.empty()) {
        std::cout << json;
    } else {
        write_text_file(json, out);
        std::cout << "events: " << log.size() << "\nout: " << out << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-aware Voronoi partitioning for vehicles in a uniform flow"};
    app.require_subcommand(1);

    std::string input;
    std::string p1_text = "0,0";
    std::string algo = "sorted";
    std::string box_text;
    std::string svg_path;
    std::string out_path;
    std::string script_path;
    std::size_t resolution = 512;
    bool prefilter = false;
    std::size_t n = 1;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    double half_width = 1.0;
    bool per_trial = false;

    CLI::App* neighbors = app.add_subcommand(
        "neighbors", "Candidate neighbor set of p1 against a generator file");
    neighbors->add_option("--input", input, "generator file (.csv or .json)")
        ->required();
    neighbors->add_option("--p1", p1_text, "base generator as x,y")->required();
    neighbors->add_option("--algo", algo, "simple or sorted")
        ->check(CLI::IsMember({"simple", "sorted"}))
        ->capture_default_str();

    CLI::App* cell = app.add_subcommand("cell", "Sampled cell of p1 inside a box");
    cell->add_option("--input", input, "generator file (.csv or .json)")->required();
    cell->add_option("--p1", p1_text, "base generator as x,y")->required();
    cell->add_option("--box", box_text, "clip box as xmin,ymin,xmax,ymax")->required();
    cell->add_option("--resolution", resolution, "samples per boundary")
        ->capture_default_str();
    cell->add_flag("--prefilter", prefilter,
                   "drop dominated generators before sampling");
    cell->add_option("--svg", svg_path, "write an SVG rendering here");

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte-Carlo neighbor-count statistics");
    simulate->add_option("--n", n, "pool size per trial")->required();
    simulate->add_option("--trials", trials, "number of trials")
        ->capture_default_str();
    simulate->add_option("--seed", seed, "stream seed")->capture_default_str();
    simulate->add_option("--half-width", half_width, "sampling square half width")
        ->capture_default_str();
    simulate->add_flag("--per-trial", per_trial, "record per-trial counts");
    simulate->add_option("--out", out_path, "stats file (.json or .csv)");

    CLI::App* demo =
        app.add_subcommand("dynamic-demo", "Replay an insert/delete event script");
    demo->add_option("--script", script_path, "events file (.json)")->required();
    demo->add_option("--out", out_path, "log file (.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*neighbors) {
            return run_neighbors(input, p1_text, algo);
        }
        if (*cell) {
            return run_cell(input, p1_text, box_text, resolution, prefilter, svg_path);
        }
        if (*simulate) {
            return run_simulate(n, trials, seed, half_width, per_trial, out_path);
        }
        if (*demo) {
            return run_demo(script_path, out_path);
        }
    } catch (const DemoEventError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.assumption_violation() ? kExitAssumption : kExitInvalid;
    } catch (const AssumptionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssumption;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "flowvor/io.hpp"
#include "flowvor/simulation.hpp"
#include "flowvor/voronoi_cell.hpp"

namespace {

using namespace flowvor;
namespace fs = std::filesystem;

/// Unique scratch directory per process; cleaned up lazily by the OS tmpfs.
fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("flowvor_io_test_" +
                      std::to_string(std::random_device{}()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

TEST_SUITE("io") {

TEST_CASE("CSV generator files parse ids and coordinates") {
    std::istringstream in(
        "id,x,y\n"
        "7,1.5,-0.25\n"
        "3,0,2\n");
    const auto pts = parse_points_csv(in);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].id == 7);
    CHECK(pts[0].pos.x == 1.5);
    CHECK(pts[0].pos.y == -0.25);
    CHECK(pts[1].id == 3);
    CHECK(pts[1].pos.x == 0.0);
    CHECK(pts[1].pos.y == 2.0);
}

TEST_CASE("CSV rejects malformed content") {
    SUBCASE("wrong header") {
        std::istringstream in("x,y,id\n1,2,3\n");
        CHECK_THROWS_AS(parse_points_csv(in), std::invalid_argument);
    }
    SUBCASE("missing column") {
        std::istringstream in("id,x,y\n1,2\n");
        CHECK_THROWS_AS(parse_points_csv(in), std::invalid_argument);
    }
    SUBCASE("extra column") {
        std::istringstream in("id,x,y\n1,2,3,4\n");
        CHECK_THROWS_AS(parse_points_csv(in), std::invalid_argument);
    }
    SUBCASE("non-numeric coordinate") {
        std::istringstream in("id,x,y\n1,2,north\n");
        CHECK_THROWS_AS(parse_points_csv(in), std::invalid_argument);
    }
    SUBCASE("duplicate id") {
        std::istringstream in("id,x,y\n1,2,3\n1,4,5\n");
        CHECK_THROWS_AS(parse_points_csv(in), std::invalid_argument);
    }
}

TEST_CASE("JSON generator files parse to the same records") {
    const auto pts = parse_points_json(
        R"([{"id": 7, "x": 1.5, "y": -0.25}, {"id": 3, "x": 0, "y": 2}])");
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].id == 7);
    CHECK(pts[1].pos.y == 2.0);

    CHECK_THROWS_AS(parse_points_json("{\"id\": 1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_points_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_points_json(R"([{"id": 1, "x": 2}])"),
                    std::invalid_argument);
}

TEST_CASE("point reading dispatches on the file extension") {
    const fs::path csv = scratch_dir() / "pool.csv";
    const fs::path json = scratch_dir() / "pool.json";
    write_text_file("id,x,y\n1,0.5,0.5\n2,1,0\n", csv);
    write_text_file(R"([{"id": 1, "x": 0.5, "y": 0.5}, {"id": 2, "x": 1, "y": 0}])",
                    json);

    const auto a = read_points(csv);
    const auto b = read_points(json);
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    CHECK(a[0].id == b[0].id);
    CHECK(a[1].pos.x == b[1].pos.x);

    CHECK_THROWS_AS(read_points(scratch_dir() / "absent.csv"), IoError);
    const fs::path odd = scratch_dir() / "pool.txt";
    write_text_file("id,x,y\n", odd);
    CHECK_THROWS_AS(read_points(odd), std::invalid_argument);
}

TEST_CASE("stats survive a JSON round trip unchanged") {
    SimConfig cfg;
    cfg.n_points = 9;
    cfg.trials = 40;
    cfg.seed = 31337;

    SUBCASE("without the per-trial log") {
        const SimStats stats = run_trials(cfg);
        CHECK(stats_from_json(stats_to_json(stats)) == stats);
    }
    SUBCASE("with the per-trial log") {
        cfg.record_per_trial = true;
        const SimStats stats = run_trials(cfg);
        const SimStats back = stats_from_json(stats_to_json(stats));
        CHECK(back == stats);
        CHECK_FALSE(back.per_trial.empty());
    }
    SUBCASE("malformed text is rejected") {
        CHECK_THROWS_AS(stats_from_json("[]"), std::invalid_argument);
        CHECK_THROWS_AS(stats_from_json("{"), std::invalid_argument);
    }
}

TEST_CASE("stats CSV lists the summary then the histogram") {
    SimConfig cfg;
    cfg.n_points = 6;
    cfg.trials = 25;
    cfg.seed = 4;
    const SimStats stats = run_trials(cfg);

    const std::string csv = stats_to_csv(stats);
    CHECK(csv.rfind("n_points,trials,seed,avg_ng,ratio_r\n", 0) == 0);
    CHECK(csv.find("\nng,count\n") != std::string::npos);
    CHECK(csv.find("6,25,4,") != std::string::npos);

    // One row per histogram bucket after the section marker.
    const std::size_t marker = csv.find("\nng,count\n");
    const std::string rows = csv.substr(marker + 10);
    std::size_t lines = 0;
    for (char c : rows) {
        lines += c == '\n';
    }
    CHECK(lines == stats.histogram.size());
}

TEST_CASE("stats writing picks the format from the path") {
    SimConfig cfg;
    cfg.n_points = 3;
    cfg.trials = 10;
    const SimStats stats = run_trials(cfg);

    const fs::path jpath = scratch_dir() / "stats.json";
    const fs::path cpath = scratch_dir() / "stats.csv";
    write_stats(stats, jpath);
    write_stats(stats, cpath);

    std::ifstream jin(jpath);
    std::stringstream jbuf;
    jbuf << jin.rdbuf();
    CHECK(stats_from_json(jbuf.str()) == stats);

    std::ifstream cin(cpath);
    std::string first;
    std::getline(cin, first);
    CHECK(first == "n_points,trials,seed,avg_ng,ratio_r");

    CHECK_THROWS_AS(write_stats(stats, scratch_dir() / "no_dir" / "x.json"),
                    IoError);
}

TEST_CASE("demo scripts accept both the bare and the wrapped form") {
    const DemoScript bare = parse_demo_script(
        R"([{"op": "insert", "id": 0, "x": 1, "y": 1},
            {"op": "delete", "id": 0}])");
    CHECK(bare.p1.x == 0.0);
    CHECK(bare.p1.y == 0.0);
    CHECK(bare.capacity == 256);
    REQUIRE(bare.events.size() == 2);
    CHECK(bare.events[0].op == DemoEvent::Op::Insert);
    CHECK(bare.events[0].id == 0);
    CHECK(bare.events[0].pos.x == 1.0);
    CHECK(bare.events[1].op == DemoEvent::Op::Erase);

    const DemoScript wrapped = parse_demo_script(
        R"({"p1": [0.5, -0.5], "capacity": 16,
            "events": [{"op": "insert", "id": 3, "x": 2, "y": 0.25}]})");
    CHECK(wrapped.p1.x == 0.5);
    CHECK(wrapped.p1.y == -0.5);
    CHECK(wrapped.capacity == 16);
    REQUIRE(wrapped.events.size() == 1);
    CHECK(wrapped.events[0].id == 3);

    CHECK_THROWS_AS(parse_demo_script(R"([{"op": "merge", "id": 0}])"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_demo_script(R"([{"op": "insert", "id": 0}])"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_demo_script("42"), std::invalid_argument);
    CHECK_THROWS_AS(read_demo_script(scratch_dir() / "absent.json"), IoError);
}

TEST_CASE("demo logs serialize every entry") {
    DemoScript script;
    script.p1 = {0.0, 0.0};
    script.capacity = 4;
    script.events = {
        {DemoEvent::Op::Insert, 0, {1.0, 1.0}},
        {DemoEvent::Op::Insert, 1, {1.0, -1.0}},
        {DemoEvent::Op::Erase, 0, {}},
    };
    const auto log = run_dynamic_demo(script);
    const std::string json = demo_log_to_json(log);

    // Parse back through the script parser's underlying machinery: the log
    // must at least be valid JSON with one element per event.
    CHECK(json.find("\"insert\"") != std::string::npos);
    CHECK(json.find("\"delete\"") != std::string::npos);
    CHECK(json.find("\"neighbors\"") != std::string::npos);
    CHECK(json.find("\"recompute_needed\"") != std::string::npos);
    std::size_t entries = 0;
    for (std::size_t pos = 0;
         (pos = json.find("\"index\"", pos)) != std::string::npos; ++pos) {
        ++entries;
    }
    CHECK(entries == log.size());
}

TEST_CASE("cell SVG contains the boundary and the generators") {
    const std::vector<NamedPoint> pool = {
        {11, {1.0, 1.0}}, {12, {1.0, -1.0}}, {13, {-0.5, 1.5}}};
    std::vector<Point> positions;
    for (const auto& np : pool) {
        positions.push_back(np.pos);
    }
    const Rect box{{-2.0, -2.0}, {3.0, 2.0}};
    const VoronoiCell cell =
        compute_cell({0.0, 0.0}, positions, box, 128);
    REQUIRE(!cell.arcs.empty());

    const std::string svg = cell_to_svg(cell, pool);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("11") != std::string::npos);
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("inf") == std::string::npos);
}

TEST_CASE("text files round trip and report filesystem failures") {
    const fs::path path = scratch_dir() / "note.txt";
    write_text_file("line one\nline two\n", path);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "line one\nline two\n");

    CHECK_THROWS_AS(write_text_file("x", scratch_dir() / "missing" / "f.txt"),
                    IoError);
}

}  // TEST_SUITE

}  // namespace

#include "flowvor/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace flowvor {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Shortest round-trippable decimal form, identical on every run.
std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view s) {
    s = trim(s);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
    }
    return v;
}

long long parse_integer(std::string_view s) {
    s = trim(s);
    long long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read " + path.string());
    }
    return std::move(buffer).str();
}

void check_unique_ids(const std::vector<NamedPoint>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (pts[i].id == pts[j].id) {
                throw std::invalid_argument("duplicate generator id " +
                                            std::to_string(pts[i].id));
            }
        }
    }
}

Point parse_p1_field(const ordered_json& v) {
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    if (v.is_object() && v.contains("x") && v.contains("y")) {
        return {v.at("x").get<double>(), v.at("y").get<double>()};
    }
    throw std::invalid_argument("p1 must be [x, y] or {x, y}");
}

DemoEvent parse_event(const ordered_json& v, std::size_t index) {
    const std::string where = "event " + std::to_string(index) + ": ";
    if (!v.is_object() || !v.contains("op") || !v.contains("id")) {
        throw std::invalid_argument(where + "expected {op, id, ...}");
    }
    DemoEvent ev;
    const std::string op = v.at("op").get<std::string>();
    if (!v.at("id").is_number_unsigned()) {
        throw std::invalid_argument(where + "id must be a non-negative integer");
    }
    ev.id = v.at("id").get<std::size_t>();
    if (op == "insert") {
        ev.op = DemoEvent::Op::Insert;
        if (!v.contains("x") || !v.contains("y")) {
            throw std::invalid_argument(where + "insert needs x and y");
        }
        ev.pos = {v.at("x").get<double>(), v.at("y").get<double>()};
    } else if (op == "delete") {
        ev.op = DemoEvent::Op::Erase;
    } else {
        throw std::invalid_argument(where + "unknown op '" + op + "'");
    }
    return ev;
}

std::string color_for(int contributor_id) {
    const int hue = (contributor_id * 137) % 360;
    return "hsl(" + std::to_string(hue) + ",70%,40%)";
}

}  // namespace

std::vector<NamedPoint> parse_points_csv(std::istream& in) {
    std::vector<NamedPoint> pts;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        const std::string_view row = trim(line);
        if (row.empty()) {
            continue;
        }
        if (!saw_header) {
            std::string compact;
            for (char ch : row) {
                if (ch != ' ' && ch != '\t') {
                    compact.push_back(ch);
                }
            }
            if (compact != "id,x,y") {
                throw std::invalid_argument("expected header 'id,x,y'");
            }
            saw_header = true;
            continue;
        }
        const auto fields = split(row, ',');
        if (fields.size() != 3) {
            throw std::invalid_argument("expected 3 fields, got " +
                                        std::to_string(fields.size()));
        }
        NamedPoint p;
        p.id = parse_integer(fields[0]);
        p.pos = {parse_double(fields[1]), parse_double(fields[2])};
        pts.push_back(p);
    }
    if (!saw_header) {
        throw std::invalid_argument("missing header 'id,x,y'");
    }
    check_unique_ids(pts);
    return pts;
}

std::vector<NamedPoint> parse_points_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw std::invalid_argument("expected a JSON array of points");
    }
    std::vector<NamedPoint> pts;
    for (const auto& v : doc) {
        if (!v.is_object() || !v.contains("id") || !v.contains("x") || !v.contains("y")) {
            throw std::invalid_argument("expected {id, x, y} objects");
        }
        NamedPoint p;
        p.id = v.at("id").get<long long>();
        p.pos = {v.at("x").get<double>(), v.at("y").get<double>()};
        if (!is_finite(p.pos)) {
            throw std::invalid_argument("non-finite coordinates for id " +
                                        std::to_string(p.id));
        }
        pts.push_back(p);
    }
    check_unique_ids(pts);
    return pts;
}

std::vector<NamedPoint> read_points(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".csv") {
        std::ifstream in(path);
        if (!in) {
            throw IoError("cannot open " + path.string());
        }
        return parse_points_csv(in);
    }
    if (ext == ".json") {
        return parse_points_json(read_file(path));
    }
    throw std::invalid_argument("unsupported points format '" + ext + "'");
}

std::string stats_to_json(const SimStats& stats) {
    ordered_json doc;
    doc["n_points"] = stats.n_points;
    doc["trials"] = stats.trials;
    doc["seed"] = stats.seed;
    doc["avg_ng"] = stats.avg_ng;
    ordered_json hist = ordered_json::object();
    for (const auto& [value, count] : stats.histogram) {
        hist[std::to_string(value)] = count;
    }
    doc["histogram"] = std::move(hist);
    doc["ratio_r"] = stats.ratio_r;
    if (!stats.per_trial.empty()) {
        doc["per_trial"] = stats.per_trial;
    }
    return doc.dump(2) + "\n";
}

SimStats stats_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    SimStats stats;
    try {
        stats.n_points = doc.at("n_points").get<std::size_t>();
        stats.trials = doc.at("trials").get<std::size_t>();
        stats.seed = doc.at("seed").get<std::uint64_t>();
        stats.avg_ng = doc.at("avg_ng").get<double>();
        stats.ratio_r = doc.at("ratio_r").get<double>();
        for (const auto& [key, value] : doc.at("histogram").items()) {
            stats.histogram[static_cast<std::size_t>(parse_integer(key))] =
                value.get<std::size_t>();
        }
        if (doc.contains("per_trial")) {
            stats.per_trial = doc.at("per_trial").get<std::vector<std::size_t>>();
        }
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("bad stats document: ") + e.what());
    }
    return stats;
}

std::string stats_to_csv(const SimStats& stats) {
    std::string out = "n_points,trials,seed,avg_ng,ratio_r\n";
    out += std::to_string(stats.n_points) + "," + std::to_string(stats.trials) + "," +
           std::to_string(stats.seed) + "," + fmt(stats.avg_ng) + "," +
           fmt(stats.ratio_r) + "\n";
    out += "ng,count\n";
    for (const auto& [value, count] : stats.histogram) {
        out += std::to_string(value) + "," + std::to_string(count) + "\n";
    }
    return out;
}

void write_stats(const SimStats& stats, const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".json") {
        write_text_file(stats_to_json(stats), path);
    } else if (ext == ".csv") {
        write_text_file(stats_to_csv(stats), path);
    } else {
        throw std::invalid_argument("unsupported stats format '" + ext + "'");
    }
}

DemoScript parse_demo_script(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    DemoScript script;
    const ordered_json* events = nullptr;
    if (doc.is_array()) {
        events = &doc;
    } else if (doc.is_object()) {
        if (doc.contains("p1")) {
            script.p1 = parse_p1_field(doc.at("p1"));
        }
        if (doc.contains("capacity")) {
            script.capacity = doc.at("capacity").get<std::size_t>();
        }
        if (!doc.contains("events") || !doc.at("events").is_array()) {
            throw std::invalid_argument("script object needs an 'events' array");
        }
        events = &doc.at("events");
    } else {
        throw std::invalid_argument("script must be an array or an object");
    }
    for (std::size_t i = 0; i < events->size(); ++i) {
        script.events.push_back(parse_event((*events)[i], i));
    }
    return script;
}

DemoScript read_demo_script(const std::filesystem::path& path) {
    return parse_demo_script(read_file(path));
}

std::string demo_log_to_json(std::span<const DemoLogEntry> log) {
    ordered_json doc = ordered_json::array();
    for (const DemoLogEntry& entry : log) {
        ordered_json e;
        e["index"] = entry.index;
        e["op"] = entry.event.op == DemoEvent::Op::Insert ? "insert" : "delete";
        e["id"] = entry.event.id;
        if (entry.event.op == DemoEvent::Op::Insert) {
            e["x"] = entry.event.pos.x;
            e["y"] = entry.event.pos.y;
        }
        e["neighbors"] = entry.neighbors;
        e["recompute_needed"] = entry.recompute_needed;
        doc.push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

std::string cell_to_svg(const VoronoiCell& cell, std::span<const NamedPoint> pool) {
    const Rect& box = cell.box;
    const double margin = 40.0;
    const double scale = 640.0 / box.width();
    const double width = 640.0 + 2.0 * margin;
    const double height = box.height() * scale + 2.0 * margin;
    const auto sx = [&](double x) { return margin + (x - box.min.x) * scale; };
    const auto sy = [&](double y) { return margin + (box.max.y - y) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
        << fmt(height) << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "  <rect x=\"" << fmt(sx(box.min.x)) << "\" y=\"" << fmt(sy(box.max.y))
        << "\" width=\"" << fmt(box.width() * scale) << "\" height=\""
        << fmt(box.height() * scale)
        << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";

    const std::vector<Point> loop = cell.polygon();
    if (loop.size() >= 3) {
        svg << "  <polygon points=\"";
        for (const Point& p : loop) {
            svg << fmt(sx(p.x)) << "," << fmt(sy(p.y)) << " ";
        }
        svg << "\" fill=\"#000\" fill-opacity=\"0.06\" stroke=\"none\"/>\n";
    }

    const auto emit_polyline = [&](const std::vector<Point>& pts,
                                   const std::string& color) {
        if (pts.size() < 2) {
            if (!pts.empty()) {
                svg << "  <circle cx=\"" << fmt(sx(pts[0].x)) << "\" cy=\""
                    << fmt(sy(pts[0].y)) << "\" r=\"1.5\" fill=\"" << color
                    << "\"/>\n";
            }
            return;
        }
        svg << "  <polyline points=\"";
        for (const Point& p : pts) {
            svg << fmt(sx(p.x)) << "," << fmt(sy(p.y)) << " ";
        }
        svg << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    };

    for (const auto& edge : cell.box_edges) {
        emit_polyline(edge, "#444");
    }
    for (const CellArc& arc : cell.arcs) {
        emit_polyline(arc.points, color_for(arc.contributor));
    }

    for (std::size_t i = 0; i < pool.size(); ++i) {
        const int contributor_id = static_cast<int>(i) + 2;
        const std::string color = color_for(contributor_id);
        const Point p = pool[i].pos;
        if (!box.contains(p)) {
            continue;
        }
        svg << "  <circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y))
            << "\" r=\"4\" fill=\"" << color << "\"/>\n";
        svg << "  <text x=\"" << fmt(sx(p.x) + 6.0) << "\" y=\"" << fmt(sy(p.y) - 6.0)
            << "\" font-size=\"12\" fill=\"" << color << "\">" << pool[i].id
            << "</text>\n";
    }

    svg << "  <circle cx=\"" << fmt(sx(cell.owner.x)) << "\" cy=\""
        << fmt(sy(cell.owner.y))
        << "\" r=\"5\" fill=\"black\" stroke=\"white\" stroke-width=\"1.5\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << text;
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
}

}  // namespace flowvor

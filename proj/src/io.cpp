#include "gridfree/io.hpp"

#include <cctype>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gridfree/errors.hpp"

namespace gridfree::io {

namespace {

using nlohmann::json;

std::string iso8601_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json manifest_json(const RunManifest& m) {
    json j;
    j["command"] = m.command;
    j["arguments"] = json::object();
    for (const auto& [k, v] : m.arguments) j["arguments"][k] = v;
    if (m.seed) j["seed"] = *m.seed;
    j["tool_version"] = m.tool_version;
    j["timestamp"] = m.timestamp;
    return j;
}

}  // namespace

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> arguments,
                          std::optional<std::uint64_t> seed) {
    RunManifest m;
    m.command = command;
    m.arguments = std::move(arguments);
    m.seed = seed;
    m.timestamp = iso8601_now();
    return m;
}

PointSet read_points(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream iss(line);
        std::int64_t x, y;
        std::string rest;
        if (!(iss >> x >> y) || (iss >> rest)) {
            throw ParseError("parse error line " + std::to_string(line_no), line_no);
        }
        pts.push_back({x, y});
    }
    return PointSet(std::move(pts));
}

PointSet read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_points(in);
}

void write_points(std::ostream& out, const PointSet& ps) {
    for (const Point& p : ps.points()) out << p.x << ' ' << p.y << '\n';
}

void write_points_file(const std::string& path, const PointSet& ps) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_points(out, ps);
}

std::string construction_report_json(const RunManifest& m, const ConstructionReport& r) {
    json j;
    j["manifest"] = manifest_json(m);
    j["name"] = r.name;
    j["n"] = r.n;
    j["parameters"] = json::object();
    for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
    if (r.seed) j["seed"] = *r.seed;
    j["base_size"] = r.base_size;
    j["deleted"] = r.deleted;
    j["final_size"] = r.final_size;
    j["verified"] = r.verified;
    j["elapsed"] = r.elapsed.count();
    return j.dump(2) + "\n";
}

std::string search_report_json(const RunManifest& m, const SearchResult& r) {
    json j;
    j["manifest"] = manifest_json(m);
    j["n"] = r.n;
    j["class"] = r.cls.name();
    j["optimum"] = r.optimum;
    j["nodes_explored"] = r.nodes_explored;
    j["certified"] = r.certified;
    j["elapsed"] = r.elapsed.count();
    return j.dump(2) + "\n";
}

std::string count_report_json(const RunManifest& m, const CountReport& r) {
    json j;
    j["manifest"] = manifest_json(m);
    j["class"] = r.cls.name();
    j["count"] = r.count;
    j["method"] = r.method;
    j["elapsed"] = r.elapsed.count();
    return j.dump(2) + "\n";
}

std::string csv_line(const CsvRow& row) {
    std::ostringstream out;
    out << row.cls << ',' << row.n << ',';
    if (row.param_g) out << *row.param_g;
    out << ',';
    if (row.seed) out << *row.seed;
    out << ',' << row.size << ',' << (row.verified ? "true" : "false") << ',';
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", row.elapsed_ms);
    out << buf;
    return out.str();
}

void append_csv_row(const std::string& path, const CsvRow& row) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    if (fresh) out << kCsvHeader << '\n';
    out << csv_line(row) << '\n';
}

std::string render_svg(const PointSet& ps, std::int64_t n) {
    constexpr std::int64_t scale = 10, margin = 10, radius = 3;
    const std::int64_t span = (n - 1) * scale;
    const std::int64_t w = 2 * margin + span;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << w
        << "\" viewBox=\"0 0 " << w << ' ' << w << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << w
        << "\" fill=\"white\"/>\n";
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t c = margin + (i - 1) * scale;
        out << "  <line x1=\"" << c << "\" y1=\"" << margin << "\" x2=\"" << c << "\" y2=\""
            << margin + span << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "  <line x1=\"" << margin << "\" y1=\"" << c << "\" x2=\"" << margin + span
            << "\" y2=\"" << c << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    for (const Point& p : ps.points()) {
        const std::int64_t cx = margin + (p.x - 1) * scale;
        const std::int64_t cy = margin + (n - p.y) * scale;   // y axis points up
        out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << radius
            << "\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gridfree::io

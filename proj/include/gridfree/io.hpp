#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "gridfree/construct.hpp"
#include "gridfree/detect.hpp"
#include "gridfree/exact.hpp"
#include "gridfree/grid.hpp"

namespace gridfree::io {

inline constexpr const char* kToolVersion = "gridfree 0.1.0";

/// Invocation record embedded verbatim in every JSON report.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> arguments;
    std::optional<std::uint64_t> seed;
    std::string tool_version = kToolVersion;
    std::string timestamp;    // ISO-8601 UTC
};

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> arguments,
                          std::optional<std::uint64_t> seed = std::nullopt);

// --- point-set files: one "x y" per line, '#' comments ignored on read,
// --- canonical order on output.
PointSet read_points(std::istream& in);                  // throws ParseError
PointSet read_points_file(const std::string& path);      // throws ParseError / runtime_error
void write_points(std::ostream& out, const PointSet& ps);
void write_points_file(const std::string& path, const PointSet& ps);

// --- JSON reports (manifest embedded, snake_case fields).
std::string construction_report_json(const RunManifest& m, const ConstructionReport& r);
std::string search_report_json(const RunManifest& m, const SearchResult& r);
std::string count_report_json(const RunManifest& m, const CountReport& r);

// --- CSV; fixed schema class,n,param_g,seed,size,verified,elapsed_ms.
inline constexpr const char* kCsvHeader = "class,n,param_g,seed,size,verified,elapsed_ms";

struct CsvRow {
    std::string cls;
    std::int64_t n = 0;
    std::optional<std::int64_t> param_g;
    std::optional<std::uint64_t> seed;
    std::int64_t size = 0;
    bool verified = false;
    double elapsed_ms = 0.0;
};

std::string csv_line(const CsvRow& row);
/// Appends a row, writing the header first when the file is new or empty.
void append_csv_row(const std::string& path, const CsvRow& row);

/// Deterministic static SVG: one circle per point, grid lines, no styling
/// dependencies. n = drawing bound (points must lie in [1,n]^2).
std::string render_svg(const PointSet& ps, std::int64_t n);

}  // namespace gridfree::io

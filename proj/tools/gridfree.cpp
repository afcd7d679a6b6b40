#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridfree/additive.hpp"
#include "gridfree/construct.hpp"
#include "gridfree/detect.hpp"
#include "gridfree/errors.hpp"
#include "gridfree/exact.hpp"
#include "gridfree/io.hpp"

namespace {

using namespace gridfree;

constexpr int kExitFree = 0;
constexpr int kExitFound = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

ConfigClass parse_class_or_throw(const std::string& name) {
    const auto cls = ConfigClass::parse(name);
    if (!cls) throw std::invalid_argument("unknown configuration class: " + name);
    return *cls;
}

std::int64_t infer_bound(const PointSet& ps) {
    std::int64_t n = 1;
    for (const Point& p : ps.points()) n = std::max({n, p.x, p.y});
    return n;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::vector<std::int64_t> parse_n_list(const std::string& arg) {
    std::vector<std::int64_t> ns;
    std::string token;
    std::istringstream iss(arg);
    while (std::getline(iss, token, ',')) {
        if (token.empty()) continue;
        ns.push_back(std::stoll(token));
    }
    if (ns.empty()) throw std::invalid_argument("empty n-list");
    return ns;
}

int run_construct(const std::string& config, std::int64_t n, std::uint64_t seed,
                  std::int64_t g, const std::string& out_path,
                  const std::string& report_path, const std::string& csv_path) {
    const ConfigClass cls = parse_class_or_throw(config);
    std::optional<std::uint64_t> used_seed;
    Construction c;
    switch (cls.kind) {
        case ConfigKind::Parallelogram:
            if (cls.allow_degenerate) {
                throw std::invalid_argument(
                    "no constructor registered for parallelogram; use nd-parallelogram");
            }
            c = l_shape_nd_para_free(n);
            break;
        case ConfigKind::Rhombus:
            used_seed = seed;
            c = g == 1 ? rhombus_free_random(n, seed) : rhombus_free_b2g(n, g, seed);
            break;
        case ConfigKind::AxisKite:
            c = axis_kite_free(n);
            break;
        case ConfigKind::AxisSquare:
            c = axis_square_free(n);
            break;
        case ConfigKind::Square:
            c = square_free(n);
            break;
        case ConfigKind::AxisRectangle:
            c = rectangle_free(n);
            break;
        default:
            throw std::invalid_argument("no constructor registered for " + config);
    }
    io::write_points_file(out_path, c.points);

    std::map<std::string, std::string> args{{"config", config},
                                            {"n", std::to_string(n)},
                                            {"out", out_path}};
    if (cls.kind == ConfigKind::Rhombus) args["g"] = std::to_string(g);
    const io::RunManifest manifest = io::make_manifest("construct", args, used_seed);
    if (!report_path.empty()) {
        write_text_file(report_path, io::construction_report_json(manifest, c.report));
    }
    if (!csv_path.empty()) {
        io::CsvRow row;
        row.cls = config;
        row.n = n;
        if (cls.kind == ConfigKind::Rhombus) row.param_g = g;
        row.seed = used_seed;
        row.size = c.report.final_size;
        row.verified = c.report.verified;
        row.elapsed_ms = c.report.elapsed.count() * 1000.0;
        io::append_csv_row(csv_path, row);
    }
    std::cout << c.report.name << " n=" << n << " size=" << c.report.final_size
              << " verified=" << (c.report.verified ? "true" : "false") << "\n";
    return c.report.verified ? kExitFree : kExitGuard;
}

int run_verify(const std::string& config, const std::string& in_path) {
    const ConfigClass cls = parse_class_or_throw(config);
    const PointSet ps = io::read_points_file(in_path);
    const VerifyResult res = verify_free(ps, cls);
    if (res.free) {
        std::cout << "free\n";
        return kExitFree;
    }
    for (const Point& p : res.witness->pts) std::cout << p.x << ' ' << p.y << "\n";
    return kExitFound;
}

int run_count(const std::string& config, const std::string& in_path,
              const std::string& method, const std::string& csv_path,
              const std::string& report_path) {
    const ConfigClass cls = parse_class_or_throw(config);
    const PointSet ps = io::read_points_file(in_path);
    const CountMethod m = method == "brute" ? CountMethod::Brute : CountMethod::Fast;
    const CountReport rep = count_all(ps, cls, m);
    std::cout << rep.count << "\n";

    const io::RunManifest manifest = io::make_manifest(
        "count", {{"config", config}, {"in", in_path}, {"method", rep.method}});
    if (!report_path.empty()) {
        write_text_file(report_path, io::count_report_json(manifest, rep));
    }
    if (!csv_path.empty()) {
        io::CsvRow row;
        row.cls = config;
        row.n = infer_bound(ps);
        row.size = static_cast<std::int64_t>(rep.count);
        row.verified = true;
        row.elapsed_ms = rep.elapsed.count() * 1000.0;
        io::append_csv_row(csv_path, row);
    }
    return kExitFree;
}

int run_exact(const std::string& config, std::int64_t n, std::uint64_t budget,
              const std::string& out_path, const std::string& report_path,
              const std::string& csv_path) {
    const ConfigClass cls = parse_class_or_throw(config);
    const SearchResult res = max_free_subset_exact(n, cls, budget);
    std::cout << res.optimum << "\n";
    if (!out_path.empty()) io::write_points_file(out_path, res.witness);
    const io::RunManifest manifest = io::make_manifest(
        "exact",
        {{"config", config}, {"n", std::to_string(n)}, {"budget", std::to_string(budget)}});
    if (!report_path.empty()) {
        write_text_file(report_path, io::search_report_json(manifest, res));
    }
    if (!csv_path.empty()) {
        io::CsvRow row;
        row.cls = config;
        row.n = n;
        row.size = res.optimum;
        row.verified = res.certified;
        row.elapsed_ms = res.elapsed.count() * 1000.0;
        io::append_csv_row(csv_path, row);
    }
    return kExitFree;
}

int run_table(const std::string& config, const std::string& n_list,
              std::uint64_t budget, const std::string& csv_path) {
    const ConfigClass cls = parse_class_or_throw(config);
    for (const std::int64_t n : parse_n_list(n_list)) {
        SearchResult res;
        try {
            res = max_free_subset_exact(n, cls, budget);
        } catch (const BudgetExhausted& b) {
            res.n = n;
            res.cls = cls;
            res.optimum = b.best_size;
            res.witness = PointSet(b.best_points, GridSpec{n});
            res.nodes_explored = b.nodes;
            res.certified = false;
        }
        std::cout << "n=" << n << " optimum=" << res.optimum
                  << " certified=" << (res.certified ? "true" : "false")
                  << " nodes=" << res.nodes_explored << "\n";
        if (!csv_path.empty()) {
            io::CsvRow row;
            row.cls = config;
            row.n = n;
            row.size = res.optimum;
            row.verified = res.certified;
            row.elapsed_ms = res.elapsed.count() * 1000.0;
            io::append_csv_row(csv_path, row);
        }
    }
    return kExitFree;
}

int run_pyth(std::int64_t n, bool list, const std::string& csv_path) {
    if (list) {
        const PythResult res = pythagorean_pairs(n);
        for (const PythPair& p : res.pairs) {
            std::cout << p.a << ' ' << p.b << ' ' << p.c << "\n";
        }
        std::cout << res.count << "\n";
        return kExitFree;
    }
    const std::uint64_t count = pythagorean_count(n);
    std::cout << count << "\n";
    if (!csv_path.empty()) {
        io::CsvRow row;
        row.cls = "pythagorean-pairs";
        row.n = n;
        row.size = static_cast<std::int64_t>(count);
        row.verified = true;
        io::append_csv_row(csv_path, row);
    }
    return kExitFree;
}

int run_render(const std::string& in_path, const std::string& svg_path, std::int64_t n) {
    const PointSet ps = io::read_points_file(in_path);
    const std::int64_t bound = n > 0 ? n : infer_bound(ps);
    for (const Point& p : ps.points()) {
        if (!GridSpec{bound}.contains(p)) {
            throw std::invalid_argument("point outside the requested drawing bound");
        }
    }
    write_text_file(svg_path, io::render_svg(ps, bound));
    return kExitFree;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forbidden-configuration toolkit for the n x n grid"};
    app.require_subcommand(1);

    std::string config, in_path, out_path, report_path, csv_path, svg_path, method = "fast";
    std::string n_list;
    std::int64_t n = 0, g = 1;
    std::uint64_t seed = 0, budget = kDefaultNodeBudget;
    bool list_pairs = false;

    auto* construct = app.add_subcommand("construct", "build a configuration-free point set");
    construct->add_option("--config", config)->required();
    construct->add_option("--n", n)->required();
    construct->add_option("--seed", seed);
    construct->add_option("--g", g);
    construct->add_option("--out", out_path)->required();
    construct->add_option("--report", report_path);
    construct->add_option("--csv", csv_path);

    auto* verify = app.add_subcommand("verify", "check a point-set file for a configuration");
    verify->add_option("--config", config)->required();
    verify->add_option("--in", in_path)->required();

    auto* count = app.add_subcommand("count", "count configurations in a point-set file");
    count->add_option("--config", config)->required();
    count->add_option("--in", in_path)->required();
    count->add_option("--method", method)->check(CLI::IsMember({"fast", "brute"}));
    count->add_option("--csv", csv_path);
    count->add_option("--report", report_path);

    auto* exact = app.add_subcommand("exact", "certified maximum free subset of [n]^2");
    exact->add_option("--config", config)->required();
    exact->add_option("--n", n)->required();
    exact->add_option("--budget", budget);
    exact->add_option("--out", out_path);
    exact->add_option("--report", report_path);
    exact->add_option("--csv", csv_path);

    auto* table = app.add_subcommand("table", "exact optima over a list of n values");
    table->add_option("--config", config)->required();
    table->add_option("--n-list", n_list)->required();
    table->add_option("--budget", budget);
    table->add_option("--csv", csv_path);

    auto* pyth = app.add_subcommand("pyth", "ordered Pythagorean leg pairs below n");
    pyth->add_option("--n", n)->required();
    pyth->add_flag("--list", list_pairs);
    pyth->add_option("--csv", csv_path);

    auto* render = app.add_subcommand("render", "static SVG rendering of a point-set file");
    render->add_option("--in", in_path)->required();
    render->add_option("--svg", svg_path)->required();
    render->add_option("--n", n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (construct->parsed())
            return run_construct(config, n, seed, g, out_path, report_path, csv_path);
        if (verify->parsed()) return run_verify(config, in_path);
        if (count->parsed())
            return run_count(config, in_path, method, csv_path, report_path);
        if (exact->parsed())
            return run_exact(config, n, budget, out_path, report_path, csv_path);
        if (table->parsed()) return run_table(config, n_list, budget, csv_path);
        if (pyth->parsed()) return run_pyth(n, list_pairs, csv_path);
        if (render->parsed()) return run_render(in_path, svg_path, n);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const BudgetExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitGuard;
    } catch (const GuardExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

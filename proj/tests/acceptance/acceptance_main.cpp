// Acceptance suite: runs every acceptance check at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
// Usage: gridfree_acceptance [path-to-gridfree-cli]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridfree/additive.hpp"
#include "gridfree/construct.hpp"
#include "gridfree/detect.hpp"
#include "gridfree/exact.hpp"
#include "gridfree/io.hpp"

using namespace gridfree;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PointSet random_subset_of_grid(std::mt19937_64& rng, std::int64_t n, std::size_t size) {
    std::uniform_int_distribution<std::int64_t> coord(1, n);
    std::vector<Point> pts;
    while (pts.size() < size) {
        pts.push_back({coord(rng), coord(rng)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }
    return PointSet(std::move(pts));
}

// 1. exact nd-parallelogram optima are 2n-1 for n = 2..5, each under 60 s
void criterion1() {
    bool pass = true;
    std::ostringstream detail;
    detail << "f_nd_para(n)=2n-1 exact:";
    for (std::int64_t n = 2; n <= 5; ++n) {
        const auto t0 = Clock::now();
        const SearchResult res = max_free_subset_exact(n, ConfigClass::parallelogram(false));
        const double secs = seconds_since(t0);
        detail << " n=" << n << "->" << res.optimum << " (" << std::fixed
               << std::setprecision(1) << secs << "s)";
        if (!res.certified || res.optimum != 2 * n - 1 || secs >= 60.0) pass = false;
    }
    report(1, pass, detail.str());
}

// 2. L-shape size equals the certified optimum for n=2..5; verifies at n=2000 in <10 s
void criterion2() {
    bool pass = true;
    std::ostringstream detail;
    detail << "construction/optimum agreement:";
    for (std::int64_t n = 2; n <= 5; ++n) {
        const Construction c = l_shape_nd_para_free(n);
        const SearchResult res = max_free_subset_exact(n, ConfigClass::parallelogram(false));
        if (c.report.final_size != res.optimum || !c.report.verified) pass = false;
        detail << " n=" << n << ":" << c.report.final_size << "=" << res.optimum;
    }
    const auto t0 = Clock::now();
    const Construction big = l_shape_nd_para_free(2000);
    const double secs = seconds_since(t0);
    detail << " n=2000 verified=" << (big.report.verified ? "true" : "false") << " in "
           << std::fixed << std::setprecision(2) << secs << "s";
    if (!big.report.verified || secs >= 10.0) pass = false;
    report(2, pass, detail.str());
}

// 3. rectangle_free meets floor((n/2)(1+sqrt(4n-3))) at n in {7,13,21,31}
void criterion3() {
    bool pass = true;
    std::ostringstream detail;
    detail << "Zarankiewicz sharpness:";
    const std::vector<std::pair<std::int64_t, std::int64_t>> expect{
        {7, 21}, {13, 52}, {21, 105}, {31, 186}};
    for (const auto& [n, size] : expect) {
        const Construction c = rectangle_free(n);
        const auto bound = static_cast<std::int64_t>(
            std::floor(n / 2.0 * (1.0 + std::sqrt(4.0 * n - 3.0))));
        detail << " n=" << n << ":" << c.report.final_size;
        if (c.report.final_size != size || c.report.final_size != bound ||
            !c.report.verified) {
            pass = false;
        }
    }
    report(3, pass, detail.str());
}

// 4. singer_difference_set perfect for every prime power q <= 32, under 60 s
void criterion4() {
    const auto t0 = Clock::now();
    bool pass = true;
    std::ostringstream detail;
    int checked = 0;
    for (std::int64_t q = 2; q <= 32; ++q) {
        if (!is_prime_power(q)) continue;
        const ResidueSet d = singer_difference_set(q);
        const std::int64_t m = q * q + q + 1;
        ++checked;
        if (static_cast<std::int64_t>(d.elements.size()) != q + 1) pass = false;
        std::vector<int> cover(static_cast<std::size_t>(m), 0);
        for (std::int64_t a : d.elements)
            for (std::int64_t b : d.elements)
                if (a != b) ++cover[((a - b) % m + m) % m];
        for (std::int64_t r = 1; r < m; ++r) {
            if (cover[r] != 1) pass = false;
        }
    }
    const double secs = seconds_since(t0);
    detail << checked << " prime powers q<=32 perfect, " << std::fixed
           << std::setprecision(1) << secs << "s";
    if (secs >= 60.0) pass = false;
    report(4, pass, detail.str());
}

// 5. 2D-Sidon equivalence on 1000 random subsets of [1,20]^2
void criterion5() {
    std::mt19937_64 rng(50505);
    std::uniform_int_distribution<std::size_t> size_dist(5, 40);
    bool pass = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const PointSet ps = random_subset_of_grid(rng, 20, size_dist(rng));
        std::set<std::pair<std::int64_t, std::int64_t>> sums;
        bool sidon = true;
        const auto& pts = ps.points();
        for (std::size_t i = 0; i < pts.size() && sidon; ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (!sums.insert({pts[i].x + pts[j].x, pts[i].y + pts[j].y}).second) {
                    sidon = false;
                    break;
                }
        if (verify_free(ps, ConfigClass::parallelogram(true)).free != sidon) {
            pass = false;
            break;
        }
    }
    report(5, pass, "verify_free(parallelogram) == pairwise-sum distinctness on 1000 sets");
}

// 6. fast count == brute count for 200 random sets and every class, < 5 min
void criterion6() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(60606);
    std::uniform_int_distribution<std::size_t> size_dist(10, 60);
    bool pass = true;
    std::string bad;
    for (int trial = 0; trial < 200 && pass; ++trial) {
        const PointSet ps = random_subset_of_grid(rng, 30, size_dist(rng));
        for (const ConfigClass& cls : ConfigClass::all_variants()) {
            const auto fast = count_all(ps, cls, CountMethod::Fast);
            const auto brute = count_all(ps, cls, CountMethod::Brute);
            if (fast.count != brute.count) {
                pass = false;
                bad = cls.name() + " trial " + std::to_string(trial);
                break;
            }
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << "counting oracle suite on 200 sets x " << ConfigClass::all_variants().size()
           << " classes, " << std::fixed << std::setprecision(1) << secs << "s";
    if (!bad.empty()) detail << " first mismatch: " << bad;
    if (secs >= 300.0) pass = false;
    report(6, pass, detail.str());
}

// 7. pythagorean counts: brute agreement to n=500; bounded ratio band to 1e5
void criterion7() {
    bool pass = true;
    for (std::int64_t n = 1; n <= 500; ++n) {
        if (pythagorean_count(n) != pythagorean_count_brute(n)) {
            pass = false;
            break;
        }
    }
    double rmin = 1e300, rmax = 0;
    for (std::int64_t n : {1000, 2000, 5000, 10000, 20000, 50000, 100000}) {
        const double r = static_cast<double>(pythagorean_count(n)) /
                         (static_cast<double>(n) * std::log(static_cast<double>(n)));
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    std::ostringstream detail;
    detail << "pythagorean counts match brute to n=500; ratio band [" << std::fixed
           << std::setprecision(4) << rmin << ", " << rmax << "], spread "
           << std::setprecision(2) << rmax / rmin << "x";
    if (rmax / rmin > 3.0) pass = false;
    report(7, pass, detail.str());
}

// 8. rhombus-free scaling: slope of log median size vs log n in [1.25, 1.40]
void criterion8() {
    const auto t0 = Clock::now();
    bool pass = true;
    std::ostringstream detail;
    std::vector<double> xs, ys;
    detail << "rhombus-free scaling medians:";
    for (std::int64_t n : {64, 128, 256, 512, 1024}) {
        std::vector<std::int64_t> sizes;
        for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
            const Construction c = rhombus_free_random(n, seed);
            if (!c.report.verified) pass = false;
            sizes.push_back(c.report.final_size);
        }
        std::sort(sizes.begin(), sizes.end());
        const double median = static_cast<double>(sizes[1]);
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(median));
        detail << " n=" << n << ":" << sizes[1];
    }
    // least-squares slope
    const std::size_t k = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const double secs = seconds_since(t0);
    detail << " slope=" << std::fixed << std::setprecision(3) << slope << " ("
           << std::setprecision(0) << secs << "s)";
    if (slope < 1.25 || slope > 1.40 || secs >= 900.0) pass = false;
    report(8, pass, detail.str());
}

// 9. g-insensitivity at n=256: medians for g in {1,2,4} within a factor 2
void criterion9() {
    bool pass = true;
    std::ostringstream detail;
    detail << "g-insensitivity at n=256:";
    std::vector<double> medians;
    for (std::int64_t g : {1, 2, 4}) {
        std::vector<std::int64_t> sizes;
        for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
            const Construction c = rhombus_free_b2g(256, g, seed);
            if (!c.report.verified) pass = false;
            sizes.push_back(c.report.final_size);
        }
        std::sort(sizes.begin(), sizes.end());
        medians.push_back(static_cast<double>(sizes[1]));
        detail << " g=" << g << ":" << sizes[1];
    }
    const auto [lo, hi] = std::minmax_element(medians.begin(), medians.end());
    detail << " ratio=" << std::fixed << std::setprecision(2) << *hi / *lo;
    if (*hi / *lo > 2.0) pass = false;
    report(9, pass, detail.str());
}

// 10. kite/square constructions verified at scale, sizes reported
void criterion10() {
    bool pass = true;
    std::ostringstream detail;
    for (std::int64_t n : {8, 64, 256, 512}) {
        const Construction c = axis_kite_free(n);
        const auto base = std::stoll(c.report.parameters.at("ap_free_size"));
        if (!c.report.verified || c.report.final_size != base * base) pass = false;
        detail << "kite n=" << n << ":" << c.report.final_size << " ";
    }
    for (std::int64_t n : {16, 64, 256, 512}) {
        const Construction c = axis_square_free(n);
        const auto base = std::stoll(c.report.parameters.at("ap_free_size"));
        if (!c.report.verified || c.report.final_size != base * base) pass = false;
        detail << "axsq n=" << n << ":" << c.report.final_size << " ";
    }
    for (std::int64_t n : {50, 128, 256}) {
        const Construction c = square_free(n);
        const auto q = std::stoll(c.report.parameters.at("q"));
        const auto m = std::stoll(c.report.parameters.at("m"));
        const auto p1 = std::stoll(c.report.parameters.at("axis_free_base"));
        if (!c.report.verified) pass = false;
        if (c.report.final_size * m < p1 * (q + 1)) pass = false;   // averaging bound
        detail << "sq n=" << n << ":" << c.report.final_size << " ";
    }
    report(10, pass, detail.str());
}

// 11. certified optima never exceed the stated upper bounds
void criterion11() {
    bool pass = true;
    std::ostringstream detail;
    detail << "upper-bound consistency:";
    for (std::int64_t n = 2; n <= 5; ++n) {
        const SearchResult r = max_free_subset_exact(n, ConfigClass::collinear(3));
        detail << " 3coll(" << n << ")=" << r.optimum;
        if (!r.certified || r.optimum > 2 * n) pass = false;
    }
    for (std::int64_t n = 2; n <= 4; ++n) {
        const SearchResult r = max_free_subset_exact(n, ConfigClass::collinear(4));
        detail << " 4coll(" << n << ")=" << r.optimum;
        if (!r.certified || r.optimum > 3 * n) pass = false;
    }
    for (std::int64_t n = 2; n <= 4; ++n) {
        const SearchResult r = max_free_subset_exact(n, ConfigClass::concyclic4());
        detail << " cyc(" << n << ")=" << r.optimum;
        if (!r.certified || static_cast<double>(r.optimum) > 2.5 * n - 1.5) pass = false;
    }
    report(11, pass, detail.str());
}

// 12. determinism: seeded commands re-run byte-identically (10 spot checks)
void criterion12(const std::string& cli) {
    namespace fs = std::filesystem;
    bool pass = true;
    const fs::path dir = fs::temp_directory_path() / "gridfree_acceptance";
    fs::create_directories(dir);

    auto file_bytes = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    int checks = 0;
    for (const std::string& args : {
             std::string("construct --config rhombus --n 64 --seed 1"),
             std::string("construct --config rhombus --n 64 --seed 2"),
             std::string("construct --config rhombus --n 100 --seed 3"),
             std::string("construct --config rhombus --n 128 --seed 4 --g 2"),
             std::string("construct --config rhombus --n 96 --seed 5 --g 4"),
             std::string("construct --config nd-parallelogram --n 50"),
             std::string("construct --config axis-kite --n 40"),
             std::string("construct --config axis-square --n 40"),
             std::string("construct --config square --n 60"),
             std::string("construct --config axis-rectangle --n 21"),
         }) {
        ++checks;
        const fs::path out1 = dir / ("a" + std::to_string(checks) + ".pts");
        const fs::path out2 = dir / ("b" + std::to_string(checks) + ".pts");
        if (!cli.empty()) {
            const std::string cmd1 =
                cli + " " + args + " --out " + out1.string() + " >/dev/null 2>&1";
            const std::string cmd2 =
                cli + " " + args + " --out " + out2.string() + " >/dev/null 2>&1";
            if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0) {
                pass = false;
                break;
            }
            if (file_bytes(out1) != file_bytes(out2)) {
                pass = false;
                break;
            }
        }
    }
    std::ostringstream detail;
    detail << checks << " seeded CLI spot checks byte-identical";
    if (cli.empty()) {
        detail << " (no CLI path given)";
        pass = false;
    }
    report(12, pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12(cli);
    if (failures == 0) {
        std::printf("all 12 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}

// Command-line driver: runs the verification suites at the requested
// deformation parameters and cutoff, emits a deterministic JSON or CSV
// report, and signals the outcome through the exit code:
//   0  all checks passed
//   1  configuration error (bad flags, or tail bounds exceed budget)
//   2  at least one numeric check failed
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "q4s/basis.hpp"
#include "q4s/report.hpp"
#include "q4s/suites.hpp"

namespace {

int thread_budget() {
    unsigned n = 0;
    if (const char* env = std::getenv("Q4S_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0)
            throw std::invalid_argument("Q4S_THREADS must be a non-negative integer");
        n = static_cast<unsigned>(v);
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification suites for the q-deformed 4-sphere spectral triple"};

    std::string suite = "all";
    std::vector<double> qs;
    std::string cutoff_text;
    double tol = 0.0;
    std::string output_path;
    std::string format = "json";

    app.add_option("suite", suite, "Suite to run")
        ->check(CLI::IsMember(
            {"relations", "idempotent", "pairing", "zeta", "real", "approx", "all"}));
    app.add_option("--q", qs, "Deformation parameter in (0,1); repeatable")->expected(-1);
    app.add_option("--cutoff", cutoff_text,
                   "Spinor-tower cutoff l_max as a half-integer, e.g. 25/2 or 12.5");
    app.add_option("--tol", tol, "Override the pinned two-sided tolerances");
    app.add_option("--output", output_path, "Write the report to this file instead of stdout");
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    q4s::SuiteConfig cfg;
    int threads = 1;
    try {
        if (!qs.empty()) cfg.qs = qs;
        std::sort(cfg.qs.begin(), cfg.qs.end());
        cfg.qs.erase(std::unique(cfg.qs.begin(), cfg.qs.end()), cfg.qs.end());
        if (!cutoff_text.empty()) cfg.two_L = q4s::parse_half_integer(cutoff_text);
        if (tol < 0.0) throw std::invalid_argument("--tol must be non-negative");
        cfg.tol_override = tol;
        q4s::validate_config(cfg);
        threads = thread_budget();
    } catch (const std::exception& ex) {
        std::cerr << "q4s_verify: configuration error: " << ex.what() << "\n";
        return 1;
    }

    std::vector<std::pair<std::string, q4s::SuiteFn>> selected;
    for (const auto& [name, fn] : q4s::suite_registry())
        if (suite == "all" || suite == name) selected.emplace_back(name, fn);

    // Run the selected suites concurrently (bounded by Q4S_THREADS, 0 = auto);
    // the post-merge sort makes the report independent of completion order.
    std::vector<std::vector<q4s::Record>> per_suite(selected.size());
    std::vector<std::string> errors(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            try {
                per_suite[i] = selected[i].second(cfg);
            } catch (const std::exception& ex) {
                errors[i] = ex.what();
            }
        }
    };
    {
        std::vector<std::thread> pool;
        const std::size_t n =
            std::min<std::size_t>(static_cast<std::size_t>(threads), selected.size());
        for (std::size_t t = 0; t + 1 < n; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < selected.size(); ++i)
        if (!errors[i].empty()) {
            std::cerr << "q4s_verify: suite '" << selected[i].first << "' failed: " << errors[i]
                      << "\n";
            return 1;
        }

    std::vector<q4s::Record> records;
    for (auto& rs : per_suite) records.insert(records.end(), rs.begin(), rs.end());
    q4s::sort_records(records);

    std::ostringstream body;
    if (format == "csv") q4s::emit_csv(records, body);
    else q4s::emit_json(records, body);

    if (output_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "q4s_verify: cannot open output file: " << output_path << "\n";
            return 1;
        }
        out << body.str();
    }

    std::size_t failed = 0;
    for (const auto& r : records)
        if (!r.pass) ++failed;
    std::cerr << "q4s_verify: " << records.size() - failed << "/" << records.size()
              << " checks passed\n";
    return failed == 0 ? 0 : 2;
}

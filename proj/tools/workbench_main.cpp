#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "fluxcoh/serialize.hpp"
#include "fluxcoh/suites.hpp"

using namespace fluxcoh;

namespace {

int run_command(int genus, const std::vector<std::string>& symbols, std::uint64_t seed, int cases,
                std::vector<std::string> suites, const std::string& format,
                const std::string& out_path, bool timings) {
    SuiteConfig cfg;
    cfg.genus = genus;
    if (!symbols.empty()) cfg.symbols = symbols;
    cfg.seed = seed;
    cfg.cases = cases;

    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
    std::sort(suites.begin(), suites.end());

    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<CheckResult, long>> checks;
    for (const auto& name : suites) {
        auto s0 = std::chrono::steady_clock::now();
        for (auto& r : run_suite(name, cfg)) {
            auto s1 = std::chrono::steady_clock::now();
            long ms = std::chrono::duration_cast<std::chrono::milliseconds>(s1 - s0).count();
            checks.push_back({std::move(r), ms});
            s0 = s1;
        }
    }
    std::sort(checks.begin(), checks.end(),
              [](const auto& a, const auto& b) { return a.first.name < b.first.name; });
    int passed = 0, failed = 0;
    for (const auto& [c, ms] : checks) (c.pass ? passed : failed)++;
    long total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        os = &file;
    }

    if (format == "json") {
        Json j;
        j["config"] = {{"genus", cfg.genus},
                       {"symbols", cfg.symbols},
                       {"seed", cfg.seed},
                       {"cases", cfg.cases},
                       {"suites", suites}};
        Json arr = Json::array();
        for (const auto& [c, ms] : checks) {
            Json jc;
            jc["name"] = c.name;
            jc["identity"] = c.identity;
            jc["status"] = c.pass ? "pass" : "fail";
            jc["expected"] = c.expected;
            jc["actual"] = c.actual;
            if (timings) jc["elapsed_ms"] = ms;
            arr.push_back(jc);
        }
        j["checks"] = arr;
        j["summary"] = {{"passed", passed}, {"failed", failed}};
        if (timings) j["summary"]["elapsed_ms"] = total_ms;
        *os << j.dump(2) << "\n";
    } else {
        for (const auto& [c, ms] : checks) {
            *os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (timings) *os << "  [" << ms << " ms]";
            *os << "\n";
            if (!c.pass)
                *os << "      " << c.identity << "\n      expected: " << c.expected
                    << "\n      actual:   " << c.actual << "\n";
        }
        *os << passed << " passed, " << failed << " failed";
        if (timings) *os << " (" << total_ms << " ms)";
        *os << "\n";
    }
    return failed == 0 ? 0 : 1;
}

int eval_command(const std::string& path, const std::string& format,
                 const std::string& out_path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open input file: " << path << "\n";
        return 2;
    }
    Json j = Json::parse(in);
    int genus = j.at("genus").get<int>();
    NamedCocycle f = lookup_cocycle(genus, j.at("cocycle").get<std::string>());
    Json jchain = j.at("chain");
    if (!jchain.contains("genus")) jchain["genus"] = genus;
    BarChain chain = parse_chain(jchain);

    bool closed = chain.degree() >= 1 ? boundary(chain).is_zero() : true;
    std::string value =
        f.symmetric_valued ? f.symmetric.evaluate(chain).str() : f.scalar.evaluate(chain).str();

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        os = &file;
    }
    if (format == "json") {
        Json rep;
        rep["cocycle"] = f.name;
        rep["value"] = value;
        rep["certificate"] = {{"closed", closed}};
        *os << rep.dump(2) << "\n";
    } else {
        *os << value << "\n";
        if (!closed) *os << "warning: chain not closed\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic workbench: verification suites and cocycle evaluation"};
    app.require_subcommand(1);

    int genus = 2;
    std::vector<std::string> symbols;
    std::uint64_t seed = 7;
    int cases = 100;
    std::vector<std::string> suites;
    std::string format = "text";
    std::string out_path;
    bool timings = false;

    CLI::App* run = app.add_subcommand("run", "run verification suites");
    run->add_option("--genus", genus, "surface genus (>= 2)");
    run->add_option("--symbols", symbols, "symbol names for the coefficient ring")->delimiter(',');
    run->add_option("--seed", seed, "random seed");
    run->add_option("--cases", cases, "random cases per property");
    run->add_option("--suite", suites, "suite names (default: all)")->delimiter(',');
    run->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_option("--out", out_path, "write the report to a file");
    run->add_flag("--timings", timings, "include elapsed times in the report");

    std::string eval_path;
    CLI::App* ev = app.add_subcommand("eval", "evaluate a registered cochain on a chain");
    ev->add_option("file", eval_path, "JSON description of cocycle and chain")->required();
    ev->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    ev->add_option("--out", out_path, "write the result to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_command(genus, symbols, seed, cases, suites, format, out_path, timings);
        return eval_command(eval_path, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

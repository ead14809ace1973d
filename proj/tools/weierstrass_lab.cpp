// weierstrass-lab: batch front door for Weierstrass-cycle computations on
// plane curves. `weierstrass-lab run job.toml [--json out.json]` runs the
// tasks a job file asks for and prints a deterministic report.

#include "wlab/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass divisors, cycles and flat limits on plane curves"};
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand("run", "run a job file");
    std::string job_path;
    std::string json_path;
    int precision_cap = 64;
    bool verbose = false;
    run->add_option("job-file", job_path, "job file (TOML-compatible)")->required();
    run->add_option("--json", json_path, "write the machine-readable report here ('-' = stdout)");
    run->add_option("--precision-cap", precision_cap, "jet precision cap for R_b computations");
    run->add_flag("--verbose", verbose, "print per-task timings to stderr");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(job_path);
    if (!in) {
        std::cerr << "cannot open " << job_path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    wlab::ParseOutcome parsed = wlab::parse_job(buffer.str());
    if (!parsed.spec) {
        for (const auto& e : parsed.errors) std::cerr << job_path << ": " << e << "\n";
        return 2;
    }

    wlab::RunLimits limits;
    limits.precision_cap = precision_cap;
    wlab::Report report = wlab::run_job(*parsed.spec, limits);

    std::cout << report.human();
    if (verbose)
        for (const auto& t : report.tasks)
            std::cerr << t.name << ": " << t.millis << " ms\n";

    if (!json_path.empty()) {
        if (json_path == "-") {
            std::cout << report.json();
        } else {
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "cannot write " << json_path << "\n";
                return 2;
            }
            out << report.json();
        }
    }
    return report.all_ok ? 0 : 1;
}

#pragma once

#include "wlab/birational.hpp"
#include "wlab/degeneration.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wlab {

// Job description, as parsed from the TOML-like job file. Polynomial and
// point literals stay as text here; run_job does the mathematical parsing so
// a bad polynomial fails its own task rather than the whole file.
struct SystemSpec {
    std::string name;
    int twist = 0;
    std::vector<std::string> ideal;
    std::vector<std::string> sections;
    std::vector<std::string> queries;
    int line = 0;
};

struct FiberSpec {
    std::string point;
    std::vector<std::string> params;
    std::string type; // "node" | "cusp"
    int line = 0;
};

struct ParamSpec {
    std::vector<std::string> maps; // three binary forms in (s, t)
    std::vector<FiberSpec> fibers;
    int line = 0;
};

struct FamilySpec {
    std::string name;
    std::string curve_t;
    std::vector<std::string> ideal_t;
    std::vector<std::string> sections_t;
    std::vector<std::string> samples; // values substituted for the constant c
    int line = 0;
};

struct JobSpec {
    std::vector<std::string> variables; // the three plane coordinates, in order
    std::string curve;
    std::vector<std::string> components;
    std::vector<SystemSpec> systems;
    std::optional<ParamSpec> parameterization;
    std::vector<FamilySpec> families;
    std::vector<std::string> tasks;
};

struct ParseOutcome {
    std::optional<JobSpec> spec;
    std::vector<std::string> errors; // "line N: message"
};

ParseOutcome parse_job(const std::string& text);

struct TaskResult {
    std::string name;   // task plus target, e.g. "wronskian(system1)"
    std::string status; // "ok" | "fail" | "error"
    std::map<std::string, std::vector<std::string>> ideals;
    std::map<std::string, std::string> cycles;
    std::string verdict; // empty when the task has none
    std::vector<std::string> lines;
    double millis = 0;
};

struct RunLimits {
    int precision_cap = 64; // jet precision for R_b computations
};

struct Report {
    std::vector<TaskResult> tasks;
    bool all_ok = true;
    std::string human() const; // deterministic, timing-free text
    std::string json() const;  // deterministic machine document
};

Report run_job(const JobSpec& spec, const RunLimits& limits = {});

} // namespace wlab

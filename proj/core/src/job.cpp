#include "wlab/job.hpp"

#include "wlab/errors.hpp"
#include "wlab/parser.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace wlab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') in_string = !in_string;
        if (s[i] == '#' && !in_string) return s.substr(0, i);
    }
    return s;
}

struct KeyValue {
    std::string key;
    std::vector<std::string> items;
    bool is_array = false;
    int line = 0;
};

struct Section {
    std::string path;
    bool is_array_elem = false;
    int line = 0;
    std::vector<KeyValue> kvs;
};

class JobErrors {
public:
    void add(int line, const std::string& msg) {
        std::ostringstream os;
        os << "line " << line << ": " << msg;
        errors.push_back(os.str());
    }
    std::vector<std::string> errors;
};

std::optional<std::string> unquote(const std::string& raw) {
    if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"')
        return raw.substr(1, raw.size() - 2);
    return std::nullopt;
}

// scalars: quoted strings, or bare number/rational tokens
std::optional<std::string> scalar(const std::string& raw) {
    if (auto s = unquote(raw)) return s;
    if (raw.empty()) return std::nullopt;
    for (char c : raw)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            return std::nullopt;
    return raw;
}

std::vector<Section> lex_sections(const std::string& text, JobErrors& err) {
    std::vector<Section> sections;
    sections.push_back({"", false, 0, {}});
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            bool array = body.size() >= 2 && body[1] == '[';
            std::string close = array ? "]]" : "]";
            if (body.size() < 2 + close.size() || body.substr(body.size() - close.size()) != close) {
                err.add(lineno, "malformed section header");
                continue;
            }
            std::string path =
                trim(body.substr(array ? 2 : 1, body.size() - (array ? 4 : 2)));
            if (path.empty()) {
                err.add(lineno, "empty section name");
                continue;
            }
            sections.push_back({path, array, lineno, {}});
            continue;
        }
        std::size_t eq = body.find('=');
        if (eq == std::string::npos) {
            err.add(lineno, "expected 'key = value'");
            continue;
        }
        KeyValue kv;
        kv.key = trim(body.substr(0, eq));
        kv.line = lineno;
        std::string value = trim(body.substr(eq + 1));
        if (kv.key.empty() || value.empty()) {
            err.add(lineno, "expected 'key = value'");
            continue;
        }
        if (value.front() == '[') {
            if (value.back() != ']') {
                err.add(lineno, "arrays must close on the same line");
                continue;
            }
            kv.is_array = true;
            std::string inner = value.substr(1, value.size() - 2);
            std::string item;
            bool in_string = false;
            auto flush = [&](bool final_item) {
                std::string t = trim(item);
                item.clear();
                if (t.empty()) {
                    if (!final_item) err.add(lineno, "empty array item");
                    return;
                }
                if (auto s = scalar(t))
                    kv.items.push_back(*s);
                else
                    err.add(lineno, "bad array item '" + t + "'");
            };
            bool any = false;
            for (char c : inner) {
                if (c == '"') in_string = !in_string;
                if (c == ',' && !in_string) {
                    flush(false);
                    any = true;
                } else {
                    item.push_back(c);
                }
            }
            if (!trim(item).empty() || any) flush(true);
        } else {
            if (auto s = scalar(value))
                kv.items.push_back(*s);
            else {
                err.add(lineno, "bad value '" + value + "'");
                continue;
            }
        }
        sections.back().kvs.push_back(std::move(kv));
    }
    return sections;
}

const std::vector<std::string> known_tasks{"wronskian", "weierstrass-cycle", "intrinsic",
                                           "birational", "limit", "checks"};

bool valid_task(const std::string& t) {
    for (const auto& k : known_tasks)
        if (t == k) return true;
    if (t.rfind("defect:", 0) == 0) {
        std::string n = t.substr(7);
        if (n.empty()) return false;
        for (char c : n)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return std::stoi(n) >= 1;
    }
    return false;
}

} // namespace

ParseOutcome parse_job(const std::string& text) {
    JobErrors err;
    std::vector<Section> sections = lex_sections(text, err);
    JobSpec spec;

    auto expect_single = [&](const KeyValue& kv) -> std::optional<std::string> {
        if (kv.is_array || kv.items.size() != 1) {
            err.add(kv.line, "key '" + kv.key + "' expects a single value");
            return std::nullopt;
        }
        return kv.items.front();
    };
    auto expect_array = [&](const KeyValue& kv) -> std::optional<std::vector<std::string>> {
        if (!kv.is_array) {
            err.add(kv.line, "key '" + kv.key + "' expects an array");
            return std::nullopt;
        }
        return kv.items;
    };

    for (const auto& sec : sections) {
        if (sec.path.empty()) {
            for (const auto& kv : sec.kvs) {
                if (kv.key == "variables") {
                    if (auto a = expect_array(kv)) spec.variables = *a;
                } else if (kv.key == "curve") {
                    if (auto s = expect_single(kv)) spec.curve = *s;
                } else if (kv.key == "components") {
                    if (auto a = expect_array(kv)) spec.components = *a;
                } else if (kv.key == "tasks") {
                    if (auto a = expect_array(kv)) spec.tasks = *a;
                } else {
                    err.add(kv.line, "unknown key '" + kv.key + "'");
                }
            }
        } else if (sec.path == "system") {
            if (!sec.is_array_elem) {
                err.add(sec.line, "use [[system]] blocks");
                continue;
            }
            SystemSpec sys;
            sys.line = sec.line;
            for (const auto& kv : sec.kvs) {
                if (kv.key == "name") {
                    if (auto s = expect_single(kv)) sys.name = *s;
                } else if (kv.key == "twist") {
                    if (auto s = expect_single(kv)) {
                        try {
                            sys.twist = std::stoi(*s);
                        } catch (...) {
                            err.add(kv.line, "twist must be an integer");
                        }
                    }
                } else if (kv.key == "ideal") {
                    if (auto a = expect_array(kv)) sys.ideal = *a;
                } else if (kv.key == "sections") {
                    if (auto a = expect_array(kv)) sys.sections = *a;
                } else if (kv.key == "queries") {
                    if (auto a = expect_array(kv)) sys.queries = *a;
                } else {
                    err.add(kv.line, "unknown key '" + kv.key + "'");
                }
            }
            if (sys.ideal.empty()) err.add(sec.line, "system needs an ideal");
            if (sys.sections.empty()) err.add(sec.line, "system needs sections");
            if (sys.name.empty())
                sys.name = "system" + std::to_string(spec.systems.size() + 1);
            spec.systems.push_back(std::move(sys));
        } else if (sec.path == "parameterization") {
            if (!spec.parameterization) spec.parameterization = ParamSpec{};
            spec.parameterization->line = sec.line;
            for (const auto& kv : sec.kvs) {
                if (kv.key == "maps") {
                    if (auto a = expect_array(kv)) spec.parameterization->maps = *a;
                } else {
                    err.add(kv.line, "unknown key '" + kv.key + "'");
                }
            }
        } else if (sec.path == "parameterization.fiber") {
            if (!spec.parameterization) spec.parameterization = ParamSpec{};
            FiberSpec fib;
            fib.line = sec.line;
            for (const auto& kv : sec.kvs) {
                if (kv.key == "point") {
                    if (auto s = expect_single(kv)) fib.point = *s;
                } else if (kv.key == "params") {
                    if (auto a = expect_array(kv)) fib.params = *a;
                } else if (kv.key == "type") {
                    if (auto s = expect_single(kv)) fib.type = *s;
                } else {
                    err.add(kv.line, "unknown key '" + kv.key + "'");
                }
            }
            if (fib.type != "node" && fib.type != "cusp")
                err.add(sec.line, "fiber type must be node or cusp");
            spec.parameterization->fibers.push_back(std::move(fib));
        } else if (sec.path == "family") {
            if (!sec.is_array_elem) {
                err.add(sec.line, "use [[family]] blocks");
                continue;
            }
            FamilySpec fam;
            fam.line = sec.line;
            for (const auto& kv : sec.kvs) {
                if (kv.key == "name") {
                    if (auto s = expect_single(kv)) fam.name = *s;
                } else if (kv.key == "curve_t") {
                    if (auto s = expect_single(kv)) fam.curve_t = *s;
                } else if (kv.key == "ideal_t") {
                    if (auto a = expect_array(kv)) fam.ideal_t = *a;
                } else if (kv.key == "sections_t") {
                    if (auto a = expect_array(kv)) fam.sections_t = *a;
                } else if (kv.key == "samples") {
                    if (auto a = expect_array(kv)) fam.samples = *a;
                } else {
                    err.add(kv.line, "unknown key '" + kv.key + "'");
                }
            }
            if (fam.curve_t.empty()) err.add(sec.line, "family needs curve_t");
            if (fam.sections_t.empty()) err.add(sec.line, "family needs sections_t");
            if (fam.name.empty()) fam.name = "family" + std::to_string(spec.families.size() + 1);
            spec.families.push_back(std::move(fam));
        } else {
            err.add(sec.line, "unknown section '" + sec.path + "'");
        }
    }

    if (spec.curve.empty()) err.add(1, "no curve");
    if (spec.variables.empty())
        spec.variables = {"x", "y", "z"};
    else if (spec.variables.size() != 3)
        err.add(1, "variables must list the three plane coordinates");
    if (spec.tasks.empty()) err.add(1, "task list nonempty");
    for (const auto& t : spec.tasks)
        if (!valid_task(t)) err.add(1, "unknown task '" + t + "'");
    for (const auto& t : spec.tasks) {
        if (t == "birational" && !spec.parameterization)
            err.add(1, "task birational needs a parameterization");
        if (t == "limit" && spec.families.empty()) err.add(1, "task limit needs a family");
    }

    ParseOutcome out;
    out.errors = err.errors;
    if (out.errors.empty()) out.spec = std::move(spec);
    return out;
}

namespace {

const std::vector<std::string> chart_vars{"u", "v"};
const std::vector<std::string> family_chart_vars{"u", "v", "t"};
const std::array<const char*, 3> chart_names{"z", "y", "x"};

struct Workspace {
    PlaneCurve curve;
    std::vector<std::pair<std::string, GenLinearSystem>> systems;
    std::optional<Parameterization> parameterization;
};

GenLinearSystem build_system(const PlaneCurve& curve, const SystemSpec& spec,
                             const std::vector<std::string>& vars) {
    std::vector<Polynomial> jg;
    for (const auto& s : spec.ideal) jg.push_back(parse_polynomial(s, vars));
    SheafRep sheaf = SheafRep::make(curve, spec.twist, Ideal(3, std::move(jg)));
    std::vector<Polynomial> sections;
    for (const auto& s : spec.sections) sections.push_back(parse_polynomial(s, vars));
    return GenLinearSystem::make(std::move(sheaf), std::move(sections));
}

P1Point parse_param(const std::string& s) {
    if (trim(s) == "inf") return P1Point::infinity();
    return P1Point::finite(parse_rational(s));
}

Parameterization build_parameterization(const PlaneCurve& curve, const ParamSpec& spec) {
    if (spec.maps.size() != 3) throw input_error("parameterization needs three maps");
    std::vector<std::string> st{"s", "t"};
    std::array<Polynomial, 3> maps{parse_polynomial(spec.maps[0], st),
                                   parse_polynomial(spec.maps[1], st),
                                   parse_polynomial(spec.maps[2], st)};
    std::vector<SingularFiber> fibers;
    for (const auto& f : spec.fibers) {
        SingularFiber fiber;
        fiber.point = parse_point(f.point);
        for (const auto& p : f.params) fiber.params.push_back(parse_param(p));
        fiber.type = f.type == "node" ? LocalType::Node : LocalType::Cusp;
        fibers.push_back(std::move(fiber));
    }
    return Parameterization::make(curve, std::move(maps), std::move(fibers));
}

// family text is parsed over (x, y, z, t, c); c must be substituted away
FamilySystem build_family(const FamilySpec& spec, const std::vector<std::string>& vars,
                          const std::optional<Rat>& c_value) {
    std::vector<std::string> fam_vars = vars;
    fam_vars.push_back("t");
    fam_vars.push_back("c");
    auto finish = [&](const std::string& text) {
        Polynomial p = parse_polynomial(text, fam_vars);
        if (c_value) {
            p = p.substitute(4, Polynomial::constant(5, *c_value));
        } else {
            for (const auto& [m, coef] : p.terms())
                if (m[4] > 0) throw input_error("family uses c but no samples given");
        }
        return p.remove_variables(4, 1);
    };
    Polynomial Ft = finish(spec.curve_t);
    std::vector<Polynomial> Jt, sections;
    for (const auto& s : spec.ideal_t) Jt.push_back(finish(s));
    for (const auto& s : spec.sections_t) sections.push_back(finish(s));
    return FamilySystem::make(std::move(Ft), std::move(Jt), std::move(sections));
}

std::vector<std::string> ideal_strings(const Ideal& A, const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    for (const auto& g : canonical_generators(A)) out.push_back(g.to_string(vars));
    return out;
}

struct TaskTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

} // namespace

std::string Report::human() const {
    std::ostringstream os;
    for (const auto& t : tasks) {
        os << "== " << t.name << " [" << t.status << "]\n";
        for (const auto& line : t.lines) os << "   " << line << "\n";
        for (const auto& [label, cyc] : t.cycles) os << "   " << label << " = " << cyc << "\n";
        for (const auto& [label, gens] : t.ideals) {
            os << "   " << label << " = (";
            for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i];
            os << ")\n";
        }
        if (!t.verdict.empty()) os << "   verdict: " << t.verdict << "\n";
    }
    os << (all_ok ? "all tasks passed\n" : "FAILURES present\n");
    return os.str();
}

std::string Report::json() const {
    nlohmann::ordered_json doc;
    doc["tasks"] = nlohmann::ordered_json::array();
    for (const auto& t : tasks) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["status"] = t.status;
        jt["ideals"] = nlohmann::ordered_json::object();
        for (const auto& [label, gens] : t.ideals) jt["ideals"][label] = gens;
        jt["cycles"] = nlohmann::ordered_json::object();
        for (const auto& [label, cyc] : t.cycles) jt["cycles"][label] = cyc;
        jt["verdict"] = t.verdict;
        jt["lines"] = t.lines;
        doc["tasks"].push_back(std::move(jt));
    }
    doc["ok"] = all_ok;
    return doc.dump(2) + "\n";
}

Report run_job(const JobSpec& spec, const RunLimits& limits) {
    Report report;

    auto run_one = [&](const std::string& name, auto&& body) {
        TaskResult result;
        result.name = name;
        TaskTimer timer;
        try {
            bool ok = body(result);
            result.status = ok ? "ok" : "fail";
        } catch (const std::exception& e) {
            result.status = "error";
            result.lines.push_back(e.what());
        }
        result.millis = timer.ms();
        report.all_ok = report.all_ok && result.status == "ok";
        report.tasks.push_back(std::move(result));
    };

    std::optional<PlaneCurve> curve;
    std::string curve_error;
    try {
        std::vector<Polynomial> comps;
        for (const auto& c : spec.components) comps.push_back(parse_polynomial(c, spec.variables));
        curve = PlaneCurve::make(parse_polynomial(spec.curve, spec.variables), std::move(comps));
    } catch (const std::exception& e) {
        curve_error = e.what();
    }

    for (const auto& task : spec.tasks) {
        if (!curve) {
            run_one(task, [&](TaskResult&) -> bool { throw input_error(curve_error); });
            continue;
        }

        if (task == "wronskian" || task == "weierstrass-cycle" || task == "intrinsic" ||
            task.rfind("defect:", 0) == 0 || task == "checks" || task == "birational") {
            for (const auto& sysspec : spec.systems) {
                run_one(task + "(" + sysspec.name + ")", [&](TaskResult& result) -> bool {
                    GenLinearSystem sys = build_system(*curve, sysspec, spec.variables);
                    if (task == "wronskian") {
                        WronskianResult w = wronskian(sys);
                        for (const auto& [chart, poly] : w.per_chart)
                            result.lines.push_back(
                                std::string("w[") +
                                chart_names[static_cast<std::size_t>(chart.which)] +
                                "] = " + poly.to_string(chart_vars));
                        ChartIdeals ids{{Ideal(2), Ideal(2), Ideal(2)}};
                        for (const auto& [chart, poly] : w.per_chart)
                            ids.charts[static_cast<std::size_t>(chart.which)] =
                                Ideal(2, {poly, chart.f});
                        result.cycles["[W]"] = divisor_cycle(ids).to_string();
                        return true;
                    }
                    if (task == "weierstrass-cycle") {
                        Cycle R = weierstrass_cycle(sys);
                        result.cycles["R"] = R.to_string();
                        result.lines.push_back("deg R = " + std::to_string(R.total_degree()));
                        for (const auto& q : sysspec.queries) {
                            ProjPoint p = parse_point(q);
                            result.lines.push_back("mult at " + p.to_string() + " = " +
                                                   std::to_string(R.multiplicity_at(p)));
                        }
                        return true;
                    }
                    if (task == "intrinsic") {
                        IntrinsicScheme z = intrinsic_scheme(sys);
                        result.cycles["Z cycle"] = z.cycle.to_string();
                        for (Chart which : all_charts)
                            result.ideals[std::string("Z[") +
                                          chart_names[static_cast<std::size_t>(which)] + "]"] =
                                ideal_strings(z.ideals[which], chart_vars);
                        return true;
                    }
                    if (task.rfind("defect:", 0) == 0) {
                        int n = std::stoi(task.substr(7));
                        result.cycles["defect^" + std::to_string(n)] =
                            defect(sys.sheaf(), n).to_string();
                        return true;
                    }
                    if (task == "checks") {
                        NondegeneracyReport rep = check_nondegenerate(sys);
                        result.lines.push_back(std::string("nondegenerate: ") +
                                               (rep.nondegenerate ? "yes" : "no"));
                        result.lines.push_back(std::string("strongly nondegenerate: ") +
                                               (rep.strongly_nondegenerate ? "yes" : "no"));
                        if (!rep.strongly_nondegenerate) {
                            result.verdict = "degenerate: " + rep.detail;
                            return false;
                        }
                        Verdict v = decomposition_identity_check(sys);
                        result.verdict = (v.ok ? "pass: " : "FAIL: ") + v.lhs + " == " + v.rhs;
                        return v.ok;
                    }
                    // birational
                    if (!spec.parameterization) throw input_error("no parameterization");
                    Parameterization b = build_parameterization(*curve, *spec.parameterization);
                    BirationalComparison cmp =
                        birational_comparison(sys, b, 4, limits.precision_cap);
                    result.cycles["lhs"] = cmp.lhs.to_string();
                    result.cycles["rhs"] = cmp.rhs.to_string();
                    result.verdict = cmp.ok ? "pass" : "FAIL";
                    result.lines.push_back(cmp.detail);
                    return cmp.ok;
                });
            }
            continue;
        }

        if (task == "limit") {
            for (const auto& famspec : spec.families) {
                std::vector<std::optional<Rat>> samples;
                try {
                    if (famspec.samples.empty())
                        samples.push_back(std::nullopt);
                    else
                        for (const auto& s : famspec.samples) samples.push_back(parse_rational(s));
                } catch (const std::exception& e) {
                    run_one(task + "(" + famspec.name + ")",
                            [&](TaskResult&) -> bool { throw input_error(e.what()); });
                    continue;
                }
                for (const auto& c_value : samples) {
                    std::string label = famspec.name;
                    if (c_value) label += "[c=" + rat_to_string(*c_value) + "]";
                    run_one(task + "(" + label + ")", [&](TaskResult& result) -> bool {
                        FamilySystem fam = build_family(famspec, spec.variables, c_value);
                        LimitChecks checks = limit_checks(fam);
                        result.cycles["limit cycle"] = checks.limit_cycle.to_string();
                        for (Chart which : all_charts)
                            result.ideals[std::string("limit[") +
                                          chart_names[static_cast<std::size_t>(which)] + "]"] =
                                ideal_strings(checks.limit.ideals[which], chart_vars);
                        // shape of the limit at the distinguished singular point
                        SingularLocus sing = singular_points(fam.special().sheaf().curve());
                        for (const auto& p : sing.points) {
                            for (Chart which : all_charts) {
                                auto pc = chart_coords(p, which);
                                if (!pc) continue;
                                auto shape = node_limit_shape(
                                    checks.limit.ideals[which],
                                    fam.special().sheaf().curve().chart(which).f, *pc);
                                if (shape)
                                    result.lines.push_back(
                                        "limit(" + label + ") = W(" +
                                        rat_to_string(shape->first) + "," +
                                        rat_to_string(shape->second) + ") at " + p.to_string());
                                break;
                            }
                        }
                        result.verdict = checks.containment && checks.cycle_matches
                                             ? "pass"
                                             : "FAIL: " + checks.detail;
                        result.lines.push_back(checks.detail);
                        return checks.containment && checks.cycle_matches;
                    });
                }
            }
            continue;
        }
    }
    return report;
}

} // namespace wlab

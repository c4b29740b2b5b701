#include "msm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "msm/axioms.hpp"
#include "msm/fixedpoint.hpp"
#include "msm/io.hpp"
#include "msm/search.hpp"
#include "msm/topology.hpp"

namespace msm {

namespace {

// Usage problems found after flag parsing (bad ids, bad phi, ...).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::map<std::string, MsSpace (*)()>& builtins()
{
    static const std::map<std::string, MsSpace (*)()> table{
        {"example1", &builtin_example1},
        {"discrete3", [] { return discrete_space(3); }},
    };
    return table;
}

struct Source {
    std::string file;
    std::string builtin;
};

void add_source(CLI::App* cmd, Source& src)
{
    cmd->add_option("file", src.file, "Instance file (msspace v1)");
    cmd->add_option("--builtin", src.builtin, "Built-in instance: example1, discrete3");
}

MsSpace load_space(const Source& src)
{
    if (src.file.empty() == src.builtin.empty())
        throw UsageError("give exactly one of an instance file or --builtin");
    if (!src.builtin.empty()) {
        auto it = builtins().find(src.builtin);
        if (it == builtins().end()) throw UsageError("unknown builtin '" + src.builtin + "'");
        return it->second();
    }
    try {
        return parse_instance(read_file(src.file));
    } catch (const InputError& e) {
        throw InputError(src.file + ": " + e.what());
    }
}

SelfMap load_map(const std::string& path, const MsSpace& space)
{
    try {
        return parse_map(read_file(path), space);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Point flag_point(const MsSpace& space, const std::string& id, std::string_view flag)
{
    if (auto p = space.find(id)) return *p;
    throw UsageError(std::string(flag) + ": unknown point '" + id + "'");
}

std::string join_ids(const MsSpace& space, const std::vector<Point>& pts)
{
    std::string out;
    for (Point p : pts) {
        if (!out.empty()) out += ' ';
        out += space.id(p);
    }
    return out;
}

std::string join_values(const std::vector<Value>& values)
{
    std::string out;
    for (const Value& v : values) {
        if (!out.empty()) out += ' ';
        out += v.to_string();
    }
    return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string format_violation(const MsSpace& space, const Violation& v)
{
    std::string line = std::string(axiom_name(v.axiom)) + ' ' + join_ids(space, v.witness) + ' ' +
                       v.lhs.to_string() + ' ' + v.rhs.to_string();
    if (v.direction != IffDirection::none) line += ' ' + std::string(direction_name(v.direction));
    return line;
}

void print_violations(std::ostream& out, const MsSpace& space, const ValidationReport& report, bool strong_only)
{
    for (const Violation& v : report.violations)
        if ((v.axiom == Axiom::MS1_strong) == strong_only) out << "violation: " << format_violation(space, v) << "\n";
}

std::uint64_t found(const ValidationReport& report, bool strong)
{
    std::uint64_t total = 0;
    for (auto [axiom, count] : report.violations_found)
        if ((axiom == Axiom::MS1_strong) == strong) total += count;
    return total;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
    out << "written: " << path << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification and search for M_s-metric spaces", "msmetric"};
    app.require_subcommand(1);
    app.fallthrough();

    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "Print only the verdict line(s)");

    Source src;

    auto* validate = app.add_subcommand("validate", "Check the M_s axioms");
    add_source(validate, src);
    bool strong = false;
    validate->add_flag("--strong", strong, "Also report the strengthened identity check");

    auto* classify_cmd = app.add_subcommand("classify", "M_s and partial S-metric verdicts with witnesses");
    add_source(classify_cmd, src);

    auto* ball_cmd = app.add_subcommand("ball", "Closed ball around a point");
    add_source(ball_cmd, src);
    std::string center, radius;
    ball_cmd->add_option("--center", center, "Center point id")->required();
    ball_cmd->add_option("--radius", radius, "Radius (decimal or fraction)")->required();

    auto* contract = app.add_subcommand("contract", "Contraction admissibility for a map");
    add_source(contract, src);
    std::string map_path, kind_text = "banach", phi_text;
    contract->add_option("--map", map_path, "Map file (msmap v1)")->required();
    contract->add_option("--kind", kind_text, "banach | kannan | phi");
    contract->add_option("--phi", phi_text, "phi as family:param, e.g. linear:1/2");

    auto* solve = app.add_subcommand("solve", "Picard iteration from a start point");
    add_source(solve, src);
    std::string x0_text;
    std::size_t max_iter = 0;
    solve->add_option("--map", map_path, "Map file (msmap v1)")->required();
    solve->add_option("--x0", x0_text, "Start point id")->required();
    solve->add_option("--max-iter", max_iter, "Iteration limit (default 4n)");

    GenConfig config;
    config.trials = 10000;
    std::string out_path;
    std::string mode = "ms-not-partial-s";
    auto* search = app.add_subcommand("search", "Find an M_s-space that is not partial S-metric");
    search->add_option("--mode", mode, "Search mode")->check(CLI::IsMember({"ms-not-partial-s"}));
    search->add_option("--size", config.n, "Point count (2..16)");
    search->add_option("--seed", config.seed, "RNG seed");
    search->add_option("--trials", config.trials, "Trial budget");
    search->add_option("--workers", config.workers, "Parallel workers");
    search->add_option("--out", out_path, "Write the instance here instead of stdout");

    std::string gen_kind = "ms";
    auto* gen = app.add_subcommand("gen", "Generate a random valid instance");
    gen->add_option("--kind", gen_kind, "ms | partial-s")->check(CLI::IsMember({"ms", "partial-s"}));
    gen->add_option("--size", config.n, "Point count (2..16)");
    gen->add_option("--seed", config.seed, "RNG seed");
    gen->add_option("--trials", config.trials, "Trial budget");
    gen->add_option("--workers", config.workers, "Parallel workers");
    gen->add_option("--out", out_path, "Write the instance here instead of stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (validate->parsed()) {
            MsSpace space = load_space(src);
            ValidationReport r = validate_ms(space, {.strengthened_identity = strong});
            out << "is_ms: " << yes_no(*r.is_ms) << "\n";
            if (!quiet) {
                out << "checks: " << r.checks_performed << "\n";
                for (Axiom a : {Axiom::MS1, Axiom::MS2, Axiom::MS3, Axiom::MS4})
                    out << "checks_" << axiom_name(a) << ": " << r.checks.at(a) << "\n";
                out << "violations: " << found(r, false) << "\n";
                print_violations(out, space, r, false);
                if (strong) {
                    out << "strong_violations: " << found(r, true) << "\n";
                    print_violations(out, space, r, true);
                }
            }
            return *r.is_ms ? exit_ok : exit_fails;
        }

        if (classify_cmd->parsed()) {
            MsSpace space = load_space(src);
            ValidationReport r = classify(space);
            out << "is_ms: " << yes_no(*r.is_ms) << "\n";
            out << "is_partial_s: " << yes_no(*r.is_partial_s) << "\n";
            if (!quiet) {
                out << "checks: " << r.checks_performed << "\n";
                out << "violations: " << found(r, false) << "\n";
                print_violations(out, space, r, false);
            }
            return exit_ok;
        }

        if (ball_cmd->parsed()) {
            MsSpace space = load_space(src);
            Point c = flag_point(space, center, "--center");
            auto r = Rational::try_parse(radius);
            if (!r || r->sign() < 0) throw UsageError("--radius: expected a non-negative number, got '" + radius + "'");
            if (!quiet) {
                out << "center: " << space.id(c) << "\n";
                out << "radius: " << *r << "\n";
            }
            out << "ball: " << join_ids(space, ball(space, c, *r)) << "\n";
            return exit_ok;
        }

        if (contract->parsed()) {
            MsSpace space = load_space(src);
            auto kind = parse_kind(kind_text);
            if (!kind) throw UsageError("--kind: expected banach, kannan or phi, got '" + kind_text + "'");
            std::optional<PhiFunction> phi;
            if (*kind == ContractionKind::phi) {
                if (phi_text.empty()) throw UsageError("--kind phi needs --phi family:param");
                try {
                    phi = PhiFunction::parse(phi_text);
                } catch (const InputError& e) {
                    throw UsageError(std::string("--phi: ") + e.what());
                }
            }
            SelfMap map = load_map(map_path, space);
            ContractionReport r = analyze_contraction(space, map, *kind, phi);
            if (quiet) {
                out << "admissible: " << yes_no(r.admissible) << "\n";
                return r.admissible ? exit_ok : exit_fails;
            }
            out << "kind: " << kind_name(*kind) << "\n";
            if (*kind == ContractionKind::phi) {
                out << "phi: " << phi->to_string() << "\n";
                if (!r.witness.empty()) {
                    out << "witness: " << join_ids(space, r.witness) << "\n";
                    out << "lhs: " << r.lhs << "\n";
                    out << "rhs: " << r.rhs << "\n";
                }
            } else {
                const char* key = *kind == ContractionKind::banach ? "k_star" : "lambda_star";
                out << key << ": " << (r.constant ? r.constant->to_string() : "infinite") << "\n";
                out << "witness: " << join_ids(space, r.witness) << "\n";
                out << "numerator: " << r.lhs << "\n";
                out << "denominator: " << r.rhs << "\n";
                if (r.infeasible_witness) {
                    std::vector<Point> inf(r.infeasible_witness->begin(), r.infeasible_witness->end());
                    out << "infeasible: " << join_ids(space, inf) << "\n";
                }
            }
            out << "admissible: " << yes_no(r.admissible) << "\n";
            return r.admissible ? exit_ok : exit_fails;
        }

        if (solve->parsed()) {
            MsSpace space = load_space(src);
            Point x0 = flag_point(space, x0_text, "--x0");
            SelfMap map = load_map(map_path, space);
            SolveTrace t = picard(space, map, x0, max_iter);
            out << "status: " << outcome_name(t.outcome) << "\n";
            if (!quiet) {
                out << "orbit: " << join_ids(space, t.orbit) << "\n";
                out << "steps: " << t.steps << "\n";
                out << "step_gaps: " << join_values(t.step_gaps) << "\n";
                if (t.fixed_point) {
                    out << "fixed_point: " << space.id(*t.fixed_point) << "\n";
                    out << "self_distance: " << *t.self_distance_at_fix << "\n";
                }
                if (t.outcome == SolveOutcome::cycle) out << "cycle: " << join_ids(space, t.cycle) << "\n";
            }
            return t.outcome == SolveOutcome::fixed_point ? exit_ok : exit_fails;
        }

        if (search->parsed() || gen->parsed()) {
            try {
                check_config(config);
            } catch (const InputError& e) {
                throw UsageError(e.what());
            }
            std::ostringstream text;
            if (search->parsed()) {
                auto found_sep = find_ms_not_partial_s(config);
                if (!found_sep) {
                    err << "no instance found in " << config.trials << " trials\n";
                    return exit_fails;
                }
                text << "# search: " << mode << " size " << config.n << " seed " << config.seed << " trials "
                     << config.trials << "\n";
                text << "# trial: " << found_sep->trial << "\n";
                text << "# witness: " << format_violation(found_sep->space, found_sep->witness) << "\n";
                text << serialize_instance(found_sep->space);
            } else {
                auto space = gen_kind == "ms" ? gen_ms(config) : gen_partial_s(config);
                if (!space) {
                    err << "no instance generated in " << config.trials << " trials\n";
                    return exit_fails;
                }
                text << "# gen: " << gen_kind << " size " << config.n << " seed " << config.seed << "\n";
                text << serialize_instance(*space);
            }
            write_output(out_path, text.str(), out);
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_malformed;
    }
    return exit_usage;
}

}  // namespace msm

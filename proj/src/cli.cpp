#include <tropmix/cli.hpp>

#include <tropmix/fm.hpp>
#include <tropmix/mpg.hpp>
#include <tropmix/reduce.hpp>
#include <tropmix/system.hpp>
#include <tropmix/timed.hpp>
#include <tropmix/zones.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace tropmix {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MixedSystem load_system(const std::string& path) {
    try {
        return parse_system(slurp(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

ReduceMode mode_of(const std::string& name) {
    if (name == "none") return ReduceMode::None;
    if (name == "weak") return ReduceMode::Weak;
    if (name == "exact") return ReduceMode::Exact;
    throw InputError("unknown reduce mode '" + name + "'");
}

std::vector<int> parse_var_list(const std::string& list, int dim) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= list.size()) {
        size_t comma = list.find(',', start);
        std::string piece =
            list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        size_t a = piece.find_first_not_of(" \t");
        if (a == std::string::npos) throw InputError("empty entry in variable list");
        size_t b = piece.find_last_not_of(" \t");
        piece = piece.substr(a, b - a + 1);
        if (piece.size() < 2 || piece[0] != 'x')
            throw InputError("expected x<k> in variable list, got '" + piece + "'");
        int k;
        try {
            k = std::stoi(piece.substr(1));
        } catch (const std::exception&) {
            throw InputError("bad variable '" + piece + "'");
        }
        if (k < 1 || k > dim) throw InputError("variable '" + piece + "' out of range");
        out.push_back(k);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Re-embeds a projected system into the original variable numbering so the
/// output stays readable (and re-parsable) against the input header.
MixedSystem embed(const MixedSystem& sys, const std::vector<int>& remaining, int orig_dim) {
    MixedSystem out(orig_dim);
    for (const auto& row : sys.rows) {
        std::vector<MaxPlus> lhs(orig_dim, MaxPlus::neg_inf());
        std::vector<Germ> rhs(orig_dim, Germ::neg_inf());
        for (size_t j = 0; j < remaining.size(); ++j) {
            lhs[remaining[j] - 1] = row.lhs[j];
            rhs[remaining[j] - 1] = row.rhs[j];
        }
        out.add_row(MixedInequality(std::move(lhs), row.lhs_const, std::move(rhs), row.rhs_const));
    }
    return out;
}

int run_project(const std::string& file, const std::string& vars, const std::string& mode,
                std::ostream& out) {
    MixedSystem sys = load_system(file);
    ProjectionResult pr = eliminate_many(sys, parse_var_list(vars, sys.dim), mode_of(mode));
    out << print_system(embed(pr.system, pr.remaining, sys.dim));
    return 0;
}

int run_empty(const std::string& file, bool want_cert, std::ostream& out) {
    MixedSystem sys = load_system(file);
    if (!want_cert) {
        out << (is_empty(sys) ? "EMPTY" : "NONEMPTY") << "\n";
        return 0;
    }
    if (!sys.has_pos_inf()) {
        GameCertificate cert;
        bool empty = is_empty_finite(sys, &cert);
        out << (empty ? "EMPTY" : "NONEMPTY") << "\n\n" << print_certificate(cert);
        return 0;
    }
    EmptinessTrace tr = is_empty_trace(sys);
    out << (tr.empty ? "EMPTY" : "NONEMPTY") << "\n\n";
    if (tr.deciding) {
        GameCertificate cert;
        is_empty_finite(*tr.deciding, &cert);
        out << "# certificate for the deciding +oo-stripped subsystem\n"
            << print_certificate(cert);
    } else {
        out << "# no +oo-free subsystem was ever selected; the system is unconstrained\n";
    }
    return 0;
}

int run_implies(const std::string& file, const std::string& goal, std::ostream& out) {
    MixedSystem sys = load_system(file);
    MixedInequality target;
    try {
        target = parse_inequality(goal, sys.dim);
    } catch (const ParseError& e) {
        throw InputError(std::string("goal: ") + e.what());
    }
    out << (implies(sys, target) ? "IMPLIED" : "NOT-IMPLIED") << "\n";
    return 0;
}

int run_hull(const std::string& file1, const std::string& file2, const std::string& mode,
             std::ostream& out) {
    MixedSystem a = load_system(file1);
    MixedSystem b = load_system(file2);
    if (a.dim != b.dim) throw InputError("hull operands have different dimensions");
    out << print_system(hull_union(a, b, mode_of(mode)));
    return 0;
}

int run_zones(const std::string& file, size_t max_zones, std::ostream& out) {
    MixedSystem sys = load_system(file);
    std::vector<Zone> zs;
    try {
        zs = mixed_to_zones(sys, max_zones);
    } catch (const std::length_error& e) {
        throw CapError(e.what());
    }
    for (const auto& z : zs) out << print_zone(z) << "\n";
    return 0;
}

int run_reach(const std::string& file, bool trace, bool approx, long long max_steps,
              const std::string& mode, std::ostream& out) {
    TimedAutomaton ta;
    try {
        ta = parse_automaton(slurp(file));
    } catch (const ParseError& e) {
        throw InputError(file + ": " + e.what());
    }
    ReachOptions opts;
    opts.approx_union = approx;
    opts.max_steps = max_steps;
    opts.reduce = mode_of(mode);
    ReachResult res = forward_reach(ta, opts);
    switch (res.status) {
        case ReachResult::Reachable: out << "REACHABLE\n"; break;
        case ReachResult::Unreachable: out << "UNREACHABLE\n"; break;
        case ReachResult::Inconclusive: out << "INCONCLUSIVE\n"; break;
    }
    if (trace) {
        for (const auto& state : res.trace)
            out << "\nlocation " << state.location << "\n" << print_system(state.region);
    }
    return res.status == ReachResult::Inconclusive ? 3 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "tropmix: tropical polyhedra with mixed (strict and non-strict) constraints\n"
        "\n"
        "System files: a 'dim <n>' header, then one inequality per line,\n"
        "'LHS <= RHS', each side '+'-separated terms ('+' is max): <coef>,\n"
        "<coef>*x<k> or x<k>. Left coefficients: integer or -oo; right ones\n"
        "also <int>~ (strict) or +oo. Automaton files: 'clocks x1 x2 ...',\n"
        "'location <name> [invariant <atoms>]', 'initial/final <name>',\n"
        "'edge <src> -> <dst> [when <atoms>] [reset x<i>:=<k>, ...]' with\n"
        "comma-separated atoms like 'x1 <= 1' or 'x2 < 3 + x1'."};
    app.require_subcommand(1);

    std::string file, file2, vars, goal;
    std::string project_mode = "none", hull_mode = "weak", reach_mode = "none";
    bool want_cert = false, want_trace = false, approx = false;
    size_t max_zones = 4096;
    long long max_steps = -1;

    auto* project = app.add_subcommand("project", "eliminate variables from a system");
    project->add_option("file", file, "system file")->required();
    project->add_option("--eliminate", vars, "comma-separated variables, e.g. x1,x3")->required();
    project->add_option("--reduce", project_mode, "redundancy elimination: none|weak|exact");

    auto* empty = app.add_subcommand("empty", "decide emptiness");
    empty->add_option("file", file, "system file")->required();
    empty->add_flag("--certificate", want_cert, "print a winning-strategy certificate");

    auto* implies_cmd = app.add_subcommand("implies", "decide implication of one inequality");
    implies_cmd->add_option("file", file, "system file")->required();
    implies_cmd->add_option("--goal", goal, "inequality, e.g. \"0 <= x2\"")->required();

    auto* hull = app.add_subcommand("hull", "convex hull of the union of two systems");
    hull->add_option("file1", file, "first system file")->required();
    hull->add_option("file2", file2, "second system file")->required();
    hull->add_option("--reduce", hull_mode, "redundancy elimination: none|weak|exact");

    auto* zones = app.add_subcommand("zones", "decompose a system into a union of zones");
    zones->add_option("file", file, "system file")->required();
    zones->add_option("--max-zones", max_zones, "cap on the number of produced zones");

    auto* reach = app.add_subcommand("reach", "timed-automaton forward reachability");
    reach->add_option("file", file, "automaton file")->required();
    reach->add_flag("--trace", want_trace, "print the visited symbolic states");
    reach->add_flag("--approx-union", approx, "merge same-location states via the hull");
    reach->add_option("--max-steps", max_steps, "give up after this many dequeued states");
    reach->add_option("--reduce", reach_mode, "redundancy elimination for stored regions");

    std::vector<const char*> argv{"tropmix"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (project->parsed()) return run_project(file, vars, project_mode, out);
        if (empty->parsed()) return run_empty(file, want_cert, out);
        if (implies_cmd->parsed()) return run_implies(file, goal, out);
        if (hull->parsed()) return run_hull(file, file2, hull_mode, out);
        if (zones->parsed()) return run_zones(file, max_zones, out);
        if (reach->parsed())
            return run_reach(file, want_trace, approx, max_steps, reach_mode, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace tropmix

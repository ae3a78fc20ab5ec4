#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "optidx/oracle.hpp"
#include "optidx/report.hpp"
#include "optidx/wavelength.hpp"

using namespace optidx;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Tree load_tree(const std::string& file, const std::string& gen, std::uint64_t seed) {
    if (file.empty() == gen.empty()) throw InputError("give exactly one of a tree file or --gen");
    if (!gen.empty()) return generate(parse_family_spec(gen, seed));
    return parse_edge_list(read_input(file));
}

struct ReportArgs {
    std::string file;
    std::string gen;
    std::uint64_t seed = 1;
    bool exact = false;
    std::int64_t budget_ms = 10'000;
    std::string format = "json";
    bool timing = false;
    std::string coloring_out;
};

int run_report(const ReportArgs& a) {
    const Tree t = load_tree(a.file, a.gen, a.seed);
    PathColoring coloring;
    const auto r = build_report(t, {.exact = a.exact, .budget_ms = a.budget_ms}, &coloring);
    std::cout << (a.format == "csv" ? report_csv(r) : report_json(r, a.timing));
    if (!a.coloring_out.empty()) {
        std::ofstream out(a.coloring_out);
        if (!out) throw InputError("cannot write " + a.coloring_out);
        out << format_coloring(coloring);
    }
    return r.proper() && r.bound_ok ? kExitOk : kExitVerifyFailed;
}

struct SweepArgs {
    std::string family;
    std::vector<std::string> ranges;
    std::uint64_t seed = 1;
    bool exact = false;
    std::int64_t budget_ms = 1'000;
    std::string format = "csv";
};

int run_sweep(const SweepArgs& a) {
    auto request = parse_sweep(a.family, a.ranges, a.seed);
    request.options = {.exact = a.exact, .budget_ms = a.budget_ms};
    std::cout << (a.format == "json" ? sweep_json(request) : sweep_csv(request));
    return kExitOk;
}

struct EnumerateArgs {
    int n = 0;
    bool exact = false;
    std::int64_t budget_ms = 200;
    bool force = false;
};

int run_enumerate(const EnumerateArgs& a) {
    const auto summary = enumerate_trees(a.n, {.exact = a.exact, .budget_ms = a.budget_ms, .force = a.force});
    std::cout << summary_json(summary);
    return summary.ok() ? kExitOk : kExitVerifyFailed;
}

struct VerifyArgs {
    std::string tree_file;
    std::string coloring_file;
};

int run_verify(const VerifyArgs& a) {
    const Tree t = parse_edge_list(read_input(a.tree_file));
    const auto coloring = parse_coloring(read_input(a.coloring_file), t.order());
    const auto violations = verify_proper(t, coloring);
    if (violations.empty()) {
        std::cout << "OK k=" << coloring.colors_used() << "\n";
        return kExitOk;
    }
    for (const auto& v : violations) std::cout << "violation: " << format_violation(v, coloring) << "\n";
    std::cout << "FAIL " << violations.size() << " violation(s)\n";
    return kExitVerifyFailed;
}

struct GenArgs {
    std::string spec;
    std::uint64_t seed = 1;
    std::string emit = "edges";
};

int run_gen(const GenArgs& a) {
    const Tree t = generate(parse_family_spec(a.spec, a.seed));
    std::cout << (a.emit == "dot" ? to_dot(t) : format_edge_list(t));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-forwarding index and all-to-all path colorings of trees"};
    app.require_subcommand(1);

    ReportArgs report;
    auto* report_cmd = app.add_subcommand("report", "Load profile, constructed coloring and bound verdict as JSON");
    report_cmd->add_option("file", report.file, "Edge-list file ('-' for stdin)");
    report_cmd->add_option("--gen", report.gen, "Generate the tree instead: path:N, star:N, spider:K,T, mary:M,D, random:N[,SEED]");
    report_cmd->add_option("--seed", report.seed, "Seed for random:N without an explicit seed");
    report_cmd->add_flag("--exact", report.exact, "Also run the exact oracle");
    report_cmd->add_option("--budget-ms", report.budget_ms, "Exact oracle time budget")->check(CLI::NonNegativeNumber);
    report_cmd->add_option("--format", report.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    report_cmd->add_flag("--timing", report.timing, "Include per-phase wall-clock times (not reproducible)");
    report_cmd->add_option("--write-coloring", report.coloring_out, "Write the coloring as 'u v color' lines");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "One CSV row per family instance over parameter ranges");
    sweep_cmd->add_option("family", sweep.family, "path | star | spider | mary | random")->required();
    sweep_cmd->add_option("ranges", sweep.ranges, "One range per parameter, e.g. 3,5 1..4");
    sweep_cmd->add_option("--seed", sweep.seed, "Seed for random when no seed range is given");
    sweep_cmd->add_flag("--exact", sweep.exact, "Fill the exact column where the oracle closes");
    sweep_cmd->add_option("--budget-ms", sweep.budget_ms, "Exact oracle budget per instance")->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--format", sweep.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Run the pipeline on every labeled tree on n vertices");
    enumerate_cmd->add_option("n", enumerate.n, "Number of vertices")->required();
    enumerate_cmd->add_flag("--exact", enumerate.exact, "Also run the exact oracle (n <= 7)");
    enumerate_cmd->add_option("--budget-ms", enumerate.budget_ms, "Exact oracle budget per tree")->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_flag("--force", enumerate.force, "Allow n above 8");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file against a tree");
    verify_cmd->add_option("tree", verify.tree_file, "Edge-list file")->required();
    verify_cmd->add_option("coloring", verify.coloring_file, "'u v color' file")->required();

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Print a generated tree");
    auto* gen_spec = gen_cmd->add_option("spec", gen.spec, "Family spec, e.g. spider:3,2");
    gen_cmd->add_option("--gen", gen.spec, "Same as the positional spec")->excludes(gen_spec);
    gen_cmd->add_option("--seed", gen.seed, "Seed for random:N without an explicit seed");
    gen_cmd->add_option("--emit", gen.emit, "edges or dot")->check(CLI::IsMember({"edges", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*report_cmd) return run_report(report);
        if (*sweep_cmd) return run_sweep(sweep);
        if (*enumerate_cmd) return run_enumerate(enumerate);
        if (*verify_cmd) return run_verify(verify);
        if (*gen_cmd) {
            if (gen.spec.empty()) throw InputError("gen needs a family spec");
            return run_gen(gen);
        }
    } catch (const BoundViolation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return kExitBoundViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBoundViolation;
    }
    return kExitInputError;
}

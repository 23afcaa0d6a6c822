// hypdom command line tool: generate hypergraph families, evaluate the
// closed-form rules, construct witness partitions, solve exactly, verify
// partition files, and cross-check formulas against the solver.
//
// Exit codes: 0 success/valid, 1 invalid partition, 2 usage or parse error,
// 3 infeasible (no total dominating set), 4 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypdom/hypdom.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidPartition = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

struct FamilyOptions {
    std::string family;
    std::size_t n = 0, r = 0, x = 0, y = 0;
};

void add_family_options(CLI::App* cmd, FamilyOptions& opts) {
    cmd->add_option("family", opts.family, "family kind: complete | bipartite")
        ->required()
        ->check(CLI::IsMember({"complete", "bipartite"}));
    cmd->add_option("--n", opts.n, "vertex count (complete)");
    cmd->add_option("--r", opts.r, "edge size r")->required();
    cmd->add_option("--x", opts.x, "|X| (bipartite)");
    cmd->add_option("--y", opts.y, "|Y| (bipartite)");
}

hypdom::FamilyDescriptor to_descriptor(const FamilyOptions& opts) {
    if (opts.family == "complete") {
        if (opts.n == 0) hypdom::fail(hypdom::Errc::InvalidParams, "complete family needs --n");
        return hypdom::Complete{opts.n, opts.r};
    }
    if (opts.x == 0 || opts.y == 0)
        hypdom::fail(hypdom::Errc::InvalidParams, "bipartite family needs --x and --y");
    return hypdom::CompleteBipartite{opts.x, opts.y, opts.r};
}

hypdom::Quantity parse_quantity(const std::string& q) {
    if (q == "d") return hypdom::Quantity::D;
    if (q == "dt") return hypdom::Quantity::Dt;
    if (q == "ed") return hypdom::Quantity::Ed;
    return hypdom::Quantity::Edt;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) hypdom::fail(hypdom::Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) hypdom::fail(hypdom::Errc::ParseError, "cannot open '" + path + "' for writing");
    out << text;
}

hypdom::SolveBudget make_budget(double time_limit_s, std::uint64_t node_limit) {
    hypdom::SolveBudget budget;
    if (time_limit_s > 0) budget.time_limit = std::chrono::duration<double>(time_limit_s);
    if (node_limit > 0) budget.node_limit = node_limit;
    return budget;
}

hypdom::SolveResult solve_quantity(const hypdom::Hypergraph& h, hypdom::Quantity q,
                                   const hypdom::SolveBudget& budget) {
    switch (q) {
        case hypdom::Quantity::D: return hypdom::domatic_number(h, budget);
        case hypdom::Quantity::Dt: return hypdom::total_domatic_number(h, budget);
        case hypdom::Quantity::Ed: return hypdom::edge_domatic_number(h, budget);
        case hypdom::Quantity::Edt: return hypdom::total_edge_domatic_number(h, budget);
    }
    hypdom::fail(hypdom::Errc::InvalidParams, "unknown quantity");
}

std::string format_formula(const hypdom::FormulaResult& fr) {
    if (fr.kind == hypdom::BoundKind::NotApplicable)
        return std::string("NotApplicable (") + fr.citation + ")";
    return std::string(hypdom::bound_kind_name(fr.kind)) + " " + std::to_string(fr.value) + " (" +
           fr.citation + ")";
}

int run_verify(const std::string& hg_path, const std::string& part_path) {
    hypdom::Hypergraph h = hypdom::parse_hgf(read_input(hg_path));
    hypdom::DomaticPartition p = hypdom::parse_partition(read_input(part_path));
    hypdom::AdjacencyStructure a =
        p.kind == hypdom::GroundSet::Vertex ? hypdom::two_section(h) : hypdom::line_graph(h);
    hypdom::ValidationReport report = hypdom::validate_partition(a, p);
    if (report.valid) {
        std::cout << "valid: " << p.classes.size() << " classes\n";
        return kExitOk;
    }
    if (!report.coverage_ok)
        std::cout << "invalid: classes do not partition the ground set\n";
    for (const auto& f : report.failures)
        std::cout << "invalid: class " << f.class_index << " is not "
                  << (f.reason == hypdom::FailureReason::NotTotalDominating ? "total " : "")
                  << "dominating (witness item " << f.witness << ")\n";
    return kExitInvalidPartition;
}

int run_crosscheck(std::size_t max_n, std::uint64_t node_limit, double time_limit_s,
                   const std::string& out_path) {
    std::ostringstream out;
    out << "family\tquantity\tkind\tformula\tcitation\tsolver\tagreement\n";
    hypdom::SolveBudget budget = make_budget(time_limit_s, node_limit);

    auto emit = [&](const hypdom::FamilyDescriptor& f) {
        hypdom::Hypergraph h = hypdom::realize(f);
        for (hypdom::Quantity q : {hypdom::Quantity::D, hypdom::Quantity::Dt, hypdom::Quantity::Ed,
                                   hypdom::Quantity::Edt}) {
            hypdom::FormulaResult fr = hypdom::formula(f, q);
            std::string solver;
            std::optional<std::size_t> value;
            bool infeasible = false;
            try {
                hypdom::SolveResult res = solve_quantity(h, q, budget);
                if (res.optimal) {
                    value = res.value;
                    solver = std::to_string(res.value);
                } else {
                    solver = "SKIPPED";
                }
            } catch (const hypdom::Error& e) {
                if (e.code() != hypdom::Errc::Infeasible) throw;
                infeasible = true;
                solver = "INFEASIBLE";
            }
            bool agree = true;
            if (fr.kind == hypdom::BoundKind::Exact)
                agree = infeasible ? false : (!value || *value == fr.value);
            else if (fr.kind == hypdom::BoundKind::LowerBound)
                agree = infeasible ? false : (!value || fr.value <= *value);
            out << hypdom::family_name(f) << "\t" << hypdom::quantity_name(q) << "\t"
                << hypdom::bound_kind_name(fr.kind) << "\t"
                << (fr.kind == hypdom::BoundKind::NotApplicable ? "-" : std::to_string(fr.value))
                << "\t" << fr.citation << "\t" << solver << "\t" << (agree ? "true" : "false")
                << "\n";
        }
    };

    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t r = 1; r <= n; ++r) emit(hypdom::Complete{n, r});
    for (std::size_t a = 1; a <= max_n; ++a)
        for (std::size_t b = a; a + b <= max_n; ++b)
            for (std::size_t r = 2; r <= a + b; ++r) emit(hypdom::CompleteBipartite{a, b, r});

    write_output(out_path, out.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph domination toolkit"};
    app.require_subcommand(1);

    FamilyOptions gen_opts, formula_opts, construct_opts;
    std::string quantity, out_path, witness_path;
    std::string input_path, partition_path;
    double time_limit_s = 0.0;
    std::uint64_t node_limit = 0;
    bool deterministic = true;
    std::size_t max_n = 8;

    CLI::App* gen = app.add_subcommand("gen", "emit a family as an HGF file");
    add_family_options(gen, gen_opts);
    gen->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* formula_cmd = app.add_subcommand("formula", "closed-form value for a family");
    add_family_options(formula_cmd, formula_opts);
    formula_cmd->add_option("--quantity", quantity, "d | dt | ed | edt")
        ->required()
        ->check(CLI::IsMember({"d", "dt", "ed", "edt"}));

    CLI::App* construct = app.add_subcommand("construct", "emit a witness partition for a family");
    add_family_options(construct, construct_opts);
    construct->add_option("--quantity", quantity, "d | dt | ed | edt")
        ->required()
        ->check(CLI::IsMember({"d", "dt", "ed", "edt"}));
    construct->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* solve = app.add_subcommand("solve", "exact value for a hypergraph file");
    solve->add_option("input", input_path, "HGF file ('-' for stdin)")->required();
    solve->add_option("--quantity", quantity, "d | dt | ed | edt")
        ->required()
        ->check(CLI::IsMember({"d", "dt", "ed", "edt"}));
    solve->add_option("--witness", witness_path, "write the witness partition here");
    solve->add_option("--time-limit", time_limit_s, "time limit in seconds");
    solve->add_option("--node-limit", node_limit, "search node limit");
    solve->add_flag("--deterministic,!--no-deterministic", deterministic,
                    "deterministic search (default on; the search is single-threaded, so results "
                    "are deterministic either way)");

    CLI::App* verify = app.add_subcommand("verify", "validate a partition file");
    verify->add_option("hypergraph", input_path, "HGF file")->required();
    verify->add_option("partition", partition_path, "partition file")->required();

    CLI::App* crosscheck = app.add_subcommand("crosscheck", "sweep families, compare formula vs solver");
    crosscheck->add_option("--max-n", max_n, "largest vertex count (default 8)");
    crosscheck->add_option("--node-limit", node_limit,
                           "search node limit per solve (default 5000000)");
    crosscheck->add_option("--time-limit", time_limit_s,
                           "optional per-solve time limit in seconds (off by default; node "
                           "limits keep the output deterministic)");
    crosscheck->add_option("--out", out_path, "output path (default stdout)");
    crosscheck->add_flag("--deterministic,!--no-deterministic", deterministic,
                         "deterministic search (default on)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            hypdom::FamilyDescriptor f = to_descriptor(gen_opts);
            write_output(out_path, hypdom::write_hgf(hypdom::realize(f), hypdom::family_name(f)));
            return kExitOk;
        }
        if (formula_cmd->parsed()) {
            hypdom::FormulaResult fr =
                hypdom::formula(to_descriptor(formula_opts), parse_quantity(quantity));
            std::cout << format_formula(fr) << "\n";
            return kExitOk;
        }
        if (construct->parsed()) {
            hypdom::DomaticPartition p =
                hypdom::construct_partition(to_descriptor(construct_opts), parse_quantity(quantity));
            write_output(out_path, hypdom::write_partition(p));
            return kExitOk;
        }
        if (solve->parsed()) {
            hypdom::Hypergraph h = hypdom::parse_hgf(read_input(input_path));
            hypdom::SolveResult res =
                solve_quantity(h, parse_quantity(quantity), make_budget(time_limit_s, node_limit));
            std::cout << res.value << "\n";
            if (!witness_path.empty()) write_output(witness_path, hypdom::write_partition(res.witness));
            if (!res.optimal) {
                std::cerr << "budget exceeded: " << res.value << " is a lower bound only\n";
                return kExitBudget;
            }
            return kExitOk;
        }
        if (verify->parsed()) return run_verify(input_path, partition_path);
        if (crosscheck->parsed())
            return run_crosscheck(max_n, node_limit == 0 ? 5'000'000 : node_limit, time_limit_s,
                                  out_path);
    } catch (const hypdom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case hypdom::Errc::Infeasible: return kExitInfeasible;
            case hypdom::Errc::BudgetExceeded:
            case hypdom::Errc::SearchFailed: return kExitBudget;
            default: return kExitUsage;
        }
    }
    return kExitUsage;
}

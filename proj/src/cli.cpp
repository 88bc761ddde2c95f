#include "sgi/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgi/decomposition.hpp"
#include "sgi/lemma_checks.hpp"

namespace sgi {

namespace {

using ordered_json = nlohmann::ordered_json;

SignedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return SignedGraph::parse(buf.str());
}

ordered_json pairs_array(const PairSet& s) {
    ordered_json arr = ordered_json::array();
    for (const InertiaPair& x : s.items()) arr.push_back({x.p, x.q});
    return arr;
}

void print_set(std::ostream& out, const PairSet& s, const std::string& format) {
    if (format == "json")
        out << pairs_json(s) << "\n";
    else if (format == "grid")
        out << pairs_grid(s);
    else
        out << pairs_text(s) << "\n";
}

struct CommonFlags {
    std::string file;
    int budget = 100;
    std::uint64_t seed = 0;
    std::string format = "text";
};

OracleOptions to_oracle_options(const CommonFlags& flags) {
    OracleOptions opts;
    opts.budget = flags.budget;
    opts.seed = flags.seed;
    return opts;
}

int run_inertia(const CommonFlags& flags, const std::string& method, std::ostream& out) {
    const SignedGraph g = load_graph(flags.file);
    Decomposer dec(to_oracle_options(flags));
    if (method == "formula") {
        print_set(out, dec.formula_minimal(g), flags.format);
        return 0;
    }
    if (method == "oracle") {
        print_set(out, minimal(dec.oracle_inertia(g).pairs), flags.format);
        return 0;
    }
    const PairSet formula = dec.formula_minimal(g);
    const PairSet oracle = minimal(dec.oracle_inertia(g).pairs);
    const bool agree = cong(formula, oracle);
    if (flags.format == "json") {
        ordered_json j;
        j["formula"] = pairs_array(formula);
        j["oracle"] = pairs_array(oracle);
        j["cong"] = agree;
        out << j.dump(2) << "\n";
    } else if (flags.format == "grid") {
        out << "formula:\n" << pairs_grid(formula);
        out << "oracle:\n" << pairs_grid(oracle);
        out << "cong: " << (agree ? "true" : "false") << "\n";
    } else {
        out << "formula: " << pairs_text(formula) << "\n";
        out << "oracle: " << pairs_text(oracle) << "\n";
        out << "cong: " << (agree ? "true" : "false") << "\n";
    }
    return 0;
}

int run_oracle(const CommonFlags& flags, std::ostream& out) {
    const SignedGraph g = load_graph(flags.file);
    Decomposer dec(to_oracle_options(flags));
    const OracleReport report = dec.oracle_inertia(g);
    if (flags.format == "json") {
        ordered_json j;
        j["pairs"] = pairs_array(report.pairs);
        j["minimal"] = pairs_array(minimal(report.pairs));
        j["samples"] = report.samples;
        j["seed"] = report.seed;
        j["branches_total"] = report.branches_total;
        j["branches_run"] = report.branches_run;
        out << j.dump(2) << "\n";
    } else {
        out << "pairs: " << pairs_text(report.pairs) << "\n";
        out << "minimal: " << pairs_text(minimal(report.pairs)) << "\n";
        out << "samples: " << report.samples << "\n";
        out << "branches: " << report.branches_run << "/" << report.branches_total << "\n";
    }
    return 0;
}

int run_verify(const CommonFlags& flags, std::ostream& out) {
    const SignedGraph g = load_graph(flags.file);
    Decomposer dec(to_oracle_options(flags));
    const VerifyReport report = dec.verify_equivalence(g);
    out << verify_json(report);
    return report.ok() ? 0 : 1;
}

int run_witness(const CommonFlags& flags, int p, int q, std::ostream& out, std::ostream& err) {
    const SignedGraph g = load_graph(flags.file);
    Decomposer dec(to_oracle_options(flags));
    const PairSet frontier = dec.formula_minimal(g);
    const InertiaPair target{p, q};
    if (!frontier.contains(target)) {
        err << "pair (" << p << "," << q << ") is not on the formula frontier "
            << pairs_text(frontier) << "\n";
        return 1;
    }
    out << serialize(dec.witness_for_pair(g, target));
    return 0;
}

int run_decompose(const CommonFlags& flags, std::ostream& out) {
    const SignedGraph g = load_graph(flags.file);
    Decomposer dec(to_oracle_options(flags));
    const TreeNodePtr tree = dec.formula_tree(g);
    ordered_json j;
    j["graph"] = g.serialize();
    j["frontier"] = pairs_array(tree->frontier);
    j["tree"] = ordered_json::parse(tree_json(*tree));
    out << j.dump(2) << "\n";
    return 0;
}

int run_check_lemmas(const LemmaCheckOptions& opts, std::ostream& out) {
    const LemmaCheckReport report = run_lemma_checks(opts);
    for (const auto& entry : report.entries) {
        out << entry.name << ": " << entry.trials << " trials, " << entry.failures
            << " failures" << (entry.failures == 0 ? " [ok]" : " [FAIL]") << "\n";
        if (!entry.first_failure.empty()) out << "  first failure: " << entry.first_failure << "\n";
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact inertia sets of signed multigraphs with a 1-separation"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string method = "formula";
    int wp = 0, wq = 0;
    LemmaCheckOptions lemma_opts;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("file", flags.file, "graph file")->required();
        cmd->add_option("--budget", flags.budget, "random samples per sign branch")
            ->capture_default_str();
        cmd->add_option("--seed", flags.seed, "RNG seed")->capture_default_str();
        if (with_format)
            cmd->add_option("--format", flags.format, "output format")
                ->check(CLI::IsMember({"text", "json", "grid"}))
                ->capture_default_str();
    };

    CLI::App* inertia = app.add_subcommand("inertia", "minimal inertia pairs of a graph");
    add_common(inertia, true);
    inertia->add_option("--method", method, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}))
        ->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "sampling oracle report");
    add_common(oracle, true);

    CLI::App* verify = app.add_subcommand("verify", "compare formula frontier with the oracle");
    add_common(verify, false);

    CLI::App* witness = app.add_subcommand("witness", "witness matrix for a frontier pair");
    add_common(witness, false);
    witness->add_option("-p", wp, "positive eigenvalue count")->required();
    witness->add_option("-q", wq, "negative eigenvalue count")->required();

    CLI::App* decompose = app.add_subcommand("decompose", "separation tree with provenance");
    add_common(decompose, false);

    CLI::App* lemmas = app.add_subcommand("check-lemmas", "random-instance transform checks");
    lemmas->add_option("--trials", lemma_opts.trials, "instances per transform")
        ->capture_default_str();
    lemmas->add_option("--seed", lemma_opts.seed, "RNG seed")->capture_default_str();
    lemmas->add_option("--size-max", lemma_opts.size_max, "largest matrix size")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (inertia->parsed()) return run_inertia(flags, method, out);
        if (oracle->parsed()) return run_oracle(flags, out);
        if (verify->parsed()) return run_verify(flags, out);
        if (witness->parsed()) return run_witness(flags, wp, wq, out, err);
        if (decompose->parsed()) return run_decompose(flags, out);
        if (lemmas->parsed()) return run_check_lemmas(lemma_opts, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace sgi

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cce/cce.hpp"
#include "cce/digraph.hpp"
#include "cce/enumerate.hpp"
#include "cce/errors.hpp"
#include "cce/report.hpp"
#include "cce/shape.hpp"
#include "cce/synth.hpp"
#include "cce/verify.hpp"

namespace cce::cli {

namespace {

// "-" reads standard input.
Digraph read_digraph_arg(const std::string& path) {
    if (path == "-") return read_digraph(std::cin);
    return load_digraph(path);
}

UndirectedGraph read_graph_arg(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    return load_graph(path);
}

Shard parse_shard(const std::string& text) {
    const auto slash = text.find('/');
    Shard shard;
    try {
        if (slash == std::string::npos) throw std::invalid_argument("no slash");
        std::size_t used = 0;
        shard.index = std::stoi(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("index");
        const std::string total = text.substr(slash + 1);
        shard.total = std::stoi(total, &used);
        if (used != total.size()) throw std::invalid_argument("total");
    } catch (const std::logic_error&) {
        throw ParseError("shard must look like i/t, got '" + text + "'");
    }
    if (shard.total < 1 || shard.index < 0 || shard.index >= shard.total)
        throw ParseError("shard must satisfy 0 <= i < t, got '" + text + "'");
    return shard;
}

std::filesystem::path results_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CCE_RESULTS_DIR"); env && *env) return env;
    return "cce-results";
}

struct Options {
    std::string input;
    std::string spec;
    std::string output;
    bool dot = false;
    bool interval = false;

    bool minimal = false;
    bool structure = false;
    bool acyclic_props = false;
    bool laws = false;

    int n = 0;
    bool acyclic = false;
    bool labeled = false;
    bool list = false;
    std::string check;
    std::string shard = "0/1";
    int workers = 1;
    std::uint64_t random = 0;
    std::uint64_t seed = 1;
    std::string json;
    std::string results;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    int cce(bool competition) {
        const Digraph d = read_digraph_arg(o_.input);
        const UndirectedGraph g = competition ? competition_graph(d) : cce_graph(d);
        if (o_.dot)
            write_dot(out_, g);
        else
            write_graph(out_, g);
        return kExitOk;
    }

    int analyze() {
        const UndirectedGraph g = read_graph_arg(o_.input);
        out_ << "vertices=" << g.order() << "\n";
        out_ << "edges=" << g.edge_count() << "\n";
        out_ << "max_degree=" << g.max_degree() << "\n";
        ComponentSpec spec;
        try {
            spec = to_spec(g);
        } catch (const NotPathsAndCycles& e) {
            out_ << "spec=none\n";
            out_ << "realizable=no reason=" << to_string(RecognitionReason::NotPathsAndCycles) << "\n";
            err_ << "note: " << e.what() << "\n";
            return kExitOk;
        }
        out_ << "spec=" << spec << "\n";
        out_ << "components=" << spec.component_count() << "\n";
        out_ << "interval=" << (is_interval_bounded_degree(g) ? "yes" : "no") << "\n";
        out_ << "hole=" << (has_hole_bounded_degree(g) ? "yes" : "no") << "\n";
        const auto verdict = recognize_22(spec);
        out_ << "realizable=" << (verdict.answer ? "yes" : "no") << " reason=" << to_string(verdict.reason)
             << "\n";
        const auto interval = recognize_22_interval(spec);
        out_ << "realizable_interval=" << (interval.answer ? "yes" : "no")
             << " reason=" << to_string(interval.reason) << "\n";
        return kExitOk;
    }

    int recognize() {
        const ComponentSpec spec = ComponentSpec::parse(o_.spec);
        const auto verdict = o_.interval ? recognize_22_interval(spec) : recognize_22(spec);
        out_ << (verdict.answer ? "YES" : "NO") << " " << to_string(verdict.reason) << "\n";
        return verdict.answer ? kExitOk : kExitNo;
    }

    int synthesize() {
        const ComponentSpec spec = ComponentSpec::parse(o_.spec);
        Witness w;
        try {
            w = synthesize_witness(spec);
        } catch (const NotRealizable& e) {
            err_ << "error: " << e.what() << "\n";
            return kExitNo;
        }
        if (o_.output.empty() || o_.output == "-") {
            write_digraph(out_, w.digraph, w.recipe);
            return kExitOk;
        }
        std::ofstream file(o_.output);
        if (!file) throw Error("cannot write " + o_.output);
        write_digraph(file, w.digraph, w.recipe);
        out_ << "wrote=" << o_.output << " vertices=" << w.digraph.order()
             << " arcs=" << w.digraph.arc_count() << "\n";
        return kExitOk;
    }

    int verify() {
        const Digraph d = read_digraph_arg(o_.input);
        const bool any = o_.minimal || o_.structure || o_.acyclic_props || o_.laws;
        const bool is22 = is_bounded(d, kBound22);
        const bool acyclic22 = is22 && is_acyclic(d);
        out_ << "bounded=" << (is22 ? "yes" : "no") << "\n";
        out_ << "acyclic=" << (is_acyclic(d) ? "yes" : "no") << "\n";
        int code = kExitOk;
        std::vector<VerificationReport> reports;
        if (o_.minimal || (!any && acyclic22)) {
            const bool minimal = is_minimal(d);  // throws for non-(2,2) input
            out_ << "minimal=" << (minimal ? "yes" : "no") << "\n";
            if (!minimal && o_.minimal) code = kExitNo;
        }
        if (o_.structure || (!any && is22)) reports.push_back(check_structure_props(d));
        if (o_.acyclic_props || (!any && acyclic22)) reports.push_back(check_acyclic_props(d));
        if (o_.laws || !any) reports.push_back(check_cce_laws(d, Digraph(1)));
        if (!any && !is22) err_ << "note: degree bound exceeded; only the CCE laws apply\n";
        for (const auto& r : reports) {
            write_report_line(out_, r);
            for (const auto& v : r.violations) err_ << "violation: " << v.detail << "\n";
            if (!r.passed()) code = kExitNo;
        }
        return code;
    }

    int enumerate() {
        SweepOptions sweep{o_.workers, parse_shard(o_.shard)};
        if (o_.workers < 1) throw ParseError("--workers must be at least 1");
        std::vector<VerificationReport> reports;
        if (o_.check.empty()) {
            EnumerationConfig cfg;
            cfg.n = o_.n;
            cfg.acyclic = o_.acyclic;
            cfg.isomorph_reduction = !o_.labeled;
            cfg.shard = sweep.shard;
            const auto count = for_each_digraph(cfg, [&](const Digraph& d) {
                if (o_.list) out_ << format_digraph(d) << "\n";
            });
            out_ << "n=" << o_.n << " acyclic=" << (o_.acyclic ? "yes" : "no")
                 << " reduced=" << (cfg.isomorph_reduction ? "yes" : "no") << " shard=" << o_.shard
                 << " count=" << count << "\n";
            return kExitOk;
        }
        if (o_.check == "theorem13" || o_.check == "path-cycle") {
            reports.push_back(verify_path_cycle_characterization(o_.n, sweep));
        } else if (o_.check == "no-cycle") {
            reports.push_back(verify_small_acyclic_no_cycle(o_.n, sweep));
        } else if (o_.check == "props") {
            reports.push_back(verify_props_exhaustive(o_.n, o_.acyclic, sweep));
            if (o_.random > 0) reports.push_back(verify_props_random(o_.n, o_.random, o_.seed, sweep));
        } else {
            throw ParseError("unknown check '" + o_.check + "'");
        }
        return emit(reports);
    }

private:
    int emit(const std::vector<VerificationReport>& reports) {
        int code = kExitOk;
        for (const auto& r : reports) {
            write_report_line(out_, r);
            if (r.passed()) continue;
            code = kExitNo;
            const auto dir = results_dir(o_.results);
            const auto files = write_violation_files(r, dir);
            err_ << "note: " << r.violation_total << " violations of " << r.property << "; "
                 << files.size() << " examples written to " << dir.string() << "\n";
        }
        if (!o_.json.empty()) {
            std::ofstream file(o_.json);
            if (!file) throw Error("cannot write " + o_.json);
            write_report_json(file, reports);
        }
        return code;
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"CCE graphs of digraphs with in/out-degree at most two", "cce"};
    app.require_subcommand(1);
    Options o;

    auto* cce_cmd = app.add_subcommand("cce", "Print the CCE graph of a digraph file");
    cce_cmd->add_option("digraph", o.input, "digraph file, or - for stdin")->required();
    cce_cmd->add_flag("--dot", o.dot, "emit Graphviz DOT");

    auto* comp_cmd = app.add_subcommand("competition", "Print the competition graph of a digraph file");
    comp_cmd->add_option("digraph", o.input, "digraph file, or - for stdin")->required();
    comp_cmd->add_flag("--dot", o.dot, "emit Graphviz DOT");

    auto* analyze_cmd = app.add_subcommand("analyze", "Component spec and interval/hole verdicts of a graph");
    analyze_cmd->add_option("graph", o.input, "graph file, or - for stdin")->required();

    auto* recognize_cmd = app.add_subcommand("recognize", "Is a component spec a CCE graph of degree-two digraphs?");
    recognize_cmd->add_option("spec", o.spec, "e.g. \"C3 + 2xP1\"")->required();
    recognize_cmd->add_flag("--interval", o.interval, "additionally require an interval graph");

    auto* synth_cmd = app.add_subcommand("synthesize", "Write a witness digraph for a component spec");
    synth_cmd->add_option("spec", o.spec, "e.g. \"P2 + P3\"")->required();
    synth_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Run property checkers on a digraph file");
    verify_cmd->add_option("digraph", o.input, "digraph file, or - for stdin")->required();
    verify_cmd->add_flag("--minimal", o.minimal, "single-arc-deletion minimality");
    verify_cmd->add_flag("--structure", o.structure, "degree-two structure checks");
    verify_cmd->add_flag("--acyclic-props", o.acyclic_props, "acyclic-case checks");
    verify_cmd->add_flag("--laws", o.laws, "reversal/union/monotonicity laws");

    auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate small digraphs and run verification sweeps");
    enum_cmd->add_option("--n", o.n, "vertex count")->required()->check(CLI::Range(0, kMaxEnumerationOrder));
    enum_cmd->add_flag("--acyclic", o.acyclic, "acyclic digraphs only");
    enum_cmd->add_flag("--labeled", o.labeled, "every labeled digraph instead of one per isomorphism class");
    enum_cmd->add_flag("--list", o.list, "print each digraph");
    enum_cmd->add_option("--check", o.check, "theorem13 (alias path-cycle), no-cycle, or props");
    enum_cmd->add_option("--shard", o.shard, "work partition i/t");
    enum_cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    enum_cmd->add_option("--random", o.random, "with --check props: also run this many random samples");
    enum_cmd->add_option("--seed", o.seed, "seed for random samples");
    enum_cmd->add_option("--json", o.json, "also write the reports as JSON");
    enum_cmd->add_option("--results-dir", o.results, "where violating digraphs go (default $CCE_RESULTS_DIR)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    Runner runner(o, out, err);
    try {
        if (cce_cmd->parsed()) return runner.cce(false);
        if (comp_cmd->parsed()) return runner.cce(true);
        if (analyze_cmd->parsed()) return runner.analyze();
        if (recognize_cmd->parsed()) return runner.recognize();
        if (synth_cmd->parsed()) return runner.synthesize();
        if (verify_cmd->parsed()) return runner.verify();
        if (enum_cmd->parsed()) return runner.enumerate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace cce::cli

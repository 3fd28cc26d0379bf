// Command-line surface: wiener / distance / validate / export.
//
// Exit codes: 0 success, 1 engine disagreement or validation mismatches,
// 2 usage or parse error, 3 level cap or resource limit, 4 output I/O
// failure, 70 internal error.
#include <fstream>
#include <iostream>
#include <new>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "carpet/graph_io.hpp"
#include "carpet/report_io.hpp"
#include "carpet/wiener.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 70;

struct Config {
    int level = 1;
    std::string method = "formula";
    int workers = 0;  // 0: pick from CARPET_WORKERS or the hardware
    std::string format;
    std::string output;
    bool timings = false;
    bool progress = false;
    bool symmetry = false;
    bool table = false;
    bool exhaustive = false;
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    int word_cap = carpet::kDefaultWordCap;
    int oracle_cap = carpet::kDefaultOracleCap;
    std::vector<std::string> words;
};

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CARPET_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Writes through either stdout or --output; failures map to exit 4.
class Sink {
public:
    explicit Sink(const std::string& path) : path_(path) {
        if (!path_.empty()) {
            file_.open(path_, std::ios::binary);
            if (!file_) throw std::ios_base::failure("cannot open output file: " + path_);
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    void finish() {
        stream().flush();
        if (!stream()) throw std::ios_base::failure("error writing output");
    }

private:
    std::string path_;
    std::ofstream file_;
};

std::function<void(std::uint64_t, std::uint64_t)> progress_printer(bool enabled) {
    if (!enabled) return {};
    return [](std::uint64_t done, std::uint64_t total) {
        std::cerr << "progress: " << done << "/" << total << " pair distances\n";
    };
}

carpet::Method parse_method(const std::string& name) {
    if (name == "formula") return carpet::Method::formula;
    if (name == "oracle") return carpet::Method::oracle;
    return carpet::Method::both;
}

int cmd_wiener(const Config& cfg) {
    const int workers = resolve_workers(cfg.workers);
    const carpet::Method method = parse_method(cfg.method);
    std::vector<carpet::WienerReport> rows;
    if (cfg.table) {
        rows = carpet::make_table(cfg.level, workers, cfg.word_cap, cfg.oracle_cap);
    } else {
        rows.push_back(carpet::run_wiener(cfg.level, method, workers, cfg.word_cap,
                                          cfg.oracle_cap, cfg.symmetry,
                                          progress_printer(cfg.progress)));
    }
    Sink sink(cfg.output);
    if (cfg.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(carpet::report_to_json(r, cfg.timings));
        sink.stream() << j.dump(2) << '\n';
    } else {
        carpet::write_report_tsv_header(sink.stream(), cfg.timings);
        for (const auto& r : rows) carpet::write_report_tsv(sink.stream(), r, cfg.timings);
    }
    sink.finish();
    for (const auto& r : rows) {
        if (!r.agreed()) return kExitMismatch;
    }
    return kExitOk;
}

int cmd_distance(const Config& cfg) {
    const carpet::Word w1 = carpet::parse_word(cfg.words[0], cfg.level);
    const carpet::Word w2 = carpet::parse_word(cfg.words[1], cfg.level);
    const carpet::Method method = parse_method(cfg.method);
    const carpet::DistanceTrace trace = carpet::distance(w1, w2);

    std::optional<std::int64_t> oracle;
    if (method != carpet::Method::formula) {
        const carpet::AdjacencyGraph g = carpet::build_graph(cfg.level, cfg.oracle_cap);
        const auto s = g.find(carpet::word_to_point(w1));
        const auto t = g.find(carpet::word_to_point(w2));
        if (!s || !t) throw std::logic_error("embedded endpoint missing from oracle graph");
        oracle = carpet::bfs_from(g, *s)[*t];
    }

    Sink sink(cfg.output);
    if (cfg.format == "json") {
        nlohmann::json j = carpet::trace_to_json(w1, w2, trace);
        if (oracle) {
            j["oracle"] = *oracle;
            if (method == carpet::Method::both) j["agree"] = (*oracle == trace.value);
        }
        sink.stream() << j.dump(2) << '\n';
    } else {
        carpet::write_trace_text(sink.stream(), w1, w2, trace);
        if (oracle) {
            sink.stream() << "oracle=" << *oracle << '\n';
            if (method == carpet::Method::both) {
                sink.stream() << "agree=" << (*oracle == trace.value ? "true" : "false") << '\n';
            }
        }
    }
    sink.finish();
    if (method == carpet::Method::both && *oracle != trace.value) return kExitMismatch;
    return kExitOk;
}

int cmd_validate(const Config& cfg) {
    const int workers = resolve_workers(cfg.workers);
    const carpet::ValidationReport report =
        cfg.exhaustive
            ? carpet::validate_exhaustive(cfg.level, workers, cfg.oracle_cap)
            : carpet::validate_sampled(cfg.level, cfg.sample, cfg.seed, workers, cfg.oracle_cap);
    Sink sink(cfg.output);
    if (cfg.format == "json") {
        sink.stream() << carpet::validation_to_json(report, cfg.timings).dump(2) << '\n';
    } else {
        carpet::write_validation_text(sink.stream(), report, cfg.timings);
    }
    sink.finish();
    return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_export(const Config& cfg) {
    const carpet::AdjacencyGraph g = carpet::build_graph(cfg.level, cfg.oracle_cap);
    const carpet::VertexTable table = carpet::build_vertex_table(cfg.level, cfg.level);
    Sink sink(cfg.output);
    if (cfg.format == "dot") {
        carpet::write_dot(sink.stream(), g, table);
    } else if (cfg.format == "csv") {
        carpet::write_csv(sink.stream(), g, table);
    } else {
        carpet::write_edge_list(sink.stream(), g, table);
    }
    sink.finish();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener index of Sierpinski carpet graphs: word-metric engine, "
                 "BFS oracle, validation and exports"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* cmd, bool with_workers) {
        cmd->add_option("--level,-n", cfg.level, "graph level n (>= 1)")->required();
        cmd->add_option("--output,-o", cfg.output, "write the result to this file");
        if (with_workers) {
            cmd->add_option("--workers,-j", cfg.workers,
                            "worker threads (default: CARPET_WORKERS or hardware)")
                ->check(CLI::Range(1, 4096));
        }
    };

    CLI::App* wiener = app.add_subcommand("wiener", "compute the Wiener index");
    add_common(wiener, true);
    wiener->add_option("--method", cfg.method, "engine: formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}))
        ->capture_default_str();
    wiener->add_flag("--table", cfg.table, "emit rows for every level 1..n (formula, with "
                                           "oracle cross-checks within the cap)");
    wiener->add_flag("--symmetry", cfg.symmetry,
                     "sweep one vertex per dihedral orbit (bit-identical result)");
    wiener->add_flag("--progress", cfg.progress, "report progress on stderr");
    wiener->add_flag("--timings", cfg.timings, "include wall-clock seconds in the output");
    wiener->add_option("--format", cfg.format, "tsv (default) or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    wiener->add_option("--word-cap", cfg.word_cap, "enumeration level cap")
        ->capture_default_str();
    wiener->add_option("--oracle-cap", cfg.oracle_cap, "oracle graph level cap")
        ->capture_default_str();

    CLI::App* dist = app.add_subcommand("distance", "distance between two words with the "
                                                    "full decision trace");
    add_common(dist, false);
    dist->add_option("words", cfg.words, "the two words, e.g. a670 b432")
        ->expected(2)
        ->required();
    dist->add_option("--method", cfg.method, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}))
        ->capture_default_str();
    dist->add_option("--format", cfg.format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    dist->add_option("--oracle-cap", cfg.oracle_cap, "oracle graph level cap")
        ->capture_default_str();

    CLI::App* validate = app.add_subcommand("validate", "compare the word metric against BFS");
    add_common(validate, true);
    validate->add_flag("--exhaustive", cfg.exhaustive, "check every canonical vertex pair");
    validate->add_option("--sample", cfg.sample, "check this many sampled pairs")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(1) << 40));
    validate->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    validate->add_flag("--timings", cfg.timings, "include wall-clock seconds in the output");
    validate->add_option("--format", cfg.format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    validate->add_option("--oracle-cap", cfg.oracle_cap, "oracle graph level cap")
        ->capture_default_str();

    CLI::App* exp = app.add_subcommand("export", "write the graph as an edge list, DOT or CSV");
    add_common(exp, false);
    exp->add_option("--format", cfg.format, "edges, dot or csv")
        ->check(CLI::IsMember({"edges", "dot", "csv"}))
        ->required();
    exp->add_option("--oracle-cap", cfg.oracle_cap, "oracle graph level cap")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            if (cfg.exhaustive == (cfg.sample > 0)) {
                std::cerr << "validate needs exactly one of --exhaustive and --sample\n";
                return kExitUsage;
            }
            return cmd_validate(cfg);
        }
        if (wiener->parsed()) return cmd_wiener(cfg);
        if (dist->parsed()) return cmd_distance(cfg);
        if (exp->parsed()) return cmd_export(cfg);
        return kExitUsage;
    } catch (const carpet::CapError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return kExitResource;
    } catch (const carpet::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

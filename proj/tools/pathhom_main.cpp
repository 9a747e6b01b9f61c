#include "pathhom/digraph.hpp"
#include "pathhom/enumerate.hpp"
#include "pathhom/flow_graph.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/json_io.hpp"
#include "pathhom/metrics.hpp"
#include "pathhom/skeleton.hpp"
#include "pathhom/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitParseError = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitTruncated = 3;
constexpr int kExitFailedClaim = 4;

struct FieldMode {
    bool rational = true;
    std::uint64_t prime = pathhom::PrimeFieldElem::kDefaultPrime;
};

FieldMode parse_field_mode(const std::string& spec) {
    FieldMode mode;
    if (spec == "rationals") return mode;
    if (spec.rfind("prime", 0) == 0) {
        mode.rational = false;
        if (spec.size() > 5) {
            if (spec[5] != ':') throw CLI::ValidationError("--field", "expected prime[:p]");
            mode.prime = std::stoull(spec.substr(6));
        }
        return mode;
    }
    throw CLI::ValidationError("--field", "expected 'rationals' or 'prime[:p]'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

int run_analyze(const std::string& input, const std::string& format, int p_max, bool generators,
                bool as_json, const FieldMode& field, bool transform_loops,
                std::size_t path_cap) {
    pathhom::Digraph d;
    try {
        std::string text = read_file(input);
        pathhom::ParseResult parsed = format == "dot"
                                          ? pathhom::parse_dot_ex(text, transform_loops)
                                          : pathhom::parse_edge_list_ex(text, transform_loops);
        d = transform_loops ? pathhom::loop_transform(parsed) : parsed.graph;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }
    if (d.empty()) {
        std::cerr << "parse error: input contains no arcs or vertices\n";
        return kExitParseError;
    }

    try {
        pathhom::MetricReport report;
        report.graph_id = input;
        report.cyclomatic_number = pathhom::cyclomatic(d);
        if (field.rational) {
            report.betti = pathhom::betti(d, p_max, path_cap);
        } else {
            std::cerr << "warning: prime-field ranks are probabilistic; rerun with "
                         "--field rationals for exact results\n";
            report.betti = pathhom::betti_mod_p(d, p_max, field.prime, path_cap);
        }
        report.divergence = report.cyclomatic_number - report.betti.reduced[1];

        std::optional<pathhom::GeneratorSet> gens;
        if (generators) gens = pathhom::h1_generators(d, path_cap);

        if (as_json) {
            std::cout << pathhom::metric_report_json(d, report, gens ? &*gens : nullptr).dump()
                      << "\n";
        } else {
            std::cout << "graph: " << input << "\n"
                      << "vertices: " << d.num_vertices() << "  arcs: " << d.num_arcs() << "\n"
                      << "cyclomatic: " << report.cyclomatic_number << "\n";
            std::cout << "reduced_betti:";
            for (long b : report.betti.reduced) std::cout << ' ' << b;
            std::cout << (report.betti.complete ? "  (complete)" : "  (truncated at p_max)")
                      << "\n"
                      << "divergence (nu - reduced beta_1): " << report.divergence << "\n";
            if (gens) {
                std::cout << "h1 generators (" << gens->cycles.size() << "):\n";
                for (const auto& cycle : gens->cycles) {
                    std::cout << " ";
                    for (const auto& [j, coef] : cycle) {
                        const auto& arc = gens->arcs[static_cast<size_t>(j)];
                        std::cout << ' ' << coef << "*(" << d.label(arc[0]) << "->"
                                  << d.label(arc[1]) << ")";
                    }
                    std::cout << "\n";
                }
            }
        }
        return 0;
    } catch (const pathhom::PathCapExceeded& e) {
        std::cerr << "truncated: " << e.what() << "\n";
        std::cout << "{\"truncated\": true, \"vertices\": " << d.num_vertices()
                  << ", \"arcs\": " << d.num_arcs() << "}\n";
        return kExitTruncated;
    }
}

int run_generate(const std::string& kind, int count, std::uint64_t seed, int productions,
                 int gotos, int lines, const std::string& layers_spec,
                 const std::string& base_spec, int suspension_k, int p_max,
                 const std::string& out_dir) {
    namespace fs = std::filesystem;
    if (kind == "tower" || kind == "suspension") {
        pathhom::Digraph d;
        if (kind == "tower") {
            std::vector<int> layers;
            std::stringstream ss(layers_spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) layers.push_back(std::stoi(tok));
            d = pathhom::k_partite_tower(layers);
        } else {
            pathhom::Digraph base = base_spec == "twocycle"
                                        ? pathhom::two_cycle()
                                        : pathhom::parse_edge_list(read_file(base_spec));
            d = pathhom::suspension(base, suspension_k);
        }
        if (out_dir.empty()) {
            std::cout << d.to_edge_list();
        } else {
            fs::create_directories(out_dir);
            write_file(fs::path(out_dir) / (kind + ".edges"), d.to_edge_list());
        }
        return 0;
    }

    // Corpus kinds write one CFG per seed plus a JSON-lines manifest.
    // Analysis fans out across worker threads; output stays in seed order.
    fs::create_directories(out_dir);
    std::vector<pathhom::Skeleton> skeletons(static_cast<size_t>(count));
    std::vector<pathhom::MetricReport> reports(static_cast<size_t>(count));
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                std::uint64_t s = seed + static_cast<std::uint64_t>(i);
                auto& sk = skeletons[static_cast<size_t>(i)];
                sk = kind == "skeleton" ? pathhom::gen_structured_skeleton(s, productions)
                                        : pathhom::gen_goto_skeleton(s, gotos, lines);
                reports[static_cast<size_t>(i)] =
                    pathhom::compare(sk.cfg, p_max, kind + "_" + std::to_string(s));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
        }
    };
    unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    std::ofstream manifest(fs::path(out_dir) / "manifest.jsonl");
    for (int i = 0; i < count; ++i) {
        const auto& sk = skeletons[static_cast<size_t>(i)];
        std::string stem = kind + "_" + std::to_string(sk.seed);
        write_file(fs::path(out_dir) / (stem + ".skel"), pathhom::skeleton_to_text(sk.lines));
        write_file(fs::path(out_dir) / (stem + ".edges"), sk.cfg.to_edge_list());
        nlohmann::json row =
            pathhom::skeleton_manifest_row(sk, reports[static_cast<size_t>(i)]);
        if (kind == "skeleton") {
            row["n_productions"] = productions;
        } else {
            row["n_gotos"] = gotos;
            row["n_lines"] = lines;
        }
        manifest << row.dump() << "\n";
    }
    return 0;
}

int run_enumerate(int n, const std::string& filter, const std::string& out_dir) {
    auto family = pathhom::enumerate_outdeg2_family(n);
    auto records = pathhom::enumerate_2fg_progenitors(n);

    bool beta2_only = filter == "beta2-positive";
    std::vector<const pathhom::ProgenitorRecord*> selected;
    for (const auto& r : records) {
        if (!beta2_only || r.betti.reduced[2] > 0) selected.push_back(&r);
    }

    nlohmann::json summary;
    summary["n"] = n;
    summary["total"] = family.size();
    summary["progenitors"] = records.size();
    summary["filtered"] = selected.size();
    nlohmann::json profiles = nlohmann::json::array();
    for (const auto* r : selected) profiles.push_back(r->betti.reduced);
    summary["reduced_betti"] = profiles;

    if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir);
        int idx = 0;
        for (const auto* r : selected) {
            write_file(fs::path(out_dir) / ("progenitor_" + std::to_string(idx++) + ".edges"),
                       r->digraph.to_edge_list());
        }
        write_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
    }
    std::cout << summary.dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite) {
    std::vector<pathhom::ClaimResult> results;
    if (suite == "paper") {
        results = pathhom::verify_paper_suite();
    } else if (suite == "oracle") {
        results = pathhom::verify_oracle_suite();
    } else {
        results = pathhom::verify_series_suite();
    }
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.detail << "]\n";
    }
    return pathhom::all_passed(results) ? 0 : kExitFailedClaim;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path homology and cyclomatic complexity of control flow graphs"};
    app.set_version_flag("--version", "pathhom 0.1.0");
    app.require_subcommand(1);

    // analyze
    std::string input, format = "edge-list", field_spec = "rationals";
    int p_max = 3;
    bool generators = false, as_json = false, transform_loops = false;
    std::size_t path_cap = pathhom::kDefaultPathCap;
    auto* analyze = app.add_subcommand("analyze", "Betti numbers and cyclomatic complexity");
    analyze->add_option("input", input, "digraph file")->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"edge-list", "dot"}));
    analyze->add_option("--pmax", p_max)->check(CLI::PositiveNumber);
    analyze->add_flag("--generators", generators, "report an h1 generator basis");
    analyze->add_flag("--json", as_json);
    analyze->add_option("--field", field_spec, "rationals | prime[:p]");
    analyze->add_flag("--transform-loops", transform_loops,
                      "accept self-loops and expand them into 2-cycles");
    analyze->add_option("--path-cap", path_cap, "abort when |allowed paths| exceeds this");

    // generate
    std::string gen_kind, layers_spec = "2,2,2", base_spec = "twocycle", out_dir;
    int count = 1, productions = 20, gotos = 16, lines = 17, susp_k = 1, gen_pmax = 3;
    std::uint64_t seed = 0;
    auto* generate = app.add_subcommand("generate", "generate digraph corpora");
    generate->add_option("kind", gen_kind)
        ->required()
        ->check(CLI::IsMember({"skeleton", "goto", "tower", "suspension"}));
    generate->add_option("--count", count)->check(CLI::PositiveNumber);
    generate->add_option("--seed", seed);
    generate->add_option("--productions", productions)->check(CLI::PositiveNumber);
    generate->add_option("--gotos", gotos)->check(CLI::NonNegativeNumber);
    generate->add_option("--lines", lines)->check(CLI::PositiveNumber);
    generate->add_option("--layers", layers_spec, "comma-separated layer sizes");
    generate->add_option("--base", base_spec, "'twocycle' or an edge-list file");
    generate->add_option("--k", susp_k)->check(CLI::PositiveNumber);
    generate->add_option("--pmax", gen_pmax)->check(CLI::PositiveNumber);
    generate->add_option("--out", out_dir, "output directory");

    // enumerate
    int enum_n = 4;
    std::string filter, enum_out;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate 2FG progenitors");
    enumerate->add_option("--n", enum_n)->required()->check(CLI::Range(3, 7));
    enumerate->add_option("--filter", filter)->check(CLI::IsMember({"beta2-positive"}));
    enumerate->add_option("--out", enum_out, "output directory");

    // verify
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run reproduction suites");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"paper", "oracle", "series"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadFlags;
    }

    try {
        if (analyze->parsed()) {
            FieldMode field = parse_field_mode(field_spec);
            if (generators && !field.rational) {
                std::cerr << "error: --generators requires --field rationals\n";
                return kExitBadFlags;
            }
            return run_analyze(input, format, p_max, generators, as_json, field,
                               transform_loops, path_cap);
        }
        if (generate->parsed()) {
            if ((gen_kind == "skeleton" || gen_kind == "goto") && out_dir.empty()) {
                std::cerr << "error: generate " << gen_kind << " requires --out\n";
                return kExitBadFlags;
            }
            return run_generate(gen_kind, count, seed, productions, gotos, lines, layers_spec,
                                base_spec, susp_k, gen_pmax, out_dir);
        }
        if (enumerate->parsed()) return run_enumerate(enum_n, filter, enum_out);
        if (verify->parsed()) return run_verify(suite);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const pathhom::PathCapExceeded& e) {
        std::cerr << "truncated: " << e.what() << "\n";
        return kExitTruncated;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return 0;
}

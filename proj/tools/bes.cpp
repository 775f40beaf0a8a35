#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bes/constructors.hpp"
#include "bes/driver.hpp"
#include "bes/embedding.hpp"
#include "bes/error.hpp"
#include "bes/generators.hpp"
#include "bes/io.hpp"
#include "bes/lower_bounds.hpp"
#include "bes/oracle.hpp"
#include "bes/structure.hpp"
#include "bes/sunflower.hpp"
#include "bes/trace.hpp"

namespace {

using namespace bes;

enum Exit : int { ok = 0, rejected = 1, input = 2, exhausted = 3, timeout = 4, internal = 5 };

struct Globals {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string trace_path;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return read_text_file(path);
}

std::vector<Vertex> parse_list(const std::string& s) {
    std::vector<Vertex> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            auto x = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<Vertex>(x));
        } catch (const std::logic_error&) {
            throw InputError("bad vertex list \"" + s + "\"");
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + path);
}

// construct

struct ConstructArgs {
    std::string kind;
    std::uint32_t s = 16, t = 16, m = 2;
    std::uint64_t e = 512;
    std::optional<std::uint32_t> level;
    std::string input, provenance, core, cert, host_name = "host.h3";
    std::size_t r = 2;
};

int run_construct(const ConstructArgs& a, RunTrace& trace, const Globals& g) {
    StageTimer timer(trace, "construct", g.seed);
    timer.param("kind", a.kind);
    GluedHypergraph out;
    if (a.kind == "kst-plus") {
        out = build_kst_plus(a.s, a.t);
    } else if (a.kind == "tower") {
        auto levels = build_tower(TowerConfig{a.s, a.t, a.e});
        auto j = a.level.value_or(static_cast<std::uint32_t>(levels.size() - 1));
        if (j >= levels.size()) {
            throw InputError("tower has levels 0.." + std::to_string(levels.size() - 1));
        }
        out = levels[j];
        timer.param("level", std::int64_t{j});
    } else if (a.kind == "glue" || a.kind == "sunflower") {
        if (a.input.empty()) throw InputError("--input is required for " + a.kind);
        auto file = parse_hypergraph_file(read_input(a.input));
        if (a.kind == "glue") {
            if (!file.witness) throw InputError("glue needs a witness line in the input");
            out = glue_m(GluedHypergraph{file.hypergraph, file.witness, {}}, a.m);
        } else {
            auto core = VertexSubset::from_members(file.hypergraph.vertex_count(), parse_list(a.core));
            auto built = build_sunflower(file.hypergraph, core, a.r);
            if (!a.cert.empty()) {
                write_file(a.cert,
                           sunflower_certificate_json(built.certificate, a.host_name, built.host.content_hash()));
            }
            std::cout << serialize_hypergraph(built.host);
            timer.finish("ok");
            return ok;
        }
    } else {
        throw InputError("unknown construct kind " + a.kind);
    }
    std::cout << serialize_hypergraph_file(out.hypergraph, out.witness);
    if (!a.provenance.empty()) write_file(a.provenance, provenance_json(out));
    timer.param("vertices", static_cast<std::int64_t>(out.hypergraph.vertex_count()));
    timer.param("edges", static_cast<std::int64_t>(out.hypergraph.edge_count()));
    timer.finish("ok");
    return ok;
}

// verify

struct VerifyArgs {
    std::string cert, host;
};

int run_verify(const VerifyArgs& a, RunTrace& trace, const Globals& g) {
    StageTimer timer(trace, "verify", g.seed);
    auto file = parse_hypergraph_file(read_input(a.host));
    const auto& host = file.hypergraph;

    if (a.cert.empty()) {
        if (!file.witness) throw InputError("nothing to verify: give --cert or a host with a witness line");
        AnalysisOptions options;
        options.threads = g.threads;
        auto report = is_eligible(host, *file.witness, options);
        std::cout << "condition-i " << (report.condition_i ? "holds" : "fails") << "\n"
                  << "condition-ii " << (report.condition_ii ? "holds" : "fails") << "\n"
                  << "condition-iii " << (report.condition_iii.holds ? "holds" : "fails") << "\n"
                  << "condition-iv " << to_string(report.condition_iv.verdict) << "\n"
                  << "eligible " << to_string(report.eligible()) << "\n";
        timer.finish(to_string(report.eligible()));
        return report.eligible() == Verdict::holds ? ok : rejected;
    }

    auto cert = parse_certificate_json(read_input(a.cert), host.vertex_count());
    if (cert.host_hash != host.content_hash()) {
        std::cout << "invalid: host hash " << format_hash(host.content_hash()) << " does not match certificate "
                  << format_hash(cert.host_hash) << "\n";
        timer.finish("hash-mismatch");
        return rejected;
    }
    std::string verdict;
    if (cert.sunflower) {
        auto report = verify_sunflower(host, *cert.sunflower);
        verdict = report.valid ? "valid" : "invalid: " + report.violation;
        timer.param("type", std::string("sunflower"));
    } else {
        bool valid = verify_configuration(host, *cert.configuration);
        verdict = valid ? "valid" : "invalid: configuration recount failed";
        timer.param("type", std::string("configuration"));
    }
    std::cout << verdict << "\n";
    timer.finish(verdict);
    return verdict == "valid" ? ok : rejected;
}

// search

struct SearchArgs {
    std::string mode = "bes", host, pattern;
    std::int64_t e = 0, v = 0, budget_ms = 0;
    std::size_t limit = 1000;
    std::optional<std::uint32_t> seed_s, seed_t;
    std::optional<std::size_t> r;
    bool relaxed = false;
};

int run_search(const SearchArgs& a, RunTrace& trace, const Globals& g) {
    auto host = parse_hypergraph_file(read_input(a.host)).hypergraph;

    if (a.mode == "bes") {
        if (a.e <= 0) throw InputError("--e is required for --mode bes");
        DriverConfig cfg;
        cfg.seed_s = a.seed_s;
        cfg.seed_t = a.seed_t;
        cfg.r = a.r;
        cfg.relaxed_degree_conditions = a.relaxed;
        cfg.seed = g.seed;
        cfg.threads = g.threads;
        auto result = find_bes(host, a.e, cfg);
        for (const auto& rec : result.trace.records()) trace.add(rec);
        if (!result.found()) return exhausted;
        std::cout << configuration_certificate_json(*result.certificate, a.host);
        return ok;
    }

    if (a.mode == "oracle") {
        if (a.e <= 0 || a.v <= 0) throw InputError("--e and --v are required for --mode oracle");
        StageTimer timer(trace, "oracle", g.seed);
        timer.param("v", a.v).param("e", a.e).param("budget_ms", a.budget_ms);
        OracleOptions options;
        options.time_budget = std::chrono::milliseconds(a.budget_ms);
        options.threads = g.threads;
        auto result = brute_force_configuration(host, a.v, a.e, options);
        timer.param("nodes", static_cast<std::int64_t>(result.nodes));
        timer.finish(to_string(result.status));
        if (result.status == OracleStatus::timeout) return timeout;
        if (result.status == OracleStatus::exhausted) return exhausted;
        std::cout << configuration_certificate_json(*result.certificate, a.host);
        return ok;
    }

    if (a.mode == "embed") {
        if (a.pattern.empty()) throw InputError("--pattern is required for --mode embed");
        auto pattern = parse_hypergraph_file(read_input(a.pattern)).hypergraph;
        StageTimer timer(trace, "embed", g.seed);
        timer.param("limit", static_cast<std::int64_t>(a.limit));
        auto list = enumerate_embeddings(host, pattern, nullptr, a.limit, g.threads);
        timer.param("count", static_cast<std::int64_t>(list.embeddings.size()));
        timer.finish(list.truncated ? "truncated" : "complete");
        if (list.embeddings.empty()) return exhausted;
        nlohmann::ordered_json out;
        out["host"] = a.host;
        out["host_hash"] = format_hash(host.content_hash());
        out["pattern"] = a.pattern;
        out["count"] = list.embeddings.size();
        out["truncated"] = list.truncated;
        out["embeddings"] = list.embeddings;
        std::cout << out.dump() << "\n";
        return ok;
    }

    throw InputError("unknown search mode " + a.mode);
}

// generate

struct GenerateArgs {
    std::string kind;
    std::size_t n = 0;
    double density = 0.05;
    std::uint64_t e = 12;
    std::uint32_t s = 3, t = 4, copies = 4;
};

int run_generate(const GenerateArgs& a, RunTrace& trace, const Globals& g) {
    StageTimer timer(trace, "generate", g.seed);
    timer.param("kind", a.kind).param("n", static_cast<std::int64_t>(a.n));
    Hypergraph3 h;
    if (a.kind == "rs") {
        if (a.n < 1) throw InputError("--n must be at least 1 for rs");
        auto b = behrend_set(static_cast<std::int64_t>(a.n));
        timer.param("b_size", static_cast<std::int64_t>(b.members.size()));
        h = rs_hypergraph(b);
    } else if (a.kind == "random-linear") {
        h = random_linear(a.n, a.density, g.seed);
    } else if (a.kind == "planted") {
        PlantedConfig cfg;
        cfg.n = a.n;
        cfg.density = a.density;
        cfg.s = a.s;
        cfg.t = a.t;
        cfg.e = a.e;
        cfg.copies = a.copies;
        cfg.seed = g.seed;
        h = planted_host(cfg);
    } else {
        throw InputError("unknown generate kind " + a.kind);
    }
    std::cout << serialize_hypergraph(h);
    timer.param("edges", static_cast<std::int64_t>(h.edge_count()));
    timer.finish("ok");
    return ok;
}

// bench: results on stdout, timings on stderr

struct BenchArgs {
    std::string kind = "oracle";
    std::size_t n = 40;
    std::size_t repeat = 3;
};

int run_bench(const BenchArgs& a, RunTrace& trace, const Globals& g) {
    if (a.repeat < 1) throw InputError("--repeat must be positive");
    std::string summary;
    std::vector<double> times;
    for (std::size_t i = 0; i < a.repeat; ++i) {
        StageTimer timer(trace, "bench", g.seed);
        timer.param("kind", a.kind).param("n", static_cast<std::int64_t>(a.n));
        auto start = std::chrono::steady_clock::now();
        if (a.kind == "oracle") {
            auto h = rs_hypergraph(behrend_set(static_cast<std::int64_t>(a.n)));
            OracleOptions options;
            options.threads = g.threads;
            auto r = brute_force_configuration(h, 6, 3, options);
            summary = "oracle rs n=" + std::to_string(a.n) + " edges=" + std::to_string(h.edge_count()) +
                      " (6,3) " + to_string(r.status);
        } else if (a.kind == "embed") {
            auto host = random_linear(a.n, 0.5, g.seed);
            auto pattern = kst_plus_hypergraph(2, 2);
            auto list = enumerate_embeddings(host, pattern, nullptr, SIZE_MAX, g.threads);
            summary = "embed K22+ into random-linear n=" + std::to_string(a.n) +
                      " count=" + std::to_string(list.embeddings.size());
        } else if (a.kind == "tower") {
            auto levels = build_tower(TowerConfig{16, 16, static_cast<std::uint64_t>(a.n)});
            summary = "tower 16x16 e=" + std::to_string(a.n) + " levels=" + std::to_string(levels.size()) +
                      " top-edges=" + std::to_string(levels.back().hypergraph.edge_count());
        } else {
            throw InputError("unknown bench kind " + a.kind);
        }
        times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
        timer.finish("ok");
    }
    std::sort(times.begin(), times.end());
    std::cout << summary << "\n";
    std::cerr << "median " << times[times.size() / 2] << " ms over " << times.size() << " runs\n";
    return ok;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Brown-Erdos-Sos configuration toolkit", "bes"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--trace", g.trace_path, "Write the run trace (JSON lines) to this file");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build seed, glued and tower hypergraphs");
    construct->add_option("kind", ca.kind, "kst-plus | glue | tower | sunflower")
        ->required()
        ->check(CLI::IsMember({"kst-plus", "glue", "tower", "sunflower"}));
    construct->add_option("--s", ca.s, "Left side of K_{s,t}^+");
    construct->add_option("--t", ca.t, "Right side of K_{s,t}^+");
    construct->add_option("--e", ca.e, "Tower target edge count");
    construct->add_option("--level", ca.level, "Tower level to emit (default: top)");
    construct->add_option("--m", ca.m, "Copies for glue");
    construct->add_option("--input", ca.input, "Pattern file for glue and sunflower ('-' for stdin)");
    construct->add_option("--core", ca.core, "Sunflower core as a comma list");
    construct->add_option("--r", ca.r, "Sunflower petals");
    construct->add_option("--cert", ca.cert, "Write the sunflower certificate here");
    construct->add_option("--host-name", ca.host_name, "Host file name recorded in the certificate");
    construct->add_option("--provenance", ca.provenance, "Write the glue provenance sidecar here");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check a certificate, or a witness line, against a host");
    verify->add_option("--cert", va.cert, "Certificate JSON");
    verify->add_option("--host", va.host, "Host hypergraph file")->required();

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Look for configurations or embeddings");
    search->add_option("--mode", sa.mode, "bes | oracle | embed")->check(CLI::IsMember({"bes", "oracle", "embed"}));
    search->add_option("--host", sa.host, "Host hypergraph file")->required();
    search->add_option("--pattern", sa.pattern, "Pattern file for embed");
    search->add_option("--e", sa.e, "Edge count");
    search->add_option("--v", sa.v, "Vertex bound (oracle)");
    search->add_option("--budget-ms", sa.budget_ms, "Oracle time budget, 0 for none")->check(CLI::NonNegativeNumber);
    search->add_option("--limit", sa.limit, "Embedding limit");
    search->add_option("--seed-s", sa.seed_s, "Seed pattern K_{s,t}^+ left side (bes)");
    search->add_option("--seed-t", sa.seed_t, "Seed pattern right side (bes)");
    search->add_option("--r", sa.r, "Sunflower size (bes, default e)");
    search->add_flag("--relaxed", sa.relaxed, "Skip the high-degree count when cleaning (bes)");

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "Emit test hosts");
    generate->add_option("--kind", ga.kind, "rs | random-linear | planted")
        ->required()
        ->check(CLI::IsMember({"rs", "random-linear", "planted"}));
    generate->add_option("--n", ga.n, "Size parameter");
    generate->add_option("--density", ga.density, "Edge density for random and planted backgrounds")
        ->check(CLI::Range(0.0, 1.0));
    generate->add_option("--e", ga.e, "Planted tower target");
    generate->add_option("--s", ga.s, "Planted seed left side");
    generate->add_option("--t", ga.t, "Planted seed right side");
    generate->add_option("--copies", ga.copies, "Planted glue multiplicity");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Time a fixed workload");
    bench->add_option("--kind", ba.kind, "oracle | embed | tower")->check(CLI::IsMember({"oracle", "embed", "tower"}));
    bench->add_option("--n", ba.n, "Workload size");
    bench->add_option("--repeat", ba.repeat, "Repetitions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "bes: " << e.what() << "\n\n" << app.help();
        return input;
    }

    RunTrace trace;
    int code = internal;
    try {
        if (*construct) code = run_construct(ca, trace, g);
        else if (*verify) code = run_verify(va, trace, g);
        else if (*search) code = run_search(sa, trace, g);
        else if (*generate) code = run_generate(ga, trace, g);
        else if (*bench) code = run_bench(ba, trace, g);
    } catch (const InternalError& e) {
        std::cerr << "bes: internal error: " << e.what() << "\n";
        code = internal;
    } catch (const Error& e) {
        std::cerr << "bes: " << e.what() << "\n";
        code = input;
    } catch (const std::exception& e) {
        std::cerr << "bes: " << e.what() << "\n";
        code = internal;
    }

    if (*search) std::cerr << trace.to_jsonl();
    if (!g.trace_path.empty()) {
        try {
            write_file(g.trace_path, trace.to_jsonl());
        } catch (const Error& e) {
            std::cerr << "bes: " << e.what() << "\n";
            if (code == ok) code = input;
        }
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }

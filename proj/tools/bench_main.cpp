// bench: generate run-structured bitvectors, benchmark the structures over
// them, and intersect sorted id lists. CSV is the output contract of `run`.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zombit/bench.hpp"
#include "zombit/intersect.hpp"
#include "zombit/run_generator.hpp"

namespace {

using namespace zombit;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

RunDistribution parse_dist(const std::string& s) {
    if (s == "equal") return RunDistribution::kEqual;
    if (s == "notequal") return RunDistribution::kNotEqual;
    throw CLI::ValidationError("--dist", "expected 'equal' or 'notequal'");
}

BitBuffer load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    return BitBuffer::load(in);
}

std::vector<uint64_t> load_id_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open list file: " + path);
    std::vector<uint64_t> ids;
    uint64_t v;
    while (in >> v) ids.push_back(v);
    return ids;
}

int cmd_generate(uint64_t n, int run0_exp, const std::string& dist, uint64_t seed,
                 const std::string& out_path) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.run0_mean = std::pow(10.0, run0_exp);
    cfg.distribution = parse_dist(dist);
    cfg.seed = seed;

    GeneratedBits gen = generate(cfg);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    gen.bits.save(out);
    std::cout << "n=" << gen.bits.size() << " k=" << gen.stats.one_runs
              << " run0_mean=" << gen.stats.run0_mean << " run1_mean=" << gen.stats.run1_mean
              << " out=" << out_path << "\n";
    return 0;
}

int cmd_run(const std::string& input, bool use_gen, uint64_t n, int run0_exp,
            const std::string& dist, uint64_t data_seed, const std::string& structures,
            const std::string& ops, uint64_t queries, uint64_t seed, uint64_t rec_depth,
            const std::string& csv_path) {
    BitBuffer data;
    if (use_gen) {
        GeneratorConfig gcfg;
        gcfg.n = n;
        gcfg.run0_mean = std::pow(10.0, run0_exp);
        gcfg.distribution = parse_dist(dist);
        gcfg.seed = data_seed;
        data = generate(gcfg).bits;
    } else {
        data = load_dataset(input);
    }

    BenchConfig cfg;
    cfg.queries = queries;
    cfg.seed = seed;
    cfg.rec_depth = rec_depth;
    for (const auto& name : split_csv(structures)) {
        auto kind = parse_structure(name);
        if (!kind) {
            std::cerr << "error: unknown structure '" << name << "'\n";
            return 2;
        }
        cfg.structures.push_back(*kind);
    }
    for (const auto& name : split_csv(ops)) {
        auto op = parse_op(name);
        if (!op) {
            std::cerr << "error: unknown op '" << name << "'\n";
            return 2;
        }
        cfg.ops.push_back(*op);
    }

    auto results = run_bench(data, cfg);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!csv_path.empty()) {
        file.open(csv_path);
        if (!file) {
            std::cerr << "error: cannot open csv file: " << csv_path << "\n";
            return 1;
        }
        out = &file;
    }
    *out << BenchResult::csv_header() << "\n";
    for (const auto& r : results) *out << r.csv_row() << "\n";

    if (!checksums_consistent(results)) {
        std::cerr << "error: checksum mismatch across structures\n";
        return 3;
    }
    return 0;
}

int cmd_intersect(const std::string& lists, const std::string& backend_name) {
    auto backend = parse_structure(backend_name);
    if (!backend) {
        std::cerr << "error: unknown backend '" << backend_name << "'\n";
        return 2;
    }
    auto paths = split_csv(lists);
    if (paths.size() < 2) {
        std::cerr << "error: need at least two lists\n";
        return 2;
    }
    std::vector<PostingList> posting;
    posting.reserve(paths.size());
    for (const auto& p : paths) posting.push_back(PostingList::build(load_id_list(p), *backend));

    auto t0 = std::chrono::steady_clock::now();
    std::vector<uint64_t> result = posting.size() == 2
                                       ? intersect(posting[0], posting[1])
                                       : intersect_many(posting);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    for (uint64_t id : result) std::cout << id << "\n";
    std::cout << "count: " << result.size() << "\n";
    std::cout << "elapsed_ms: " << ms << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compact bitvector benchmark harness"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a run-structured bitvector dataset");
    uint64_t g_n = 10'000'000;
    int g_run0_exp = 3;
    std::string g_dist = "equal";
    uint64_t g_seed = 1;
    std::string g_out;
    gen->add_option("--n", g_n, "length in bits")->required();
    gen->add_option("--run0-exp", g_run0_exp, "mean 0-run length exponent, run0 = 10^e")->required();
    gen->add_option("--dist", g_dist, "run distribution: equal | notequal");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--out", g_out, "output dataset file")->required();

    // run
    auto* run = app.add_subcommand("run", "build structures and measure ops over a dataset");
    std::string r_input;
    bool r_gen = false;
    uint64_t r_n = 10'000'000;
    int r_run0_exp = 3;
    std::string r_dist = "equal";
    uint64_t r_data_seed = 1;
    std::string r_structures = "zombit,zombit-rec,oz,sdarray,plain";
    std::string r_ops = "succ,pred,rank,access";
    uint64_t r_queries = 1'000'000;
    uint64_t r_seed = 1;
    uint64_t r_rec_depth = 8;
    std::string r_csv;
    auto* input_opt = run->add_option("--input", r_input, "dataset file produced by generate");
    auto* gen_flag = run->add_flag("--gen", r_gen, "generate the dataset in-process");
    input_opt->excludes(gen_flag);
    run->add_option("--n", r_n, "length in bits (with --gen)");
    run->add_option("--run0-exp", r_run0_exp, "run0 = 10^e (with --gen)");
    run->add_option("--dist", r_dist, "equal | notequal (with --gen)");
    run->add_option("--data-seed", r_data_seed, "dataset seed (with --gen)");
    run->add_option("--structures", r_structures, "comma list: zombit,zombit-rec,oz,sdarray,plain");
    run->add_option("--ops", r_ops, "comma list: succ,pred,rank,access");
    run->add_option("--queries", r_queries, "random queries per op");
    run->add_option("--seed", r_seed, "query seed");
    run->add_option("--rec-depth", r_rec_depth, "max recursion depth for zombit-rec");
    run->add_option("--csv", r_csv, "CSV output file (stdout when omitted)");

    // intersect
    auto* isect = app.add_subcommand("intersect", "intersect newline-delimited sorted id lists");
    std::string i_lists;
    std::string i_backend = "zombit";
    isect->add_option("--lists", i_lists, "comma-separated list files")->required();
    isect->add_option("--backend", i_backend, "zombit | zombit-rec | oz | sdarray | plain");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(g_n, g_run0_exp, g_dist, g_seed, g_out);
        if (run->parsed()) {
            if (r_input.empty() && !r_gen) {
                std::cerr << "error: need --input FILE or --gen\n";
                return 2;
            }
            return cmd_run(r_input, r_gen, r_n, r_run0_exp, r_dist, r_data_seed, r_structures,
                           r_ops, r_queries, r_seed, r_rec_depth, r_csv);
        }
        if (isect->parsed()) return cmd_intersect(i_lists, i_backend);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

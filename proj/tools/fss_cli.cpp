// fss: solve TSPLIB EUC_2D instances with GRASP or fixed set search, run
// benchmark suites and dump convergence traces.
//
// Exit codes: 0 ok, 1 usage, 2 input error, 3 internal invariant violation.

#include <fss/fss.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

enum ExitCode { ok = 0, usage = 1, input_error = 2, internal_error = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    fss::FssParams params;
    std::size_t budget = 0;
    std::string known_best_file;
    bool no_timings = false;
};

void add_params(CLI::App* cmd, Common& c) {
    auto& p = c.params;
    cmd->add_option("--budget", c.budget, "Evaluations per run (default 100|V| below 1000 nodes, else 10|V|)");
    cmd->add_option("--k", p.k, "Tours sampled for each fixed set")->capture_default_str();
    cmd->add_option("--n", p.n, "Elite pool the sample is drawn from")->capture_default_str();
    cmd->add_option("--m", p.m, "Elite pool the base tour is drawn from")->capture_default_str();
    cmd->add_option("--stag", p.stag, "Stagnation window")->capture_default_str();
    cmd->add_option("--rcl", p.rcl_size, "Neighbour list / RCL size")->capture_default_str();
    cmd->add_option("--init-pop", p.init_population, "GRASP iterations before fixing")->capture_default_str();
    cmd->add_option("--min-free", p.min_free, "Free nodes left by the largest fixed set")->capture_default_str();
    cmd->add_option("--known-best", c.known_best_file, "File of `name length` lines overriding known bests");
    cmd->add_flag("--no-timings", c.no_timings, "Leave wall-clock columns empty (reproducible output)");
}

fss::KnownBest load_known_best(const Common& c) {
    if (c.known_best_file.empty())
        return {};
    return fss::KnownBest::from_text(fss::tsplib::read_file(c.known_best_file));
}

std::vector<fss::MethodSpec> parse_methods(const std::vector<std::string>& names) {
    std::vector<fss::MethodSpec> out;
    for (const auto& name : names) {
        auto spec = fss::parse_method_spec(name);
        if (!spec)
            throw UsageError("unknown method `" + name + "` (expected grasp-2opt, grasp-3opt, fss-2opt or fss-3opt)");
        out.push_back(*spec);
    }
    return out;
}

/// Budget and population clamp for one instance; throws UsageError on bad
/// parameter combinations.
fss::FssParams finalize(const Common& c, std::size_t dimension, fss::LocalSearchKind ls, std::uint64_t seed) {
    fss::FssParams p = c.params;
    p.local_search = ls;
    p.seed = seed;
    p.max_solutions = c.budget ? c.budget : fss::default_budget(dimension);
    if (c.budget)
        p.init_population = std::min(p.init_population, p.max_solutions);
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return p;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw fss::tsplib::IoError("cannot write " + path);
    return out;
}

struct SolveArgs {
    Common common;
    std::string instance;
    std::string method = "fss";
    std::string ls = "3opt";
    std::uint64_t seed = 1;
    std::string convergence_out;
    std::string tour_out;
};

int cmd_solve(const SolveArgs& a) {
    auto method = fss::parse_method(a.method);
    auto ls = fss::parse_local_search(a.ls);
    if (!method || !ls)
        throw UsageError("--method must be grasp or fss and --ls 2opt or 3opt");
    auto known = load_known_best(a.common);
    auto raw = fss::tsplib::load_instance(a.instance);
    auto params = finalize(a.common, raw.dimension, *ls, a.seed);
    fss::Instance instance(std::move(raw), params.rcl_size);

    auto record = fss::solve(instance, *method, params);
    const fss::MethodSpec spec{*method, *ls};
    auto best_known = known.lookup(instance.name());

    std::cout << "instance     " << instance.name() << " (" << instance.size() << " nodes)\n"
              << "method       " << spec.name() << ", seed " << a.seed << "\n"
              << "evaluations  " << record.evaluations << " of " << params.max_solutions << "\n";
    if (*method == fss::Method::fss)
        std::cout << "size moves   " << record.size_switches << " switches, " << record.sizes_removed << " removed\n";
    std::cout << "best length  " << record.best_length() << "\n";
    if (best_known)
        std::cout << "known best   " << *best_known << "\n"
                  << "error        "
                  << fss::format_fixed(fss::round2(fss::relative_error(record.best_length(), *best_known))) << "%\n";
    if (!a.common.no_timings)
        std::cout << "time         " << fss::format_fixed(record.elapsed_ms() / 1000.0, 2) << " s\n";

    if (!a.convergence_out.empty()) {
        auto out = open_out(a.convergence_out);
        fss::write_convergence_csv(out, {{spec.name(), a.seed, &record}}, !a.common.no_timings);
    }
    if (!a.tour_out.empty()) {
        auto out = open_out(a.tour_out);
        out << fss::tsplib::serialize_tour(instance.name(), record.best.order(),
                                           "length " + std::to_string(record.best_length()));
    }
    return ok;
}

struct BenchArgs {
    Common common;
    std::string dir;
    std::vector<std::string> instances;
    std::vector<std::string> methods{"grasp-2opt", "fss-2opt", "grasp-3opt", "fss-3opt"};
    std::vector<std::uint64_t> seeds{1};
    std::size_t jobs = 1;
    std::string csv_out;
    std::string table_out;
};

int cmd_bench(const BenchArgs& a) {
    auto methods = parse_methods(a.methods);
    if (!std::filesystem::is_directory(a.dir))
        throw fss::tsplib::IoError("not a directory: " + a.dir);
    fss::SuiteConfig config;
    config.params = a.common.params;
    config.budget = a.common.budget;
    config.jobs = a.jobs;
    config.known_best = load_known_best(a.common);
    finalize(a.common, 1000, fss::LocalSearchKind::two_opt, 1); // parameter sanity only

    std::vector<fss::SuiteTask> tasks;
    for (const auto& path : fss::list_instances(a.dir)) {
        if (!a.instances.empty() &&
            std::find(a.instances.begin(), a.instances.end(), path.stem().string()) == a.instances.end())
            continue;
        for (const auto& m : methods)
            for (auto seed : a.seeds)
                tasks.push_back({path, m, seed});
    }
    auto report = fss::run_suite(tasks, config);
    const bool timings = !a.common.no_timings;
    if (!a.csv_out.empty()) {
        auto out = open_out(a.csv_out);
        fss::write_suite_csv(out, report, timings);
    }
    if (a.table_out.empty()) {
        fss::write_suite_table(std::cout, report, timings);
    } else {
        auto out = open_out(a.table_out);
        fss::write_suite_table(out, report, timings);
    }
    return ok;
}

struct ConvergenceArgs {
    Common common;
    std::string instance;
    std::vector<std::string> methods{"grasp-2opt", "fss-2opt"};
    std::vector<std::uint64_t> seeds{1};
    std::string out;
};

int cmd_convergence(const ConvergenceArgs& a) {
    auto methods = parse_methods(a.methods);
    auto raw = fss::tsplib::load_instance(a.instance);
    finalize(a.common, raw.dimension, fss::LocalSearchKind::two_opt, 1);
    fss::Instance instance(std::move(raw), a.common.params.rcl_size);

    std::vector<std::unique_ptr<fss::RunRecord>> records;
    std::vector<fss::ConvergenceGroup> groups;
    for (const auto& m : methods)
        for (auto seed : a.seeds) {
            auto params = finalize(a.common, instance.size(), m.local_search, seed);
            records.push_back(std::make_unique<fss::RunRecord>(fss::solve(instance, m.method, params)));
            groups.push_back({m.name(), seed, records.back().get()});
        }
    if (a.out.empty()) {
        fss::write_convergence_csv(std::cout, groups, !a.common.no_timings);
    } else {
        auto out = open_out(a.out);
        fss::write_convergence_csv(out, groups, !a.common.no_timings);
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GRASP and fixed set search for Euclidean TSPLIB instances"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
    solve_cmd->add_option("--instance,-i", solve.instance, "TSPLIB .tsp file")->required();
    solve_cmd->add_option("--method", solve.method, "grasp or fss")->capture_default_str();
    solve_cmd->add_option("--ls", solve.ls, "2opt or 3opt")->capture_default_str();
    solve_cmd->add_option("--seed", solve.seed)->capture_default_str();
    solve_cmd->add_option("--convergence-out", solve.convergence_out, "Write the best-so-far trace as CSV");
    solve_cmd->add_option("--tour-out", solve.tour_out, "Write the best tour as a TSPLIB tour file");
    add_params(solve_cmd, solve.common);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run every method and seed over a directory of instances");
    bench_cmd->add_option("dir", bench.dir, "Directory of .tsp files")->required();
    bench_cmd->add_option("--instances", bench.instances, "Restrict to these instance names")->delimiter(',');
    bench_cmd->add_option("--methods", bench.methods, "Comma-separated method list")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--seeds", bench.seeds, "Comma-separated seeds")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--jobs,-j", bench.jobs, "Parallel runs")->capture_default_str();
    bench_cmd->add_option("--csv", bench.csv_out, "Write rows as CSV");
    bench_cmd->add_option("--table", bench.table_out, "Write the text table here instead of stdout");
    add_params(bench_cmd, bench.common);

    ConvergenceArgs conv;
    auto* conv_cmd = app.add_subcommand("convergence", "Best-so-far traces for several methods and seeds");
    conv_cmd->add_option("--instance,-i", conv.instance, "TSPLIB .tsp file")->required();
    conv_cmd->add_option("--methods", conv.methods)->delimiter(',')->capture_default_str();
    conv_cmd->add_option("--seeds", conv.seeds)->delimiter(',')->capture_default_str();
    conv_cmd->add_option("--out,-o", conv.out, "CSV file (default stdout)");
    add_params(conv_cmd, conv.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(solve);
        if (*bench_cmd)
            return cmd_bench(bench);
        return cmd_convergence(conv);
    } catch (const UsageError& e) {
        std::cerr << "fss: " << e.what() << "\n";
        return usage;
    } catch (const fss::tsplib::TsplibError& e) {
        std::cerr << "fss: " << e.what() << "\n";
        return input_error;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "fss: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "fss: internal error: " << e.what() << "\n";
        return internal_error;
    }
}

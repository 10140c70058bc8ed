#pragma once

/// @file report.hpp
/// @brief Benchmark suites: method names, per-run rows, per-method aggregates,
/// CSV / text rendering and convergence traces.

#include <fss/engine.hpp>
#include <fss/instance.hpp>
#include <fss/tsplib.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

namespace fss {

/// A solver configuration as written on the command line, e.g. "fss-3opt".
struct MethodSpec {
    Method method = Method::fss;
    LocalSearchKind local_search = LocalSearchKind::three_opt;

    std::string name() const { return std::string(to_string(method)) + "-" + std::string(to_string(local_search)); }

    friend auto operator<=>(const MethodSpec&, const MethodSpec&) = default;
};

inline std::optional<Method> parse_method(std::string_view s) {
    if (s == "grasp")
        return Method::grasp;
    if (s == "fss")
        return Method::fss;
    return std::nullopt;
}

inline std::optional<LocalSearchKind> parse_local_search(std::string_view s) {
    if (s == "2opt")
        return LocalSearchKind::two_opt;
    if (s == "3opt")
        return LocalSearchKind::three_opt;
    return std::nullopt;
}

inline std::optional<MethodSpec> parse_method_spec(std::string_view s) {
    auto dash = s.find('-');
    if (dash == std::string_view::npos)
        return std::nullopt;
    auto method = parse_method(s.substr(0, dash));
    auto ls = parse_local_search(s.substr(dash + 1));
    if (!method || !ls)
        return std::nullopt;
    return MethodSpec{*method, *ls};
}

inline std::string format_fixed(double value, int decimals = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

/// Known-best lengths: the built-in reference table, optionally overridden
/// by a file of `name length` lines (`#` starts a comment).
class KnownBest {
  public:
    std::optional<std::int64_t> lookup(std::string_view name) const {
        if (auto it = overrides_.find(std::string(name)); it != overrides_.end())
            return it->second;
        return tsplib::known_best(name);
    }

    void set(std::string name, std::int64_t length) { overrides_[std::move(name)] = length; }

    static KnownBest from_text(std::string_view text) {
        KnownBest table;
        std::size_t line_no = 0;
        for (auto line : tsplib::detail::split_lines(text)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            auto fields = tsplib::detail::split_ws(line);
            if (fields.empty())
                continue;
            auto value = fields.size() == 2 ? tsplib::detail::parse_number<std::int64_t>(fields[1]) : std::nullopt;
            if (!value || *value <= 0)
                throw tsplib::ParseError("known-best line " + std::to_string(line_no) +
                                         ": expected `name length`, got `" + std::string(line) + "`");
            table.set(std::string(fields[0]), *value);
        }
        return table;
    }

  private:
    std::map<std::string, std::int64_t> overrides_;
};

/// One (instance, method, seed) run. A failed run keeps its error message
/// and has no length.
struct SuiteRow {
    std::string instance;
    std::size_t dimension = 0;
    std::string method;
    std::uint64_t seed = 0;
    std::optional<std::int64_t> best_length;
    std::optional<std::int64_t> known_best;
    std::size_t evaluations = 0;
    double wall_ms = 0.0;
    std::string error;

    bool ok() const noexcept { return error.empty(); }

    /// Rounded to two decimals, as reported.
    std::optional<double> relative_error() const {
        if (!best_length || !known_best)
            return std::nullopt;
        return round2(fss::relative_error(*best_length, *known_best));
    }
};

struct MethodAggregate {
    std::string method;
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::size_t with_known_best = 0;
    std::size_t hits = 0;
    double mean_error = 0.0;
};

struct SuiteReport {
    std::vector<SuiteRow> rows;

    void sort_rows() {
        std::stable_sort(rows.begin(), rows.end(), [](const SuiteRow& a, const SuiteRow& b) {
            return std::tie(a.instance, a.method, a.seed) < std::tie(b.instance, b.method, b.seed);
        });
    }

    /// Hits count rows at the known best; the mean is over the rows' rounded
    /// errors, so both can be recomputed from the CSV.
    std::vector<MethodAggregate> aggregates() const {
        std::map<std::string, MethodAggregate> by_method;
        std::map<std::string, double> sums;
        for (const auto& row : rows) {
            auto& agg = by_method[row.method];
            agg.method = row.method;
            ++agg.runs;
            if (!row.ok()) {
                ++agg.failures;
                continue;
            }
            if (auto err = row.relative_error()) {
                ++agg.with_known_best;
                sums[row.method] += *err;
                if (*row.best_length <= *row.known_best)
                    ++agg.hits;
            }
        }
        std::vector<MethodAggregate> out;
        for (auto& [name, agg] : by_method) {
            if (agg.with_known_best > 0)
                agg.mean_error = sums[name] / static_cast<double>(agg.with_known_best);
            out.push_back(agg);
        }
        return out;
    }
};

/// With `timings` off the wall-time column is left empty, making the output
/// a pure function of instances, methods, seeds and flags.
inline void write_suite_csv(std::ostream& out, const SuiteReport& report, bool timings = true) {
    out << "instance,dimension,method,seed,best_length,known_best,relative_error,evaluations,wall_ms,status\n";
    for (const auto& r : report.rows) {
        out << r.instance << ',' << r.dimension << ',' << r.method << ',' << r.seed << ',';
        if (r.best_length)
            out << *r.best_length;
        out << ',';
        if (r.known_best)
            out << *r.known_best;
        out << ',';
        if (auto err = r.relative_error())
            out << format_fixed(*err);
        out << ',' << r.evaluations << ',';
        if (timings)
            out << format_fixed(r.wall_ms, 1);
        out << ',';
        if (r.ok()) {
            out << "ok";
        } else {
            std::string msg = r.error;
            std::replace(msg.begin(), msg.end(), '"', '\'');
            out << "\"error: " << msg << '"';
        }
        out << '\n';
    }
}

inline void write_suite_table(std::ostream& out, const SuiteReport& report, bool timings = true) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"instance", "method", "seed", "best", "known", "error%", "evals"});
    if (timings)
        cells.front().push_back("time[s]");
    std::vector<std::string> failures;
    for (const auto& r : report.rows) {
        if (!r.ok()) {
            failures.push_back(r.instance + " " + r.method + " seed " + std::to_string(r.seed) + ": " + r.error);
            continue;
        }
        auto err = r.relative_error();
        std::vector<std::string> line{r.instance,
                                      r.method,
                                      std::to_string(r.seed),
                                      r.best_length ? std::to_string(*r.best_length) : "-",
                                      r.known_best ? std::to_string(*r.known_best) : "-",
                                      err ? format_fixed(*err) : "-",
                                      std::to_string(r.evaluations)};
        if (timings)
            line.push_back(format_fixed(r.wall_ms / 1000.0, 2));
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i)
            width[i] = std::max(width[i], line[i].size());
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            std::string pad(width[i] - line[i].size(), ' ');
            // Names left-aligned, numbers right-aligned.
            out << (i > 0 ? "  " : "") << (i < 2 ? line[i] + pad : pad + line[i]);
        }
        out << '\n';
    }
    for (const auto& f : failures)
        out << "FAILED " << f << '\n';
    out << '\n';
    for (const auto& agg : report.aggregates()) {
        out << agg.method << ": known-best hits " << agg.hits << "/" << agg.with_known_best
            << ", average relative error " << format_fixed(agg.mean_error) << "%";
        if (agg.failures > 0)
            out << ", " << agg.failures << " failed";
        out << '\n';
    }
}

/// Long-format best-so-far traces, one group per (method, seed).
struct ConvergenceGroup {
    std::string method;
    std::uint64_t seed = 0;
    const RunRecord* record = nullptr;
};

inline void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceGroup>& groups,
                                  bool timings = true) {
    out << "method,seed,evaluation_index,best_so_far,elapsed_ms\n";
    for (const auto& g : groups)
        for (const auto& t : g.record->trace) {
            out << g.method << ',' << g.seed << ',' << t.evaluation << ',' << t.best_so_far << ',';
            if (timings)
                out << format_fixed(t.elapsed_ms, 3);
            out << '\n';
        }
}

/// One unit of suite work.
struct SuiteTask {
    std::filesystem::path instance_path;
    MethodSpec method;
    std::uint64_t seed = 1;
};

/// Budget and solver parameters for a suite; `budget` 0 means the size rule.
struct SuiteConfig {
    FssParams params;
    std::size_t budget = 0;
    std::size_t jobs = 1;
    KnownBest known_best;
};

/// Runs one task, turning any exception into a failed row.
inline SuiteRow run_task(const SuiteTask& task, const SuiteConfig& config) {
    SuiteRow row;
    row.instance = task.instance_path.stem().string();
    row.method = task.method.name();
    row.seed = task.seed;
    try {
        auto raw = tsplib::load_instance(task.instance_path);
        if (!raw.name.empty())
            row.instance = raw.name;
        row.dimension = raw.dimension;
        row.known_best = config.known_best.lookup(row.instance);
        Instance instance(std::move(raw), config.params.rcl_size);
        FssParams params = config.params;
        params.local_search = task.method.local_search;
        params.seed = task.seed;
        params.max_solutions = config.budget ? config.budget : default_budget(instance.size());
        params.init_population = std::min(params.init_population, params.max_solutions);
        RunRecord record = solve(instance, task.method.method, params);
        row.best_length = record.best_length();
        row.evaluations = record.evaluations;
        row.wall_ms = record.elapsed_ms();
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

/// Runs every task on up to `config.jobs` threads; rows come back ordered by
/// (instance, method, seed) whatever the completion order.
inline SuiteReport run_suite(const std::vector<SuiteTask>& tasks, const SuiteConfig& config) {
    SuiteReport report;
    report.rows.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            report.rows[i] = run_task(tasks[i], config);
    };
    std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(tasks.size(), 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    report.sort_rows();
    return report;
}

/// `.tsp` files of a directory, sorted by file name.
inline std::vector<std::filesystem::path> list_instances(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".tsp")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace fss

#include <compat/commands.hpp>
#include <compat/oracle.hpp>
#include <compat/random.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

using nlohmann::ordered_json;
using std::string;
using std::vector;

namespace compat {

namespace {
    auto to_stdout(const string & path) -> bool { return path.empty() || path == "-"; }

    auto hex64(std::uint64_t value) -> string
    {
        std::ostringstream out;
        out << std::hex << std::setw(16) << std::setfill('0') << value;
        return out.str();
    }

    auto load(const string & path, std::ostream & err, string * bytes = nullptr) -> std::optional<Instance>
    {
        try {
            auto text = read_file(path);
            auto inst = parse_instance(text);
            if (bytes)
                *bytes = std::move(text);
            return inst;
        } catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
            return std::nullopt;
        }
    }
}

auto cmd_generate(const GenSpec & spec, const string & out_path, bool json, std::ostream & out, std::ostream & err)
    -> int
{
    GeneratedInstance inst;
    try {
        inst = generate(spec);
    } catch (const std::invalid_argument & e) {
        err << "invalid parameters: " << e.what() << '\n';
        return exit_bad_input;
    }
    vector<string> comments{"family " + spec.family};
    comments.insert(comments.end(), inst.notes.begin(), inst.notes.end());
    auto text = json ? emit_instance_json(inst.graph, inst.system) : emit_instance_text(inst.graph, inst.system, comments);
    for (auto & note : inst.notes)
        err << "verified: " << note << '\n';
    if (to_stdout(out_path)) {
        out << text;
        return 0;
    }
    try {
        write_file(out_path, text);
    } catch (const std::runtime_error & e) {
        err << e.what() << '\n';
        return exit_bad_input;
    }
    return 0;
}

auto cmd_solve(const string & in_path, const SolverConfig & config, const string & manifest_path, std::ostream & out,
    std::ostream & err) -> int
{
    string bytes;
    auto inst = load(in_path, err, &bytes);
    if (! inst)
        return exit_bad_input;
    try {
        config.validate();
    } catch (const ConfigError & e) {
        err << "invalid config: " << e.what() << '\n';
        return exit_bad_input;
    }

    auto start = std::chrono::steady_clock::now();
    auto report = solve(inst->graph, inst->system, config);
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    // Independent check before anything is printed.
    if (report.cycle && ! is_compatible_hamilton_cycle(inst->graph, inst->system, *report.cycle)) {
        report.warnings.push_back("reported cycle failed verification and was dropped");
        report.cycle.reset();
        report.outcome = Outcome::unsolved;
        report.certified = report.absence_certified;
    }
    auto doc = report_to_json(report);
    out << doc.dump(2) << '\n';

    int code = report.outcome == Outcome::cycle ? exit_cycle
        : report.absence_certified              ? exit_no_cycle
                                                : exit_unsolved;
    if (! to_stdout(manifest_path)) {
        ordered_json manifest;
        manifest["command"] = "solve";
        manifest["input"] = in_path;
        manifest["input_hash"] = hex64(fnv1a64(bytes));
        manifest["config"] = config_to_json(config);
        manifest["outcome"] = {{"outcome", to_string(report.outcome)}, {"certified", report.certified},
            {"exit_code", code}, {"stage", report.stage}};
        manifest["timing_ms"] = elapsed;
        manifest["report"] = doc;
        try {
            write_file(manifest_path, manifest.dump(2) + "\n");
        } catch (const std::runtime_error & e) {
            err << e.what() << '\n';
        }
    }
    return code;
}

auto cmd_verify(const string & in_path, const string & cycle, std::ostream & out, std::ostream & err) -> int
{
    auto inst = load(in_path, err);
    if (! inst)
        return exit_bad_input;
    Cycle c;
    try {
        c = parse_cycle(cycle);
    } catch (const ParseError & e) {
        err << "bad cycle: " << e.what() << '\n';
        return exit_bad_input;
    }
    if (! is_hamilton_cycle(inst->graph, c)) {
        out << "invalid: not a Hamilton cycle\n";
        return 1;
    }
    if (! is_compatible_cycle(inst->graph, inst->system, c)) {
        out << "invalid: incompatible consecutive edges\n";
        return 1;
    }
    out << "valid\n";
    return 0;
}

auto cmd_oracle(const string & in_path, bool count_all, std::ostream & out, std::ostream & err) -> int
{
    auto inst = load(in_path, err);
    if (! inst)
        return exit_bad_input;
    auto result = exhaustive_compatible_hamilton(inst->graph, inst->system, count_all);
    ordered_json doc;
    doc["found"] = result.found;
    doc["cycle"] = result.cycle ? ordered_json(*result.cycle) : ordered_json(nullptr);
    doc["count"] = result.count ? ordered_json(*result.count) : ordered_json(nullptr);
    doc["nodes_explored"] = result.nodes_explored;
    out << doc.dump(2) << '\n';
    return result.found ? 0 : 1;
}

auto parse_delta_grid(const string & text) -> vector<int>
{
    auto spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    vector<int> result;
    string token;
    while (in >> token) {
        if (token == "max") {
            result.push_back(sweep_blocking);
            continue;
        }
        std::size_t used = 0;
        int value = -1;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size() || value < 0)
            throw ParseError("bad grid value '" + token + "'");
        result.push_back(value);
    }
    if (result.empty())
        throw ParseError("empty grid");
    return result;
}

auto sweep_threads(int requested, int trials) -> int
{
    int threads = std::max(1, requested);
    if (auto * cap = std::getenv("COMPAT_HC_THREADS")) {
        char * end = nullptr;
        auto value = std::strtol(cap, &end, 10);
        if (end != cap && *end == '\0' && value >= 1)
            threads = std::min<long>(threads, value);
    }
    return std::max(1, std::min(threads, trials));
}

auto run_sweep(const SweepSpec & spec) -> vector<SweepRow>
{
    if (spec.deltas.empty())
        throw std::invalid_argument("delta grid is empty");
    if (spec.trials < 1)
        throw std::invalid_argument("trials must be positive");

    vector<int> numeric;
    for (auto d : spec.deltas)
        if (d != sweep_blocking)
            numeric.push_back(d);
    std::sort(numeric.begin(), numeric.end());
    numeric.erase(std::unique(numeric.begin(), numeric.end()), numeric.end());

    struct Trial
    {
        int n = 0;
        vector<bool> found;
        vector<long> nodes;
    };
    vector<Trial> trials(spec.trials);
    vector<string> errors(spec.trials);

    auto run_trial = [&](int t) {
        auto base = spec.base;
        base.seed = mix_seed(spec.seed, static_cast<std::uint64_t>(t));
        base.delta = -1;
        auto inst = generate(base);
        auto & g = inst.graph;
        if (g.order() > spec.oracle_cutoff)
            throw std::invalid_argument("instance size exceeds the oracle cutoff");
        auto nested = gen_nested_systems(g, numeric, mix_seed(base.seed, 7));
        auto & trial = trials[t];
        trial.n = g.order();
        for (auto d : spec.deltas) {
            IncompatSystem f;
            if (d == sweep_blocking)
                f = gen_blocking_system(g, 0);
            else
                f = nested[std::lower_bound(numeric.begin(), numeric.end(), d) - numeric.begin()];
            auto result = exhaustive_compatible_hamilton(g, f);
            trial.found.push_back(result.found);
            trial.nodes.push_back(result.nodes_explored);
        }
    };

    int workers = sweep_threads(spec.threads, spec.trials);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < spec.trials; t = next++) {
            try {
                run_trial(t);
            } catch (const std::exception & e) {
                errors[t] = e.what();
            }
        }
    };
    vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto & th : pool)
        th.join();
    for (auto & e : errors)
        if (! e.empty())
            throw std::invalid_argument(e);

    // Merge by trial index.
    vector<SweepRow> rows;
    for (std::size_t k = 0; k < spec.deltas.size(); ++k) {
        SweepRow row{spec.deltas[k], trials.front().n, spec.trials};
        long total_nodes = 0;
        for (auto & trial : trials) {
            row.found += trial.found[k] ? 1 : 0;
            total_nodes += trial.nodes[k];
            row.n = std::max(row.n, trial.n);
        }
        row.mean_oracle_nodes = static_cast<double>(total_nodes) / spec.trials;
        rows.push_back(row);
    }
    return rows;
}

auto sweep_csv(const vector<SweepRow> & rows) -> string
{
    std::ostringstream out;
    out << "delta,n,trials,fraction,mean_oracle_nodes\n";
    out << std::fixed;
    for (auto & row : rows) {
        if (row.delta == sweep_blocking)
            out << "max";
        else
            out << row.delta;
        out << ',' << row.n << ',' << row.trials << ',' << std::setprecision(4)
            << static_cast<double>(row.found) / row.trials << ',' << std::setprecision(2) << row.mean_oracle_nodes
            << '\n';
    }
    return out.str();
}

auto cmd_sweep(const SweepSpec & spec, std::ostream & out, std::ostream & err) -> int
{
    try {
        out << sweep_csv(run_sweep(spec));
        return 0;
    } catch (const std::invalid_argument & e) {
        err << "invalid sweep: " << e.what() << '\n';
        return exit_bad_input;
    }
}

} // namespace compat

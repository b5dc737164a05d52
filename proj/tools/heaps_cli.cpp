// Command-line harness: workload runs with metrics CSV, open-question
// probe datasets, and differential trace checking against the oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <map>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "heaps/differential.hpp"
#include "heaps/presortedness.hpp"
#include "heaps/workload.hpp"

namespace {

using heaps::GenKind;
using heaps::HeapKind;
using heaps::Mode;
using heaps::OpTrace;
using heaps::WorkloadSpec;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

HeapKind parse_heap(const std::string& s) {
    if (s == "fib") return HeapKind::Fib;
    if (s == "pairing") return HeapKind::Pairing;
    if (s == "oracle") return HeapKind::Oracle;
    throw CLI::ValidationError("--heap", "expected fib|pairing|oracle");
}

std::uint64_t parse_size_token(const std::string& tok) {
    if (tok.rfind("2^", 0) == 0) {
        return std::uint64_t{1} << std::stoul(tok.substr(2));
    }
    return std::stoull(tok);
}

// "2^8..2^16" -> powers of two; "256,512,700" -> the listed sizes
std::vector<std::uint64_t> parse_sizes(const std::string& text) {
    std::vector<std::uint64_t> sizes;
    if (auto pos = text.find(".."); pos != std::string::npos) {
        std::uint64_t lo = parse_size_token(text.substr(0, pos));
        std::uint64_t hi = parse_size_token(text.substr(pos + 2));
        if (lo == 0 || lo > hi) throw CLI::ValidationError("--sizes", "bad range");
        for (std::uint64_t v = lo; v <= hi; v *= 2) sizes.push_back(v);
        return sizes;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!tok.empty()) sizes.push_back(parse_size_token(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (sizes.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
    return sizes;
}

int cmd_run(const std::string& heap_s, const std::string& gen_s, std::uint64_t n,
            std::uint64_t seed, std::uint64_t trials, bool validate, const std::string& csv_path,
            const std::string& mode_s) {
    WorkloadSpec spec;
    spec.heap = parse_heap(heap_s);
    spec.gen = WorkloadSpec::parse_gen(gen_s, spec.param, spec.trace_path);
    spec.n = n;
    if (spec.gen == GenKind::TraceFile) {
        spec.mode = Mode::Replay;
    } else if (mode_s == "sort") {
        spec.mode = Mode::Sort;
    } else if (mode_s == "dijkstra") {
        spec.mode = Mode::DijkstraLike;
    } else {
        throw CLI::ValidationError("--mode", "expected sort|dijkstra");
    }

    std::vector<heaps::RunOutcome> outcomes(trials);
    std::int64_t t_count = static_cast<std::int64_t>(trials);
    // trials are independent; rows are emitted in trial order afterwards
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < t_count; ++t) {
        outcomes[static_cast<std::size_t>(t)] =
            heaps::run_workload(spec, seed + static_cast<std::uint64_t>(t), validate);
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!csv_path.empty()) {
        file.open(csv_path);
        if (!file) {
            std::cerr << "cannot open " << csv_path << " for writing\n";
            return kExitFailure;
        }
        out = &file;
    }
    *out << heaps::kMetricsCsvHeaderV1 << '\n';
    bool all_ok = true;
    for (const auto& oc : outcomes) {
        *out << oc.row.to_csv_line() << '\n';
        if (!oc.report.ok) {
            all_ok = false;
            std::cerr << "validation failed (seed " << oc.row.seed << ", op "
                      << oc.report.failed_op << "): " << oc.report.detail << '\n';
        }
    }
    return all_ok ? kExitOk : kExitFailure;
}

int cmd_diff(const std::string& trace_path, const std::string& subject_s) {
    HeapKind subject = parse_heap(subject_s);
    OpTrace trace = OpTrace::load_file(trace_path);
    heaps::DiffOptions opts;
    opts.validate_each_op = true;
    opts.shrink_on_failure = true;
    heaps::DiffReport rep = heaps::differential_run(trace, subject, opts);
    if (rep.ok) {
        std::cout << "PASS: " << trace.op_count() << " ops on " << heaps::heap_kind_name(subject)
                  << " match the oracle\n";
        return kExitOk;
    }
    std::cout << "FAIL at op " << rep.failed_op << ": " << rep.detail << "\n";
    std::cout << "minimized failing trace (" << rep.minimized.op_count() << " ops):\n"
              << rep.minimized.to_text();
    return kExitFailure;
}

double lg(double v) { return std::log2(v); }

int cmd_probe(const std::string& id, const std::string& sizes_s, std::uint64_t trials,
              std::uint64_t seed, const std::string& out_dir) {
    std::vector<std::uint64_t> sizes = parse_sizes(sizes_s);
    std::filesystem::create_directories(out_dir);
    std::ofstream csv(out_dir + "/" + id + ".csv");
    if (!csv) {
        std::cerr << "cannot write into " << out_dir << '\n';
        return kExitFailure;
    }
    json summary;
    summary["probe"] = id;
    summary["schema_version"] = 1;
    summary["note"] = "measured data only; no bound is asserted";

    auto make_spec = [&](HeapKind heap, GenKind gen, std::uint64_t param, std::uint64_t n,
                         Mode mode) {
        WorkloadSpec s;
        s.heap = heap;
        s.gen = gen;
        s.param = param;
        s.n = n;
        s.mode = mode;
        return s;
    };

    if (id == "pairing-degree") {
        csv << "n,seed,generator,workload,max_degree,lg_n,max_degree_per_lg_n\n";
        struct Agg {
            double worst = 0.0;
            double sum = 0.0;
            std::uint64_t rows = 0;
        };
        std::map<std::uint64_t, Agg> per_n_agg;
        for (GenKind gen : {GenKind::Random, GenKind::Sorted, GenKind::Reverse}) {
            WorkloadSpec base = make_spec(HeapKind::Pairing, gen, 0, 0, Mode::Sort);
            base.seed = seed;
            for (const heaps::DegreeProbeRow& row :
                 heaps::probe_degree_bound(sizes, trials, base)) {
                double ratio = row.n > 1 ? double(row.max_degree) / lg(double(row.n)) : 0.0;
                csv << row.n << ',' << row.seed << ',' << base.gen_string() << ','
                    << row.workload << ',' << row.max_degree << ',' << lg(double(row.n)) << ','
                    << ratio << '\n';
                Agg& agg = per_n_agg[row.n];
                agg.worst = std::max(agg.worst, ratio);
                agg.sum += ratio;
                ++agg.rows;
            }
        }
        json per_n = json::array();
        for (const auto& [n, agg] : per_n_agg) {
            per_n.push_back({{"n", n},
                             {"max_degree_per_lg_n_max", agg.worst},
                             {"max_degree_per_lg_n_mean", agg.sum / double(agg.rows)}});
        }
        summary["per_n"] = per_n;
    } else if (id == "fib-amortized") {
        csv << "n,seed,comparisons,n_lg_n,comparisons_per_n_lg_n\n";
        json per_n = json::array();
        for (std::uint64_t n : sizes) {
            double sum = 0.0;
            for (std::uint64_t t = 0; t < trials; ++t) {
                auto oc = heaps::run_workload(
                    make_spec(HeapKind::Fib, GenKind::Random, 0, n, Mode::Sort), seed + t, false);
                double denom = double(n) * lg(double(n));
                double ratio = denom > 0 ? double(oc.row.metrics.comparisons) / denom : 0.0;
                csv << n << ',' << (seed + t) << ',' << oc.row.metrics.comparisons << ',' << denom
                    << ',' << ratio << '\n';
                sum += ratio;
            }
            per_n.push_back({{"n", n}, {"comparisons_per_n_lg_n_mean", sum / double(trials)}});
        }
        summary["per_n"] = per_n;
    } else if (id == "nk") {
        csv << "heap,generator,n,k,comparisons,cost_per_nk,cost_per_n_lg_n\n";
        json fits = json::array();
        struct GenChoice {
            GenKind gen;
            std::uint64_t param;
        };
        const GenChoice gens[] = {{GenKind::Sorted, 0},
                                  {GenKind::Reverse, 0},
                                  {GenKind::Random, 0},
                                  {GenKind::Runs, 16},
                                  {GenKind::Sawtooth, 32}};
        for (HeapKind heap : {HeapKind::Fib, HeapKind::Pairing}) {
            for (const GenChoice& g : gens) {
                double sum_nk = 0.0, min_nk = 1e300, max_nk = 0.0;
                double sum_nlgn = 0.0;
                std::uint64_t count = 0;
                std::string gen_name = make_spec(heap, g.gen, g.param, 0, Mode::Sort).gen_string();
                for (std::uint64_t n : sizes) {
                    auto keys = heaps::generate_keys(g.gen, g.param, n, seed);
                    std::uint64_t k = heaps::local_min_depth(keys).k;
                    auto oc = heaps::run_workload(make_spec(heap, g.gen, g.param, n, Mode::Sort),
                                                  seed, false);
                    double cost = double(oc.row.metrics.comparisons);
                    double per_nk = k > 0 ? cost / (double(n) * double(k)) : 0.0;
                    double per_nlgn = n > 1 ? cost / (double(n) * lg(double(n))) : 0.0;
                    csv << heaps::heap_kind_name(heap) << ',' << gen_name << ',' << n << ',' << k
                        << ',' << oc.row.metrics.comparisons << ',' << per_nk << ',' << per_nlgn
                        << '\n';
                    sum_nk += per_nk;
                    sum_nlgn += per_nlgn;
                    min_nk = std::min(min_nk, per_nk);
                    max_nk = std::max(max_nk, per_nk);
                    ++count;
                }
                fits.push_back({{"heap", heaps::heap_kind_name(heap)},
                                {"generator", gen_name},
                                {"cost_per_nk_mean", sum_nk / double(count)},
                                {"cost_per_nk_min", min_nk},
                                {"cost_per_nk_max", max_nk},
                                {"cost_per_n_lg_n_mean", sum_nlgn / double(count)}});
            }
        }
        summary["fitted_ratios"] = fits;
    } else {
        throw CLI::ValidationError("--id", "expected fib-amortized|pairing-degree|nk");
    }

    std::ofstream js(out_dir + "/" + id + "_summary.json");
    js << summary.dump(2) << '\n';
    std::cout << "wrote " << out_dir << "/" << id << ".csv and " << id << "_summary.json\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive heap experiments"};
    app.require_subcommand(1);

    std::string heap_s = "fib", gen_s = "random", mode_s = "sort", csv_path;
    std::uint64_t n = 1024, seed = 1, trials = 1;
    bool validate = false;
    auto* run = app.add_subcommand("run", "replay a workload and emit metrics CSV");
    run->add_option("--heap", heap_s, "fib|pairing|oracle");
    run->add_option("--gen", gen_s, "random|sorted|reverse|runs:R|swaps:S|sawtooth:P|trace:FILE");
    run->add_option("--n", n, "workload size");
    run->add_option("--seed", seed, "base seed; trial t uses seed + t");
    run->add_option("--trials", trials, "independent trials");
    run->add_option("--mode", mode_s, "sort|dijkstra");
    run->add_flag("--validate", validate, "run structure validators after every operation");
    run->add_option("--csv", csv_path, "write rows to this file instead of stdout");

    std::string probe_id = "pairing-degree", sizes_s = "2^8..2^14", out_dir = "probe-out";
    std::uint64_t probe_trials = 5, probe_seed = 1;
    auto* probe = app.add_subcommand("probe", "emit open-question probe datasets (CSV + JSON)");
    probe->add_option("--id", probe_id, "fib-amortized|pairing-degree|nk");
    probe->add_option("--sizes", sizes_s, "e.g. 2^8..2^16 or 256,512");
    probe->add_option("--trials", probe_trials, "trials per size");
    probe->add_option("--seed", probe_seed, "base seed");
    probe->add_option("--out", out_dir, "output directory");

    std::string trace_path, subject_s = "fib";
    auto* diff = app.add_subcommand("diff", "differential-check a trace against the oracle");
    diff->add_option("--trace", trace_path, "trace file")->required();
    diff->add_option("--subject", subject_s, "fib|pairing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(heap_s, gen_s, n, seed, trials, validate, csv_path, mode_s);
        }
        if (probe->parsed()) {
            return cmd_probe(probe_id, sizes_s, probe_trials, probe_seed, out_dir);
        }
        if (diff->parsed()) {
            return cmd_diff(trace_path, subject_s);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const heaps::TraceParseError& e) {
        std::cerr << "trace error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const heaps::ContractViolation& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

#include "topt/circuit.hpp"
#include "topt/compiler.hpp"
#include "topt/errors.hpp"
#include "topt/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct OptimizeArgs {
    std::string file;
    std::string optimizer = "todd";
    std::string hadamard = "gadget";
    std::optional<std::size_t> h_cap;
    std::uint64_t seed = 0;
    std::size_t rm_limit = topt::kDefaultRmLimit;
    bool verify = false;
    bool keep_h = false;
    std::string out;
    std::string report = "json";
};

int run_optimize(const OptimizeArgs& a) {
    const topt::Circuit input = topt::load_circuit(a.file);
    topt::CompileOptions opts;
    opts.optimizer = {topt::parse_optimizer(a.optimizer), a.seed, a.rm_limit};
    if (a.hadamard == "partition") {
        opts.mode = topt::HadamardMode::Partition;
    } else if (a.hadamard != "gadget") {
        throw std::invalid_argument("--hadamard must be gadget or partition");
    }
    opts.h_cap = a.h_cap;
    opts.cancel_h = !a.keep_h;
    const topt::CompileResult res = topt::compile(input, opts);

    topt::BenchmarkRecord rec;
    rec.name = a.file;
    rec.n = input.n;
    rec.h = res.h;
    rec.n_p = res.n_p;
    rec.optimizer = a.optimizer;
    rec.t_before = res.t_before;
    rec.t_after = res.t_after;
    rec.t_ref = res.t_before;
    rec.saving_pct = res.t_before ? 100.0 * (double(res.t_before) - double(res.t_after)) / double(res.t_before) : 0.0;
    rec.seconds = res.seconds;
    rec.seed = a.seed;

    int code = kOk;
    if (a.verify) {
        if (res.output.qubits() <= topt::kMaxVerifyQubits) {
            const auto v = topt::verify_equivalence(topt::expand_to_clifford_t(input), res.output);
            rec.verified = v.equivalent;
            if (!v.equivalent) {
                std::cerr << "verification failed: worst infidelity " << v.worst_infidelity << '\n';
                code = kVerifyFailed;
            }
        } else {
            std::cerr << "verification skipped: " << res.output.qubits() << " qubits exceed the simulator cap\n";
        }
    }

    const std::string text = topt::emit(res.output);
    const std::string report = a.report == "csv" ? topt::to_csv({rec}) : topt::to_json({rec}) + "\n";
    if (a.out.empty()) {
        std::cout << text;
        std::cerr << report;
    } else {
        write_text(a.out, text);
        std::cout << report;
    }
    return code;
}

std::vector<std::size_t> parse_sizes(const std::vector<std::string>& items) {
    std::vector<std::size_t> out;
    for (const auto& item : items) {
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const std::size_t lo = std::stoul(item.substr(0, dots)), hi = std::stoul(item.substr(dots + 2));
            for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
        } else {
            out.push_back(std::stoul(item));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"T-count optimizer for Clifford+T circuits"};
    app.require_subcommand(1);

    OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "Optimize the T count of a circuit");
    optimize->add_option("file", opt.file, "Input circuit (.qc or native format)")->required()->check(CLI::ExistingFile);
    optimize->add_option("--optimizer", opt.optimizer, "re|tool-f|tool-nf|todd|rm")->capture_default_str();
    optimize->add_option("--hadamard", opt.hadamard, "gadget|partition")->capture_default_str();
    optimize->add_option("--h-cap", opt.h_cap, "Maximum Hadamard ancillas per block (0 = partition)");
    optimize->add_option("--seed", opt.seed, "Seed for randomized optimizers")->capture_default_str();
    optimize->add_option("--rm-limit", opt.rm_limit, "Variables at which TOOL switches to exact decoding (0 = never)")
        ->capture_default_str();
    optimize->add_flag("--verify", opt.verify, "Check channel equivalence by simulation");
    optimize->add_flag("--keep-h", opt.keep_h, "Do not cancel adjacent Hadamard pairs");
    optimize->add_option("--out", opt.out, "Output circuit file");
    optimize->add_option("--report", opt.report, "json|csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Run benchmarks");
    bench->require_subcommand(1);

    std::vector<std::string> ns = {"6..14"};
    std::size_t trials = 20;
    std::string optimizers = "re,tool-f,tool-nf,todd";
    std::uint64_t bench_seed = 1;
    std::size_t bench_rm_limit = topt::kDefaultRmLimit;
    std::string csv, json;
    auto* random = bench->add_subcommand("random", "Random signature tensors");
    random->add_option("--n", ns, "Sizes, e.g. 6 8 10 or 6..14")->delimiter(',')->capture_default_str();
    random->add_option("--trials", trials)->capture_default_str();
    random->add_option("--optimizers", optimizers, "Comma-separated list")->capture_default_str();
    random->add_option("--seed", bench_seed)->capture_default_str();
    random->add_option("--rm-limit", bench_rm_limit)->capture_default_str();
    random->add_option("--csv", csv, "CSV output file");
    random->add_option("--json", json, "JSON output file with scaling fits");

    std::string dir = "fixtures";
    std::string fixture_optimizer = "todd";
    bool no_verify = false;
    auto* fixtures = bench->add_subcommand("fixtures", "Vendored benchmark circuits");
    fixtures->add_option("--dir", dir)->capture_default_str()->check(CLI::ExistingDirectory);
    fixtures->add_option("--optimizer", fixture_optimizer)->capture_default_str();
    fixtures->add_option("--seed", bench_seed)->capture_default_str();
    fixtures->add_flag("--no-verify", no_verify);
    fixtures->add_option("--csv", csv, "CSV output file");
    fixtures->add_option("--json", json, "JSON output file");

    std::string original, compiled;
    auto* verify = app.add_subcommand("verify", "Check that a compiled circuit implements the original");
    verify->add_option("original", original)->required()->check(CLI::ExistingFile);
    verify->add_option("compiled", compiled)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*optimize) return run_optimize(opt);
        if (*random || *fixtures) {
            std::vector<topt::BenchmarkRecord> records;
            std::optional<topt::ScalingReport> report;
            if (*random) {
                topt::RandomBenchSpec spec;
                spec.ns = parse_sizes(ns);
                spec.trials = trials;
                spec.seed = bench_seed;
                spec.rm_limit = bench_rm_limit;
                std::string item;
                std::istringstream list(optimizers);
                while (std::getline(list, item, ',')) spec.optimizers.push_back(topt::parse_optimizer(item));
                records = topt::run_random_benchmark(spec);
                report = topt::scaling_report(records);
            } else {
                topt::FixtureBenchSpec spec;
                spec.dir = dir;
                spec.options.optimizer = {topt::parse_optimizer(fixture_optimizer), bench_seed, topt::kDefaultRmLimit};
                spec.verify = !no_verify;
                records = topt::run_fixture_benchmark(spec);
            }
            const std::string table = topt::to_csv(records);
            if (!csv.empty()) write_text(csv, table);
            if (!json.empty()) write_text(json, topt::to_json(records, report ? &*report : nullptr) + "\n");
            std::cout << table;
            if (report) {
                for (const auto& [name, fit] : report->fits) {
                    std::cerr << name << ": slope " << fit.slope << " +/- " << fit.stderr_slope << '\n';
                }
            }
            int code = kOk;
            for (const auto& r : records) {
                if (!r.error.empty()) {
                    std::cerr << r.name << " [" << r.optimizer << "]: " << r.error << '\n';
                    code = kVerifyFailed;
                }
            }
            return code;
        }
        if (*verify) {
            const topt::Circuit a = topt::expand_to_clifford_t(topt::load_circuit(original));
            const topt::Circuit b = topt::load_circuit(compiled);
            const auto rep = topt::verify_equivalence(a, b);
            std::cout << (rep.equivalent ? "equivalent" : "not equivalent") << " (branches " << rep.branches
                      << ", worst infidelity " << rep.worst_infidelity << ")\n";
            return rep.equivalent ? kOk : kVerifyFailed;
        }
    } catch (const topt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

#include "topt/harness.hpp"

#include "topt/errors.hpp"
#include "topt/preprocess.hpp"
#include "topt/simulator.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace topt {

SignatureTensor3 random_signature(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_signature: n must be positive");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(0.5);
    const SignatureTensor3 shape(n);
    BitVec v(shape.entry_count());
    for (std::size_t i = 0; i < v.size(); ++i) v.set(i, bit(rng));
    return SignatureTensor3::from_vector(n, v);
}

Circuit random_clifford_t_circuit(std::size_t n, std::size_t depth, std::size_t h_internal, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_clifford_t_circuit: n must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Circuit c(n);
        std::uniform_int_distribution<int> kind(0, n > 1 ? 2 : 1);
        for (std::size_t i = 0; i < depth; ++i) {
            switch (kind(rng)) {
                case 0: c.add(GateKind::S, {qubit(rng)}); break;
                case 1: c.add(GateKind::T, {qubit(rng)}); break;
                default: {
                    const std::size_t a = qubit(rng);
                    std::size_t b = qubit(rng);
                    while (b == a) b = qubit(rng);
                    c.add(GateKind::CNOT, {a, b});
                }
            }
        }
        for (std::size_t k = 0; k < h_internal; ++k) {
            std::uniform_int_distribution<std::size_t> pos(0, c.gates.size());
            c.gates.insert(c.gates.begin() + static_cast<std::ptrdiff_t>(pos(rng)),
                           Gate::make(GateKind::H, {qubit(rng)}));
        }
        if (internal_h_count(c) == h_internal) return c;
    }
    throw std::runtime_error("random_clifford_t_circuit: could not place the requested internal Hadamards");
}

EquivalenceReport verify_equivalence(const Circuit& original, const Circuit& compiled, std::size_t states,
                                     std::uint64_t seed) {
    if (original.has_measurements() || original.h != 0) {
        throw UnsupportedGate("verify_equivalence: original must be unitary on its data register");
    }
    if (original.n != compiled.n) throw std::invalid_argument("verify_equivalence: data registers differ");
    if (compiled.qubits() > kMaxVerifyQubits) {
        throw TooLarge("verify_equivalence: " + std::to_string(compiled.qubits()) + " qubits exceed the cap of " +
                       std::to_string(kMaxVerifyQubits));
    }
    const std::size_t n = original.n;
    const std::size_t dim = std::size_t{1} << n;
    EquivalenceReport rep;
    rep.equivalent = true;
    for (std::size_t s = 0; s < states; ++s) {
        const Statevector psi = Statevector::random(n, seed + s);
        const Statevector target = simulate(original, psi);
        for (const Branch& b : simulate_branches(compiled, psi)) {
            if (b.probability <= 1e-12) continue;
            ++rep.branches;
            // Overlap with target (x) anything on the ancillas, basis index = x + dim * y.
            double fidelity = 0.0;
            const std::size_t ancilla_states = b.state.amps.size() / dim;
            for (std::size_t y = 0; y < ancilla_states; ++y) {
                Amplitude acc = 0.0;
                for (std::size_t x = 0; x < dim; ++x) acc += std::conj(target.amps[x]) * b.state.amps[x + dim * y];
                fidelity += std::norm(acc);
            }
            const double infidelity = std::max(0.0, 1.0 - fidelity);
            rep.worst_infidelity = std::max(rep.worst_infidelity, infidelity);
            if (infidelity > kEquivalenceTolerance) rep.equivalent = false;
        }
    }
    return rep;
}

ScalingFit fit_scaling(const std::vector<ScalingPoint>& points) {
    std::vector<std::size_t> distinct;
    for (const auto& p : points) distinct.push_back(p.n);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) throw InsufficientData("fit_scaling: need at least 3 distinct n values");
    double sx = 0, sy = 0;
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        if (p.n == 0 || p.mean <= 0) throw InsufficientData("fit_scaling: n and mean must be positive");
        xs.push_back(std::log(static_cast<double>(p.n)));
        ys.push_back(std::log(p.mean));
        sx += xs.back();
        sy += ys.back();
    }
    const double k = static_cast<double>(xs.size());
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    ScalingFit fit;
    fit.slope = sxy / sxx;
    const double intercept = my - fit.slope * mx;
    double ssr = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + fit.slope * xs[i]);
        ssr += r * r;
    }
    fit.stderr_slope = xs.size() > 2 ? std::sqrt(ssr / (k - 2) / sxx) : 0.0;
    fit.ci_low = fit.slope - 1.96 * fit.stderr_slope;
    fit.ci_high = fit.slope + 1.96 * fit.stderr_slope;
    return fit;
}

ScalingReport scaling_report(const std::vector<BenchmarkRecord>& records) {
    std::map<std::string, std::map<std::size_t, std::vector<double>>> grouped;
    for (const auto& r : records) {
        if (r.error.empty()) grouped[r.optimizer][r.n].push_back(static_cast<double>(r.t_after));
    }
    ScalingReport rep;
    for (const auto& [opt, by_n] : grouped) {
        auto& pts = rep.points[opt];
        for (const auto& [n, ts] : by_n) {
            ScalingPoint p;
            p.n = n;
            p.trials = ts.size();
            for (double t : ts) p.mean += t;
            p.mean /= static_cast<double>(ts.size());
            double var = 0;
            for (double t : ts) var += (t - p.mean) * (t - p.mean);
            p.stderr_mean = ts.size() > 1 ? std::sqrt(var / static_cast<double>(ts.size() - 1) /
                                                      static_cast<double>(ts.size()))
                                          : 0.0;
            pts.push_back(p);
        }
        if (pts.size() >= 3) rep.fits[opt] = fit_scaling(pts);
    }
    return rep;
}

namespace {

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double saving(std::size_t ref, std::size_t after) {
    if (ref == 0) return 0.0;
    return 100.0 * (static_cast<double>(ref) - static_cast<double>(after)) / static_cast<double>(ref);
}

}  // namespace

std::vector<BenchmarkRecord> run_random_benchmark(const RandomBenchSpec& spec) {
    std::vector<BenchmarkRecord> out;
    for (std::size_t n : spec.ns) {
        for (std::size_t t = 0; t < spec.trials; ++t) {
            const std::uint64_t seed = spec.seed * 1000003ULL + n * 10007ULL + t;
            const SignatureTensor3 S = random_signature(n, seed);
            const std::size_t t_re = proper(re_expand(canonical_wp(S))).cols();
            for (OptimizerKind kind : spec.optimizers) {
                BenchmarkRecord r;
                r.name = "random_n" + std::to_string(n) + "_t" + std::to_string(t);
                r.n = n;
                r.n_p = 1;
                r.optimizer = optimizer_name(kind);
                r.t_before = t_re;
                r.t_ref = t_re;
                r.seed = seed;
                const auto start = std::chrono::steady_clock::now();
                try {
                    const GateSynthesisMatrix A = run_pipeline(S, {kind, seed, spec.rm_limit});
                    r.seconds = elapsed(start);
                    r.t_after = A.cols();
                    r.verified = signature_from_A(A) == S;
                    if (!*r.verified) r.error = "signature mismatch";
                } catch (const std::exception& e) {
                    r.seconds = elapsed(start);
                    r.error = e.what();
                }
                r.saving_pct = saving(r.t_ref, r.t_after);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::vector<BenchmarkRecord> run_fixture_benchmark(const FixtureBenchSpec& spec) {
    namespace fs = std::filesystem;
    std::vector<BenchmarkRecord> out;
    nlohmann::json meta = nlohmann::json::object();
    const fs::path meta_path = fs::path(spec.dir) / "fixtures.json";
    if (fs::exists(meta_path)) {
        std::ifstream in(meta_path);
        meta = nlohmann::json::parse(in);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(spec.dir)) {
        if (entry.path().extension() == ".qc" || entry.path().extension() == ".circ") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        BenchmarkRecord r;
        r.name = path.stem().string();
        r.optimizer = optimizer_name(spec.options.optimizer.kind);
        r.seed = spec.options.optimizer.seed;
        const std::string key = path.filename().string();
        if (meta.contains(key)) {
            const auto& m = meta[key];
            if (m.contains("name")) r.name = m["name"].get<std::string>();
            if (m.contains("best_prev")) r.t_ref = m["best_prev"].get<std::size_t>();
        }
        try {
            const Circuit c = load_circuit(path.string());
            r.n = c.n;
            const CompileResult res = compile(c, spec.options);
            r.h = res.h;
            r.n_p = res.n_p;
            r.t_before = res.t_before;
            r.t_after = res.t_after;
            r.seconds = res.seconds;
            if (r.t_ref == 0) r.t_ref = r.t_before;
            if (spec.verify && res.output.qubits() <= kMaxVerifyQubits) {
                r.verified = verify_equivalence(expand_to_clifford_t(c), res.output).equivalent;
                if (!*r.verified) r.error = "verification failed";
            }
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        r.saving_pct = saving(r.t_ref, r.t_after);
        out.push_back(std::move(r));
    }
    return out;
}

std::string csv_header() { return "name,n,h,Np,optimizer,T_before,T_after,saving_pct,seconds,seed"; }

std::string to_csv(const std::vector<BenchmarkRecord>& records) {
    std::ostringstream os;
    os << csv_header() << '\n';
    for (const auto& r : records) {
        os << r.name << ',' << r.n << ',' << r.h << ',' << r.n_p << ',' << r.optimizer << ',' << r.t_before << ','
           << r.t_after << ',' << std::fixed << std::setprecision(2) << r.saving_pct << ',' << std::setprecision(6)
           << r.seconds << ',' << r.seed << '\n';
        os.unsetf(std::ios::floatfield);
    }
    return os.str();
}

std::string to_json(const std::vector<BenchmarkRecord>& records, const ScalingReport* report) {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json e = {{"name", r.name},         {"n", r.n},
                            {"h", r.h},               {"Np", r.n_p},
                            {"optimizer", r.optimizer}, {"T_before", r.t_before},
                            {"T_after", r.t_after},   {"T_ref", r.t_ref},
                            {"saving_pct", r.saving_pct}, {"seconds", r.seconds},
                            {"seed", r.seed}};
        if (r.verified) e["verified"] = *r.verified;
        if (!r.error.empty()) e["error"] = r.error;
        j["records"].push_back(std::move(e));
    }
    if (report) {
        nlohmann::json s = nlohmann::json::object();
        for (const auto& [opt, pts] : report->points) {
            nlohmann::json entry;
            entry["points"] = nlohmann::json::array();
            for (const auto& p : pts) {
                entry["points"].push_back(
                    {{"n", p.n}, {"mean", p.mean}, {"stderr", p.stderr_mean}, {"trials", p.trials}});
            }
            if (auto it = report->fits.find(opt); it != report->fits.end()) {
                entry["slope"] = it->second.slope;
                entry["slope_stderr"] = it->second.stderr_slope;
                entry["slope_ci95"] = {it->second.ci_low, it->second.ci_high};
            }
            s[opt] = std::move(entry);
        }
        j["scaling"] = std::move(s);
    }
    return j.dump(2);
}

}  // namespace topt

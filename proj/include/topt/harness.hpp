#pragma once

#include "topt/circuit.hpp"
#include "topt/compiler.hpp"
#include "topt/optimizers.hpp"
#include "topt/phase.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topt {

// Entries drawn i.i.d. fair bits from mt19937_64 in to_vector order.
SignatureTensor3 random_signature(std::size_t n, std::uint64_t seed);

// `depth` gates from {S, T, CNOT} plus exactly `h_internal` internal H.
Circuit random_clifford_t_circuit(std::size_t n, std::size_t depth, std::size_t h_internal, std::uint64_t seed);

inline constexpr std::size_t kMaxVerifyQubits = 12;
inline constexpr double kEquivalenceTolerance = 1e-10;

struct EquivalenceReport {
    bool equivalent = false;
    double worst_infidelity = 0.0;
    std::size_t branches = 0;
};

// `original` is unitary on the data register; every branch of `compiled` with
// non-negligible probability must leave the data register in U|psi>.
EquivalenceReport verify_equivalence(const Circuit& original, const Circuit& compiled, std::size_t states = 3,
                                     std::uint64_t seed = 0x5eed);

struct BenchmarkRecord {
    std::string name;
    std::size_t n = 0;
    std::size_t h = 0;
    std::size_t n_p = 0;
    std::string optimizer;
    std::size_t t_before = 0;
    std::size_t t_after = 0;
    double saving_pct = 0.0;  // against t_ref
    std::size_t t_ref = 0;
    double seconds = 0.0;
    std::uint64_t seed = 0;
    std::optional<bool> verified;
    std::string error;
};

struct ScalingPoint {
    std::size_t n = 0;
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::size_t trials = 0;
};

struct ScalingFit {
    double slope = 0.0;
    double stderr_slope = 0.0;
    double ci_low = 0.0;   // 95%
    double ci_high = 0.0;
};

struct ScalingReport {
    std::map<std::string, std::vector<ScalingPoint>> points;
    std::map<std::string, ScalingFit> fits;
};

// Least squares of log(mean) on log(n).
ScalingFit fit_scaling(const std::vector<ScalingPoint>& points);
ScalingReport scaling_report(const std::vector<BenchmarkRecord>& records);

struct RandomBenchSpec {
    std::vector<std::size_t> ns;
    std::size_t trials = 20;
    std::vector<OptimizerKind> optimizers;
    std::uint64_t seed = 1;
    std::size_t rm_limit = kDefaultRmLimit;
};

struct FixtureBenchSpec {
    std::string dir;  // holds *.qc and fixtures.json
    CompileOptions options;
    bool verify = true;
};

// T_before and the saving reference are the RE column count of each tensor.
std::vector<BenchmarkRecord> run_random_benchmark(const RandomBenchSpec& spec);
// The saving reference is the fixture's recorded best previous T count.
std::vector<BenchmarkRecord> run_fixture_benchmark(const FixtureBenchSpec& spec);

std::string csv_header();
std::string to_csv(const std::vector<BenchmarkRecord>& records);
std::string to_json(const std::vector<BenchmarkRecord>& records, const ScalingReport* report = nullptr);

}  // namespace topt

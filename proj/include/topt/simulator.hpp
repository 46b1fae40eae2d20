#pragma once

#include "topt/circuit.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace topt {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxSimulatedQubits = 14;

// Basis index bit q holds qubit q.
struct Statevector {
    std::size_t n_qubits = 0;
    std::vector<Amplitude> amps;

    static Statevector basis(std::size_t n_qubits, std::size_t index = 0);
    // Haar-like random state from normalized complex Gaussians.
    static Statevector random(std::size_t n_qubits, std::uint64_t seed);

    double norm() const;
};

void apply_gate(Statevector& psi, const Gate& g);

struct Branch {
    std::vector<std::pair<std::size_t, bool>> outcomes;  // (outcome id, bit) in measurement order
    Statevector state;
    double probability = 1.0;
};

// `input` covers either the data register (ancillas are then prepared in |+>)
// or all n + h qubits. Branches are listed with outcome 0 before outcome 1.
std::vector<Branch> simulate_branches(const Circuit& c, const Statevector& input);

// Applies a measurement-free circuit.
Statevector simulate(const Circuit& c, const Statevector& input);

}  // namespace topt

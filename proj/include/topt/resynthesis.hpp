#pragma once

#include "topt/circuit.hpp"
#include "topt/phase.hpp"
#include "topt/preprocess.hpp"

#include <cstddef>
#include <vector>

namespace topt {

// Phase a * (form . x) on a register: CNOTs fold the support into its lowest
// wire, the phase gate acts there, and the CNOTs are undone. a is taken mod 8.
void append_parity_phase(std::vector<Gate>& out, const BitVec& form, Z8 a);

// Equal columns are merged; a column of multiplicity k is realized as phase k.
Circuit circuit_from_A(const GateSynthesisMatrix& A);

// Diagonal Clifford implementing U_{f_in - f_out}.
Circuit clifford_correction(const WeightedPolynomial& f_in, const WeightedPolynomial& f_out);

// Gates for X^x_part U_phase: phase gates first, then the X layer.
std::vector<Gate> correction_gates(const CliffordCorrection& c);

// CNOT network whose tracked linear action is E.
Circuit cnot_network_from_E(const BitMatrix& E);

struct SynthesisPlan {
    Circuit phase;       // T-bearing part from the optimized A
    Circuit clifford;    // diagonal Clifford tail
    Circuit e_network;   // CNOTs realizing E
    BitVec offset;       // X layer after the network
};

// `A` must have the block's signature.
SynthesisPlan plan_block(const Circuit& block, const GateSynthesisMatrix& A);

// One A per form; outputs share the data register, gadget ancillas are laid
// out form after form.
Circuit assemble(std::size_t n, const std::vector<GadgetizedForm>& forms,
                 const std::vector<GateSynthesisMatrix>& optimized);

}  // namespace topt

#pragma once

#include "topt/circuit.hpp"
#include "topt/gf2.hpp"
#include "topt/phase.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace topt {

// The operator X^x_part U_phase (phase applied first). Phase coefficients are even.
struct CliffordCorrection {
    BitVec x_part;
    PhasePolynomial phase;
};

struct PostStep {
    std::size_t measured;  // block wire measured in the X basis
    CliffordCorrection correction;
};

// pre, then block, then for each post step: measure, and apply its
// correction when the outcome is 1, then trailer. Block wires 0..n-1 hold the
// data register on both input and output; ancillas start in |+> and the wire
// measured by gadget k ends on wire n+k.
struct GadgetizedForm {
    std::vector<Gate> pre;
    Circuit block;
    BitMatrix E;
    std::vector<PostStep> post;
    std::vector<Gate> trailer;
    std::size_t h = 0;
    std::size_t num_partitions = 1;
};

// h_cap == 0 selects Hadamard-bounded partitioning; an absent cap gadgetizes
// every internal Hadamard into a single block.
std::vector<GadgetizedForm> gadgetize(const Circuit& c, std::optional<std::size_t> h_cap = std::nullopt);

struct Partitioning {
    std::vector<Circuit> partitions;
    std::vector<std::vector<Gate>> h_layers;  // layer i precedes partition i; one extra trailing layer
};

Partitioning partition_with_layers(const Circuit& c);
std::vector<Circuit> partition(const Circuit& c);
std::vector<GadgetizedForm> partition_forms(const Circuit& c);

// g(x) = f(x xor e_j) - f(x) mod 8, constant term included.
WeightedPolynomial commute_correction(const WeightedPolynomial& f, std::size_t j);

// Marks gates that can stay outside the optimized block: Clifford gates whose
// wire-predecessors (prefix) or wire-successors (suffix) are all Clifford.
struct Region {
    std::vector<bool> prefix;
    std::vector<bool> suffix;
};
Region clifford_boundary(const Circuit& c);
std::size_t internal_h_count(const Circuit& c);

// Removes H pairs on one wire separated only by gates on other wires.
Circuit cancel_hadamard_pairs(const Circuit& c);

}  // namespace topt

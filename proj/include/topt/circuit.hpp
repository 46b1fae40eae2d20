#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace topt {

enum class GateKind { H, X, Y, Z, S, Sdg, T, Tdg, CZ, CS, CCZ, CNOT, MeasureX, IfX };

std::size_t arity(GateKind kind);
std::string_view gate_name(GateKind kind);
bool is_diagonal(GateKind kind);

// CNOT operands are (control, target). MeasureX writes `outcome`; IfX reads it
// and runs `body` when the recorded bit is 1.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<std::size_t> qubits;
    std::size_t outcome = 0;
    std::vector<Gate> body;

    static Gate make(GateKind kind, std::initializer_list<std::size_t> qubits);
    static Gate measure_x(std::size_t qubit, std::size_t outcome);
    static Gate if_x(std::size_t outcome, std::vector<Gate> body);

    friend bool operator==(const Gate&, const Gate&) = default;
};

// Qubits 0..n-1 form the data register; n..n+h-1 are ancillas prepared in |+>.
struct Circuit {
    std::size_t n = 0;
    std::size_t h = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(std::size_t n_qubits, std::size_t n_ancillas = 0) : n(n_qubits), h(n_ancillas) {}

    std::size_t qubits() const noexcept { return n + h; }
    Circuit& add(GateKind kind, std::initializer_list<std::size_t> qubits);
    Circuit& add(Gate gate);
    void append(const std::vector<Gate>& more);
    bool has_measurements() const;
    // Throws std::invalid_argument on out-of-range or repeated operands,
    // repeated outcome ids, or blocks reading an outcome not yet produced.
    void validate() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

Circuit parse(std::string_view text);
std::string emit(const Circuit& c);

// Reader for the `.v/.i/BEGIN/END` benchmark format. Every name listed in .v
// becomes a data qubit; `tof` with two controls is expanded through CCZ.
Circuit parse_qc(std::string_view text);

// Dispatches on extension: `.qc` uses parse_qc, anything else parse.
Circuit load_circuit(const std::string& path);
void save_circuit(const Circuit& c, const std::string& path);

std::size_t t_count(const Circuit& c);
std::size_t h_count(const Circuit& c);

// CCZ becomes 7 T/Tdg with CNOTs and CS becomes 3; all other gates pass through.
Circuit expand_to_clifford_t(const Circuit& c);
std::vector<Gate> ccz_gates(std::size_t a, std::size_t b, std::size_t c);
std::vector<Gate> cs_gates(std::size_t a, std::size_t b);

}  // namespace topt

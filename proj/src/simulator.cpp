#include "topt/simulator.hpp"

#include "topt/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace topt {

namespace {

const Amplitude kI{0.0, 1.0};
const Amplitude kOmega{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};

void phase_on_mask(Statevector& psi, std::size_t mask, Amplitude phase) {
    for (std::size_t i = 0; i < psi.amps.size(); ++i) {
        if ((i & mask) == mask) psi.amps[i] *= phase;
    }
}

void check_qubits(const Statevector& psi, const Gate& g) {
    for (auto q : g.qubits) {
        if (q >= psi.n_qubits) throw std::out_of_range("gate operand outside the simulated register");
    }
}

void project_x(Statevector& psi, std::size_t q, bool minus) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < psi.amps.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = psi.amps[i], a1 = psi.amps[i | bit];
        const Amplitude v = minus ? (a0 - a1) / 2.0 : (a0 + a1) / 2.0;
        psi.amps[i] = v;
        psi.amps[i | bit] = minus ? -v : v;
    }
}

}  // namespace

Statevector Statevector::basis(std::size_t n_qubits, std::size_t index) {
    if (n_qubits > 30) throw TooLarge("statevector too large");
    Statevector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    if (index >= s.amps.size()) throw std::out_of_range("basis index out of range");
    s.amps[index] = 1.0;
    return s;
}

Statevector Statevector::random(std::size_t n_qubits, std::uint64_t seed) {
    Statevector s = basis(n_qubits);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (auto& a : s.amps) a = Amplitude{normal(rng), normal(rng)};
    const double norm = s.norm();
    for (auto& a : s.amps) a /= norm;
    return s;
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const auto& a : amps) sum += std::norm(a);
    return std::sqrt(sum);
}

void apply_gate(Statevector& psi, const Gate& g) {
    check_qubits(psi, g);
    const auto bit = [&](std::size_t k) { return std::size_t{1} << g.qubits[k]; };
    switch (g.kind) {
    case GateKind::H: {
        const std::size_t b = bit(0);
        const double r = std::numbers::sqrt2 / 2.0;
        for (std::size_t i = 0; i < psi.amps.size(); ++i) {
            if (i & b) continue;
            const Amplitude a0 = psi.amps[i], a1 = psi.amps[i | b];
            psi.amps[i] = r * (a0 + a1);
            psi.amps[i | b] = r * (a0 - a1);
        }
        break;
    }
    case GateKind::X: {
        const std::size_t b = bit(0);
        for (std::size_t i = 0; i < psi.amps.size(); ++i) {
            if (!(i & b)) std::swap(psi.amps[i], psi.amps[i | b]);
        }
        break;
    }
    case GateKind::Y: {
        const std::size_t b = bit(0);
        for (std::size_t i = 0; i < psi.amps.size(); ++i) {
            if (i & b) continue;
            const Amplitude a0 = psi.amps[i], a1 = psi.amps[i | b];
            psi.amps[i] = -kI * a1;
            psi.amps[i | b] = kI * a0;
        }
        break;
    }
    case GateKind::Z: phase_on_mask(psi, bit(0), -1.0); break;
    case GateKind::S: phase_on_mask(psi, bit(0), kI); break;
    case GateKind::Sdg: phase_on_mask(psi, bit(0), -kI); break;
    case GateKind::T: phase_on_mask(psi, bit(0), kOmega); break;
    case GateKind::Tdg: phase_on_mask(psi, bit(0), std::conj(kOmega)); break;
    case GateKind::CZ: phase_on_mask(psi, bit(0) | bit(1), -1.0); break;
    case GateKind::CS: phase_on_mask(psi, bit(0) | bit(1), kI); break;
    case GateKind::CCZ: phase_on_mask(psi, bit(0) | bit(1) | bit(2), -1.0); break;
    case GateKind::CNOT: {
        const std::size_t c = bit(0), t = bit(1);
        for (std::size_t i = 0; i < psi.amps.size(); ++i) {
            if ((i & c) && !(i & t)) std::swap(psi.amps[i], psi.amps[i | t]);
        }
        break;
    }
    case GateKind::MeasureX:
    case GateKind::IfX:
        throw std::invalid_argument("apply_gate: non-unitary operation");
    }
}

std::vector<Branch> simulate_branches(const Circuit& c, const Statevector& input) {
    if (c.qubits() > kMaxSimulatedQubits) {
        throw TooLarge("simulation limited to " + std::to_string(kMaxSimulatedQubits) + " qubits, circuit has " +
                       std::to_string(c.qubits()));
    }
    c.validate();
    Branch root;
    if (input.n_qubits == c.qubits()) {
        root.state = input;
    } else if (input.n_qubits == c.n) {
        root.state = Statevector::basis(c.qubits());
        const double amp = std::pow(std::numbers::sqrt2 / 2.0, static_cast<double>(c.h));
        const std::size_t data = std::size_t{1} << c.n;
        for (std::size_t i = 0; i < root.state.amps.size(); ++i) root.state.amps[i] = input.amps[i % data] * amp;
    } else {
        throw std::invalid_argument("input state size matches neither the data register nor the full register");
    }

    std::vector<Branch> branches{std::move(root)};
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::MeasureX) {
            std::vector<Branch> next;
            next.reserve(branches.size() * 2);
            for (auto& b : branches) {
                for (bool minus : {false, true}) {
                    Branch child = b;
                    project_x(child.state, g.qubits[0], minus);
                    const double norm = child.state.norm();
                    child.probability = b.probability * norm * norm;
                    if (norm > 0.0) {
                        for (auto& a : child.state.amps) a /= norm;
                    }
                    child.outcomes.emplace_back(g.outcome, minus);
                    next.push_back(std::move(child));
                }
            }
            branches = std::move(next);
        } else if (g.kind == GateKind::IfX) {
            for (auto& b : branches) {
                bool fired = false;
                for (const auto& [id, bitval] : b.outcomes) {
                    if (id == g.outcome) fired = bitval;
                }
                if (!fired) continue;
                for (const auto& inner : g.body) apply_gate(b.state, inner);
            }
        } else {
            for (auto& b : branches) apply_gate(b.state, g);
        }
    }
    return branches;
}

Statevector simulate(const Circuit& c, const Statevector& input) {
    if (c.has_measurements()) throw std::invalid_argument("simulate: circuit contains measurements");
    auto branches = simulate_branches(c, input);
    return std::move(branches.front().state);
}

}  // namespace topt

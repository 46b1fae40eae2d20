#pragma once

#include "topt/circuit.hpp"
#include "topt/gf2.hpp"
#include "topt/phase.hpp"
#include "topt/simulator.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace testing {

inline topt::BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    topt::BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
    }
    return m;
}

inline topt::BitVec random_vec(std::size_t n, std::mt19937_64& rng) {
    topt::BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
    return v;
}

inline topt::BitVec bits_of(std::size_t n, std::uint64_t x) {
    topt::BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, (x >> i) & 1U);
    return v;
}

inline topt::BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        topt::BitMatrix m = random_matrix(n, n, rng);
        if (topt::rank(m) == n) return m;
    }
}

inline topt::PhasePolynomial random_pp(std::size_t n, std::size_t terms, std::mt19937_64& rng) {
    topt::PhasePolynomial p;
    p.n = n;
    for (std::size_t k = 0; k < terms; ++k) {
        topt::BitVec v = random_vec(n, rng);
        if (v.none()) v.set(rng() % n);
        p.add(v, static_cast<long long>(rng() % 8));
    }
    return p;
}

// Diagonal CNOT+T circuit from {CNOT, T, Tdg, S, Sdg, Z, CZ, CS, CCZ}.
inline topt::Circuit random_diagonal_circuit(std::size_t n, std::size_t depth, std::mt19937_64& rng) {
    using topt::GateKind;
    topt::Circuit c(n);
    std::uniform_int_distribution<std::size_t> q(0, n - 1);
    for (std::size_t i = 0; i < depth; ++i) {
        const std::size_t a = q(rng);
        // b and g are distinct from a (and each other) only when n allows it.
        std::size_t b = q(rng), g = q(rng);
        while (n > 1 && b == a) b = q(rng);
        while (n > 2 && (g == a || g == b)) g = q(rng);
        switch (rng() % 9) {
            case 0: c.add(GateKind::T, {a}); break;
            case 1: c.add(GateKind::Tdg, {a}); break;
            case 2: c.add(GateKind::S, {a}); break;
            case 3: c.add(GateKind::Sdg, {a}); break;
            case 4: c.add(GateKind::Z, {a}); break;
            case 5: if (n > 1) c.add(GateKind::CZ, {a, b}); break;
            case 6: if (n > 1) c.add(GateKind::CS, {a, b}); break;
            case 7: if (n > 2) c.add(GateKind::CCZ, {a, b, g}); break;
            default: if (n > 1) c.add(GateKind::CNOT, {a, b}); break;
        }
    }
    return c;
}

inline const std::complex<double> kOmega = std::polar(1.0, M_PI / 4);

// Max distance between two states after removing the global phase.
inline double phase_distance(const topt::Statevector& a, const topt::Statevector& b) {
    std::complex<double> overlap = 0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) overlap += std::conj(a.amps[i]) * b.amps[i];
    const std::complex<double> ph = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
    double worst = 0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) worst = std::max(worst, std::abs(a.amps[i] * ph - b.amps[i]));
    return worst;
}

inline bool same_unitary(const topt::Circuit& a, const topt::Circuit& b, std::uint64_t seed = 7) {
    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto psi = topt::Statevector::random(a.qubits(), seed + s);
        if (phase_distance(topt::simulate(a, psi), topt::simulate(b, psi)) > 1e-9) return false;
    }
    return true;
}

}  // namespace testing

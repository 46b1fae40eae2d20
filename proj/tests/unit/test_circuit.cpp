#include "helpers.hpp"

#include "topt/circuit.hpp"
#include "topt/errors.hpp"
#include "topt/simulator.hpp"

#include <doctest.h>

using namespace topt;

TEST_CASE("parse examples") {
    const Circuit a = parse("qubits 1\nT q0");
    CHECK(a.n == 1);
    REQUIRE(a.gates.size() == 1);
    CHECK(a.gates[0] == Gate::make(GateKind::T, {0}));

    const Circuit b = parse("qubits 2\nCNOT q0 q1\nT q1");
    CHECK(b.gates.size() == 2);
    CHECK(b.gates[0] == Gate::make(GateKind::CNOT, {0, 1}));

    CHECK_THROWS_AS(parse("qubits 1\nFOO q0"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse("qubits 2\nT q0\n  CNOT q0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 10);  // where the missing operand was expected
    }
    CHECK_THROWS_AS(parse("qubits 2\nT q2"), ParseError);                  // undeclared
    CHECK_THROWS_AS(parse("qubits 2\nCZ q1 q1"), ParseError);              // repeated operand
    CHECK_THROWS_AS(parse("qubits 2\nifx m0 { X q0 }"), ParseError);       // unknown outcome
    CHECK_THROWS_AS(parse("qubits 2\nmeasx q0 -> m0\nmeasx q1 -> m0"), ParseError);
    CHECK_THROWS_AS(parse("T q0"), ParseError);                            // no header
}

TEST_CASE("parse accepts comments, case and blocks") {
    const Circuit c = parse("# header\nqubits 2 ancillas 1\nh q0 # comment\nsdg q1\nmeasx q2 -> m4\nifx m4 { S q0; x q1 }\n");
    CHECK(c.n == 2);
    CHECK(c.h == 1);
    REQUIRE(c.gates.size() == 4);
    CHECK(c.gates[1].kind == GateKind::Sdg);
    CHECK(c.gates[2] == Gate::measure_x(2, 4));
    CHECK(c.gates[3].body.size() == 2);
}

TEST_CASE("emit examples and round trip") {
    CHECK(emit(Circuit(0)) == "qubits 0\n");
    Circuit t(1);
    t.add(GateKind::T, {0});
    CHECK(emit(t) == "qubits 1\nT q0\n");

    Circuit m(1, 1);
    m.add(GateKind::CNOT, {0, 1});
    m.add(Gate::measure_x(0, 0));
    m.add(Gate::if_x(0, {Gate::make(GateKind::X, {1}), Gate::make(GateKind::S, {1})}));
    const std::string text = emit(m);
    CHECK(text.find("measx q0 -> m0") != std::string::npos);
    CHECK(text.find("ifx m0 { X q1; S q1 }") != std::string::npos);
    CHECK(parse(text) == m);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Circuit c = testing::random_diagonal_circuit(1 + rng() % 6, rng() % 30, rng);
        c.add(GateKind::H, {0});
        c.add(GateKind::Y, {0});
        CHECK(parse(emit(c)) == c);
    }
}

TEST_CASE("t_count examples") {
    Circuit c(1);
    c.add(GateKind::T, {0}).add(GateKind::Tdg, {0}).add(GateKind::S, {0});
    CHECK(t_count(c) == 2);
    Circuit ccz(3);
    ccz.add(GateKind::CCZ, {0, 1, 2});
    CHECK(t_count(ccz) == 0);
    CHECK(t_count(expand_to_clifford_t(ccz)) == 7);
    CHECK(t_count(Circuit(2)) == 0);
    Circuit blk(1, 1);
    blk.add(Gate::measure_x(1, 0));
    blk.add(Gate::if_x(0, {Gate::make(GateKind::T, {0})}));
    CHECK(t_count(blk) == 1);
}

TEST_CASE("expanded CCZ and CS match their definitions") {
    Circuit ccz(3), cs(2);
    ccz.add(GateKind::CCZ, {0, 1, 2});
    cs.add(GateKind::CS, {0, 1});
    CHECK(testing::same_unitary(ccz, expand_to_clifford_t(ccz)));
    CHECK(testing::same_unitary(cs, expand_to_clifford_t(cs)));
    CHECK(t_count(expand_to_clifford_t(cs)) == 3);
}

TEST_CASE("simulator examples") {
    Circuit h(1);
    h.add(GateKind::H, {0});
    const auto br = simulate_branches(h, Statevector::basis(1, 0));
    REQUIRE(br.size() == 1);
    CHECK(std::abs(br[0].state.amps[0] - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(br[0].state.amps[1] - std::sqrt(0.5)) < 1e-12);

    Circuit t(1);
    t.add(GateKind::H, {0}).add(GateKind::T, {0});
    const Statevector out = simulate(t, Statevector::basis(1, 0));
    CHECK(std::abs(out.amps[1] / out.amps[0] - testing::kOmega) < 1e-12);

    CHECK_THROWS_AS(simulate_branches(Circuit(15), Statevector::basis(15)), TooLarge);
}

TEST_CASE("hadamard gadget reduces to H on every branch") {
    // Data q0, ancilla q1 in |+>: CZ, measure q0 in X, correct X on q1.
    Circuit g(1, 1);
    g.add(GateKind::CZ, {0, 1});
    g.add(Gate::measure_x(0, 0));
    g.add(Gate::if_x(0, {Gate::make(GateKind::X, {1})}));
    Circuit h(1);
    h.add(GateKind::H, {0});
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Statevector psi = Statevector::random(1, s);
        const Statevector want = simulate(h, psi);
        const auto branches = simulate_branches(g, psi);
        REQUIRE(branches.size() == 2);
        CHECK_FALSE(branches[0].outcomes[0].second);
        double total = 0;
        for (const auto& b : branches) {
            total += b.probability;
            // q0 is |+> or |-> after measurement; project it out.
            Statevector rest;
            rest.n_qubits = 1;
            const double sign = b.outcomes[0].second ? -1.0 : 1.0;
            rest.amps = {(b.state.amps[0] + sign * b.state.amps[1]) * std::sqrt(0.5),
                         (b.state.amps[2] + sign * b.state.amps[3]) * std::sqrt(0.5)};
            CHECK(testing::phase_distance(rest, want) < 1e-12);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("operator identities on random states") {
    std::mt19937_64 rng(9);
    Circuit tt(1), s(1), ss(1), z(1);
    tt.add(GateKind::T, {0}).add(GateKind::T, {0});
    s.add(GateKind::S, {0});
    ss.add(GateKind::S, {0}).add(GateKind::S, {0});
    z.add(GateKind::Z, {0});
    for (std::uint64_t k = 0; k < 5; ++k) {
        const Statevector psi = Statevector::random(1, k);
        const Statevector a = simulate(tt, psi), b = simulate(s, psi);
        const Statevector c = simulate(ss, psi), d = simulate(z, psi);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(std::abs(a.amps[i] - b.amps[i]) < 1e-12);
            CHECK(std::abs(c.amps[i] - d.amps[i]) < 1e-12);
        }
    }
    for (int t = 0; t < 20; ++t) {
        Circuit c = testing::random_diagonal_circuit(4, 40, rng);
        c.add(GateKind::H, {1});
        c.add(GateKind::Y, {2});
        const Statevector out = simulate(c, Statevector::random(4, t));
        CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("qc importer") {
    const Circuit c = parse_qc(".v a b c\n.i a b\nBEGIN\ntof a b c\ncnot a b\nH c\nT* a\nEND\n");
    CHECK(c.n == 3);
    CHECK(t_count(c) == 8);
    Circuit want(3);
    want.add(GateKind::H, {2});
    want.add(GateKind::CCZ, {0, 1, 2});
    want.add(GateKind::H, {2});
    want.add(GateKind::CNOT, {0, 1});
    want.add(GateKind::H, {2});
    want.add(GateKind::Tdg, {0});
    CHECK(testing::same_unitary(c, want));
    try {
        parse_qc(".v a b\nBEGIN\ntof a q\nEND\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

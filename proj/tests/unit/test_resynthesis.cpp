#include "helpers.hpp"

#include "topt/errors.hpp"
#include "topt/harness.hpp"
#include "topt/optimizers.hpp"
#include "topt/resynthesis.hpp"

#include <doctest.h>

using namespace topt;

namespace {

BitVec bv(const char* s) { return BitVec::from_string(s); }

// Diagonal circuit with phase f on n qubits, built gate by gate from its weights.
Circuit diagonal_from_wp(const WeightedPolynomial& f) {
    return circuit_from_A(re_expand(f));
}

}  // namespace

TEST_CASE("circuit_from_A examples") {
    Circuit a = circuit_from_A(BitMatrix::from_columns(1, {bv("1")}));
    CHECK(a.gates == std::vector<Gate>{Gate::make(GateKind::T, {0})});

    Circuit b = circuit_from_A(BitMatrix::from_columns(2, {bv("11")}));
    CHECK(b.gates == std::vector<Gate>{Gate::make(GateKind::CNOT, {1, 0}), Gate::make(GateKind::T, {0}),
                                       Gate::make(GateKind::CNOT, {1, 0})});

    Circuit c = circuit_from_A(BitMatrix::from_columns(2, {bv("11"), bv("11")}));
    CHECK(c.gates == std::vector<Gate>{Gate::make(GateKind::CNOT, {1, 0}), Gate::make(GateKind::S, {0}),
                                       Gate::make(GateKind::CNOT, {1, 0})});

    CHECK_THROWS_AS(circuit_from_A(BitMatrix::from_columns(2, {bv("10"), bv("00")})), EmptyColumn);
}

TEST_CASE("circuit_from_A round trip") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 8;
        const BitMatrix A = testing::random_matrix(n, rng() % 20, rng);
        BitMatrix nonzero(n, 0);
        for (const auto& col : A.columns()) {
            if (col.any()) nonzero.append_column(col);
        }
        const Circuit c = circuit_from_A(nonzero);
        CHECK(t_count(c) == proper(nonzero).cols());
        const Extraction ex = extract(c);
        CHECK(ex.E == BitMatrix::identity(n));
        for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
            const BitVec xv = testing::bits_of(n, x);
            CHECK(ex.poly.evaluate(xv) == eval_phase(nonzero, xv));
        }
    }
}

TEST_CASE("clifford_correction examples") {
    WeightedPolynomial f(2);
    f.set_l(0, 1);
    CHECK(clifford_correction(f, f).gates.empty());

    WeightedPolynomial g(1), zero(1);
    g.set_l(0, 4);
    CHECK(clifford_correction(g, zero).gates == std::vector<Gate>{Gate::make(GateKind::Z, {0})});

    // q12 even part 2: U_{4 x1 x2} is CZ; compare by simulation.
    WeightedPolynomial in(2), out(2);
    in.set_q(0, 1, 3);
    out.set_q(0, 1, 1);
    const Circuit corr = clifford_correction(in, out);
    CHECK(t_count(corr) == 0);
    Circuit cz(2);
    cz.add(GateKind::CZ, {0, 1});
    CHECK(testing::same_unitary(corr, cz));

    WeightedPolynomial odd(2);
    odd.set_l(1, 1);
    CHECK_THROWS_AS(clifford_correction(odd, WeightedPolynomial(2)), ParityMismatch);
}

TEST_CASE("correction restores the input phase") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng() % 6;
        const Circuit in = testing::random_diagonal_circuit(n, 20, rng);
        const WeightedPolynomial f_in = wp_from_pp(extract(in).poly);
        for (auto kind : {OptimizerKind::TODD, OptimizerKind::TOOL_F, OptimizerKind::RM}) {
            const BitMatrix A = run_pipeline(signature_from_wp(f_in), {kind, 3, 6});
            Circuit rebuilt = circuit_from_A(A);
            rebuilt.append(clifford_correction(f_in, wp_from_A(A)).gates);
            rebuilt.append(cnot_network_from_E(extract(in).E).gates);
            CHECK(testing::same_unitary(in, rebuilt));
        }
    }
}

TEST_CASE("even polynomial gates") {
    CliffordCorrection c;
    c.x_part = bv("010");
    c.phase.n = 3;
    c.phase.add(bv("101"), 2);
    c.phase.add(bv("001"), 4);
    const std::vector<Gate> g = correction_gates(c);
    CHECK(g.back() == Gate::make(GateKind::X, {1}));
    Circuit want(3);
    want.add(GateKind::CNOT, {2, 0}).add(GateKind::S, {0}).add(GateKind::CNOT, {2, 0});
    want.add(GateKind::Z, {2}).add(GateKind::X, {1});
    Circuit got(3);
    got.append(g);
    CHECK(testing::same_unitary(want, got));
    CHECK(t_count(got) == 0);
}

TEST_CASE("cnot_network_from_E examples") {
    CHECK(cnot_network_from_E(BitMatrix::identity(4)).gates.empty());
    CHECK(cnot_network_from_E(BitMatrix::from_rows({"10", "11"})).gates ==
          std::vector<Gate>{Gate::make(GateKind::CNOT, {0, 1})});
    CHECK_THROWS_AS(cnot_network_from_E(BitMatrix::from_rows({"11", "11"})), SingularMatrix);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        const BitMatrix E = testing::random_invertible(6, rng);
        const Circuit c = cnot_network_from_E(E);
        CHECK(extract(c).E == E);
        for (const auto& g : c.gates) CHECK(g.kind == GateKind::CNOT);
    }
}

TEST_CASE("assemble shapes") {
    Circuit free(2);
    free.add(GateKind::T, {0}).add(GateKind::CNOT, {0, 1}).add(GateKind::T, {1});
    const auto f1 = gadgetize(free);
    const Circuit a1 = assemble(2, f1, {pp_to_A(extract(f1[0].block).poly)});
    CHECK_FALSE(a1.has_measurements());
    CHECK(t_count(a1) == 2);
    CHECK(testing::same_unitary(free, a1));

    Circuit tht(1);
    tht.add(GateKind::T, {0}).add(GateKind::H, {0}).add(GateKind::T, {0});
    const auto f2 = gadgetize(tht);
    const Circuit a2 = assemble(1, f2, {pp_to_A(extract(f2[0].block).poly)});
    REQUIRE(a2.gates.size() >= 2);
    CHECK(a2.h == 1);
    CHECK(a2.gates[a2.gates.size() - 2].kind == GateKind::MeasureX);
    CHECK(a2.gates.back().kind == GateKind::IfX);
    for (std::size_t i = 0; i + 2 < a2.gates.size(); ++i) CHECK(a2.gates[i].kind != GateKind::MeasureX);
    CHECK(verify_equivalence(tht, a2).equivalent);

    const auto f3 = partition_forms(tht);
    REQUIRE(f3.size() == 2);
    std::vector<GateSynthesisMatrix> As;
    for (const auto& f : f3) As.push_back(pp_to_A(extract(f.block).poly));
    const Circuit a3 = assemble(1, f3, As);
    CHECK(a3.h == 0);
    CHECK(testing::same_unitary(tht, a3));
}

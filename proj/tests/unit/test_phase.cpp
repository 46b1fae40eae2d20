#include "helpers.hpp"

#include "topt/errors.hpp"
#include "topt/phase.hpp"
#include "topt/simulator.hpp"

#include <doctest.h>

using namespace topt;
using testing::bits_of;

namespace {

BitVec bv(const char* s) { return BitVec::from_string(s); }

// Oracle: U|x> = omega^{f(x)} |E x + offset> checked by simulating every basis state.
void check_extraction(const Circuit& c) {
    const Extraction ex = extract(c);
    const std::size_t n = c.qubits();
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        const Statevector out = simulate(c, Statevector::basis(n, x));
        const BitVec xv = bits_of(n, x);
        const BitVec y = ex.E.multiply(xv) ^ ex.offset;
        std::uint64_t yi = 0;
        for (std::size_t i = 0; i < n; ++i) yi |= static_cast<std::uint64_t>(y.get(i)) << i;
        const auto want = std::pow(testing::kOmega, static_cast<int>(ex.poly.evaluate(xv)));
        CHECK(std::abs(out.amps[yi] - want) < 1e-9);
    }
}

}  // namespace

TEST_CASE("extract examples") {
    Circuit a(1);
    a.add(GateKind::T, {0});
    Extraction ea = extract(a);
    REQUIRE(ea.poly.terms.size() == 1);
    CHECK(ea.poly.terms[0] == PhaseTerm{bv("1"), 1});
    CHECK(ea.E == BitMatrix::identity(1));

    Circuit b(2);
    b.add(GateKind::CNOT, {0, 1}).add(GateKind::T, {1});
    Extraction eb = extract(b);
    REQUIRE(eb.poly.terms.size() == 1);
    CHECK(eb.poly.terms[0] == PhaseTerm{bv("11"), 1});
    CHECK(eb.E == BitMatrix::from_rows({"10", "11"}));

    Circuit c(1);
    c.add(GateKind::S, {0}).add(GateKind::T, {0});
    Extraction ec = extract(c);
    REQUIRE(ec.poly.terms.size() == 1);
    CHECK(ec.poly.terms[0].coeff == 3);

    Circuit h(1);
    h.add(GateKind::H, {0});
    CHECK_THROWS_AS(extract(h), UnsupportedGate);
}

TEST_CASE("extract agrees with simulation") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        Circuit c = testing::random_diagonal_circuit(1 + rng() % 5, rng() % 25, rng);
        check_extraction(c);
    }
    Circuit xy(3);
    xy.add(GateKind::T, {0}).add(GateKind::X, {0}).add(GateKind::CNOT, {0, 1}).add(GateKind::Y, {1});
    xy.add(GateKind::CCZ, {0, 1, 2}).add(GateKind::X, {2}).add(GateKind::CS, {2, 0});
    check_extraction(xy);
}

TEST_CASE("wp_from_pp examples") {
    PhasePolynomial p;
    p.n = 3;
    p.add(bv("100"), 1);
    WeightedPolynomial f = wp_from_pp(p);
    CHECK(f.l(0) == 1);
    CHECK(f.l(1) == 0);

    PhasePolynomial p2;
    p2.n = 2;
    p2.add(bv("11"), 1);
    WeightedPolynomial f2 = wp_from_pp(p2);
    CHECK(f2.l(0) == 1);
    CHECK(f2.l(1) == 1);
    CHECK(f2.q(0, 1) == 7);

    PhasePolynomial p3;
    p3.n = 3;
    p3.add(bv("111"), 1);
    WeightedPolynomial f3 = wp_from_pp(p3);
    for (std::size_t a = 0; a < 3; ++a) CHECK(f3.l(a) == 1);
    CHECK(f3.q(0, 1) == 7);
    CHECK(f3.q(0, 2) == 7);
    CHECK(f3.q(1, 2) == 7);
    CHECK(f3.c(0, 1, 2) == 1);
}

TEST_CASE("wp_from_pp matches exhaustive evaluation") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 10;
        const PhasePolynomial p = testing::random_pp(n, rng() % 12, rng);
        const WeightedPolynomial f = wp_from_pp(p);
        for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
            const BitVec xv = bits_of(n, x);
            CHECK(f.evaluate(xv) == z8(p.evaluate(xv) - p.constant + f.constant()));
        }
    }
}

TEST_CASE("signature_from_wp examples") {
    WeightedPolynomial f(3);
    f.set_c(0, 1, 2, 1);
    const SignatureTensor3 S = signature_from_wp(f);
    CHECK(S.at(0, 1, 2));
    CHECK(S.at(2, 0, 1));
    CHECK(S.at(1, 2, 0));
    CHECK_FALSE(S.at(0, 0, 0));
    CHECK_FALSE(S.at(0, 0, 1));

    WeightedPolynomial g(2);
    g.set_l(0, 2);
    CHECK(signature_from_wp(g).is_zero());

    WeightedPolynomial h(2);
    h.set_q(0, 1, 3);
    const SignatureTensor3 Sh = signature_from_wp(h);
    CHECK(Sh.at(0, 0, 1));
    CHECK(Sh.at(0, 1, 1));
    CHECK(Sh.at(1, 0, 1));
    CHECK_FALSE(Sh.at(0, 0, 0));
}

TEST_CASE("pp_to_A examples") {
    PhasePolynomial p;
    p.n = 2;
    p.add(bv("10"), 1);
    CHECK(pp_to_A(p) == BitMatrix::from_columns(2, {bv("10")}));
    PhasePolynomial p3;
    p3.n = 2;
    p3.add(bv("10"), 3);
    CHECK(pp_to_A(p3) == BitMatrix::from_columns(2, {bv("10"), bv("10"), bv("10")}));
    PhasePolynomial p7;
    p7.n = 2;
    p7.add(bv("11"), 7);
    const BitMatrix A7 = pp_to_A(p7);
    CHECK(A7.cols() == 7);
    for (std::size_t j = 0; j < 7; ++j) CHECK(A7.column(j) == bv("11"));
}

TEST_CASE("proper examples") {
    const BitVec e1 = bv("10"), e2 = bv("01"), z = bv("00");
    CHECK(proper(BitMatrix::from_columns(2, {e1, e1, e1})) == BitMatrix::from_columns(2, {e1}));
    CHECK(proper(BitMatrix::from_columns(2, {z, e2})) == BitMatrix::from_columns(2, {e2}));
    CHECK(proper(BitMatrix::from_columns(2, {e1, e2, e1, e2})).cols() == 0);
}

TEST_CASE("signature_from_A examples") {
    const SignatureTensor3 S = signature_from_A(BitMatrix::identity(3));
    for (std::size_t a = 0; a < 3; ++a) CHECK(S.l(a));
    CHECK_FALSE(S.q(0, 1));
    CHECK_FALSE(S.c(0, 1, 2));

    const SignatureTensor3 T = signature_from_A(BitMatrix::from_columns(3, {bv("110")}));
    CHECK(T.l(0));
    CHECK(T.l(1));
    CHECK(T.q(0, 1));
    CHECK_FALSE(T.l(2));
    CHECK_FALSE(T.q(0, 2));
    CHECK_FALSE(T.c(0, 1, 2));

    CHECK(signature_from_A(BitMatrix::from_columns(3, {bv("101"), bv("101")})).is_zero());
}

TEST_CASE("eval_phase examples") {
    CHECK(eval_phase(BitMatrix::from_columns(2, {bv("10")}), bv("10")) == 1);
    CHECK(eval_phase(BitMatrix::from_columns(2, {bv("11")}), bv("11")) == 0);
    CHECK(eval_phase(BitMatrix::from_columns(2, {bv("10"), bv("01"), bv("11")}), bv("10")) == 2);
}

TEST_CASE("chi examples") {
    std::mt19937_64 rng(8);
    const BitMatrix A = testing::random_matrix(5, 9, rng);
    const BitMatrix zero = chi(A, BitVec(5));
    CHECK(zero.rows() == 10);
    CHECK(zero.is_zero());
    CHECK(chi(testing::random_matrix(2, 4, rng), bv("11")).rows() == 0);
    const BitMatrix one = chi(BitMatrix::identity(3), bv("110"));
    REQUIRE(one.rows() == 1);
    CHECK(one.row(0).to_string() == "000");
}

TEST_CASE("chi rows follow the defining formula") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 3 + rng() % 5, m = 1 + rng() % 20;
        const BitMatrix A = testing::random_matrix(n, m, rng);
        const BitVec z = testing::random_vec(n, rng);
        const BitMatrix X = chi(A, z);
        CHECK(X.rows() == n * (n - 1) * (n - 2) / 6);
        std::size_t r = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                for (std::size_t g = b + 1; g < n; ++g, ++r) {
                    for (std::size_t j = 0; j < m; ++j) {
                        const bool want = (z.get(a) && A.get(b, j) && A.get(g, j)) ^
                                          (z.get(b) && A.get(a, j) && A.get(g, j)) ^
                                          (z.get(g) && A.get(a, j) && A.get(b, j));
                        CHECK(X.get(r, j) == want);
                    }
                }
            }
        }
        CHECK(chi(A, z, true).rows() <= X.rows());
    }
}

TEST_CASE("wp_from_A examples") {
    const WeightedPolynomial f = wp_from_A(BitMatrix::from_columns(2, {bv("10")}));
    CHECK(f.l(0) == 1);
    CHECK(f.l(1) == 0);
    const WeightedPolynomial g = wp_from_A(BitMatrix::from_columns(2, {bv("11")}));
    CHECK(g.l(0) == 1);
    CHECK(g.l(1) == 1);
    CHECK(g.q(0, 1) == 7);
    CHECK(wp_from_A(BitMatrix(3, 0)).is_zero());
}

TEST_CASE("phase representation properties") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 8;
        const PhasePolynomial p = testing::random_pp(n, rng() % 10, rng);
        const BitMatrix A = pp_to_A(p);
        for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
            const BitVec xv = bits_of(n, x);
            CHECK(eval_phase(A, xv) == z8(p.evaluate(xv) - p.constant));
        }
        CHECK(signature_from_A(proper(A)) == signature_from_A(A));
        CHECK(signature_from_A(A) == signature_from_wp(wp_from_pp(p)));
        const BitMatrix P = proper(A);
        for (std::size_t i = 0; i < P.cols(); ++i) {
            CHECK(P.column(i).any());
            for (std::size_t j = i + 1; j < P.cols(); ++j) CHECK(P.column(i) != P.column(j));
        }
    }
}

TEST_CASE("signature vector order") {
    SignatureTensor3 S(3);
    S.set_l(2, true);
    S.set_q(0, 2, true);
    S.set_c(0, 1, 2, true);
    // singles (0,1,2), pairs (01,02,12), triple (012)
    CHECK(S.to_vector().to_string() == "0010101");
    CHECK(SignatureTensor3::from_vector(3, S.to_vector()) == S);
    CHECK(S.entry_count() == 7);
}

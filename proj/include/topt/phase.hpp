#pragma once

#include "topt/circuit.hpp"
#include "topt/gf2.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace topt {

using Z8 = std::uint8_t;

inline Z8 z8(long long v) { return static_cast<Z8>(((v % 8) + 8) % 8); }

// Index helpers for pairs a<b and triples a<b<c (colexicographic ranks).
std::size_t pair_index(std::size_t a, std::size_t b);
std::size_t triple_index(std::size_t a, std::size_t b, std::size_t c);
std::size_t pair_count(std::size_t n);
std::size_t triple_count(std::size_t n);

// f(x) = const + sum l_a x_a + 2 sum q_ab x_a x_b + 4 sum c_abc x_a x_b x_c (mod 8).
class WeightedPolynomial {
public:
    explicit WeightedPolynomial(std::size_t n = 0);

    std::size_t n() const noexcept { return n_; }
    Z8 l(std::size_t a) const;
    Z8 q(std::size_t a, std::size_t b) const;
    Z8 c(std::size_t a, std::size_t b, std::size_t g) const;
    Z8 constant() const noexcept { return constant_; }

    void add_l(std::size_t a, long long v);
    void add_q(std::size_t a, std::size_t b, long long v);
    void add_c(std::size_t a, std::size_t b, std::size_t g, long long v);
    void add_constant(long long v) { constant_ = z8(constant_ + v); }
    void set_l(std::size_t a, long long v);
    void set_q(std::size_t a, std::size_t b, long long v);
    void set_c(std::size_t a, std::size_t b, std::size_t g, long long v);

    Z8 evaluate(const BitVec& x) const;
    bool is_zero() const;
    WeightedPolynomial operator-(const WeightedPolynomial& other) const;

    friend bool operator==(const WeightedPolynomial&, const WeightedPolynomial&) = default;

private:
    std::size_t n_;
    std::vector<Z8> l_, q_, c_;
    Z8 constant_ = 0;
};

struct PhaseTerm {
    BitVec form;
    Z8 coeff = 0;
    friend bool operator==(const PhaseTerm&, const PhaseTerm&) = default;
};

// sum a_k lambda_k(x) + constant (mod 8); `constant` is global phase only.
struct PhasePolynomial {
    std::size_t n = 0;
    std::vector<PhaseTerm> terms;
    Z8 constant = 0;

    // Adds a*(form.x xor offset); merges with an existing equal form.
    void add(const BitVec& form, long long a, bool offset = false);
    Z8 evaluate(const BitVec& x) const;
};

class SignatureTensor3 {
public:
    explicit SignatureTensor3(std::size_t n = 0);

    std::size_t n() const noexcept { return n_; }
    // Any index multiset; symmetric by construction.
    bool at(std::size_t a, std::size_t b, std::size_t g) const;
    bool l(std::size_t a) const { return at(a, a, a); }
    bool q(std::size_t a, std::size_t b) const { return at(a, a, b); }
    bool c(std::size_t a, std::size_t b, std::size_t g) const { return at(a, b, g); }
    void set_l(std::size_t a, bool v);
    void set_q(std::size_t a, std::size_t b, bool v);
    void set_c(std::size_t a, std::size_t b, std::size_t g, bool v);

    // Independent entries ordered: singles, pairs (lexicographic), triples (lexicographic).
    std::size_t entry_count() const noexcept;
    BitVec to_vector() const;
    static SignatureTensor3 from_vector(std::size_t n, const BitVec& bits);

    bool is_zero() const;
    SignatureTensor3& operator^=(const SignatureTensor3& other);
    friend bool operator==(const SignatureTensor3&, const SignatureTensor3&) = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> l_, q_, c_;
};

class SignatureMatrix2 {
public:
    explicit SignatureMatrix2(std::size_t n = 0) : m_(n, n) {}
    explicit SignatureMatrix2(const BitMatrix& m);

    std::size_t n() const noexcept { return m_.rows(); }
    bool get(std::size_t a, std::size_t b) const { return m_.get(a, b); }
    void set(std::size_t a, std::size_t b, bool v);
    const BitMatrix& matrix() const noexcept { return m_; }
    friend bool operator==(const SignatureMatrix2&, const SignatureMatrix2&) = default;

private:
    BitMatrix m_;
};

// Gate synthesis matrix: n rows, one column per linear form; f(x) = |A^T x| mod 8.
using GateSynthesisMatrix = BitMatrix;

// Circuit action x -> E x xor offset, with phase poly evaluated on the input x.
struct Extraction {
    PhasePolynomial poly;
    BitMatrix E;
    BitVec offset;
};

Extraction extract(const Circuit& c);
WeightedPolynomial wp_from_pp(const PhasePolynomial& p);
SignatureTensor3 signature_from_wp(const WeightedPolynomial& f);
GateSynthesisMatrix pp_to_A(const PhasePolynomial& p);
GateSynthesisMatrix proper(const GateSynthesisMatrix& A);
SignatureTensor3 signature_from_A(const GateSynthesisMatrix& A);
Z8 eval_phase(const GateSynthesisMatrix& A, const BitVec& x);
BitMatrix chi(const GateSynthesisMatrix& A, const BitVec& z, bool deduplicate = false);
WeightedPolynomial wp_from_A(const GateSynthesisMatrix& A);

// Coefficients equal to the signature parities.
WeightedPolynomial canonical_wp(const SignatureTensor3& S);
// A A^T over GF(2).
SignatureMatrix2 outer_square(const BitMatrix& A);

}  // namespace topt

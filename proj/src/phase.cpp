#include "topt/phase.hpp"

#include "topt/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace topt {

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

namespace {

void sort3(std::size_t& a, std::size_t& b, std::size_t& c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
}

std::vector<std::size_t> support(const BitVec& v) {
    std::vector<std::size_t> out;
    const auto& words = v.words();
    for (std::size_t k = 0; k < words.size(); ++k) {
        std::uint64_t w = words[k];
        while (w != 0) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

}  // namespace

std::size_t pair_index(std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("pair_index: indices must differ");
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
}

std::size_t triple_index(std::size_t a, std::size_t b, std::size_t c) {
    sort3(a, b, c);
    if (a == b || b == c) throw std::invalid_argument("triple_index: indices must differ");
    return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a;
}

// ------------------------------------------------------------ WeightedPolynomial

WeightedPolynomial::WeightedPolynomial(std::size_t n)
    : n_(n), l_(n, 0), q_(pair_count(n), 0), c_(triple_count(n), 0) {}

namespace {

void check_index(std::size_t i, std::size_t n) {
    if (i >= n) throw std::out_of_range("variable index out of range");
}

}  // namespace

Z8 WeightedPolynomial::l(std::size_t a) const {
    check_index(a, n_);
    return l_[a];
}

Z8 WeightedPolynomial::q(std::size_t a, std::size_t b) const {
    check_index(a, n_);
    check_index(b, n_);
    return q_[pair_index(a, b)];
}

Z8 WeightedPolynomial::c(std::size_t a, std::size_t b, std::size_t g) const {
    check_index(a, n_);
    check_index(b, n_);
    check_index(g, n_);
    return c_[triple_index(a, b, g)];
}

void WeightedPolynomial::add_l(std::size_t a, long long v) { set_l(a, l(a) + v); }
void WeightedPolynomial::add_q(std::size_t a, std::size_t b, long long v) { set_q(a, b, q(a, b) + v); }
void WeightedPolynomial::add_c(std::size_t a, std::size_t b, std::size_t g, long long v) {
    set_c(a, b, g, c(a, b, g) + v);
}

void WeightedPolynomial::set_l(std::size_t a, long long v) {
    check_index(a, n_);
    l_[a] = z8(v);
}

void WeightedPolynomial::set_q(std::size_t a, std::size_t b, long long v) {
    check_index(a, n_);
    check_index(b, n_);
    q_[pair_index(a, b)] = z8(v);
}

void WeightedPolynomial::set_c(std::size_t a, std::size_t b, std::size_t g, long long v) {
    check_index(a, n_);
    check_index(b, n_);
    check_index(g, n_);
    c_[triple_index(a, b, g)] = z8(v);
}

Z8 WeightedPolynomial::evaluate(const BitVec& x) const {
    if (x.size() != n_) throw std::invalid_argument("evaluate: length mismatch");
    const auto on = support(x);
    long long acc = constant_;
    for (std::size_t i = 0; i < on.size(); ++i) {
        acc += l_[on[i]];
        for (std::size_t j = i + 1; j < on.size(); ++j) {
            acc += 2LL * q_[pair_index(on[i], on[j])];
            for (std::size_t k = j + 1; k < on.size(); ++k) acc += 4LL * c_[triple_index(on[i], on[j], on[k])];
        }
    }
    return z8(acc);
}

bool WeightedPolynomial::is_zero() const {
    auto zero = [](const std::vector<Z8>& v) { return std::all_of(v.begin(), v.end(), [](Z8 x) { return x == 0; }); };
    return constant_ == 0 && zero(l_) && zero(q_) && zero(c_);
}

WeightedPolynomial WeightedPolynomial::operator-(const WeightedPolynomial& other) const {
    if (other.n_ != n_) throw std::invalid_argument("polynomial difference: variable count mismatch");
    WeightedPolynomial d(n_);
    for (std::size_t i = 0; i < l_.size(); ++i) d.l_[i] = z8(l_[i] - other.l_[i]);
    for (std::size_t i = 0; i < q_.size(); ++i) d.q_[i] = z8(q_[i] - other.q_[i]);
    for (std::size_t i = 0; i < c_.size(); ++i) d.c_[i] = z8(c_[i] - other.c_[i]);
    d.constant_ = z8(constant_ - other.constant_);
    return d;
}

// ------------------------------------------------------------ PhasePolynomial

void PhasePolynomial::add(const BitVec& form, long long a, bool offset) {
    if (form.size() != n) throw std::invalid_argument("PhasePolynomial::add: form length mismatch");
    if (offset) {
        constant = z8(constant + a);
        a = -a;
    }
    if (form.none()) return;
    for (auto& t : terms) {
        if (t.form == form) {
            t.coeff = z8(t.coeff + a);
            return;
        }
    }
    if (z8(a) != 0) terms.push_back({form, z8(a)});
}

Z8 PhasePolynomial::evaluate(const BitVec& x) const {
    long long acc = constant;
    for (const auto& t : terms) {
        if (t.form.dot(x)) acc += t.coeff;
    }
    return z8(acc);
}

// ------------------------------------------------------------ SignatureTensor3

SignatureTensor3::SignatureTensor3(std::size_t n)
    : n_(n), l_(n, 0), q_(pair_count(n), 0), c_(triple_count(n), 0) {}

bool SignatureTensor3::at(std::size_t a, std::size_t b, std::size_t g) const {
    check_index(a, n_);
    check_index(b, n_);
    check_index(g, n_);
    sort3(a, b, g);
    if (a == g) return l_[a];
    if (a == b) return q_[pair_index(a, g)];
    if (b == g) return q_[pair_index(a, b)];
    return c_[triple_index(a, b, g)];
}

void SignatureTensor3::set_l(std::size_t a, bool v) {
    check_index(a, n_);
    l_[a] = v;
}

void SignatureTensor3::set_q(std::size_t a, std::size_t b, bool v) {
    check_index(a, n_);
    check_index(b, n_);
    q_[pair_index(a, b)] = v;
}

void SignatureTensor3::set_c(std::size_t a, std::size_t b, std::size_t g, bool v) {
    check_index(a, n_);
    check_index(b, n_);
    check_index(g, n_);
    c_[triple_index(a, b, g)] = v;
}

std::size_t SignatureTensor3::entry_count() const noexcept { return n_ + pair_count(n_) + triple_count(n_); }

BitVec SignatureTensor3::to_vector() const {
    BitVec v(entry_count());
    std::size_t k = 0;
    for (std::size_t a = 0; a < n_; ++a) v.set(k++, l_[a]);
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = a + 1; b < n_; ++b) v.set(k++, q_[pair_index(a, b)]);
    }
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = a + 1; b < n_; ++b) {
            for (std::size_t g = b + 1; g < n_; ++g) v.set(k++, c_[triple_index(a, b, g)]);
        }
    }
    return v;
}

SignatureTensor3 SignatureTensor3::from_vector(std::size_t n, const BitVec& bits) {
    SignatureTensor3 S(n);
    if (bits.size() != S.entry_count()) throw std::invalid_argument("from_vector: wrong entry count");
    std::size_t k = 0;
    for (std::size_t a = 0; a < n; ++a) S.l_[a] = bits.get(k++);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) S.q_[pair_index(a, b)] = bits.get(k++);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t g = b + 1; g < n; ++g) S.c_[triple_index(a, b, g)] = bits.get(k++);
        }
    }
    return S;
}

bool SignatureTensor3::is_zero() const {
    auto zero = [](const std::vector<std::uint8_t>& v) {
        return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
    };
    return zero(l_) && zero(q_) && zero(c_);
}

SignatureTensor3& SignatureTensor3::operator^=(const SignatureTensor3& other) {
    if (other.n_ != n_) throw std::invalid_argument("signature xor: size mismatch");
    for (std::size_t i = 0; i < l_.size(); ++i) l_[i] ^= other.l_[i];
    for (std::size_t i = 0; i < q_.size(); ++i) q_[i] ^= other.q_[i];
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] ^= other.c_[i];
    return *this;
}

// ------------------------------------------------------------ SignatureMatrix2

SignatureMatrix2::SignatureMatrix2(const BitMatrix& m) : m_(m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("SignatureMatrix2: matrix must be square");
    if (!(m == m.transpose())) throw std::invalid_argument("SignatureMatrix2: matrix must be symmetric");
}

void SignatureMatrix2::set(std::size_t a, std::size_t b, bool v) {
    m_.set(a, b, v);
    m_.set(b, a, v);
}

// ------------------------------------------------------------ conversions

Extraction extract(const Circuit& c) {
    const std::size_t n = c.qubits();
    std::vector<BitVec> form;
    form.reserve(n);
    for (std::size_t i = 0; i < n; ++i) form.push_back(BitVec::unit(n, i));
    BitVec off(n);

    Extraction out;
    out.poly.n = n;
    std::unordered_map<BitVec, std::size_t, BitVecHash> where;
    auto term = [&](const BitVec& lambda, bool offset, long long a) {
        if (offset) {
            out.poly.constant = z8(out.poly.constant + a);
            a = -a;
        }
        if (lambda.none()) return;
        auto [it, fresh] = where.try_emplace(lambda, out.poly.terms.size());
        if (fresh) {
            out.poly.terms.push_back({lambda, z8(a)});
        } else {
            auto& coeff = out.poly.terms[it->second].coeff;
            coeff = z8(coeff + a);
        }
    };

    for (const auto& g : c.gates) {
        for (auto q : g.qubits) {
            if (q >= n) throw std::out_of_range("extract: operand out of range");
        }
        const auto& qs = g.qubits;
        switch (g.kind) {
        case GateKind::CNOT:
            form[qs[1]] ^= form[qs[0]];
            if (off.get(qs[0])) off.flip(qs[1]);
            break;
        case GateKind::X:
            off.flip(qs[0]);
            break;
        case GateKind::Y:
            term(form[qs[0]], off.get(qs[0]), 4);
            off.flip(qs[0]);
            out.poly.constant = z8(out.poly.constant + 2);
            break;
        case GateKind::Z: term(form[qs[0]], off.get(qs[0]), 4); break;
        case GateKind::S: term(form[qs[0]], off.get(qs[0]), 2); break;
        case GateKind::Sdg: term(form[qs[0]], off.get(qs[0]), 6); break;
        case GateKind::T: term(form[qs[0]], off.get(qs[0]), 1); break;
        case GateKind::Tdg: term(form[qs[0]], off.get(qs[0]), 7); break;
        case GateKind::CZ:
        case GateKind::CS: {
            // 4uv = 2u + 2v - 2(u^v);  2uv = u + v - (u^v)
            const long long w = g.kind == GateKind::CZ ? 2 : 1;
            const std::size_t a = qs[0], b = qs[1];
            term(form[a], off.get(a), w);
            term(form[b], off.get(b), w);
            term(form[a] ^ form[b], off.get(a) != off.get(b), -w);
            break;
        }
        case GateKind::CCZ: {
            // 4uvw = u+v+w - (u^v) - (u^w) - (v^w) + (u^v^w)
            const std::size_t a = qs[0], b = qs[1], d = qs[2];
            const bool oa = off.get(a), ob = off.get(b), od = off.get(d);
            term(form[a], oa, 1);
            term(form[b], ob, 1);
            term(form[d], od, 1);
            term(form[a] ^ form[b], oa != ob, -1);
            term(form[a] ^ form[d], oa != od, -1);
            term(form[b] ^ form[d], ob != od, -1);
            term(form[a] ^ form[b] ^ form[d], oa != ob ? !od : od, 1);
            break;
        }
        case GateKind::H:
        case GateKind::MeasureX:
        case GateKind::IfX:
            throw UnsupportedGate(std::string("extract: gate ") + std::string(gate_name(g.kind)) +
                                  " is not part of a CNOT+T block");
        }
    }
    std::erase_if(out.poly.terms, [](const PhaseTerm& t) { return t.coeff == 0; });
    out.E = BitMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) out.E.row(i) = form[i];
    out.offset = off;
    return out;
}

WeightedPolynomial wp_from_pp(const PhasePolynomial& p) {
    WeightedPolynomial f(p.n);
    f.add_constant(p.constant);
    for (const auto& t : p.terms) {
        if (t.form.size() != p.n) throw std::invalid_argument("wp_from_pp: form length mismatch");
        const auto V = support(t.form);
        const long long a = t.coeff;
        for (std::size_t i = 0; i < V.size(); ++i) {
            f.add_l(V[i], a);
            for (std::size_t j = i + 1; j < V.size(); ++j) {
                f.add_q(V[i], V[j], -a);
                for (std::size_t k = j + 1; k < V.size(); ++k) f.add_c(V[i], V[j], V[k], a);
            }
        }
    }
    return f;
}

SignatureTensor3 signature_from_wp(const WeightedPolynomial& f) {
    const std::size_t n = f.n();
    SignatureTensor3 S(n);
    for (std::size_t a = 0; a < n; ++a) {
        S.set_l(a, f.l(a) & 1);
        for (std::size_t b = a + 1; b < n; ++b) {
            S.set_q(a, b, f.q(a, b) & 1);
            for (std::size_t g = b + 1; g < n; ++g) S.set_c(a, b, g, f.c(a, b, g) & 1);
        }
    }
    return S;
}

GateSynthesisMatrix pp_to_A(const PhasePolynomial& p) {
    std::vector<BitVec> cols;
    for (const auto& t : p.terms) {
        for (Z8 k = 0; k < t.coeff % 8; ++k) cols.push_back(t.form);
    }
    return BitMatrix::from_columns(p.n, cols);
}

GateSynthesisMatrix proper(const GateSynthesisMatrix& A) {
    std::unordered_map<BitVec, std::size_t, BitVecHash> count;
    std::vector<BitVec> order;
    for (auto& col : A.columns()) {
        if (col.none()) continue;
        auto [it, fresh] = count.try_emplace(col, 0);
        if (fresh) order.push_back(col);
        ++it->second;
    }
    std::vector<BitVec> kept;
    for (auto& col : order) {
        if (count[col] % 2 == 1) kept.push_back(std::move(col));
    }
    return BitMatrix::from_columns(A.rows(), kept);
}

SignatureTensor3 signature_from_A(const GateSynthesisMatrix& A) {
    const std::size_t n = A.rows();
    SignatureTensor3 S(n);
    for (std::size_t a = 0; a < n; ++a) {
        const BitVec& ra = A.row(a);
        S.set_l(a, ra.weight() & 1);
        for (std::size_t b = a + 1; b < n; ++b) {
            const BitVec rab = ra & A.row(b);
            S.set_q(a, b, rab.weight() & 1);
            for (std::size_t g = b + 1; g < n; ++g) S.set_c(a, b, g, rab.dot(A.row(g)));
        }
    }
    return S;
}

Z8 eval_phase(const GateSynthesisMatrix& A, const BitVec& x) {
    if (x.size() != A.rows()) throw std::invalid_argument("eval_phase: length mismatch");
    BitVec acc(A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r) {
        if (x.get(r)) acc ^= A.row(r);
    }
    return z8(static_cast<long long>(acc.weight()));
}

BitMatrix chi(const GateSynthesisMatrix& A, const BitVec& z, bool deduplicate) {
    const std::size_t n = A.rows();
    if (z.size() != n) throw std::invalid_argument("chi: length of z must equal rows(A)");
    BitMatrix out(0, A.cols());
    std::unordered_set<BitVec, BitVecHash> seen;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t g = b + 1; g < n; ++g) {
                BitVec row(A.cols());
                if (z.get(a)) row ^= A.row(b) & A.row(g);
                if (z.get(b)) row ^= A.row(g) & A.row(a);
                if (z.get(g)) row ^= A.row(a) & A.row(b);
                if (deduplicate && !seen.insert(row).second) continue;
                out.append_row(row);
            }
        }
    }
    return out;
}

WeightedPolynomial wp_from_A(const GateSynthesisMatrix& A) {
    PhasePolynomial p;
    p.n = A.rows();
    for (auto& col : A.columns()) {
        if (col.any()) p.terms.push_back({std::move(col), 1});
    }
    return wp_from_pp(p);
}

WeightedPolynomial canonical_wp(const SignatureTensor3& S) {
    const std::size_t n = S.n();
    WeightedPolynomial f(n);
    for (std::size_t a = 0; a < n; ++a) {
        f.set_l(a, S.l(a));
        for (std::size_t b = a + 1; b < n; ++b) {
            f.set_q(a, b, S.q(a, b));
            for (std::size_t g = b + 1; g < n; ++g) f.set_c(a, b, g, S.c(a, b, g));
        }
    }
    return f;
}

SignatureMatrix2 outer_square(const BitMatrix& A) {
    const std::size_t n = A.rows();
    SignatureMatrix2 S(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) S.set(a, b, A.row(a).dot(A.row(b)));
    }
    return S;
}

}  // namespace topt

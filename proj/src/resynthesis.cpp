#include "topt/resynthesis.hpp"

#include "topt/errors.hpp"

#include <stdexcept>
#include <unordered_map>

namespace topt {

void append_parity_phase(std::vector<Gate>& out, const BitVec& form, Z8 a) {
    a = z8(a);
    if (a == 0) return;
    if (form.none()) throw std::invalid_argument("append_parity_phase: empty form");
    const std::size_t pivot = form.first();
    std::vector<Gate> network;
    for (std::size_t w = pivot + 1; w < form.size(); ++w) {
        if (form.get(w)) network.push_back(Gate::make(GateKind::CNOT, {w, pivot}));
    }
    out.insert(out.end(), network.begin(), network.end());
    auto g = [&](GateKind k) { out.push_back(Gate::make(k, {pivot})); };
    switch (a) {
        case 1: g(GateKind::T); break;
        case 2: g(GateKind::S); break;
        case 3: g(GateKind::S); g(GateKind::T); break;
        case 4: g(GateKind::Z); break;
        case 5: g(GateKind::Z); g(GateKind::T); break;
        case 6: g(GateKind::Sdg); break;
        case 7: g(GateKind::Tdg); break;
        default: break;
    }
    out.insert(out.end(), network.rbegin(), network.rend());
}

Circuit circuit_from_A(const GateSynthesisMatrix& A) {
    const std::size_t n = A.rows();
    std::unordered_map<BitVec, std::size_t, BitVecHash> count;
    std::vector<BitVec> order;
    const std::vector<BitVec> cols = A.columns();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].none()) throw EmptyColumn(j);
        auto [it, fresh] = count.try_emplace(cols[j], 0);
        if (fresh) order.push_back(cols[j]);
        ++it->second;
    }
    Circuit out(n);
    for (const auto& col : order) append_parity_phase(out.gates, col, z8(static_cast<long long>(count[col])));
    return out;
}

Circuit clifford_correction(const WeightedPolynomial& f_in, const WeightedPolynomial& f_out) {
    if (f_in.n() != f_out.n()) throw std::invalid_argument("clifford_correction: size mismatch");
    if (signature_from_wp(f_in) != signature_from_wp(f_out)) throw ParityMismatch();
    const std::size_t n = f_in.n();
    const WeightedPolynomial d = f_in - f_out;
    Circuit out(n);
    for (std::size_t a = 0; a < n; ++a) {
        switch (d.l(a)) {
            case 2: out.add(GateKind::S, {a}); break;
            case 4: out.add(GateKind::Z, {a}); break;
            case 6: out.add(GateKind::Sdg, {a}); break;
            default: break;
        }
    }
    // 2q x_a x_b with q even is 4 x_a x_b (CZ) or 0; even cubic terms vanish.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (d.q(a, b) % 4 == 2) out.add(GateKind::CZ, {a, b});
        }
    }
    return out;
}

std::vector<Gate> correction_gates(const CliffordCorrection& c) {
    std::vector<Gate> out;
    for (const auto& term : c.phase.terms) {
        if (term.coeff % 2 != 0) throw std::logic_error("correction_gates: odd phase coefficient");
        if (term.form.any()) append_parity_phase(out, term.form, term.coeff);
    }
    for (std::size_t w = 0; w < c.x_part.size(); ++w) {
        if (c.x_part.get(w)) out.push_back(Gate::make(GateKind::X, {w}));
    }
    return out;
}

Circuit cnot_network_from_E(const BitMatrix& E) {
    if (E.rows() != E.cols()) throw std::invalid_argument("cnot_network_from_E: matrix is not square");
    const std::size_t n = E.rows();
    BitMatrix M = E;
    std::vector<Gate> ops;  // row_i ^= row_j recorded as CNOT(j -> i)
    auto add_row = [&](std::size_t i, std::size_t j) {
        M.row(i) ^= M.row(j);
        ops.push_back(Gate::make(GateKind::CNOT, {j, i}));
    };
    for (std::size_t c = 0; c < n; ++c) {
        if (!M.get(c, c)) {
            std::size_t p = c + 1;
            while (p < n && !M.get(p, c)) ++p;
            if (p == n) throw SingularMatrix();
            add_row(c, p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && M.get(r, c)) add_row(r, c);
        }
    }
    // R_k ... R_1 E = I, so E = R_1 ... R_k: the first gate applied is R_k.
    Circuit out(n);
    out.gates.assign(ops.rbegin(), ops.rend());
    return out;
}

SynthesisPlan plan_block(const Circuit& block, const GateSynthesisMatrix& A) {
    const Extraction ex = extract(block);
    const WeightedPolynomial f_in = wp_from_pp(ex.poly);
    const WeightedPolynomial f_out = wp_from_A(A);
    SynthesisPlan plan;
    plan.phase = circuit_from_A(A);
    plan.clifford = clifford_correction(f_in, f_out);
    plan.e_network = cnot_network_from_E(ex.E);
    plan.offset = ex.offset;
    return plan;
}

Circuit assemble(std::size_t n, const std::vector<GadgetizedForm>& forms,
                 const std::vector<GateSynthesisMatrix>& optimized) {
    if (forms.size() != optimized.size()) throw std::invalid_argument("assemble: one A per form required");
    std::size_t total_h = 0;
    for (const auto& f : forms) total_h += f.h;
    Circuit out(n, total_h);

    std::size_t offset = 0, outcome = 0;
    for (std::size_t k = 0; k < forms.size(); ++k) {
        const GadgetizedForm& form = forms[k];
        auto map = [&](std::vector<Gate> gates) {
            for (auto& g : gates) {
                for (auto& q : g.qubits) {
                    if (q >= n) q += offset;
                }
                for (auto& b : g.body) {
                    for (auto& q : b.qubits) {
                        if (q >= n) q += offset;
                    }
                }
            }
            return gates;
        };
        out.append(form.pre);
        const SynthesisPlan plan = plan_block(form.block, optimized[k]);
        out.append(map(plan.phase.gates));
        out.append(map(plan.clifford.gates));
        out.append(map(plan.e_network.gates));
        std::vector<Gate> xs;
        for (std::size_t w = 0; w < plan.offset.size(); ++w) {
            if (plan.offset.get(w)) xs.push_back(Gate::make(GateKind::X, {w}));
        }
        out.append(map(xs));
        for (const auto& step : form.post) {
            const std::size_t wire = step.measured >= n ? step.measured + offset : step.measured;
            out.add(Gate::measure_x(wire, outcome));
            out.add(Gate::if_x(outcome, map(correction_gates(step.correction))));
            ++outcome;
        }
        out.append(form.trailer);
        offset += form.h;
    }
    return out;
}

}  // namespace topt

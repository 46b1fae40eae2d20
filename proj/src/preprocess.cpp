#include "topt/preprocess.hpp"

#include "topt/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace topt {

namespace {

bool is_clifford(GateKind k) {
    return k != GateKind::T && k != GateKind::Tdg && k != GateKind::CS && k != GateKind::CCZ;
}

void require_clifford_t(const Circuit& c) {
    if (c.h != 0) throw UnsupportedGate("input circuit must not declare ancillas");
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::MeasureX || g.kind == GateKind::IfX) {
            throw UnsupportedGate("input circuit must be unitary Clifford+T");
        }
    }
    c.validate();
}

// Heisenberg-frame tracker for one gadget's X correction.
class Tracker {
public:
    Tracker(std::size_t wires, std::size_t ancilla, std::size_t measured)
        : x_(BitVec::unit(wires, ancilla)), measured_(measured) {
        phase_.n = wires;
    }

    // Replaces the tracked operator C by G C G^dagger.
    void conjugate(const Gate& g) {
        const auto& qs = g.qubits;
        switch (g.kind) {
        case GateKind::CNOT: {
            const std::size_t c = qs[0], t = qs[1];
            if (x_.get(c)) x_.flip(t);
            for (auto& term : phase_.terms) {
                if (term.form.get(t)) term.form.flip(c);
            }
            break;
        }
        case GateKind::X:
            flip_variable(qs[0]);
            break;
        case GateKind::Y:
            through_diagonal(GateKind::Z, qs);
            flip_variable(qs[0]);
            break;
        case GateKind::H:
        case GateKind::MeasureX:
        case GateKind::IfX:
            throw std::logic_error("gadget block contains a non-block gate");
        default:
            through_diagonal(g.kind, qs);
            break;
        }
    }

    void rename(std::size_t from, std::size_t to) { measured_ = from == measured_ ? to : measured_; }
    std::size_t measured() const { return measured_; }

    CliffordCorrection result() const {
        CliffordCorrection out{x_, PhasePolynomial{}};
        out.phase.n = phase_.n;
        out.phase.constant = phase_.constant;
        for (const auto& t : phase_.terms) out.phase.add(t.form, t.coeff);
        return out;
    }

private:
    // X_w U_g X_w = U_{g(x xor e_w)}.
    void flip_variable(std::size_t w) {
        for (auto& term : phase_.terms) {
            if (term.form.get(w)) {
                phase_.constant = z8(phase_.constant + term.coeff);
                term.coeff = z8(-static_cast<int>(term.coeff));
            }
        }
    }

    // D X^v D^dagger = X^v U_{d(x xor v) - d(x)}.
    void through_diagonal(GateKind kind, const std::vector<std::size_t>& qs) {
        Circuit one(phase_.n);
        Gate g;
        g.kind = kind;
        g.qubits = qs;
        one.add(g);
        const Extraction d = extract(one);
        for (const auto& term : d.poly.terms) {
            if (!term.form.dot(x_)) continue;
            phase_.constant = z8(phase_.constant + term.coeff);
            phase_.add(term.form, -2LL * term.coeff);
        }
    }

    BitVec x_;
    PhasePolynomial phase_;
    std::size_t measured_;
};

GadgetizedForm gadgetize_segment(std::size_t n, const std::vector<Gate>& gates) {
    const std::size_t h = static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::H; }));
    const std::size_t wires = n + h;
    GadgetizedForm form;
    form.h = h;
    form.block = Circuit(n, h);

    std::vector<std::size_t> layout(n);
    for (std::size_t i = 0; i < n; ++i) layout[i] = i;
    std::vector<Tracker> trackers;
    auto emit = [&](const Gate& g) {
        form.block.add(g);
        for (auto& t : trackers) t.conjugate(g);
    };

    std::size_t next_ancilla = n;
    for (const auto& g : gates) {
        if (g.kind == GateKind::H) {
            const std::size_t w = layout[g.qubits[0]];
            const std::size_t a = next_ancilla++;
            // CZ(w,a) = S w . S a . CNOT(w,a) . Sdg a . CNOT(w,a)
            emit(Gate::make(GateKind::S, {w}));
            emit(Gate::make(GateKind::S, {a}));
            emit(Gate::make(GateKind::CNOT, {w, a}));
            emit(Gate::make(GateKind::Sdg, {a}));
            emit(Gate::make(GateKind::CNOT, {w, a}));
            trackers.emplace_back(wires, a, w);
            layout[g.qubits[0]] = a;
            continue;
        }
        Gate mapped = g;
        for (auto& q : mapped.qubits) q = layout[q];
        emit(mapped);
    }

    // Route logical qubit i to wire i and gadget k's measured wire to n+k.
    std::vector<std::size_t> want(wires);
    for (std::size_t i = 0; i < n; ++i) want[layout[i]] = i;
    for (std::size_t k = 0; k < trackers.size(); ++k) want[trackers[k].measured()] = n + k;
    std::vector<std::size_t> holder(wires);  // holder[target] = wire currently holding it
    for (std::size_t w = 0; w < wires; ++w) holder[want[w]] = w;
    for (std::size_t p = 0; p < wires; ++p) {
        const std::size_t w = holder[p];
        if (w == p) continue;
        emit(Gate::make(GateKind::CNOT, {p, w}));
        emit(Gate::make(GateKind::CNOT, {w, p}));
        emit(Gate::make(GateKind::CNOT, {p, w}));
        const std::size_t displaced = want[p];
        std::swap(want[p], want[w]);
        holder[displaced] = w;
        holder[p] = p;
        for (auto& t : trackers) {
            if (t.measured() == p) {
                t.rename(p, w);
            } else if (t.measured() == w) {
                t.rename(w, p);
            }
        }
    }

    for (std::size_t k = 0; k < trackers.size(); ++k) {
        if (trackers[k].measured() != n + k) throw std::logic_error("gadget routing failed");
        form.post.push_back({n + k, trackers[k].result()});
    }
    form.E = extract(form.block).E;
    return form;
}

}  // namespace

Region clifford_boundary(const Circuit& c) {
    const std::size_t G = c.gates.size();
    Region r{std::vector<bool>(G, false), std::vector<bool>(G, false)};
    std::vector<bool> open(c.qubits(), true);
    for (std::size_t i = 0; i < G; ++i) {
        const Gate& g = c.gates[i];
        const bool all_open = std::all_of(g.qubits.begin(), g.qubits.end(), [&](std::size_t q) { return open[q]; });
        if (is_clifford(g.kind) && all_open) {
            r.prefix[i] = true;
        } else {
            for (auto q : g.qubits) open[q] = false;
        }
    }
    std::fill(open.begin(), open.end(), true);
    for (std::size_t i = G; i-- > 0;) {
        if (r.prefix[i]) continue;
        const Gate& g = c.gates[i];
        const bool all_open = std::all_of(g.qubits.begin(), g.qubits.end(), [&](std::size_t q) { return open[q]; });
        if (is_clifford(g.kind) && all_open) {
            r.suffix[i] = true;
        } else {
            for (auto q : g.qubits) open[q] = false;
        }
    }
    return r;
}

std::size_t internal_h_count(const Circuit& c) {
    const Region r = clifford_boundary(c);
    std::size_t count = 0;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (c.gates[i].kind == GateKind::H && !r.prefix[i] && !r.suffix[i]) ++count;
    }
    return count;
}

Circuit cancel_hadamard_pairs(const Circuit& c) {
    std::vector<Gate> gates = c.gates;
    std::vector<bool> dead(gates.size(), false);
    // open[q]: index of an unmatched H that is the latest gate on wire q.
    std::vector<std::size_t> open(c.qubits(), SIZE_MAX);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.kind == GateKind::H) {
            const std::size_t q = g.qubits[0];
            if (open[q] != SIZE_MAX) {
                dead[open[q]] = dead[i] = true;
                open[q] = SIZE_MAX;
            } else {
                open[q] = i;
            }
            continue;
        }
        for (auto q : g.qubits) open[q] = SIZE_MAX;
        for (const auto& b : g.body) {
            for (auto q : b.qubits) open[q] = SIZE_MAX;
        }
    }
    Circuit out(c.n, c.h);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!dead[i]) out.gates.push_back(std::move(gates[i]));
    }
    return out;
}

std::vector<GadgetizedForm> gadgetize(const Circuit& c, std::optional<std::size_t> h_cap) {
    require_clifford_t(c);
    if (h_cap && *h_cap == 0) return partition_forms(c);

    const Region region = clifford_boundary(c);
    std::vector<Gate> pre, trailer;
    std::vector<std::vector<Gate>> segments(1);
    std::size_t in_segment = 0;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (region.prefix[i]) {
            pre.push_back(g);
        } else if (region.suffix[i]) {
            trailer.push_back(g);
        } else {
            if (g.kind == GateKind::H) {
                if (h_cap && in_segment == *h_cap) {
                    segments.emplace_back();
                    in_segment = 0;
                }
                ++in_segment;
            }
            segments.back().push_back(g);
        }
    }

    std::vector<GadgetizedForm> forms;
    for (const auto& seg : segments) forms.push_back(gadgetize_segment(c.n, seg));
    forms.front().pre = std::move(pre);
    forms.back().trailer = std::move(trailer);
    for (auto& f : forms) f.num_partitions = forms.size();
    return forms;
}

Partitioning partition_with_layers(const Circuit& c) {
    Partitioning out;
    out.partitions.emplace_back(c.n, c.h);
    out.h_layers.emplace_back();
    std::vector<bool> touched(c.qubits(), false);
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::MeasureX || g.kind == GateKind::IfX) {
            throw UnsupportedGate("partition: circuit must be unitary");
        }
        if (g.kind == GateKind::H) {
            const std::size_t q = g.qubits[0];
            if (touched[q]) {
                out.partitions.emplace_back(c.n, c.h);
                out.h_layers.emplace_back();
                std::fill(touched.begin(), touched.end(), false);
            }
            out.h_layers.back().push_back(g);
            continue;
        }
        out.partitions.back().add(g);
        for (auto q : g.qubits) touched[q] = true;
    }
    out.h_layers.emplace_back();
    // A trailing H-only layer leaves an empty final partition; fold it into the tail.
    if (out.partitions.size() > 1 && out.partitions.back().gates.empty()) {
        out.h_layers[out.h_layers.size() - 1] = std::move(out.h_layers[out.h_layers.size() - 2]);
        out.h_layers.erase(out.h_layers.end() - 2);
        out.partitions.pop_back();
    }
    return out;
}

std::vector<Circuit> partition(const Circuit& c) { return partition_with_layers(c).partitions; }

std::vector<GadgetizedForm> partition_forms(const Circuit& c) {
    require_clifford_t(c);
    Partitioning parts = partition_with_layers(c);
    std::vector<GadgetizedForm> forms;
    for (std::size_t i = 0; i < parts.partitions.size(); ++i) {
        GadgetizedForm f = gadgetize_segment(c.n, parts.partitions[i].gates);
        f.pre = std::move(parts.h_layers[i]);
        forms.push_back(std::move(f));
    }
    forms.back().trailer = std::move(parts.h_layers.back());
    for (auto& f : forms) f.num_partitions = forms.size();
    return forms;
}

WeightedPolynomial commute_correction(const WeightedPolynomial& f, std::size_t j) {
    const std::size_t n = f.n();
    if (j >= n) throw std::out_of_range("commute_correction: variable index out of range");
    WeightedPolynomial g(n);
    // l x_j -> l - 2l x_j
    g.add_constant(f.l(j));
    g.add_l(j, -2LL * f.l(j));
    for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        // 2q x_j x_k -> 2q x_k - 4q x_j x_k
        const Z8 q = f.q(j, k);
        g.add_l(k, 2LL * q);
        g.add_q(j, k, -2LL * q);
        for (std::size_t m = k + 1; m < n; ++m) {
            if (m == j) continue;
            // 4c x_j x_k x_m -> 4c x_k x_m; the cubic remainder is 8c = 0.
            g.add_q(k, m, 2LL * f.c(j, k, m));
        }
    }
    return g;
}

}  // namespace topt

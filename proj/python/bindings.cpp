#include "topt/circuit.hpp"
#include "topt/compiler.hpp"
#include "topt/errors.hpp"
#include "topt/harness.hpp"
#include "topt/optimizers.hpp"
#include "topt/phase.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

// Columns as 0/1 lists, one list per column.
std::vector<std::vector<int>> columns_of(const topt::BitMatrix& A) {
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < A.cols(); ++c) {
        std::vector<int> col(A.rows());
        for (std::size_t r = 0; r < A.rows(); ++r) col[r] = A.get(r, c) ? 1 : 0;
        out.push_back(std::move(col));
    }
    return out;
}

topt::SignatureTensor3 tensor_from_bits(std::size_t n, const std::vector<int>& bits) {
    topt::BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
    return topt::SignatureTensor3::from_vector(n, v);
}

py::dict compile_text(const std::string& text, const std::string& optimizer, const std::string& hadamard,
                      std::optional<std::size_t> h_cap, std::uint64_t seed, bool cancel_h) {
    topt::CompileOptions opts;
    opts.optimizer.kind = topt::parse_optimizer(optimizer);
    opts.optimizer.seed = seed;
    if (hadamard == "partition") {
        opts.mode = topt::HadamardMode::Partition;
    } else if (hadamard != "gadget") {
        throw std::invalid_argument("hadamard must be 'gadget' or 'partition'");
    }
    opts.h_cap = h_cap;
    opts.cancel_h = cancel_h;
    const topt::CompileResult res = topt::compile(topt::parse(text), opts);
    py::dict d;
    d["circuit"] = topt::emit(res.output);
    d["t_before"] = res.t_before;
    d["t_after"] = res.t_after;
    d["h"] = res.h;
    d["n_p"] = res.n_p;
    d["seconds"] = res.seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "T-count optimizing compiler for Clifford+T circuits";

    py::register_exception<topt::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<topt::TooLarge>(m, "TooLarge", PyExc_ValueError);

    m.def("parse_and_emit", [](const std::string& text) { return topt::emit(topt::parse(text)); },
          "Parse circuit text and print it in canonical form.");
    m.def("t_count", [](const std::string& text) { return topt::t_count(topt::parse(text)); });
    m.def("compile", &compile_text, py::arg("text"), py::arg("optimizer") = "todd", py::arg("hadamard") = "gadget",
          py::arg("h_cap") = py::none(), py::arg("seed") = 0, py::arg("cancel_h") = true);
    m.def(
        "verify",
        [](const std::string& original, const std::string& compiled) {
            return topt::verify_equivalence(topt::expand_to_clifford_t(topt::parse(original)), topt::parse(compiled))
                .equivalent;
        },
        py::arg("original"), py::arg("compiled"));

    m.def(
        "random_signature",
        [](std::size_t n, std::uint64_t seed) {
            const topt::BitVec v = topt::random_signature(n, seed).to_vector();
            std::vector<int> bits(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) bits[i] = v.get(i) ? 1 : 0;
            return bits;
        },
        py::arg("n"), py::arg("seed"), "Independent tensor entries: singles, pairs, then triples.");
    m.def(
        "optimize_signature",
        [](std::size_t n, const std::vector<int>& bits, const std::string& optimizer, std::uint64_t seed,
           std::size_t rm_limit) {
            const topt::SignatureTensor3 S = tensor_from_bits(n, bits);
            return columns_of(topt::run_pipeline(S, {topt::parse_optimizer(optimizer), seed, rm_limit}));
        },
        py::arg("n"), py::arg("bits"), py::arg("optimizer") = "todd", py::arg("seed") = 0,
        py::arg("rm_limit") = topt::kDefaultRmLimit);
    m.def(
        "signature_of_columns",
        [](std::size_t n, const std::vector<std::vector<int>>& cols) {
            topt::BitMatrix A(n, cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (cols[c].size() != n) throw std::invalid_argument("column length must equal n");
                for (std::size_t r = 0; r < n; ++r) A.set(r, c, cols[c][r] != 0);
            }
            const topt::BitVec v = topt::signature_from_A(A).to_vector();
            std::vector<int> bits(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) bits[i] = v.get(i) ? 1 : 0;
            return bits;
        },
        py::arg("n"), py::arg("columns"));
    m.def(
        "fit_scaling",
        [](const std::vector<std::size_t>& ns, const std::vector<double>& means) {
            if (ns.size() != means.size()) throw std::invalid_argument("ns and means differ in length");
            std::vector<topt::ScalingPoint> pts;
            for (std::size_t i = 0; i < ns.size(); ++i) pts.push_back({ns[i], means[i], 0.0, 1});
            const topt::ScalingFit f = topt::fit_scaling(pts);
            return py::make_tuple(f.slope, f.stderr_slope);
        },
        py::arg("ns"), py::arg("means"));
}

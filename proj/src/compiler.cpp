#include "topt/compiler.hpp"

#include "topt/resynthesis.hpp"

#include <chrono>

namespace topt {

GateSynthesisMatrix optimize_block(const Circuit& block, const OptimizerChoice& choice) {
    const Extraction ex = extract(block);
    const SignatureTensor3 S = signature_from_wp(wp_from_pp(ex.poly));
    if (choice.kind != OptimizerKind::TODD) return run_pipeline(S, choice);
    GateSynthesisMatrix from_re = todd(proper(re_expand(canonical_wp(S))));
    GateSynthesisMatrix from_block = todd(proper(pp_to_A(ex.poly)));
    return from_block.cols() < from_re.cols() ? from_block : from_re;
}

CompileResult compile(const Circuit& input, const CompileOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    Circuit c = expand_to_clifford_t(input);
    if (options.cancel_h) c = cancel_hadamard_pairs(c);
    CompileResult r;
    r.t_before = t_count(c);

    const std::vector<GadgetizedForm> forms =
        options.mode == HadamardMode::Partition ? partition_forms(c) : gadgetize(c, options.h_cap);
    std::vector<GateSynthesisMatrix> optimized;
    optimized.reserve(forms.size());
    for (const auto& f : forms) {
        optimized.push_back(optimize_block(f.block, options.optimizer));
        r.h += f.h;
    }
    r.output = assemble(c.n, forms, optimized);
    r.t_after = t_count(r.output);
    r.n_p = forms.size();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace topt

#pragma once

#include "topt/circuit.hpp"
#include "topt/optimizers.hpp"
#include "topt/preprocess.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace topt {

enum class HadamardMode { Gadget, Partition };

struct CompileOptions {
    OptimizerChoice optimizer;
    HadamardMode mode = HadamardMode::Gadget;
    std::optional<std::size_t> h_cap;  // gadget mode only
    bool cancel_h = true;              // drop H pairs before gadgetizing
};

struct CompileResult {
    Circuit output;
    std::size_t t_before = 0;
    std::size_t t_after = 0;
    std::size_t h = 0;    // gadget ancillas
    std::size_t n_p = 0;  // optimized blocks
    double seconds = 0.0;
};

// TODD runs from the RE columns and from the block's own columns and keeps the
// shorter result, so it never exceeds the block's T count. The other
// optimizers start from the signature.
GateSynthesisMatrix optimize_block(const Circuit& block, const OptimizerChoice& choice);

CompileResult compile(const Circuit& input, const CompileOptions& options);

}  // namespace topt

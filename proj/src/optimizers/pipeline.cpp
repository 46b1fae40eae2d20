#include "topt/optimizers.hpp"

#include <stdexcept>

namespace topt {

std::string optimizer_name(OptimizerKind kind) {
    switch (kind) {
        case OptimizerKind::RE: return "re";
        case OptimizerKind::TOOL_F: return "tool-f";
        case OptimizerKind::TOOL_NF: return "tool-nf";
        case OptimizerKind::TODD: return "todd";
        case OptimizerKind::RM: return "rm";
    }
    return "?";
}

OptimizerKind parse_optimizer(const std::string& name) {
    for (auto k : {OptimizerKind::RE, OptimizerKind::TOOL_F, OptimizerKind::TOOL_NF, OptimizerKind::TODD,
                   OptimizerKind::RM}) {
        if (optimizer_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown optimizer '" + name + "' (expected re, tool-f, tool-nf, todd or rm)");
}

GateSynthesisMatrix run_pipeline(const SignatureTensor3& S, const OptimizerChoice& choice) {
    switch (choice.kind) {
        case OptimizerKind::RE: return proper(re_expand(canonical_wp(S)));
        case OptimizerKind::TOOL_F:
        case OptimizerKind::TOOL_NF:
            return tool(canonical_wp(S), choice.kind == OptimizerKind::TOOL_F, choice.seed, choice.rm_limit);
        case OptimizerKind::TODD: return todd(proper(re_expand(canonical_wp(S))));
        case OptimizerKind::RM: return rm_decode(S, choice.rm_limit == 0 ? kMaxRmLimit : choice.rm_limit);
    }
    throw std::invalid_argument("run_pipeline: unknown optimizer");
}

}  // namespace topt

#pragma once

#include "topt/phase.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace topt {

enum class OptimizerKind { RE, TOOL_F, TOOL_NF, TODD, RM };

std::string optimizer_name(OptimizerKind kind);
OptimizerKind parse_optimizer(const std::string& name);  // re|tool-f|tool-nf|todd|rm

inline constexpr std::size_t kDefaultRmLimit = 6;
// The coset search packs 2^n - 1 columns into one machine word.
inline constexpr std::size_t kMaxRmLimit = 6;

struct OptimizerChoice {
    OptimizerKind kind = OptimizerKind::TODD;
    std::uint64_t seed = 0;
    std::size_t rm_limit = kDefaultRmLimit;
};

GateSynthesisMatrix re_expand(const WeightedPolynomial& f);

// Minimal A with A A^T = S; empty when S = 0.
GateSynthesisMatrix lempel_factor(const SignatureMatrix2& S);
std::size_t lempel_bound(const SignatureMatrix2& S);  // rank(S) + [diag(S) = 0]

GateSynthesisMatrix rm_decode(const SignatureTensor3& S, std::size_t rm_limit = kDefaultRmLimit);

// Picks the control variable among `eligible` (non-empty).
using ControlSelector = std::function<std::size_t(const std::vector<std::size_t>& eligible)>;

// rm_limit = 0 disables the hand-off to the exact decoder.
GateSynthesisMatrix tool(const WeightedPolynomial& f, bool feedback, std::uint64_t seed,
                         std::size_t rm_limit = kDefaultRmLimit);
GateSynthesisMatrix tool(const SignatureTensor3& S, bool feedback, const ControlSelector& select,
                         std::size_t rm_limit = kDefaultRmLimit);

struct ToddStats {
    std::size_t iterations = 0;     // successful A <- A + z y^T rounds
    std::size_t pairs_tested = 0;
    std::uint64_t word_ops = 0;     // 64-bit word operations in chi and elimination
};

using ToddObserver = std::function<void(const GateSynthesisMatrix&)>;

GateSynthesisMatrix todd(const GateSynthesisMatrix& A, ToddStats* stats = nullptr,
                         const ToddObserver& observer = {});

GateSynthesisMatrix run_pipeline(const SignatureTensor3& S, const OptimizerChoice& choice);

}  // namespace topt

#ifndef DESUB_NORMALIZE_HPP
#define DESUB_NORMALIZE_HPP

#include <optional>

#include "desub/generate.hpp"
#include "desub/limits.hpp"

namespace desub {

/// Result of rewriting an L u R directive so that no R_alpha is ever applied
/// where the desubstituted word starts with alpha. The rewriting follows the
/// witness chain of the spec (default limit point); each level either keeps
/// its generator or trades R_alpha for L_alpha (and symmetric cases),
/// absorbing leading letters whose count is the pending run.
struct NormalizationResult {
    std::vector<GeneratorName> normalized;     // sigma'_1 .. sigma'_depth
    std::vector<Letter> witness_first_letters; // first(w'_k), k = 0..depth
    std::vector<std::size_t> pending_runs;     // n_k, k = 0..depth
    /// Engaged when a rewriting state repeated, so the normalized sequence
    /// is eventually periodic and can be generated from.
    std::optional<DirectiveSpec> periodic_form;
    /// Limit word at the deepest level (w_depth); dropping pending_runs
    /// .back() letters yields the normalized word w'_depth.
    LimitPoint deepest_view;

    Word normalized_tail_prefix(std::size_t n) const;
};

NormalizationResult normalize_directive(const DirectiveSpec& spec, std::size_t depth);

} // namespace desub

#endif

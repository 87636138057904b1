#ifndef LRC_CODEC_HPP
#define LRC_CODEC_HPP

#include "lrc/distance.hpp"

namespace lrc {

// Systematic encoding: c(x) = x^{n-k} u(x) - (x^{n-k} u(x) mod g(x)); the
// message appears verbatim in positions n-k .. n-1.
Codeword encode(const CodeSpec& code, const std::vector<int>& message);

// Recipe for recomputing one symbol from r others: for every codeword c,
//   c[erased] = -scale * sum_h coefficients[h] * c[h].
// Derived from the minimum-weight dual word, shifted until its support covers
// the erased index; |helpers| = d_dual - 1 = r for every index.
struct RepairPlan {
    int erased_index;
    std::vector<int> helper_indices;
    std::vector<int> coefficients;  // aligned with helper_indices
    int scale;                      // inverse of the dual word's coefficient at erased_index
};

RepairPlan repair_plan(const CodeSpec& code, int erased_index);

// A word with exactly one erased position; the erasure is positional metadata,
// every field value is a legal symbol.
struct ReceivedWord {
    std::vector<int> symbols;  // length n; the entry at erased_index is ignored
    int erased_index;
};

// Fill the erasure via the plan, then verify membership (InconsistentWord if
// the surviving symbols are not consistent with any codeword).
Codeword repair(const CodeSpec& code, const ReceivedWord& received);
Codeword repair(const CodeSpec& code, const ReceivedWord& received, const RepairPlan& plan);

}  // namespace lrc

#endif

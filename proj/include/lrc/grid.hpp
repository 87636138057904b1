#ifndef LRC_GRID_HPP
#define LRC_GRID_HPP

#include "lrc/codes.hpp"

namespace lrc {

// The desk-scale verification grid shared by the oracle CLI and the
// acceptance suite: p in {2,3,5,7}, m in {1,2}, s in {1,2}, eta in {1,2,3}
// coprime to p, lambda0 over a fixed deterministic sample (the first
// min(3, q-1) nonzero reprs), single-root i in [1, p^s-1], and every pair
// code 0 <= i < j <= p^s whose lambda0 is a quadratic residue.
// All grid codes have 0 < k < n.

std::vector<int> lambda0_sample(const Field& f);

std::vector<CodeSpec> default_grid();

}  // namespace lrc

#endif

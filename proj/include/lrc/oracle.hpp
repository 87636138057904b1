#ifndef LRC_ORACLE_HPP
#define LRC_ORACLE_HPP

#include "lrc/codes.hpp"

namespace lrc {

// Brute-force ground truth. Nothing here calls the closed-form paths it
// validates: distances come from enumerating spans, the dual side from the
// nullspace of the generator matrix (not the closed-form dual swap), and
// irreducibility from divisor search / Frobenius gcds (not order conditions).

// min weight over the q^{#rows}-1 nonzero combinations of the rows
long span_min_weight(const std::vector<std::vector<int>>& rows, const Field& f,
                     long budget = 1 << 20);

// per-index: min weight over nonzero span words whose support contains the
// index (LONG_MAX where never covered)
std::vector<long> span_min_cover_weights(const std::vector<std::vector<int>>& rows, const Field& f,
                                         long budget = 1 << 20);

long matrix_rank(std::vector<std::vector<int>> rows, const Field& f);
// basis of {v : M v^T = 0}, one row per free column
std::vector<std::vector<int>> nullspace(const std::vector<std::vector<int>>& rows, const Field& f);

// min weight over all nonzero codewords, enumerated as message-space images of
// the generator matrix; requires q^k <= budget
long exhaustive_min_distance(const CodeSpec& code, long budget = 1 << 20);

// same for the dual, enumerated over the nullspace of G; requires q^{n-k} <= budget
long exhaustive_dual_min_distance(const CodeSpec& code, long budget = 1 << 20);

// (min weight of a dual word covering the index) - 1
long exhaustive_locality(const CodeSpec& code, int index, long budget = 1 << 20);
std::vector<long> exhaustive_locality_all(const CodeSpec& code, long budget = 1 << 20);

// G H^T = 0, rank(G) + rank(H) = n, closed-form dual generator equals the
// reciprocal-of-check-polynomial construction, dual(dual) = code
bool verify_duality(const CodeSpec& code);

// true iff x^eta - a has no monic divisor of degree in [1, eta-1]; exhaustive
// divisor scan within budget, deterministic Frobenius-gcd test beyond it
bool verify_irreducible(long eta, const FieldElement& a, long budget = 1 << 20);

}  // namespace lrc

#endif

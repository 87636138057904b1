#ifndef LRC_LRCOPT_HPP
#define LRC_LRCOPT_HPP

#include <string>
#include <vector>

#include "lrc/distance.hpp"

namespace lrc {

// d <= n - k - ceil(k/r) + 2
long singleton_like_bound(long n, long k, long r);  // InvalidParams

// One of the ten optimal families; param carries the free parameter where the
// family has one (class 3: ell, class 5: t, class 8: k, class 10: i).
struct ClassLabel {
    int id;  // 1..10
    std::string param_name;  // empty when the class has no free parameter
    long param = 0;
};

struct OptimalityReport {
    LrcProfile profile;
    long d_bound;
    bool optimal;
    std::vector<ClassLabel> classes;
};

// Pattern-match the code against the ten family shapes; returns all matches.
std::vector<ClassLabel> classify(const CodeSpec& code);

// Profile + bound + classification; requires 0 < k < n.
OptimalityReport check_optimal(const CodeSpec& code);

// Scan i = 1..p^s-1 and return the optimal codes. When x^eta - lambda0 is
// irreducible the scan result is asserted equal to the closed-form prediction
// (chain-ring completeness); a mismatch is a hard error.
std::vector<std::pair<int, OptimalityReport>> enumerate_optimal_single(const Field& f, int eta,
                                                                       int s, int lambda0);

// Closed-form prediction of the optimal exponents for the chain-ring case.
std::vector<long> predicted_optimal_single(int p, int s, int eta);

struct PairEnumEntry {
    int i;
    int j;
    OptimalityReport report;
    bool outside_classes;  // optimal but matching none of the four pair shapes
};

// Scan all 0 <= i < j <= p^s. The four pair families are sound but not
// claimed complete, so optimal pairs outside them are flagged, not errors.
std::vector<PairEnumEntry> enumerate_optimal_pair(const Field& f, int s, int lambda0,
                                                  long budget = 1 << 20);

}  // namespace lrc

#endif

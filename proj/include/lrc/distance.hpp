#ifndef LRC_DISTANCE_HPP
#define LRC_DISTANCE_HPP

#include "lrc/codes.hpp"

namespace lrc {

// nu = digit length of p^s - i in base p, tau = its most significant digit;
// integer arithmetic only. Requires 0 <= i < p^s (i = p^s is the zero code).
struct NuTau {
    int nu;
    int tau;
};
NuTau nu_tau(int p, int s, long i);

struct DistanceWitness {
    long d;
    int nu;        // of the winning closed-form term
    int tau;
    long t_star;   // smallest exponent attaining the minimum
    bool doubled;  // pair codes: the witness weight is 2*V_{t_star}
    Polynomial witness;  // explicit codeword polynomial of weight d
};

// Minimum distance of <(x^eta - lambda0)^i>: computed both as
// min{V_i,...,V_{p^s-1}} and by the (nu,tau) closed form, with the two
// asserted equal. i=0 short-circuits to d=1; i=p^s raises ZeroCode.
DistanceWitness min_distance_single(const CodeSpec& code);

// Minimum distance of <(x-delta)^i (x+delta)^j>:
// min{2V_i,...,2V_{j-1}, V_j,...,V_{p^s-1}} (empty tail when j=p^s), likewise
// asserted against the two-term closed form.
DistanceWitness min_distance_pair(const CodeSpec& code);

DistanceWitness min_distance(const CodeSpec& code);

// General repeated-root distance from a complete factorization of
// x^eta - lambda0 with per-factor multiplicities e_i in [0, p^s]:
// d = min{ V_t * d(Cbar_t) } over t with Cbar_t nonzero, where Cbar_t is the
// simple-root code of length eta generated by the product of the factors with
// multiplicity > t, and d(Cbar_t) is found by exhaustive enumeration.
long repeated_root_distance(const Field& f, int eta, int s, int lambda0,
                            const std::vector<std::pair<Polynomial, int>>& factors,
                            long budget = 1 << 20);

struct LrcProfile {
    long n;
    long k;
    long d;
    long d_dual;
    long r;  // = d_dual - 1
};

// Full profile; requires 0 < k < n (locality is undefined otherwise).
LrcProfile locality(const CodeSpec& code);

// Explicit minimum-weight codeword of dual(code); used by the repair engine.
Codeword min_weight_dual_word(const CodeSpec& code);

}  // namespace lrc

#endif

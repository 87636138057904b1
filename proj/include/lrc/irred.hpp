#ifndef LRC_IRRED_HPP
#define LRC_IRRED_HPP

#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

// Irreducibility of x^eta - a over GF(p^m) by the order criterion: for
// eta >= 2, irreducible iff every prime factor of eta divides e = ord(a) but
// not (q-1)/e, and q = 1 mod 4 whenever 4 | eta. eta = 1 counts as irreducible.
bool binomial_irreducible(long eta, const FieldElement& a);  // ZeroElement

// Everything needed to enumerate the admissible eta for a fixed constant:
// q-1 = 2^{l0} p1^{l1} ... with the factor 2 listed first (exponent may be 0),
// S = indices whose full prime power divides e (index 0 only when l0 >= 1),
// and the cap on the exponent of 2 decided by q-1 mod 4.
struct IrreducibilityCertificate {
    enum class E0Rule { free_, zero_or_one, zero };

    FieldElement a;
    long e;  // order of a
    std::vector<std::pair<long, int>> q1_factorization;
    std::vector<int> S;
    E0Rule e0_rule;
};

IrreducibilityCertificate certificate(const FieldElement& a);  // ZeroElement

// All eta <= max_eta with x^eta - a irreducible, generated from the
// certificate smallest-first (heap over products), then cross-asserted
// against the order criterion for every eta <= max_eta.
std::vector<long> admissible_eta(const FieldElement& a, long max_eta);

}  // namespace lrc

#endif

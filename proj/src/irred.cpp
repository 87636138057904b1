#include "lrc/irred.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lrc {

bool binomial_irreducible(long eta, const FieldElement& a) {
    if (a.is_zero()) fail(errc::zero_element, "binomial constant must be nonzero");
    if (eta < 1) fail(errc::invalid_params, "eta must be positive");
    if (eta == 1) return true;
    const Field& f = a.field();
    long e = a.order();
    long cofactor = (f.q() - 1) / e;
    for (auto [r, mult] : factorize(eta)) {
        (void)mult;
        if (e % r != 0 || cofactor % r == 0) return false;
    }
    if (eta % 4 == 0 && f.q() % 4 != 1) return false;
    return true;
}

IrreducibilityCertificate certificate(const FieldElement& a) {
    if (a.is_zero()) fail(errc::zero_element, "certificate of zero");
    const Field& f = a.field();
    IrreducibilityCertificate cert;
    cert.a = a;
    cert.e = a.order();

    long q1 = f.q() - 1;
    auto fac = factorize(q1);
    cert.q1_factorization.clear();
    if (fac.empty() || fac.front().first != 2) cert.q1_factorization.emplace_back(2, 0);
    for (auto pe : fac) cert.q1_factorization.push_back(pe);

    for (size_t idx = 0; idx < cert.q1_factorization.size(); ++idx) {
        auto [pi, li] = cert.q1_factorization[idx];
        if (li == 0) continue;  // the trivial 2^0 entry admits no even eta anyway
        if (cert.e % power_long(pi, li) == 0) cert.S.push_back((int)idx);
    }

    if (q1 % 4 == 0)
        cert.e0_rule = IrreducibilityCertificate::E0Rule::free_;
    else if (q1 % 4 == 2)
        cert.e0_rule = IrreducibilityCertificate::E0Rule::zero_or_one;
    else
        cert.e0_rule = IrreducibilityCertificate::E0Rule::zero;
    return cert;
}

std::vector<long> admissible_eta(const FieldElement& a, long max_eta) {
    if (max_eta < 1) fail(errc::invalid_params, "max_eta must be positive");
    IrreducibilityCertificate cert = certificate(a);

    bool two_allowed = std::find(cert.S.begin(), cert.S.end(), 0) != cert.S.end();
    long e0_cap = 0;
    if (two_allowed) {
        switch (cert.e0_rule) {
            case IrreducibilityCertificate::E0Rule::free_: e0_cap = 62; break;
            case IrreducibilityCertificate::E0Rule::zero_or_one: e0_cap = 1; break;
            case IrreducibilityCertificate::E0Rule::zero: e0_cap = 0; break;
        }
    }
    std::vector<long> odd_primes;
    for (int idx : cert.S)
        if (idx != 0) odd_primes.push_back(cert.q1_factorization[idx].first);

    // smallest-first generation of the products prod p_i^{e_i}
    std::vector<long> out;
    std::priority_queue<long, std::vector<long>, std::greater<long>> heap;
    std::set<long> seen;
    heap.push(1);
    seen.insert(1);
    while (!heap.empty()) {
        long v = heap.top();
        heap.pop();
        out.push_back(v);
        long val2 = 0;
        for (long t = v; t % 2 == 0; t /= 2) ++val2;
        if (val2 < e0_cap && v <= max_eta / 2 && seen.insert(2 * v).second) heap.push(2 * v);
        for (long r : odd_primes)
            if (v <= max_eta / r && seen.insert(v * r).second) heap.push(v * r);
    }

    // cross-assertion against the order criterion
    size_t pos = 0;
    for (long eta = 1; eta <= max_eta; ++eta) {
        bool listed = pos < out.size() && out[pos] == eta;
        if (listed) ++pos;
        if (listed != binomial_irreducible(eta, a))
            throw std::logic_error("admissible_eta disagrees with the order criterion");
    }
    return out;
}

}  // namespace lrc

#include "lrc/lrcopt.hpp"

#include <algorithm>
#include <set>

#include "lrc/irred.hpp"

namespace lrc {

long singleton_like_bound(long n, long k, long r) {
    if (k < 1 || k >= n || r < 1) fail(errc::invalid_params, "need 1 <= k < n and r >= 1");
    return n - k - (k + r - 1) / r + 2;
}

namespace {

bool is_power_of(long v, int p, int max_exp, long* exp_out) {
    long x = 1;
    for (int e = 0; e <= max_exp; ++e) {
        if (x == v) {
            if (exp_out) *exp_out = e;
            return true;
        }
        x *= p;
    }
    return false;
}

}  // namespace

std::vector<ClassLabel> classify(const CodeSpec& code) {
    std::vector<ClassLabel> out;
    int p = code.field().p();
    int s = code.s();
    long ppow = code.ppow();
    if (code.kind() == CodeKind::single_root) {
        int eta = code.eta();
        long i = code.i();
        if (eta == 1 && p == 2 && s >= 2 && i == ppow / 2 + 1) out.push_back({1, "", 0});
        if (eta == 1 && p >= 3 && s >= 2 && i == ppow / p + 1) out.push_back({2, "", 0});
        long e;
        if (i >= 1 && is_power_of(i, p, s - 1, &e)) out.push_back({3, "ell", s - 1 - e});
        if (eta == 1 && p >= 3 && s >= 2 && i == 2) out.push_back({4, "", 0});
        if (eta == 1 && p >= 3 && s == 1 && i >= 2 && i <= p - 1) out.push_back({5, "t", i});
        if (eta == 1 && s >= 2 && i == ppow - 1) out.push_back({6, "", 0});
    } else {
        long i = code.i(), j = code.j();
        if (i == 0 && j == ppow) out.push_back({7, "", 0});
        long e;
        if (s >= 2 && i == 0 && j >= 1 && is_power_of(j, p, s - 1, &e))
            out.push_back({8, "k", s - 1 - e});
        if (s >= 2 && i == 0 && j == 2) out.push_back({9, "", 0});
        if (s == 1 && j == p && i >= 1 && i <= p - 1) out.push_back({10, "i", i});
    }
    return out;
}

OptimalityReport check_optimal(const CodeSpec& code) {
    OptimalityReport rep;
    rep.profile = locality(code);
    rep.d_bound = singleton_like_bound(rep.profile.n, rep.profile.k, rep.profile.r);
    rep.optimal = rep.profile.d == rep.d_bound;
    rep.classes = classify(code);
    // the family shapes are sound: a classified code must attain the bound
    if (!rep.classes.empty() && !rep.optimal)
        throw std::logic_error("classified code fails the bound check");
    return rep;
}

std::vector<long> predicted_optimal_single(int p, int s, int eta) {
    std::set<long> out;
    if (s == 1) {
        out.insert(1);
        if (eta == 1)
            for (long t = 2; t <= p - 1; ++t) out.insert(t);
    } else {
        long pw = 1;
        for (int ell = 0; ell < s; ++ell) {
            out.insert(pw);  // p^{s-ell-1} scanning from ell = s-1 downward
            pw *= p;
        }
        if (eta == 1) {
            out.insert(power_long(p, s) - 1);
            if (p == 2)
                out.insert(power_long(2, s - 1) + 1);
            else {
                out.insert(2);
                out.insert(power_long(p, s - 1) + 1);
            }
        }
    }
    return std::vector<long>(out.begin(), out.end());
}

std::vector<std::pair<int, OptimalityReport>> enumerate_optimal_single(const Field& f, int eta,
                                                                       int s, int lambda0) {
    long ppow = power_long(f.p(), s);
    std::vector<std::pair<int, OptimalityReport>> out;
    for (long i = 1; i < ppow; ++i) {
        CodeSpec code = CodeSpec::single(f, eta, s, lambda0, (int)i);
        OptimalityReport rep = check_optimal(code);
        if (rep.optimal) out.emplace_back((int)i, std::move(rep));
    }
    if (binomial_irreducible(eta, f.elem(lambda0))) {
        std::vector<long> predicted = predicted_optimal_single(f.p(), s, eta);
        std::vector<long> found;
        for (const auto& [i, rep] : out) found.push_back(i);
        if (found != predicted)
            throw std::logic_error("optimal scan disagrees with the chain-ring prediction");
    }
    return out;
}

std::vector<PairEnumEntry> enumerate_optimal_pair(const Field& f, int s, int lambda0,
                                                  long budget) {
    if (f.p() == 2) fail(errc::even_characteristic, "pair codes need odd characteristic");
    if (!f.is_quadratic_residue(lambda0))
        fail(errc::non_residue_lambda, "lambda0 must be a quadratic residue");
    long ppow = power_long(f.p(), s);
    if ((ppow + 1) * ppow / 2 > budget)
        fail(errc::budget_exceeded, "pair enumeration exceeds budget");
    std::vector<PairEnumEntry> out;
    for (long i = 0; i <= ppow; ++i) {
        for (long j = i + 1; j <= ppow; ++j) {
            CodeSpec code = CodeSpec::pair(f, s, lambda0, (int)i, (int)j);
            OptimalityReport rep = check_optimal(code);
            if (rep.optimal) {
                bool outside = rep.classes.empty();
                out.push_back({(int)i, (int)j, std::move(rep), outside});
            }
        }
    }
    return out;
}

}  // namespace lrc

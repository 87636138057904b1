#include "lrc/distance.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace lrc {

NuTau nu_tau(int p, int s, long i) {
    long ppow = power_long(p, s);
    if (i < 0 || i >= ppow) fail(errc::exponent_out_of_range, "nu_tau needs 0 <= i < p^s");
    long v = ppow - i;
    int nu = 0;
    long lead = v;
    while (lead >= p) {
        lead /= p;
        ++nu;
    }
    return NuTau{nu + 1, (int)lead};
}

namespace {

// min V_t over [lo, hi) together with the smallest minimizing t; hi exclusive
std::pair<long, long> range_min_v(long lo, long hi, int p) {
    long best = LONG_MAX, arg = -1;
    for (long t = lo; t < hi; ++t) {
        long v = v_weight(t, p);
        if (v < best) {
            best = v;
            arg = t;
        }
    }
    return {best, arg};
}

// closed form for min{V_i, ..., V_{p^s - 1}}; i=0 is the full space
long tail_min_closed(int p, int s, long i) {
    if (i == 0) return 1;
    NuTau nt = nu_tau(p, s, i);
    return (long)(p - nt.tau + 1) * power_long(p, s - nt.nu);
}

void check_witness(const DistanceWitness& w, long expected_weight) {
    if (w.witness.weight() != expected_weight)
        throw std::logic_error("distance witness has wrong weight");
}

}  // namespace

DistanceWitness min_distance_single(const CodeSpec& code) {
    if (code.kind() != CodeKind::single_root)
        fail(errc::invalid_params, "min_distance_single needs a single-root code");
    const Field& f = code.field();
    int p = f.p();
    long i = code.i(), ppow = code.ppow();
    if (i == ppow) fail(errc::zero_code, "zero code has no minimum distance");

    auto [d_range, t_star] = range_min_v(i, ppow, p);
    long d_closed = tail_min_closed(p, code.s(), i);
    if (d_range != d_closed)
        throw std::logic_error("single-root distance: range minimum and closed form disagree");

    NuTau nt = i == 0 ? NuTau{code.s() + 1, 1} : nu_tau(p, code.s(), i);
    DistanceWitness w{d_range, nt.nu, nt.tau, t_star, false,
                      binomial_power(f, code.eta(), code.lambda0(), t_star)};
    check_witness(w, d_range);
    return w;
}

DistanceWitness min_distance_pair(const CodeSpec& code) {
    if (code.kind() != CodeKind::pair_root)
        fail(errc::invalid_params, "min_distance_pair needs a pair-root code");
    const Field& f = code.field();
    int p = f.p();
    long i = code.i(), j = code.j(), ppow = code.ppow();

    auto [a_min, a_arg] = range_min_v(i, j, p);          // doubled group, t in [i, j)
    auto [b_min, b_arg] = range_min_v(j, ppow, p);       // plain group, t in [j, p^s)
    long d_range = std::min(b_min, a_min == LONG_MAX ? LONG_MAX : 2 * a_min);

    // two-term closed form; the tau(0) = -inf convention drops the second term
    // when j = p^s
    long term1 = 2 * tail_min_closed(p, code.s(), i);
    long term2 = j == ppow ? LONG_MAX : tail_min_closed(p, code.s(), j);
    if (d_range != std::min(term1, term2))
        throw std::logic_error("pair-root distance: range minimum and closed form disagree");

    DistanceWitness w;
    w.d = d_range;
    if (b_min <= 2 * a_min) {
        // witness (x^2 - lambda0)^{t*}
        w.doubled = false;
        w.t_star = b_arg;
        NuTau nt = nu_tau(p, code.s(), j);
        w.nu = nt.nu;
        w.tau = nt.tau;
        w.witness = binomial_power(f, 2, code.lambda0(), b_arg);
    } else {
        // witness (x^{p^s} + delta^{p^s}) (x^2 - lambda0)^{t*} mod (x^n - lambda):
        // odd/even supports stay disjoint, so the weight is exactly 2 V_{t*};
        // membership needs t* >= i and t* + p^s >= j, both automatic
        w.doubled = true;
        w.t_star = a_arg;
        NuTau nt = i == 0 ? NuTau{code.s() + 1, 1} : nu_tau(p, code.s(), i);
        w.nu = nt.nu;
        w.tau = nt.tau;
        std::vector<int> odd((size_t)ppow + 1, 0);
        odd[0] = f.pow(code.delta(), ppow);
        odd[(size_t)ppow] = 1;
        Polynomial shifted = Polynomial(f, std::move(odd)) * binomial_power(f, 2, code.lambda0(), a_arg);
        w.witness = constacyclic_reduce(shifted, code.n(), code.lambda());
    }
    check_witness(w, w.d);
    return w;
}

DistanceWitness min_distance(const CodeSpec& code) {
    return code.kind() == CodeKind::single_root ? min_distance_single(code)
                                                : min_distance_pair(code);
}

namespace {

// exhaustive minimum weight of the span of the given rows (length eta each);
// recursive enumeration, independent of the oracle module's enumerator
long span_min_weight_dfs(const std::vector<std::vector<int>>& rows, const Field& f) {
    size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<int> cur(n, 0);
    long best = LONG_MAX;
    long q = f.q();

    auto rec = [&](auto&& self, size_t depth, bool nonzero) -> void {
        if (depth == rows.size()) {
            if (!nonzero) return;
            long w = 0;
            for (int x : cur) w += x != 0;
            best = std::min(best, w);
            return;
        }
        self(self, depth + 1, nonzero);  // coefficient 0
        std::vector<int> saved = cur;
        for (long c = 1; c < q; ++c) {
            for (size_t t = 0; t < n; ++t)
                cur[t] = f.add(saved[t], f.mul((int)c, rows[depth][t]));
            self(self, depth + 1, true);
        }
        cur = saved;
    };
    rec(rec, 0, false);
    return best;
}

}  // namespace

long repeated_root_distance(const Field& f, int eta, int s, int lambda0,
                            const std::vector<std::pair<Polynomial, int>>& factors, long budget) {
    long ppow = power_long(f.p(), s);
    if (factors.size() > 63) fail(errc::invalid_params, "too many factors");
    Polynomial prod = poly_const(f, 1);
    int min_e = INT_MAX;
    for (const auto& [m, e] : factors) {
        if (e < 0 || e > ppow) fail(errc::exponent_out_of_range, "multiplicity out of [0, p^s]");
        prod = prod * m;
        min_e = std::min(min_e, e);
    }
    if (!(prod == poly_binomial(f, eta, lambda0)))
        fail(errc::incomplete_factorization, "factors do not multiply to x^eta - lambda0");
    if (factors.empty() || min_e == ppow) fail(errc::zero_code, "all multiplicities are p^s");

    // d(Cbar_t) depends only on the set of factors with multiplicity > t
    std::map<uint64_t, long> cache;
    long best = LONG_MAX;
    for (long t = 0; t < ppow; ++t) {
        uint64_t mask = 0;
        for (size_t idx = 0; idx < factors.size(); ++idx)
            if (factors[idx].second > t) mask |= (uint64_t)1 << idx;
        if (mask == ((uint64_t)1 << factors.size()) - 1 && mask != 0) continue;  // zero code
        long dbar;
        if (mask == 0) {
            dbar = 1;  // full space of length eta
        } else if (auto it = cache.find(mask); it != cache.end()) {
            dbar = it->second;
        } else {
            Polynomial gen = poly_const(f, 1);
            for (size_t idx = 0; idx < factors.size(); ++idx)
                if (mask >> idx & 1) gen = gen * factors[idx].first;
            long dim = eta - gen.degree();
            if (power_capped(f.q(), dim, budget) > budget)
                fail(errc::budget_exceeded, "simple-root distance enumeration exceeds budget");
            std::vector<std::vector<int>> rows((size_t)dim);
            for (long u = 0; u < dim; ++u) rows[u] = poly_to_word(shift_up(gen, (int)u), eta);
            dbar = span_min_weight_dfs(rows, f);
            cache.emplace(mask, dbar);
        }
        best = std::min(best, v_weight(t, f.p()) * dbar);
    }
    return best;
}

LrcProfile locality(const CodeSpec& code) {
    if (code.k() == 0 || code.k() == code.n())
        fail(errc::degenerate_code, "locality needs 0 < k < n");
    long d = min_distance(code).d;
    long d_dual = min_distance(code.dual()).d;
    return LrcProfile{code.n(), code.k(), d, d_dual, d_dual - 1};
}

Codeword min_weight_dual_word(const CodeSpec& code) {
    if (code.k() == code.n()) fail(errc::degenerate_code, "dual of the full space is zero");
    CodeSpec dual = code.dual();
    DistanceWitness w = min_distance(dual);
    return Codeword{dual, poly_to_word(w.witness, dual.n())};
}

}  // namespace lrc

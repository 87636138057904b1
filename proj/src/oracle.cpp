#include "lrc/oracle.hpp"

#include <algorithm>
#include <climits>

namespace lrc {

namespace {

struct SparseRow {
    std::vector<std::pair<int, int>> entries;  // (index, repr)
};

std::vector<SparseRow> sparsify(const std::vector<std::vector<int>>& rows) {
    std::vector<SparseRow> out(rows.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t t = 0; t < rows[r].size(); ++t)
            if (rows[r][t] != 0) out[r].entries.emplace_back((int)t, rows[r][t]);
    return out;
}

void check_budget(long q, size_t dim, long budget) {
    if (power_capped(q, (long)dim, budget) > budget)
        fail(errc::budget_exceeded, "q^dim exceeds the enumeration budget");
}

// Odometer walk over all q^{#rows} messages. Message digits are element
// reprs; stepping digit r from c to c' adds (c' - c) * row_r, so extension
// fields get true scalar multiples, not repeated additions. visit(word,
// weight) runs for every nonzero message.
template <typename Visit>
void walk_span(const std::vector<std::vector<int>>& rows, const Field& f, Visit&& visit) {
    if (rows.empty()) return;
    size_t n = rows[0].size();
    std::vector<SparseRow> sparse = sparsify(rows);
    std::vector<int> digit(rows.size(), 0);
    std::vector<int> word(n, 0);
    long weight = 0;
    int q = (int)f.q();

    auto add_scaled = [&](size_t r, int scale) {
        for (auto [t, v] : sparse[r].entries) {
            int before = word[t];
            int after = f.add(before, f.mul(scale, v));
            word[t] = after;
            weight += (after != 0) - (before != 0);
        }
    };

    for (;;) {
        size_t r = 0;
        for (;;) {
            int c = digit[r];
            if (c + 1 < q) {
                add_scaled(r, f.sub(c + 1, c));
                digit[r] = c + 1;
                break;
            }
            add_scaled(r, f.neg(q - 1));  // wrap q-1 -> 0
            digit[r] = 0;
            if (++r == rows.size()) return;  // wrapped all digits: back at zero
        }
        visit(word, weight);
    }
}

}  // namespace

long span_min_weight(const std::vector<std::vector<int>>& rows, const Field& f, long budget) {
    check_budget(f.q(), rows.size(), budget);
    long best = LONG_MAX;
    walk_span(rows, f, [&](const std::vector<int>&, long w) { best = std::min(best, w); });
    return best;
}

std::vector<long> span_min_cover_weights(const std::vector<std::vector<int>>& rows, const Field& f,
                                         long budget) {
    check_budget(f.q(), rows.size(), budget);
    if (rows.empty()) return {};
    std::vector<long> cover(rows[0].size(), LONG_MAX);
    walk_span(rows, f, [&](const std::vector<int>& word, long w) {
        for (size_t t = 0; t < word.size(); ++t)
            if (word[t] != 0 && w < cover[t]) cover[t] = w;
    });
    return cover;
}

long matrix_rank(std::vector<std::vector<int>> rows, const Field& f) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = f.inv(rows[rank][col]);
        for (size_t t = col; t < n; ++t) rows[rank][t] = f.mul(rows[rank][t], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int c = rows[r][col];
            for (size_t t = col; t < n; ++t)
                rows[r][t] = f.sub(rows[r][t], f.mul(c, rows[rank][t]));
        }
        ++rank;
    }
    return (long)rank;
}

std::vector<std::vector<int>> nullspace(const std::vector<std::vector<int>>& rows_in,
                                        const Field& f) {
    std::vector<std::vector<int>> rows = rows_in;
    if (rows.empty()) fail(errc::invalid_params, "nullspace of an empty matrix");
    size_t n = rows[0].size();
    std::vector<long> pivot_of_col(n, -1);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = f.inv(rows[rank][col]);
        for (size_t t = 0; t < n; ++t) rows[rank][t] = f.mul(rows[rank][t], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int c = rows[r][col];
            for (size_t t = 0; t < n; ++t)
                rows[r][t] = f.sub(rows[r][t], f.mul(c, rows[rank][t]));
        }
        pivot_of_col[col] = (long)rank;
        ++rank;
    }
    std::vector<std::vector<int>> basis;
    for (size_t fc = 0; fc < n; ++fc) {
        if (pivot_of_col[fc] != -1) continue;
        std::vector<int> v(n, 0);
        v[fc] = 1;
        for (size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] != -1) v[col] = f.neg(rows[pivot_of_col[col]][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

long exhaustive_min_distance(const CodeSpec& code, long budget) {
    if (code.k() == 0) fail(errc::zero_code, "zero code has no minimum distance");
    return span_min_weight(generator_matrix(code), code.field(), budget);
}

long exhaustive_dual_min_distance(const CodeSpec& code, long budget) {
    if (code.k() == code.n()) fail(errc::zero_code, "dual of the full space is zero");
    if (code.k() == 0) return 1;  // dual is the full space
    return span_min_weight(nullspace(generator_matrix(code), code.field()), code.field(), budget);
}

std::vector<long> exhaustive_locality_all(const CodeSpec& code, long budget) {
    if (code.k() == 0 || code.k() == code.n())
        fail(errc::degenerate_code, "locality needs 0 < k < n");
    std::vector<long> cover =
        span_min_cover_weights(nullspace(generator_matrix(code), code.field()), code.field(), budget);
    for (long& c : cover) {
        if (c == LONG_MAX) fail(errc::degenerate_code, "index never covered by a dual word");
        c -= 1;
    }
    return cover;
}

long exhaustive_locality(const CodeSpec& code, int index, long budget) {
    if (index < 0 || index >= code.n()) fail(errc::invalid_params, "index out of range");
    return exhaustive_locality_all(code, budget)[index];
}

bool verify_duality(const CodeSpec& code) {
    const Field& f = code.field();
    CodeSpec dual = code.dual();
    if (dual.k() != code.n() - code.k()) return false;
    if (!(dual.dual() == code)) return false;

    // generic dual generator: reciprocal of the check polynomial
    auto [h, rem] = divmod(poly_xn_minus(f, code.n(), code.lambda()), code.g());
    if (!rem.is_zero()) return false;
    if (!(make_monic(reciprocal(h)) == dual.g())) return false;

    if (code.k() > 0 && code.k() < code.n()) {
        auto G = generator_matrix(code);
        auto H = generator_matrix(dual);
        for (const auto& grow : G)
            for (const auto& hrow : H) {
                int acc = 0;
                for (size_t t = 0; t < grow.size(); ++t)
                    acc = f.add(acc, f.mul(grow[t], hrow[t]));
                if (acc != 0) return false;
            }
        if (matrix_rank(G, f) + matrix_rank(H, f) != code.n()) return false;
    }
    return true;
}

bool verify_irreducible(long eta, const FieldElement& a, long budget) {
    if (a.is_zero()) fail(errc::zero_element, "binomial constant must be nonzero");
    if (eta < 1) fail(errc::invalid_params, "eta must be positive");
    if (eta == 1) return true;
    const Field& f = a.field();
    Polynomial bin = poly_binomial(f, (int)eta, a.repr());

    long scan_cost = 0;
    for (long d = 1; 2 * d <= eta; ++d) {
        scan_cost += power_capped(f.q(), d, budget);
        if (scan_cost > budget) break;
    }
    if (scan_cost <= budget) {
        for (long d = 1; 2 * d <= eta; ++d) {
            long count = power_long(f.q(), (int)d);
            std::vector<int> cand((size_t)d + 1, 0);
            cand[(size_t)d] = 1;
            for (long idx = 0; idx < count; ++idx) {
                long t = idx;
                for (long k = 0; k < d; ++k) {
                    cand[(size_t)k] = (int)(t % f.q());
                    t /= f.q();
                }
                if (divides(Polynomial(f, cand), bin)) return false;
            }
        }
        return true;
    }

    // deterministic Frobenius test: f irreducible iff x^{q^eta} = x (mod f)
    // and gcd(x^{q^{eta/l}} - x, f) = 1 for every prime l | eta
    std::vector<long> checkpoints;
    for (auto [r, e] : factorize(eta)) {
        (void)e;
        checkpoints.push_back(eta / r);
    }
    Polynomial h = poly_x(f);
    for (long d = 1; d <= eta; ++d) {
        h = poly_powmod(h, f.q(), bin);
        if (std::find(checkpoints.begin(), checkpoints.end(), d) != checkpoints.end()) {
            Polynomial g = poly_gcd(h - poly_x(f), bin);
            if (g.degree() != 0) return false;
        }
    }
    return h == poly_x(f);
}

}  // namespace lrc

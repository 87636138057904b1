#include "lrc/codec.hpp"

namespace lrc {

Codeword encode(const CodeSpec& code, const std::vector<int>& message) {
    if (code.k() == 0) fail(errc::degenerate_code, "cannot encode into the zero code");
    if ((long)message.size() != code.k()) fail(errc::length_mismatch, "message length != k");
    const Field& f = code.field();
    long n = code.n(), k = code.k(), nk = n - k;
    const std::vector<int>& g = code.g().coeffs();  // monic, degree nk

    // x^{n-k} u(x) mod g(x), Horner style: shift the running remainder and
    // fold the feedback term fb = rem_{nk-1} + u_t through g
    std::vector<int> word(n, 0);
    if (nk == 0) {
        std::copy(message.begin(), message.end(), word.begin());
        return Codeword{code, std::move(word)};
    }
    std::vector<int> rem(nk, 0);
    for (long t = k - 1; t >= 0; --t) {
        int fb = f.add(rem[nk - 1], message[t]);
        if (fb == 0) {
            for (long j = nk - 1; j >= 1; --j) rem[j] = rem[j - 1];
            rem[0] = 0;
        } else {
            for (long j = nk - 1; j >= 1; --j) rem[j] = f.sub(rem[j - 1], f.mul(fb, g[j]));
            rem[0] = f.neg(f.mul(fb, g[0]));
        }
    }
    for (long j = 0; j < nk; ++j) word[j] = f.neg(rem[j]);
    for (long t = 0; t < k; ++t) word[nk + t] = message[t];
    return Codeword{code, std::move(word)};
}

RepairPlan repair_plan(const CodeSpec& code, int erased_index) {
    if (code.k() == 0 || code.k() == code.n())
        fail(errc::degenerate_code, "repair needs 0 < k < n");
    if (erased_index < 0 || erased_index >= code.n())
        fail(errc::invalid_params, "erased index out of range");
    Codeword dual_word = min_weight_dual_word(code);
    std::vector<int> w = dual_word.coeffs;
    // smallest number of lambda^{-1}-constacyclic shifts covering the index
    for (long u = 0; w[erased_index] == 0; ++u) {
        if (u >= code.n()) throw std::logic_error("dual word has empty support");
        w = constacyclic_shift(dual_word.code, w);
    }
    RepairPlan plan;
    plan.erased_index = erased_index;
    plan.scale = code.field().inv(w[erased_index]);
    for (long t = 0; t < code.n(); ++t) {
        if (t == erased_index || w[t] == 0) continue;
        plan.helper_indices.push_back((int)t);
        plan.coefficients.push_back(w[t]);
    }
    return plan;
}

Codeword repair(const CodeSpec& code, const ReceivedWord& received) {
    return repair(code, received, repair_plan(code, received.erased_index));
}

Codeword repair(const CodeSpec& code, const ReceivedWord& received, const RepairPlan& plan) {
    if ((long)received.symbols.size() != code.n())
        fail(errc::length_mismatch, "received word length != n");
    if (plan.erased_index != received.erased_index)
        fail(errc::invalid_params, "plan does not match the erased index");
    const Field& f = code.field();
    int acc = 0;
    for (size_t t = 0; t < plan.helper_indices.size(); ++t)
        acc = f.add(acc, f.mul(plan.coefficients[t], received.symbols[plan.helper_indices[t]]));
    std::vector<int> word = received.symbols;
    word[plan.erased_index] = f.neg(f.mul(plan.scale, acc));
    if (!is_codeword(code, word))
        fail(errc::inconsistent_word, "repaired word fails the membership test");
    return Codeword{code, std::move(word)};
}

}  // namespace lrc

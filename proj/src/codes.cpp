#include "lrc/codes.hpp"

namespace lrc {

CodeSpec CodeSpec::single(const Field& f, int eta, int s, int lambda0, int i) {
    if (eta < 1) fail(errc::invalid_params, "eta must be positive");
    if (s < 1) fail(errc::invalid_params, "s must be positive");
    if (gcd_long(eta, f.p()) != 1) fail(errc::eta_not_coprime, "eta must be coprime to p");
    if (lambda0 <= 0 || lambda0 >= f.q()) fail(errc::zero_element, "lambda0 must be nonzero");
    long ppow = power_long(f.p(), s);
    if (i < 0 || i > ppow) fail(errc::exponent_out_of_range, "need 0 <= i <= p^s");
    if ((long)eta * ppow > (1L << 20)) fail(errc::invalid_params, "code length too large");

    CodeSpec c;
    c.f_ = &f;
    c.kind_ = CodeKind::single_root;
    c.eta_ = eta;
    c.s_ = s;
    c.ppow_ = ppow;
    c.i_ = i;
    c.lambda0_ = lambda0;
    c.lambda_ = f.pow(lambda0, ppow);
    c.n_ = (long)eta * ppow;
    c.k_ = c.n_ - (long)eta * i;
    c.g_ = binomial_power(f, eta, lambda0, i);
    return c;
}

CodeSpec CodeSpec::pair_raw(const Field& f, int s, int delta, int i, int j) {
    CodeSpec c;
    c.f_ = &f;
    c.kind_ = CodeKind::pair_root;
    c.eta_ = 2;
    c.s_ = s;
    c.ppow_ = power_long(f.p(), s);
    c.i_ = i;
    c.j_ = j;
    c.delta_ = delta;
    c.lambda0_ = f.mul(delta, delta);
    c.lambda_ = f.pow(c.lambda0_, c.ppow_);
    c.n_ = 2 * c.ppow_;
    c.k_ = c.n_ - i - j;
    // g = (x - delta)^i (x + delta)^j
    c.g_ = binomial_power(f, 1, delta, i) * binomial_power(f, 1, f.neg(delta), j);
    return c;
}

CodeSpec CodeSpec::pair(const Field& f, int s, int lambda0, int i, int j) {
    if (f.p() == 2) fail(errc::even_characteristic, "pair codes need odd characteristic");
    if (s < 1) fail(errc::invalid_params, "s must be positive");
    if (lambda0 <= 0 || lambda0 >= f.q()) fail(errc::zero_element, "lambda0 must be nonzero");
    if (!f.is_quadratic_residue(lambda0))
        fail(errc::non_residue_lambda, "lambda0 must be a quadratic residue");
    long ppow = power_long(f.p(), s);
    if (i < 0 || i > ppow || j < 0 || j > ppow)
        fail(errc::exponent_out_of_range, "need 0 <= i,j <= p^s");
    if (i == j) return single(f, 2, s, lambda0, i);
    int delta = f.square_root(lambda0);
    if (i > j) {
        std::swap(i, j);
        delta = f.neg(delta);
    }
    return pair_raw(f, s, delta, i, j);
}

CodeSpec CodeSpec::dual() const {
    if (kind_ == CodeKind::single_root) {
        return single(*f_, eta_, s_, f_->inv(lambda0_), (int)(ppow_ - i_));
    }
    // <(x-d)^i (x+d)^j>^perp = <(x-d')^{p^s-j} (x+d')^{p^s-i}> with d' = -d^{-1}
    // (the reciprocal of the check polynomial, re-normalized so that the first
    // exponent is the smaller one)
    return pair_raw(*f_, s_, f_->neg(f_->inv(delta_)), (int)(ppow_ - j_), (int)(ppow_ - i_));
}

bool is_codeword(const CodeSpec& code, const std::vector<int>& word) {
    if ((long)word.size() != code.n()) fail(errc::length_mismatch, "word length != n");
    return poly_mod(word_to_poly(code.field(), word), code.g()).is_zero();
}

std::vector<int> constacyclic_shift(const CodeSpec& code, const std::vector<int>& word) {
    if ((long)word.size() != code.n()) fail(errc::length_mismatch, "word length != n");
    std::vector<int> out(word.size());
    out[0] = code.field().mul(code.lambda(), word.back());
    std::copy(word.begin(), word.end() - 1, out.begin() + 1);
    return out;
}

Codeword constacyclic_shift(const Codeword& w) {
    return Codeword{w.code, constacyclic_shift(w.code, w.coeffs)};
}

std::vector<std::vector<int>> generator_matrix(const CodeSpec& code) {
    if (code.k() == 0) fail(errc::degenerate_code, "zero code has no generator matrix");
    std::vector<std::vector<int>> rows((size_t)code.k());
    const std::vector<int>& g = code.g().coeffs();
    for (long t = 0; t < code.k(); ++t) {
        rows[t].assign(code.n(), 0);
        std::copy(g.begin(), g.end(), rows[t].begin() + t);
    }
    return rows;
}

std::vector<std::vector<int>> parity_check_matrix(const CodeSpec& code) {
    if (code.k() == code.n()) fail(errc::degenerate_code, "full space has no parity-check matrix");
    return generator_matrix(code.dual());
}

std::vector<int> poly_to_word(const Polynomial& p, long n) {
    if (p.degree() >= n) fail(errc::length_mismatch, "polynomial degree exceeds code length");
    std::vector<int> w(n, 0);
    for (int d = 0; d <= p.degree(); ++d) w[d] = p.coeff(d);
    return w;
}

Polynomial word_to_poly(const Field& f, const std::vector<int>& word) {
    return Polynomial(f, word);
}

}  // namespace lrc
